#include "dtqw/parity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "dtqw/angles.hpp"
#include "dtqw/band_structure.hpp"
#include "dtqw/bloch.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/magnetization.hpp"

namespace dtqw {

namespace {

inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

// true: odd multiple of pi/2; false: integer multiple of pi; nullopt: neither.
std::optional<bool> classify_half_pi(double theta, double tol) {
    const double q = std::round(theta / (pi / 2.0));
    if (std::abs(theta - q * (pi / 2.0)) > tol)
        return std::nullopt;
    const long qi = static_cast<long>(q);
    return (qi % 2 != 0);
}

SymmetryWitness make_witness(const WalkSpec& spec, double K, double G, std::string provenance,
                             int n_k) {
    SymmetryWitness w{wrap_angle(K), wrap_angle(G), 0.0, std::move(provenance)};
    w.residual = check_generalized_parity(spec, w.K, w.G, n_k);
    return w;
}

// The tabulated (K, G) for the theta-constrained m=3 cases. pair_id is 0
// for thetas (1,2), 1 for (1,3), 2 for (2,3); half_i / half_j mark odd
// half-pi multiples (false = integer multiple of pi).
std::pair<double, double> s31_table(int pair_id, bool half_i, bool half_j,
                                    const MThreeNotation& n) {
    switch (pair_id) {
    case 0:
        if (half_i && !half_j)
            return {n.k_c, 2.0 * (n.k_e - 3.0 * n.k_c)};
        if (!half_i && !half_j)
            return {n.k_a / 3.0, 2.0 * n.k_a / 3.0 - 2.0 * n.k_g};
        if (!half_i && half_j)
            return {n.k_d, 2.0 * (n.k_f - n.k_d)};
        return {n.k_b, 2.0 * (n.k_h - n.k_b)};
    case 1:
        if (half_i && !half_j)
            return {n.k_b, 2.0 * (n.k_e - 3.0 * n.k_b)};
        if (!half_i && !half_j)
            return {n.k_a / 3.0, 2.0 * n.k_f - 2.0 * n.k_a / 3.0};
        if (!half_i && half_j)
            return {n.k_d, -2.0 * (n.k_g - n.k_d)};
        return {n.k_c, 2.0 * (n.k_h - n.k_c)};
    default:
        if (half_i && !half_j)
            return {n.k_b, 2.0 * (n.k_f - n.k_b)};
        if (!half_i && !half_j)
            return {n.k_a / 3.0, 2.0 * n.k_e - 2.0 * n.k_a};
        if (!half_i && half_j)
            return {n.k_c, 2.0 * (n.k_c - n.k_g)};
        return {n.k_d, 2.0 * (n.k_h - n.k_d)};
    }
}

} // namespace

double check_generalized_parity(const WalkSpec& spec, double K, double G, int n_k) {
    const Complex phase = cis(G);
    double residual = 0.0;
    for (int i = 0; i < n_k; ++i) {
        const double k = -pi + two_pi * i / n_k;
        const BlochOperator u = period_operator(spec, k);
        const BlochOperator ur = period_operator(spec, 2.0 * K - k);
        residual = std::max(residual, std::abs(ur.u11 - std::conj(u.u11)));
        residual = std::max(residual, std::abs(ur.u12 - phase * std::conj(u.u12)));
    }
    return residual;
}

SymmetryWitness analytic_symmetry_m1(const WalkSpec& spec, int n_k) {
    if (spec.m != 1)
        throw WrongPeriodError("analytic_symmetry_m1 requires m = 1");
    const CoinParams& c = spec.coins[0];
    return make_witness(spec, c.phi1, 2.0 * (c.phi2 - c.phi1), "m1-always", n_k);
}

std::vector<SymmetryWitness> analytic_symmetry_m2(const WalkSpec& spec, double angle_tol,
                                                  int n_k) {
    if (spec.m != 2)
        throw WrongPeriodError("analytic_symmetry_m2 requires m = 2");
    const CoinParams& c1 = spec.coins[0];
    const CoinParams& c2 = spec.coins[1];
    const double K = 0.5 * (c1.phi1 + c2.phi1);
    auto at_int_pi = [&](double theta) {
        return std::abs(theta - std::round(theta / pi) * pi) <= angle_tol;
    };

    std::vector<SymmetryWitness> out;
    if (at_int_pi(c1.theta))
        out.push_back(make_witness(spec, K, 2.0 * (c2.phi2 - c1.phi1), "S2,1", n_k));
    // For S2,2 and S2,3 the off-diagonal reflection fixes G = 2(phi2_1 - phi1_1).
    if (at_int_pi(c2.theta))
        out.push_back(make_witness(spec, K, 2.0 * (c1.phi2 - c1.phi1), "S2,2", n_k));
    if (at_int_pi(c2.phi2 - c1.phi2))
        out.push_back(make_witness(spec, K, 2.0 * (c1.phi2 - c1.phi1), "S2,3", n_k));
    return out;
}

std::vector<SymmetryWitness> analytic_symmetry_m3(const WalkSpec& spec, double angle_tol,
                                                  int n_k) {
    if (spec.m != 3)
        throw WrongPeriodError("analytic_symmetry_m3 requires m = 3");
    const MThreeNotation n = m3_notation(spec);
    const std::optional<bool> cls[3] = {classify_half_pi(spec.coins[0].theta, angle_tol),
                                        classify_half_pi(spec.coins[1].theta, angle_tol),
                                        classify_half_pi(spec.coins[2].theta, angle_tol)};
    constexpr int pair_idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};

    std::vector<SymmetryWitness> out;
    for (int pair_id = 0; pair_id < 3; ++pair_id) {
        const int i = pair_idx[pair_id][0];
        const int j = pair_idx[pair_id][1];
        if (!cls[i] || !cls[j])
            continue;
        const auto [K, G] = s31_table(pair_id, *cls[i], *cls[j], n);
        std::string tag = "S3,1(theta" + std::to_string(i + 1) + "=" +
                          (*cls[i] ? "half" : "int") + ",theta" + std::to_string(j + 1) + "=" +
                          (*cls[j] ? "half" : "int") + ")";
        out.push_back(make_witness(spec, K, G, std::move(tag), n_k));
    }

    // S3,2: all k-shifts equal, k_b = k_c = k_d (mod 2 pi).
    if (angle_distance(n.k_b, n.k_c) <= 3.0 * angle_tol &&
        angle_distance(n.k_c, n.k_d) <= 3.0 * angle_tol) {
        const double G = 2.0 * (spec.coins[0].phi2 - spec.coins[0].phi1);
        out.push_back(make_witness(spec, n.k_b, G, "S3,2", n_k));
    }
    return out;
}

SearchResult search_symmetry(const WalkSpec& spec, int n_K, int n_G, int n_k,
                             double residual_cut) {
    // Precompute the operator on the comparison grid.
    std::vector<BlochOperator> u(n_k);
    std::vector<double> ks(n_k);
    for (int i = 0; i < n_k; ++i) {
        ks[i] = -pi + two_pi * i / n_k;
        u[i] = period_operator(spec, ks[i]);
    }

    double best_K = 0.0, best_G = 0.0, best_r = std::numeric_limits<double>::infinity();
    std::vector<Complex> a(n_k), b(n_k);
    for (int ik = 0; ik < n_K; ++ik) {
        const double K = -pi + two_pi * ik / n_K;
        double r11 = 0.0;
        for (int i = 0; i < n_k; ++i) {
            const BlochOperator ur = period_operator(spec, 2.0 * K - ks[i]);
            r11 = std::max(r11, std::abs(ur.u11 - std::conj(u[i].u11)));
            a[i] = ur.u12;
            b[i] = std::conj(u[i].u12);
        }
        if (r11 >= best_r)
            continue; // no G can beat the current best at this K
        for (int ig = 0; ig < n_G; ++ig) {
            const double G = -pi + two_pi * ig / n_G;
            const Complex phase = cis(G);
            double r = r11;
            for (int i = 0; i < n_k && r < best_r; ++i)
                r = std::max(r, std::abs(a[i] - phase * b[i]));
            if (r < best_r) {
                best_r = r;
                best_K = K;
                best_G = G;
            }
        }
    }

    // Pattern-search refinement around the best cell.
    auto residual = [&](double K, double G) {
        const Complex phase = cis(G);
        double r = 0.0;
        for (int i = 0; i < n_k; ++i) {
            const BlochOperator ur = period_operator(spec, 2.0 * K - ks[i]);
            r = std::max(r, std::abs(ur.u11 - std::conj(u[i].u11)));
            r = std::max(r, std::abs(ur.u12 - phase * std::conj(u[i].u12)));
        }
        return r;
    };
    double step = two_pi / std::max(n_K, n_G);
    while (step > 1e-10) {
        bool improved = false;
        for (const auto& [dK, dG] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step},
                                     {0.0, -step}, {step, step}, {step, -step}, {-step, step},
                                     {-step, -step}}) {
            const double r = residual(best_K + dK, best_G + dG);
            if (r < best_r) {
                best_r = r;
                best_K += dK;
                best_G += dG;
                improved = true;
            }
        }
        if (!improved)
            step *= 0.5;
    }

    SearchResult result{std::nullopt, wrap_angle(best_K), wrap_angle(best_G), best_r};
    if (best_r < residual_cut)
        result.witness =
            SymmetryWitness{result.best_K, result.best_G, best_r, "numeric-search"};
    return result;
}

double magnetization_antisymmetry_check(const WalkSpec& spec, const SymmetryWitness& witness,
                                        int n_k) {
    double residual = 0.0;
    for (int i = 0; i < n_k; ++i) {
        const double k = -pi + two_pi * (i + 0.5) / n_k;
        const double kr = 2.0 * witness.K - k;
        residual = std::max(residual, std::abs(dispersion(spec, kr).omega_plus -
                                               dispersion(spec, k).omega_plus));
        try {
            residual = std::max(residual,
                                std::abs(eigenstate_magnetization(spec, kr, Branch::plus) +
                                         eigenstate_magnetization(spec, k, Branch::plus)));
        } catch (const BandEdgeDegeneracyError&) {
            // skip ill-conditioned band-edge points
        }
    }
    return residual;
}

} // namespace dtqw
