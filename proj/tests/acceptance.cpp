// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dtqw/angles.hpp"
#include "dtqw/band_structure.hpp"
#include "dtqw/bloch.hpp"
#include "dtqw/dynamics.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/magnetization.hpp"
#include "dtqw/parity.hpp"
#include "dtqw/spectroscopy.hpp"
#include "dtqw/walk_model.hpp"
#include "reference.hpp"

using namespace dtqw;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, label,
                detail.c_str());
    if (!ok)
        ++g_failures;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

WalkSpec m2_flux_spec(double dphi2) {
    return {2, {CoinParams{pi / 4, 0, 0, dphi2}, CoinParams{pi / 6, 0, 0, 0}}};
}

WalkSpec m3_flux_spec(double phi11) {
    return {3, {CoinParams{pi / 3, 0, phi11, 0}, CoinParams{pi - 0.43, 0, 0, 0},
                CoinParams{0.43, 0, 0, 0}}};
}

// --- 1. m = 1 null ratchet --------------------------------------------------

void criterion1() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    int samples = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const WalkSpec spec = ref::random_spec(rng, 1);
        for (const SpectralSample& s : spectral_magnetization_curve(spec, 512)) {
            if (s.excluded)
                continue;
            worst = std::max(worst, std::abs(s.m_s));
            ++samples;
        }
    }
    report(1, "m=1 walks never magnetize spectrally", worst < 1e-9 && samples > 40000,
           "max |M_s| = " + fmt(worst) + " over " + std::to_string(samples) + " samples");
}

// --- 2. m = 2 ratchet curves ------------------------------------------------

void criterion2() {
    double sym_worst = 0.0;
    for (const SpectralSample& s : spectral_magnetization_curve(m2_flux_spec(0.0), 256))
        if (!s.excluded)
            sym_worst = std::max(sym_worst, std::abs(s.m_s));

    const auto plus = spectral_magnetization_curve(m2_flux_spec(pi / 5), 256);
    const auto minus = spectral_magnetization_curve(m2_flux_spec(-pi / 5), 256);
    const double scale = 4.0 * std::sin(pi / 4) * std::sin(pi / 6) * std::sin(pi / 5);
    bool flipped = true, nonzero = true;
    double closed_worst = 0.0;
    int compared = 0;
    for (std::size_t i = 0; i < plus.size(); ++i) {
        if (plus[i].excluded || minus[i].excluded)
            continue;
        nonzero = nonzero && std::abs(plus[i].m_s) > 1e-6 && std::abs(minus[i].m_s) > 1e-6;
        flipped = flipped && plus[i].m_s * minus[i].m_s < 0.0 &&
                  std::abs(plus[i].m_s + minus[i].m_s) < 1e-8;
        const double sin2w = std::abs(std::sin(2.0 * plus[i].omega));
        if (sin2w > 0.1) {
            closed_worst = std::max(closed_worst, std::abs(plus[i].m_s + scale / sin2w));
            ++compared;
        }
    }
    const bool ok =
        sym_worst < 1e-9 && flipped && nonzero && closed_worst < 1e-8 && compared > 100;
    report(2, "m=2 flux-difference ratchet curves", ok,
           "symmetric max " + fmt(sym_worst) + ", closed-form dev " + fmt(closed_worst));
}

// --- 3. m = 3 flux ratchet --------------------------------------------------

void criterion3() {
    const double w0 = dispersion(m3_flux_spec(0.0), 0.0).omega_plus;
    const bool band_ok = std::abs(w0 - 2.0 * pi / 9) < 1e-4;

    double sym_worst = 0.0;
    for (const SpectralSample& s : spectral_magnetization_curve(m3_flux_spec(0.0), 256))
        if (!s.excluded)
            sym_worst = std::max(sym_worst, std::abs(s.m_s));

    const WalkSpec up = m3_flux_spec(pi / 2), down = m3_flux_spec(-pi / 2);
    const BandScan down_scan = scan_band(down, 4096);
    bool opposite = true;
    double biggest = 0.0;
    int compared = 0;
    for (const SpectralSample& s : spectral_magnetization_curve(up, 256)) {
        if (s.excluded)
            continue;
        try {
            const SpectralSample t =
                spectral_magnetization(down, down_scan, s.omega, Branch::plus);
            biggest = std::max(biggest, std::min(std::abs(s.m_s), std::abs(t.m_s)));
            // both curves cross zero at the same isolated frequency; the
            // sign flip is only meaningful where they are resolved nonzero
            if (std::abs(s.m_s) > 1e-9 && std::abs(t.m_s) > 1e-9)
                opposite = opposite && s.m_s * t.m_s < 0.0;
            ++compared;
        } catch (const Error&) {
            // omega outside the shifted band; skip
        }
    }
    const bool ok = band_ok && sym_worst < 1e-9 && opposite && biggest > 0.1 && compared > 100;
    report(3, "m=3 flux ratchet and band top", ok,
           "omega_+(0) dev " + fmt(std::abs(w0 - 2.0 * pi / 9)) + ", symmetric max " +
               fmt(sym_worst) + ", " + std::to_string(compared) + " sign pairs");
}

// --- 4. SU(2) structure and closed forms ------------------------------------

void criterion4() {
    std::mt19937_64 rng(104);
    std::uniform_real_distribution<double> kdist(-pi, pi);
    double defect_worst = 0.0, closed_worst = 0.0;
    for (int m : {1, 2, 3, 5}) {
        for (int trial = 0; trial < 250; ++trial) {
            const WalkSpec spec = ref::random_spec(rng, m);
            const double k = kdist(rng);
            const BlochOperator u = period_operator(spec, k);
            defect_worst = std::max(defect_worst, u.su2_defect());
            if (m <= 3) {
                closed_worst = std::max(closed_worst, std::abs(closed_form_u11(spec, k) - u.u11));
                closed_worst = std::max(closed_worst, std::abs(closed_form_u12(spec, k) - u.u12));
            }
        }
    }
    report(4, "SU(2) defect and closed forms over 1000 draws",
           defect_worst < 1e-12 && closed_worst < 1e-12,
           "max defect " + fmt(defect_worst) + ", max closed-form dev " + fmt(closed_worst));
}

// --- 5. The twelve tabulated m = 3 symmetry cases ---------------------------

// Specs for all 12 theta-pair cases with randomized free angles, paired with
// the provenance tag the analytic classifier must produce.
std::vector<std::pair<WalkSpec, std::string>> s31_specs(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(-pi, pi);
    std::uniform_int_distribution<int> coin(0, 1);
    auto pinned = [&](bool half) {
        if (half)
            return coin(rng) ? pi / 2 : -pi / 2;
        return coin(rng) ? 0.0 : -pi;
    };
    std::vector<std::pair<WalkSpec, std::string>> out;
    constexpr int pair_idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int pair_id = 0; pair_id < 3; ++pair_id) {
        for (bool half_i : {false, true}) {
            for (bool half_j : {false, true}) {
                WalkSpec spec{3, {CoinParams{ang(rng), 0, ang(rng), ang(rng)},
                                  CoinParams{ang(rng), 0, ang(rng), ang(rng)},
                                  CoinParams{ang(rng), 0, ang(rng), ang(rng)}}};
                const int i = pair_idx[pair_id][0], j = pair_idx[pair_id][1];
                spec.coins[i].theta = pinned(half_i);
                spec.coins[j].theta = pinned(half_j);
                std::string tag = std::string("S3,1(theta") + char('1' + i) + "=" +
                                  (half_i ? "half" : "int") + ",theta" + char('1' + j) + "=" +
                                  (half_j ? "half" : "int") + ")";
                out.emplace_back(std::move(spec), std::move(tag));
            }
        }
    }
    return out;
}

std::vector<WalkSpec> g_witness_specs; // symmetric specs carried into criterion 6

void criterion5() {
    std::mt19937_64 rng(105);
    double worst = 0.0;
    int hits = 0, expected = 0;
    for (int draw = 0; draw < 10; ++draw) {
        for (auto& [spec, tag] : s31_specs(rng)) {
            ++expected;
            const auto ws = analytic_symmetry_m3(spec, 1e-9, 256);
            const auto it = std::find_if(ws.begin(), ws.end(), [&](const SymmetryWitness& w) {
                return w.provenance == tag;
            });
            if (it == ws.end())
                continue;
            ++hits;
            worst = std::max(worst, it->residual);
            g_witness_specs.push_back(spec);
        }
    }
    report(5, "all 12 tabulated m=3 symmetry cases, 10 draws each",
           hits == expected && worst < 1e-12,
           std::to_string(hits) + "/" + std::to_string(expected) + " witnesses, max residual " +
               fmt(worst));
}

// --- 6. Symmetry forces a flat ratchet --------------------------------------

void criterion6() {
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> ang(-pi, pi);

    std::vector<WalkSpec> specs = g_witness_specs;
    specs.push_back(m2_flux_spec(0.0)); // S2,3
    specs.push_back(m3_flux_spec(0.0)); // S3,2
    {
        // generic S3,2 instance: equal per-step fluxes
        const double d = ang(rng), c = ang(rng);
        specs.push_back({3, {CoinParams{ang(rng), 0, d, c}, CoinParams{ang(rng), 0, d, c},
                             CoinParams{ang(rng), 0, d, c}}});
    }

    IsoOptions opt;
    opt.n_scan = 2048;
    double worst = 0.0;
    int curves = 0, flat = 0;
    for (const WalkSpec& spec : specs) {
        const BandScan scan = scan_band(spec, opt.n_scan);
        if (scan.re_max - scan.re_min < 1e-6) {
            ++flat; // dispersionless band, no interior to probe
            continue;
        }
        for (const SpectralSample& s : spectral_magnetization_curve(spec, 64, opt))
            if (!s.excluded)
                worst = std::max(worst, std::abs(s.m_s));
        ++curves;
    }
    report(6, "every symmetry witness spec has |M_s| < 1e-8", worst < 1e-8 && curves > 60,
           "max |M_s| = " + fmt(worst) + " over " + std::to_string(curves) + " curves, " +
               std::to_string(flat) + " flat bands skipped");
}

// --- 7. Broken symmetry is detected as broken -------------------------------

void criterion7() {
    const SearchResult r5 = search_symmetry(m2_flux_spec(pi / 5), 128, 128, 512, 1e-6);
    const SearchResult r7 = search_symmetry(m3_flux_spec(pi / 2), 128, 128, 512, 1e-6);
    const bool ok = !r5.witness.has_value() && !r7.witness.has_value();
    report(7, "128x128 refined search finds no false witness", ok,
           "best residuals " + fmt(r5.best_residual) + ", " + fmt(r7.best_residual));
}

// --- 8. Dynamics reproduces the spectral magnetization ----------------------

struct GridLine {
    double omega;
    double m_sum;
};

std::vector<GridLine> grid_lines(const WalkSpec& spec, int n_sites) {
    std::vector<GridLine> out;
    for (int j = 0; j < n_sites; ++j) {
        const double k = wrap_angle(two_pi * j / n_sites);
        const double omega = dispersion(spec, k).omega_plus;
        if (std::abs(std::sin(spec.m * omega)) < band_edge_tol)
            continue;
        const double m_plus = eigenstate_magnetization(spec, k, Branch::plus);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const GridLine& g) { return std::abs(g.omega - omega) < 1e-9; });
        if (it == out.end())
            out.push_back({omega, m_plus});
        else
            it->m_sum += m_plus;
    }
    return out;
}

void criterion8() {
    const WalkSpec spec = m2_flux_spec(pi / 5);
    const int n_sites = 64;
    const auto lines = grid_lines(spec, n_sites);

    // The lag window scales with the history; 3T/4 sits on a plateau where
    // the truncation leakage halves cleanly under doubling.
    auto max_residual = [&](int t_periods) {
        const CorrelationSeries series =
            correlation(spec, n_sites, 8, t_periods, 3 * t_periods / 4);
        std::vector<double> omegas;
        for (const GridLine& g : lines)
            omegas.push_back(g.omega);
        const auto spectrum = correlation_spectrum(series, omegas);
        double worst = 0.0;
        for (std::size_t i = 0; i < lines.size(); ++i)
            worst = std::max(worst, std::abs(2.0 * n_sites * spectrum[i].real() -
                                             lines[i].m_sum));
        return worst;
    };

    const double r4096 = max_residual(4096);
    const double r8192 = max_residual(8192);
    const double ratio = r8192 / r4096;
    const bool ok = r4096 <= 0.05 && ratio >= 0.3 && ratio <= 0.7;
    report(8, "ring dynamics matches the spectral magnetization", ok,
           "T=4096 residual " + fmt(r4096) + ", doubling ratio " + fmt(ratio) + " over " +
               std::to_string(lines.size()) + " eigenfrequencies");
}

// --- 9. Structural invariants -----------------------------------------------

void criterion9() {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> kdist(-pi, pi);
    bool exact_cancel = true, bands_odd = true;
    double mono_worst = 0.0, total_worst = 0.0, eig_worst = 0.0;
    for (int m : {1, 2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const WalkSpec spec = ref::random_spec(rng, m);
            const double k = kdist(rng);
            const BandPoint p = dispersion(spec, k);
            bands_odd = bands_odd && p.omega_minus == -p.omega_plus;
            if (std::abs(std::sin(m * p.omega_plus)) < 1e-6)
                continue;
            const double mp = eigenstate_magnetization(spec, k, Branch::plus);
            const double mm = eigenstate_magnetization(spec, k, Branch::minus);
            exact_cancel = exact_cancel && mp == -mm;
            mono_worst = std::max(mono_worst, std::abs(monochromatic_magnetization(spec, k)));
            total_worst = std::max(total_worst, std::abs(total_magnetization(spec, 257)));

            const Spinor v = eigenvector(spec, k, Branch::plus);
            const BlochOperator u = period_operator(spec, k);
            const Complex lambda = ref::cis(-m * p.omega_plus);
            const Complex r1 = u.u11 * v.psi_plus + u.u12 * v.psi_minus - lambda * v.psi_plus;
            const Complex r2 =
                u.u21() * v.psi_plus + u.u22() * v.psi_minus - lambda * v.psi_minus;
            eig_worst = std::max(eig_worst, std::sqrt(std::norm(r1) + std::norm(r2)));
        }
    }

    double odd_worst = 0.0;
    const WalkSpec spec = m2_flux_spec(pi / 5);
    const BandScan scan = scan_band(spec, 4096);
    for (double omega : {0.7, 0.9, 1.1, 1.3})
        odd_worst = std::max(
            odd_worst, std::abs(spectral_magnetization(spec, scan, omega, Branch::plus).m_s +
                                spectral_magnetization(spec, scan, -omega, Branch::minus).m_s));

    const bool ok = exact_cancel && bands_odd && mono_worst < 1e-12 &&
                    total_worst < 257 * 1e-12 && odd_worst < 1e-10 && eig_worst < 1e-10;
    report(9, "structural invariants", ok,
           "monochromatic " + fmt(mono_worst) + ", total " + fmt(total_worst) + ", odd " +
               fmt(odd_worst) + ", eigen-residual " + fmt(eig_worst));
}

// --- 10. Spectroscopy round trip --------------------------------------------

void criterion10() {
    const TransmissionModel model{1.0, 1e-4, 0.01, 0.1};
    std::vector<double> grid;
    for (int i = 0; i < 401; ++i)
        grid.push_back(1.0 - 0.12 + 0.24 * i / 400.0);

    double noiseless_worst = 0.0;
    for (double c_m : {-0.9, -0.3, 0.0, 0.5, 0.95}) {
        const auto curve = transmission_curve(model, c_m, grid);
        noiseless_worst = std::max(
            noiseless_worst,
            std::abs(extract_correlator_from_dip(curve, model.omega0, model.chi) - c_m));
    }

    std::mt19937_64 rng(110);
    std::normal_distribution<double> noise(0.0, 0.01);
    const double c_m = -0.5;
    int ok_trials = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto curve = transmission_curve(model, c_m, grid);
        for (TransmissionSample& s : curve)
            s.transmission *= 1.0 + noise(rng);
        try {
            if (std::abs(extract_correlator_from_dip(curve, model.omega0, model.chi) - c_m) <
                0.02)
                ++ok_trials;
        } catch (const Error&) {
        }
    }

    const bool ok = noiseless_worst < 1e-6 && ok_trials >= 95;
    report(10, "Lorentzian dip correlator round trip", ok,
           "noiseless dev " + fmt(noiseless_worst) + ", " + std::to_string(ok_trials) +
               "/100 noisy trials in tolerance");
}

} // namespace

int main() {
    struct {
        int idx;
        const char* label;
        void (*fn)();
    } criteria[] = {
        {1, "m=1 null ratchet", criterion1},
        {2, "m=2 ratchet curves", criterion2},
        {3, "m=3 flux ratchet", criterion3},
        {4, "SU(2)/closed forms", criterion4},
        {5, "symmetry table", criterion5},
        {6, "symmetry kills ratchet", criterion6},
        {7, "broken symmetry detection", criterion7},
        {8, "dynamics identity", criterion8},
        {9, "structural invariants", criterion9},
        {10, "spectroscopy round trip", criterion10},
    };
    for (const auto& c : criteria) {
        try {
            c.fn();
        } catch (const std::exception& e) {
            report(c.idx, c.label, false, std::string("exception: ") + e.what());
        }
    }
    return g_failures == 0 ? 0 : 1;
}
