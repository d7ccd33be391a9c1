#include "dtqw/spectroscopy.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

// Solve a 3x3 linear system in place by Gaussian elimination with partial
// pivoting. Returns false if singular.
bool solve3(std::array<std::array<double, 4>, 3>& m) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                piv = r;
        if (std::abs(m[piv][col]) < 1e-300)
            return false;
        std::swap(m[col], m[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col)
                continue;
            const double factor = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    for (int r = 0; r < 3; ++r)
        m[r][3] /= m[r][r];
    return true;
}

} // namespace

std::vector<TransmissionSample> transmission_curve(const TransmissionModel& model,
                                                   double c_m_at_omega0,
                                                   const std::vector<double>& omega_grid) {
    const double omega_res = model.omega0 + model.chi * c_m_at_omega0;
    std::vector<TransmissionSample> out;
    out.reserve(omega_grid.size());
    for (double w : omega_grid) {
        const double d = w - omega_res;
        out.push_back({w, 1.0 - model.alpha_r / (d * d + model.gamma * model.gamma)});
    }
    return out;
}

LorentzianFit fit_lorentzian(const std::vector<TransmissionSample>& samples) {
    if (samples.size() < 4)
        throw NoDipFoundError("too few samples to fit a dip");

    double y_max = 0.0;
    for (const auto& s : samples)
        y_max = std::max(y_max, 1.0 - s.transmission);
    if (y_max <= 0.0)
        throw NoDipFoundError("no transmission drop in the samples");

    // Linearization: y ((w - wr)^2 + g^2) = a  <=>
    // y w^2 = (2 y w) u - y v + a  with u = wr, v = wr^2 + g^2.
    std::array<std::array<double, 4>, 3> normal{};
    for (const auto& s : samples) {
        const double y = 1.0 - s.transmission;
        const double row[3] = {2.0 * y * s.omega, -y, 1.0};
        const double rhs = y * s.omega * s.omega;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j)
                normal[i][j] += row[i] * row[j];
            normal[i][3] += row[i] * rhs;
        }
    }
    if (!solve3(normal))
        throw NoDipFoundError("degenerate dip geometry");
    double wr = normal[0][3];
    const double v = normal[1][3];
    double alpha = normal[2][3];
    double g2 = v - wr * wr;
    if (g2 <= 0.0 || alpha <= 0.0)
        throw NoDipFoundError("linearized fit yields a non-physical dip");
    double g = std::sqrt(g2);

    // Gauss-Newton refinement on the true residual y - a/((w-wr)^2+g^2).
    for (int it = 0; it < 40; ++it) {
        std::array<std::array<double, 4>, 3> gn{};
        for (const auto& s : samples) {
            const double d = s.omega - wr;
            const double den = d * d + g * g;
            const double model = alpha / den;
            const double r = (1.0 - s.transmission) - model;
            const double j_wr = 2.0 * alpha * d / (den * den);
            const double j_g = -2.0 * alpha * g / (den * den);
            const double j_a = 1.0 / den;
            const double jac[3] = {j_wr, j_g, j_a};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j)
                    gn[i][j] += jac[i] * jac[j];
                gn[i][3] += jac[i] * r;
            }
        }
        if (!solve3(gn))
            break;
        wr += gn[0][3];
        g += gn[1][3];
        alpha += gn[2][3];
        g = std::abs(g);
        if (std::abs(gn[0][3]) + std::abs(gn[1][3]) + std::abs(gn[2][3]) < 1e-14)
            break;
    }

    double ss = 0.0;
    for (const auto& s : samples) {
        const double d = s.omega - wr;
        const double r = (1.0 - s.transmission) - alpha / (d * d + g * g);
        ss += r * r;
    }
    const double rms = std::sqrt(ss / samples.size());
    if (rms > 0.2 * y_max)
        throw NoDipFoundError("fit residual too large, samples are not a Lorentzian dip");
    return {wr, alpha, g, rms};
}

double extract_correlator_from_dip(const std::vector<TransmissionSample>& samples,
                                   double omega0, double chi) {
    if (chi == 0.0)
        throw ZeroCouplingError{};
    const LorentzianFit fit = fit_lorentzian(samples);
    return (fit.omega_res - omega0) / chi;
}

} // namespace dtqw
