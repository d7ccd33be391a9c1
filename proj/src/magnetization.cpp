#include "dtqw/magnetization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtqw/angles.hpp"
#include "dtqw/bloch.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

double eigenstate_magnetization(const WalkSpec& spec, double k, Branch branch) {
    const BlochOperator u = period_operator(spec, k);
    const double re = std::clamp(std::real(u.u11), -1.0, 1.0);
    const double s_plus = std::sqrt(std::max(0.0, 1.0 - re * re));
    if (s_plus < band_edge_tol)
        throw BandEdgeDegeneracyError("magnetization undefined at a band edge");
    const double m_plus = -std::imag(u.u11) / s_plus;
    return (branch == Branch::plus) ? m_plus : -m_plus;
}

double monochromatic_magnetization(const WalkSpec& spec, double k) {
    return eigenstate_magnetization(spec, k, Branch::plus) +
           eigenstate_magnetization(spec, k, Branch::minus);
}

double total_magnetization(const WalkSpec& spec, int n_k) {
    double total = 0.0;
    for (int i = 0; i < n_k; ++i) {
        const double k = -pi + two_pi * (i + 0.5) / n_k;
        try {
            total += monochromatic_magnetization(spec, k);
        } catch (const BandEdgeDegeneracyError&) {
            // band-edge grid points carry zero pairwise contribution
        }
    }
    return total;
}

SpectralSample spectral_magnetization(const WalkSpec& spec, double omega, Branch branch,
                                      const IsoOptions& opt) {
    return spectral_magnetization(spec, scan_band(spec, opt.n_scan), omega, branch, opt);
}

SpectralSample spectral_magnetization(const WalkSpec& spec, const BandScan& scan, double omega,
                                      Branch branch, const IsoOptions& opt) {
    if (branch == Branch::minus) {
        SpectralSample s = spectral_magnetization(spec, scan, -omega, Branch::plus, opt);
        s.omega = omega;
        s.m_s = -s.m_s;
        return s;
    }
    if (std::abs(std::sin(spec.m * omega)) < band_edge_tol)
        throw BandEdgeDegeneracyError("spectral magnetization excluded at a band edge");
    const IsoFrequencySet iso = iso_frequency_set(spec, scan, omega, Branch::plus, opt);
    double sum = 0.0;
    for (const IsoRoot& r : iso.roots)
        sum += r.multiplicity * eigenstate_magnetization(spec, r.k, Branch::plus);
    return {omega, sum, iso.degeneracy(), false};
}

std::vector<SpectralSample> spectral_magnetization_curve(const WalkSpec& spec, int n_omega,
                                                         const IsoOptions& opt) {
    const BandScan scan = scan_band(spec, opt.n_scan);
    const double omega_lo = std::acos(std::clamp(scan.re_max, -1.0, 1.0)) / spec.m;
    const double omega_hi = std::acos(std::clamp(scan.re_min, -1.0, 1.0)) / spec.m;
    std::vector<SpectralSample> out;
    out.reserve(n_omega);
    for (int i = 0; i < n_omega; ++i) {
        const double omega = omega_lo + (omega_hi - omega_lo) * (i + 0.5) / n_omega;
        try {
            out.push_back(spectral_magnetization(spec, scan, omega, Branch::plus, opt));
        } catch (const Error&) {
            out.push_back({omega, std::numeric_limits<double>::quiet_NaN(), 0, true});
        }
    }
    return out;
}

} // namespace dtqw
