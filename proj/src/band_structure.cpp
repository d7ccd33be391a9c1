#include "dtqw/band_structure.hpp"

#include <algorithm>
#include <cmath>

#include "dtqw/angles.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

inline double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

inline double re_u11_at(const WalkSpec& spec, double k) {
    return std::real(period_operator(spec, k).u11);
}

// Bisection for f(k) = Re u11(k) - target on a bracketing interval.
double bisect_root(const WalkSpec& spec, double target, double lo, double hi, double flo,
                   double tol) {
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = re_u11_at(spec, mid) - target;
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimization of sign*f over [lo, hi].
double minimize_touch(const WalkSpec& spec, double target, double sign, double lo, double hi,
                      double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = sign * (re_u11_at(spec, x1) - target);
    double f2 = sign * (re_u11_at(spec, x2) - target);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = sign * (re_u11_at(spec, x1) - target);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = sign * (re_u11_at(spec, x2) - target);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

BandPoint dispersion(const WalkSpec& spec, double k) {
    const double re = clamp_unit(std::real(period_operator(spec, k).u11));
    const double omega = std::acos(re) / spec.m;
    return {k, omega, -omega};
}

Spinor eigenvector(const WalkSpec& spec, double k, Branch branch) {
    const BlochOperator u = period_operator(spec, k);
    const double re = clamp_unit(std::real(u.u11));
    const double s_plus = std::sqrt(std::max(0.0, 1.0 - re * re)); // sin(m*omega_plus) >= 0
    if (s_plus < band_edge_tol)
        throw BandEdgeDegeneracyError("eigenvector ill-conditioned: |sin(m omega)| < 1e-8");
    const double s = (branch == Branch::plus) ? s_plus : -s_plus;

    const Complex a = Complex(0.0, 1.0) * u.u12;
    const Complex b = std::imag(u.u11) + s;
    const double nrm = std::sqrt(std::norm(a) + std::norm(b));
    if (nrm < 1e-8) {
        // Candidate degenerates only when u12 = 0 and Im u11 = -sin(m omega);
        // then (1, 0) is the exact eigenvector with eigenvalue u11.
        return {Complex(1.0, 0.0), Complex(0.0, 0.0)};
    }
    return {a / nrm, b / nrm};
}

std::vector<BandPoint> sample_bands(const WalkSpec& spec, int n_k) {
    std::vector<BandPoint> out;
    out.reserve(n_k);
    for (int i = 0; i < n_k; ++i)
        out.push_back(dispersion(spec, -pi + two_pi * i / n_k));
    return out;
}

BandScan scan_band(const WalkSpec& spec, int n_scan) {
    BandScan scan;
    scan.n_scan = n_scan;
    scan.k.resize(n_scan);
    scan.re_u11.resize(n_scan);
    scan.re_min = 1.0;
    scan.re_max = -1.0;
    for (int i = 0; i < n_scan; ++i) {
        const double k = -pi + two_pi * i / n_scan;
        const double re = re_u11_at(spec, k);
        scan.k[i] = k;
        scan.re_u11[i] = re;
        scan.re_min = std::min(scan.re_min, re);
        scan.re_max = std::max(scan.re_max, re);
    }
    return scan;
}

IsoFrequencySet iso_frequency_set(const WalkSpec& spec, double omega, Branch branch,
                                  const IsoOptions& opt) {
    return iso_frequency_set(spec, scan_band(spec, opt.n_scan), omega, branch, opt);
}

IsoFrequencySet iso_frequency_set(const WalkSpec& spec, const BandScan& scan, double omega,
                                  Branch branch, const IsoOptions& opt) {
    const int m = spec.m;
    const double omega_abs = (branch == Branch::plus) ? omega : -omega;
    if (!(omega_abs > 0.0 && omega_abs < pi / m))
        throw OutOfBandError("omega outside the principal branch (0, pi/m)");
    const double target = std::cos(m * omega_abs);
    if (target > scan.re_max + 1e-6 || target < scan.re_min - 1e-6)
        throw OutOfBandError("omega outside the band");

    const int n = scan.n_scan;
    const double h = two_pi / n;
    std::vector<double> f(n);
    for (int i = 0; i < n; ++i)
        f[i] = scan.re_u11[i] - target;

    IsoFrequencySet set;
    set.omega = omega;
    set.branch = branch;

    // Cell i spans [k_i, k_i + h]; the last cell wraps around to -pi.
    std::vector<char> consumed(n, 0);
    constexpr double ztol = 1e-13;

    // Roots sitting exactly on grid points.
    for (int i = 0; i < n; ++i) {
        if (std::abs(f[i]) >= ztol)
            continue;
        const double fl = f[(i + n - 1) % n];
        const double fr = f[(i + 1) % n];
        const int mult = (fl * fr > 0.0) ? 2 : 1;
        set.roots.push_back({scan.k[i], mult});
        consumed[(i + n - 1) % n] = 1;
        consumed[i] = 1;
    }

    // Simple roots via sign change and bisection.
    for (int i = 0; i < n; ++i) {
        if (consumed[i])
            continue;
        const double a = f[i];
        const double b = f[(i + 1) % n];
        if ((a < 0.0) == (b < 0.0))
            continue;
        const double k = bisect_root(spec, target, scan.k[i], scan.k[i] + h, a, opt.refine_tol);
        set.roots.push_back({wrap_angle(k), 1});
        consumed[i] = 1;
    }

    // Touching double roots at band extrema: local minima of |f| without a
    // sign change in the neighborhood.
    for (int i = 0; i < n; ++i) {
        const int il = (i + n - 1) % n;
        const int ir = (i + 1) % n;
        if (consumed[il] || consumed[i])
            continue;
        const double fm = f[i], fl = f[il], fr = f[ir];
        if (fm * fl <= 0.0 || fm * fr <= 0.0)
            continue;
        if (!(std::abs(fm) <= std::abs(fl) && std::abs(fm) < std::abs(fr)))
            continue;
        if (std::abs(fm) > 1e-3)
            continue;
        const double sign = fm > 0.0 ? 1.0 : -1.0;
        const double k = minimize_touch(spec, target, sign, scan.k[i] - h, scan.k[i] + h,
                                        opt.refine_tol);
        if (std::abs(re_u11_at(spec, k) - target) < 1e-9)
            set.roots.push_back({wrap_angle(k), 2});
    }

    if (set.roots.empty()) {
        if (target > scan.re_max - 1e-9 || target < scan.re_min + 1e-9)
            throw OutOfBandError("omega at or beyond the band extremum, no roots resolved");
        throw UnresolvedRootError("bracketing found no roots for an interior frequency");
    }
    std::sort(set.roots.begin(), set.roots.end(),
              [](const IsoRoot& a, const IsoRoot& b) { return a.k < b.k; });
    return set;
}

} // namespace dtqw
