#pragma once

#include <complex>
#include <vector>

#include "dtqw/bloch.hpp"
#include "dtqw/walk_model.hpp"

namespace dtqw {

enum class Branch { plus, minus };

// |sin(m*omega)| below this counts as a band edge; eigenvector and
// magnetization formulas divide by sin(m*omega) and are excluded there.
inline constexpr double band_edge_tol = 1e-8;

struct BandPoint {
    double k;
    double omega_plus;  // in [0, pi/m]
    double omega_minus; // exactly -omega_plus
};

struct Spinor {
    Complex psi_plus;
    Complex psi_minus;
};

struct IsoRoot {
    double k;         // in [-pi, pi)
    int multiplicity; // 2 at band extrema, 1 otherwise
};

struct IsoFrequencySet {
    double omega;
    Branch branch;
    std::vector<IsoRoot> roots; // sorted by k

    int degeneracy() const {
        int d = 0;
        for (const IsoRoot& r : roots)
            d += r.multiplicity;
        return d;
    }
};

// Cached Re u11 samples on a uniform k grid; reused across iso-frequency
// queries for the same spec.
struct BandScan {
    int n_scan;
    std::vector<double> k;      // n_scan points, -pi + 2*pi*i/n_scan
    std::vector<double> re_u11; // same length
    double re_min, re_max;
};

struct IsoOptions {
    int n_scan = 4096;
    double refine_tol = 1e-12; // bisection width in k
};

// Principal-branch dispersion, omega_plus = arccos(Re u11)/m clamped to [-1, 1].
BandPoint dispersion(const WalkSpec& spec, double k);

// Normalized band eigenvector; satisfies U v = e^{-i m omega} v to 1e-10.
// Throws BandEdgeDegeneracyError when |sin(m omega)| < band_edge_tol.
Spinor eigenvector(const WalkSpec& spec, double k, Branch branch);

// Uniform k grid over [-pi, pi), n_k >= 2 points.
std::vector<BandPoint> sample_bands(const WalkSpec& spec, int n_k);

BandScan scan_band(const WalkSpec& spec, int n_scan);

// All k in [-pi, pi) with omega_branch(k) = omega, by sign-change
// bracketing plus bisection; touching roots at band extrema are reported
// with multiplicity 2. Throws OutOfBandError / UnresolvedRootError.
IsoFrequencySet iso_frequency_set(const WalkSpec& spec, double omega, Branch branch,
                                  const IsoOptions& opt = {});
IsoFrequencySet iso_frequency_set(const WalkSpec& spec, const BandScan& scan, double omega,
                                  Branch branch, const IsoOptions& opt = {});

} // namespace dtqw
