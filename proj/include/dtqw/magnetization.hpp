#pragma once

#include <vector>

#include "dtqw/band_structure.hpp"
#include "dtqw/walk_model.hpp"

namespace dtqw {

struct SpectralSample {
    double omega;
    double m_s;      // NaN when excluded
    int degeneracy;  // multiplicity-weighted root count, 0 when excluded
    bool excluded;   // band-edge proximity, |sin(m omega)| < band_edge_tol
};

// Population imbalance of the band eigenstate:
// M_branch(k) = -Im u11 / sin(m omega_branch). Branch minus is the exact
// negative of branch plus. Throws BandEdgeDegeneracyError near band edges.
double eigenstate_magnetization(const WalkSpec& spec, double k, Branch branch);

// M_+(k) + M_-(k); identically zero.
double monochromatic_magnetization(const WalkSpec& spec, double k);

// Sum of monochromatic magnetization over an n_k midpoint grid; zero.
double total_magnetization(const WalkSpec& spec, int n_k);

// Sum of eigenstate magnetization over the iso-frequency root set,
// multiplicity-weighted. Negative omega (branch minus) is reported via
// oddness. Throws OutOfBandError / BandEdgeDegeneracyError.
SpectralSample spectral_magnetization(const WalkSpec& spec, double omega, Branch branch,
                                      const IsoOptions& opt = {});
SpectralSample spectral_magnetization(const WalkSpec& spec, const BandScan& scan, double omega,
                                      Branch branch, const IsoOptions& opt = {});

// Uniform omega grid over the interior of the + band (midpoint grid);
// band-edge samples come back flagged instead of throwing.
std::vector<SpectralSample> spectral_magnetization_curve(const WalkSpec& spec, int n_omega,
                                                         const IsoOptions& opt = {});

} // namespace dtqw
