#pragma once

#include <utility>
#include <vector>

namespace dtqw {

// One coin step. All angles are radians, canonically stored in [-pi, pi).
// theta is the rotation angle, phi a global phase, phi1 and phi2 the
// external- and internal-flux angles.
struct CoinParams {
    double theta = 0.0;
    double phi = 0.0;
    double phi1 = 0.0;
    double phi2 = 0.0;
};

// An m-periodic walk: period m and exactly m coins applied in order.
// Immutable after validation; safe to share across threads.
struct WalkSpec {
    int m = 1;
    std::vector<CoinParams> coins;
};

// The eight derived angles used by the m=3 closed forms and symmetry tables.
struct MThreeNotation {
    double k_a, k_b, k_c, k_d;
    double k_e, k_f, k_g, k_h;
};

// Canonicalizes a candidate spec: wraps every angle into [-pi, pi) and
// checks the period/coin-count contract. Throws EmptyPeriodError,
// LengthMismatchError or NonFiniteAngleError.
WalkSpec validate_walk_spec(const WalkSpec& raw);

// Strips the global-phase angles phi from every coin and returns the
// accumulated phase sum (wrapped). The stripped phases only shift the
// quasi-energies, so all spectral code consumes the reduced spec.
std::pair<WalkSpec, double> canonical_phase_reduction(const WalkSpec& spec);

// Derived angle set for m=3 specs. Throws WrongPeriodError for m != 3.
MThreeNotation m3_notation(const WalkSpec& spec);

} // namespace dtqw
