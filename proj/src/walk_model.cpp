#include "dtqw/walk_model.hpp"

#include <cmath>
#include <string>

#include "dtqw/angles.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

WalkSpec validate_walk_spec(const WalkSpec& raw) {
    if (raw.m < 1)
        throw EmptyPeriodError{};
    if (static_cast<int>(raw.coins.size()) != raw.m)
        throw LengthMismatchError("expected " + std::to_string(raw.m) + " coins, got " +
                                  std::to_string(raw.coins.size()));
    WalkSpec out;
    out.m = raw.m;
    out.coins.reserve(raw.coins.size());
    for (const CoinParams& c : raw.coins) {
        if (!std::isfinite(c.theta) || !std::isfinite(c.phi) || !std::isfinite(c.phi1) ||
            !std::isfinite(c.phi2))
            throw NonFiniteAngleError("coin angles must be finite");
        out.coins.push_back({wrap_angle(c.theta), wrap_angle(c.phi), wrap_angle(c.phi1),
                             wrap_angle(c.phi2)});
    }
    return out;
}

std::pair<WalkSpec, double> canonical_phase_reduction(const WalkSpec& spec) {
    WalkSpec reduced = spec;
    double total = 0.0;
    for (CoinParams& c : reduced.coins) {
        total += c.phi;
        c.phi = 0.0;
    }
    return {reduced, wrap_angle(total)};
}

MThreeNotation m3_notation(const WalkSpec& spec) {
    if (spec.m != 3)
        throw WrongPeriodError("m3_notation requires m = 3, got m = " + std::to_string(spec.m));
    const CoinParams& c1 = spec.coins[0];
    const CoinParams& c2 = spec.coins[1];
    const CoinParams& c3 = spec.coins[2];
    MThreeNotation n;
    n.k_a = wrap_angle(c1.phi1 + c2.phi1 + c3.phi1);
    n.k_b = wrap_angle(c3.phi1 - c1.phi2 + c2.phi2);
    n.k_c = wrap_angle(c2.phi1 + c1.phi2 - c3.phi2);
    n.k_d = wrap_angle(c1.phi1 - c2.phi2 + c3.phi2);
    const double shift = c1.phi2 - c1.phi1;
    n.k_e = wrap_angle(n.k_a + shift);
    n.k_f = wrap_angle(n.k_b + shift);
    n.k_g = wrap_angle(n.k_c - shift);
    n.k_h = wrap_angle(n.k_d + shift);
    return n;
}

} // namespace dtqw
