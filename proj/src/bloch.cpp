#include "dtqw/bloch.hpp"

#include <cmath>
#include <string>

#include "dtqw/angles.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

namespace {
inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }
} // namespace

BlochOperator compose(const BlochOperator& a, const BlochOperator& b) {
    BlochOperator c;
    c.u11 = a.u11 * b.u11 - a.u12 * std::conj(b.u12);
    c.u12 = a.u11 * b.u12 + a.u12 * std::conj(b.u11);
    return c;
}

BlochOperator single_step_operator(const CoinParams& coin, double k) {
    BlochOperator u;
    u.u11 = cis(coin.phi1 - k) * std::cos(coin.theta);
    u.u12 = cis(coin.phi2 - k) * std::sin(coin.theta);
    return u;
}

BlochOperator period_operator(const WalkSpec& spec, double k) {
    BlochOperator u = single_step_operator(spec.coins[0], k);
    for (int l = 1; l < spec.m; ++l)
        u = compose(single_step_operator(spec.coins[l], k), u);
    return u;
}

Complex closed_form_u11(const WalkSpec& spec, double k) {
    switch (spec.m) {
    case 1: {
        const CoinParams& c = spec.coins[0];
        return cis(c.phi1 - k) * std::cos(c.theta);
    }
    case 2: {
        const CoinParams& c1 = spec.coins[0];
        const CoinParams& c2 = spec.coins[1];
        return std::cos(c1.theta) * std::cos(c2.theta) * cis(c1.phi1 + c2.phi1 - 2.0 * k) -
               std::sin(c1.theta) * std::sin(c2.theta) * cis(c2.phi2 - c1.phi2);
    }
    case 3: {
        const MThreeNotation n = m3_notation(spec);
        const double s1 = std::sin(spec.coins[0].theta), c1 = std::cos(spec.coins[0].theta);
        const double s2 = std::sin(spec.coins[1].theta), c2 = std::cos(spec.coins[1].theta);
        const double s3 = std::sin(spec.coins[2].theta), c3 = std::cos(spec.coins[2].theta);
        return c1 * c2 * c3 * cis(n.k_a - 3.0 * k) - s1 * s2 * c3 * cis(n.k_b - k) -
               s1 * c2 * s3 * cis(-n.k_c + k) - c1 * s2 * s3 * cis(n.k_d - k);
    }
    default:
        throw UnsupportedPeriodError("closed forms exist only for m <= 3, got m = " +
                                     std::to_string(spec.m));
    }
}

Complex closed_form_u12(const WalkSpec& spec, double k) {
    switch (spec.m) {
    case 1: {
        const CoinParams& c = spec.coins[0];
        return cis(c.phi2 - k) * std::sin(c.theta);
    }
    case 2: {
        const CoinParams& c1 = spec.coins[0];
        const CoinParams& c2 = spec.coins[1];
        return std::sin(c1.theta) * std::cos(c2.theta) * cis(c2.phi1 + c1.phi2 - 2.0 * k) +
               std::cos(c1.theta) * std::sin(c2.theta) * cis(c2.phi2 - c1.phi1);
    }
    case 3: {
        const MThreeNotation n = m3_notation(spec);
        const double s1 = std::sin(spec.coins[0].theta), c1 = std::cos(spec.coins[0].theta);
        const double s2 = std::sin(spec.coins[1].theta), c2 = std::cos(spec.coins[1].theta);
        const double s3 = std::sin(spec.coins[2].theta), c3 = std::cos(spec.coins[2].theta);
        return s1 * c2 * c3 * cis(n.k_e - 3.0 * k) + c1 * s2 * c3 * cis(n.k_f - k) +
               c1 * c2 * s3 * cis(-n.k_g + k) - s1 * s2 * s3 * cis(n.k_h - k);
    }
    default:
        throw UnsupportedPeriodError("closed forms exist only for m <= 3, got m = " +
                                     std::to_string(spec.m));
    }
}

} // namespace dtqw
