#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "dtqw/angles.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/walk_model.hpp"

using namespace dtqw;

TEST_CASE("validate_walk_spec wraps every angle into [-pi, pi)") {
    WalkSpec raw{1, {CoinParams{3.0 * pi, -3.0 * pi, pi, 0.5 + two_pi}}};
    const WalkSpec spec = validate_walk_spec(raw);
    CHECK(spec.coins[0].theta == doctest::Approx(-pi));
    CHECK(spec.coins[0].phi == doctest::Approx(-pi));
    CHECK(spec.coins[0].phi1 == doctest::Approx(-pi));
    CHECK(spec.coins[0].phi2 == doctest::Approx(0.5));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> big(-50.0, 50.0);
    for (int trial = 0; trial < 200; ++trial) {
        WalkSpec r{2, {CoinParams{big(rng), big(rng), big(rng), big(rng)},
                       CoinParams{big(rng), big(rng), big(rng), big(rng)}}};
        const WalkSpec s = validate_walk_spec(r);
        for (const CoinParams& c : s.coins)
            for (double a : {c.theta, c.phi, c.phi1, c.phi2}) {
                CHECK(a >= -pi);
                CHECK(a < pi);
            }
    }
}

TEST_CASE("validate_walk_spec rejects malformed specs") {
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{0, {}}), EmptyPeriodError);
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{-3, {}}), EmptyPeriodError);
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{2, {CoinParams{}}}), LengthMismatchError);
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{1, {CoinParams{}, CoinParams{}}}),
                    LengthMismatchError);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{1, {CoinParams{nan, 0, 0, 0}}}),
                    NonFiniteAngleError);
    CHECK_THROWS_AS(validate_walk_spec(WalkSpec{1, {CoinParams{0, 0, inf, 0}}}),
                    NonFiniteAngleError);
}

TEST_CASE("canonical_phase_reduction strips global phases and returns their sum") {
    WalkSpec spec = validate_walk_spec(
        WalkSpec{3, {CoinParams{0.3, 1.1, 0.2, -0.4}, CoinParams{0.5, 2.0, 0.0, 0.0},
                     CoinParams{-0.7, -2.9, 0.6, 0.1}}});
    const auto [reduced, total] = canonical_phase_reduction(spec);
    CHECK(total == doctest::Approx(wrap_angle(1.1 + 2.0 - 2.9)));
    for (std::size_t i = 0; i < reduced.coins.size(); ++i) {
        CHECK(reduced.coins[i].phi == 0.0);
        CHECK(reduced.coins[i].theta == spec.coins[i].theta);
        CHECK(reduced.coins[i].phi1 == spec.coins[i].phi1);
        CHECK(reduced.coins[i].phi2 == spec.coins[i].phi2);
    }
}

TEST_CASE("m3_notation derived angles") {
    WalkSpec spec = validate_walk_spec(
        WalkSpec{3, {CoinParams{0.1, 0.0, pi / 2, 0.0}, CoinParams{0.2, 0.0, 0.0, 0.0},
                     CoinParams{0.3, 0.0, 0.0, 0.0}}});
    const MThreeNotation n = m3_notation(spec);
    CHECK(n.k_a == doctest::Approx(pi / 2));
    CHECK(n.k_b == doctest::Approx(0.0));
    CHECK(n.k_c == doctest::Approx(0.0));
    CHECK(n.k_d == doctest::Approx(pi / 2));
    CHECK(n.k_e == doctest::Approx(0.0));
    CHECK(n.k_f == doctest::Approx(-pi / 2));
    CHECK(n.k_g == doctest::Approx(pi / 2));
    CHECK(n.k_h == doctest::Approx(0.0));

    WalkSpec m2 = validate_walk_spec(WalkSpec{2, {CoinParams{}, CoinParams{}}});
    CHECK_THROWS_AS(m3_notation(m2), WrongPeriodError);
}

TEST_CASE("angle helpers") {
    CHECK(wrap_angle(pi) == doctest::Approx(-pi));
    CHECK(wrap_angle(-pi) == doctest::Approx(-pi));
    CHECK(wrap_angle(0.25) == doctest::Approx(0.25));
    CHECK(angle_distance(pi - 0.1, -pi + 0.1) == doctest::Approx(0.2));
}
