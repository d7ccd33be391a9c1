#pragma once

#include <complex>

#include "dtqw/walk_model.hpp"

namespace dtqw {

using Complex = std::complex<double>;

// Unit-determinant 2x2 momentum-space operator. Only the first row is
// stored; the second row is (-conj(u12), conj(u11)) by construction, so
// the SU(2) structure cannot drift.
struct BlochOperator {
    Complex u11{1.0, 0.0};
    Complex u12{0.0, 0.0};

    Complex u21() const { return -std::conj(u12); }
    Complex u22() const { return std::conj(u11); }

    // | |u11|^2 + |u12|^2 - 1 |, zero for an exactly unitary operator.
    double su2_defect() const { return std::abs(std::norm(u11) + std::norm(u12) - 1.0); }
};

// Matrix product a * b (a applied after b).
BlochOperator compose(const BlochOperator& a, const BlochOperator& b);

// Momentum-space operator of one coin+shift sub-step. Expects a reduced
// coin (phi = 0): u11 = e^{i(phi1-k)} cos(theta), u12 = e^{i(phi2-k)} sin(theta).
BlochOperator single_step_operator(const CoinParams& coin, double k);

// Full-period operator U_m * ... * U_1 (step 1 applied first, rightmost).
BlochOperator period_operator(const WalkSpec& spec, double k);

// Closed-form matrix elements for m = 1, 2, 3; agree with period_operator
// to 1e-12. Throws UnsupportedPeriodError for m > 3.
Complex closed_form_u11(const WalkSpec& spec, double k);
Complex closed_form_u12(const WalkSpec& spec, double k);

} // namespace dtqw
