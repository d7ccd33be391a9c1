#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dtqw/walk_model.hpp"

namespace dtqw {

// Two-component wave function on an N-site ring.
struct LatticeState {
    int n_sites = 0;
    std::vector<std::complex<double>> psi_plus;
    std::vector<std::complex<double>> psi_minus;

    double norm_sq() const;
};

// Time-averaged correlator C(tau) on the tau grid (multiples of m).
struct CorrelationSeries {
    int period_m = 1;
    int n_sites = 0;
    std::vector<double> tau;                    // tau_j = m * j
    std::vector<std::complex<double>> values;   // averaged over t
    int t_average_count = 0;                    // snapshots entering the tau=0 average
};

// Equal-weight superposition of all 2N band eigenstates on the momentum
// grid k_j = 2 pi j / N, magnitudes 1/sqrt(2N), seeded random phases.
// Throws BandEdgeDegeneracyError if a grid momentum hits a band edge.
LatticeState build_uniform_weight_state(const WalkSpec& spec, int n_sites, std::uint64_t seed);

// One full period in place: coin then shift for each of the m sub-steps.
void step_period(LatticeState& state, const WalkSpec& spec);

// Ring evolution; returns one snapshot after each full period.
std::vector<LatticeState> evolve(const LatticeState& initial, const WalkSpec& spec,
                                 int n_periods);

// Builds the uniform-weight state, evolves T periods, and accumulates the
// t-averaged correlator for lags 0..tau_max periods.
CorrelationSeries correlation(const WalkSpec& spec, int n_sites, std::uint64_t seed,
                              int t_periods, int tau_max_periods);

// DFT of the series: C(omega) = (1/n_tau) sum_tau e^{i omega tau} C(tau).
std::vector<std::complex<double>> correlation_spectrum(const CorrelationSeries& series,
                                                       const std::vector<double>& omega_list);

} // namespace dtqw
