#include "dtqw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fftw3.h>

#include "dtqw/angles.hpp"
#include "dtqw/band_structure.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

void apply_coin(LatticeState& state, const CoinParams& coin) {
    const std::complex<double> d1 = std::polar(std::cos(coin.theta), coin.phi1);
    const std::complex<double> d2 = std::polar(std::sin(coin.theta), coin.phi2);
    for (int n = 0; n < state.n_sites; ++n) {
        const auto up = state.psi_plus[n];
        const auto dn = state.psi_minus[n];
        state.psi_plus[n] = d1 * up + d2 * dn;
        state.psi_minus[n] = -std::conj(d2) * up + std::conj(d1) * dn;
    }
}

// psi_plus moves one site right, psi_minus one site left, ring boundaries.
void apply_shift(LatticeState& state) {
    std::rotate(state.psi_plus.rbegin(), state.psi_plus.rbegin() + 1, state.psi_plus.rend());
    std::rotate(state.psi_minus.begin(), state.psi_minus.begin() + 1, state.psi_minus.end());
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n)
        p <<= 1;
    return p;
}

} // namespace

double LatticeState::norm_sq() const {
    double s = 0.0;
    for (int n = 0; n < n_sites; ++n)
        s += std::norm(psi_plus[n]) + std::norm(psi_minus[n]);
    return s;
}

LatticeState build_uniform_weight_state(const WalkSpec& spec, int n_sites, std::uint64_t seed) {
    if (n_sites < 2)
        throw Error("lattice needs at least 2 sites");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase_dist(0.0, two_pi);

    LatticeState state;
    state.n_sites = n_sites;
    state.psi_plus.assign(n_sites, 0.0);
    state.psi_minus.assign(n_sites, 0.0);

    const double magnitude = 1.0 / std::sqrt(2.0 * n_sites);
    for (int j = 0; j < n_sites; ++j) {
        const double k = wrap_angle(two_pi * j / n_sites);
        for (Branch branch : {Branch::plus, Branch::minus}) {
            const Spinor v = eigenvector(spec, k, branch);
            const std::complex<double> alpha = std::polar(magnitude, phase_dist(rng));
            for (int n = 0; n < n_sites; ++n) {
                const std::complex<double> bloch =
                    std::polar(1.0 / std::sqrt(double(n_sites)), k * n);
                state.psi_plus[n] += bloch * alpha * v.psi_plus;
                state.psi_minus[n] += bloch * alpha * v.psi_minus;
            }
        }
    }
    return state;
}

void step_period(LatticeState& state, const WalkSpec& spec) {
    for (const CoinParams& coin : spec.coins) {
        apply_coin(state, coin);
        apply_shift(state);
    }
}

std::vector<LatticeState> evolve(const LatticeState& initial, const WalkSpec& spec,
                                 int n_periods) {
    std::vector<LatticeState> snapshots;
    snapshots.reserve(n_periods);
    LatticeState state = initial;
    for (int t = 0; t < n_periods; ++t) {
        step_period(state, spec);
        snapshots.push_back(state);
    }
    return snapshots;
}

CorrelationSeries correlation(const WalkSpec& spec, int n_sites, std::uint64_t seed,
                              int t_periods, int tau_max_periods) {
    if (tau_max_periods > t_periods)
        throw InsufficientHistoryError("tau_max exceeds the evolved history");

    // Component-major storage: x_c(t) for each of the 2N site components,
    // t = 0..T in period steps.
    const int len = t_periods + 1;
    const int n_comp = 2 * n_sites;
    std::vector<std::vector<std::complex<double>>> series(
        n_comp, std::vector<std::complex<double>>(len));

    LatticeState state = build_uniform_weight_state(spec, n_sites, seed);
    for (int t = 0; t < len; ++t) {
        if (t > 0)
            step_period(state, spec);
        for (int n = 0; n < n_sites; ++n) {
            series[n][t] = state.psi_plus[n];
            series[n_sites + n][t] = state.psi_minus[n];
        }
    }

    // r(j) = sum_t x(t) conj(x(t-j)) per component via FFT; the signed sum
    // over components needs only one inverse transform of the accumulated
    // cross-spectrum.
    const std::size_t padded = next_pow2(2 * static_cast<std::size_t>(len));
    std::vector<std::complex<double>> buf(padded), freq(padded), acc(padded, 0.0);
    fftw_plan fwd = fftw_plan_dft_1d(static_cast<int>(padded),
                                     reinterpret_cast<fftw_complex*>(buf.data()),
                                     reinterpret_cast<fftw_complex*>(freq.data()),
                                     FFTW_FORWARD, FFTW_ESTIMATE);
    for (int c = 0; c < n_comp; ++c) {
        std::fill(buf.begin(), buf.end(), std::complex<double>(0.0));
        std::copy(series[c].begin(), series[c].end(), buf.begin());
        fftw_execute(fwd);
        const double sign = (c < n_sites) ? 1.0 : -1.0;
        for (std::size_t f = 0; f < padded; ++f)
            acc[f] += sign * std::norm(freq[f]);
    }
    fftw_destroy_plan(fwd);

    std::vector<std::complex<double>> corr(padded);
    fftw_plan bwd = fftw_plan_dft_1d(static_cast<int>(padded),
                                     reinterpret_cast<fftw_complex*>(acc.data()),
                                     reinterpret_cast<fftw_complex*>(corr.data()),
                                     FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(bwd);
    fftw_destroy_plan(bwd);

    CorrelationSeries out;
    out.period_m = spec.m;
    out.n_sites = n_sites;
    out.t_average_count = len;
    out.tau.reserve(tau_max_periods + 1);
    out.values.reserve(tau_max_periods + 1);
    for (int j = 0; j <= tau_max_periods; ++j) {
        out.tau.push_back(double(spec.m) * j);
        out.values.push_back(corr[j] / double(padded) / double(len - j));
    }
    return out;
}

std::vector<std::complex<double>> correlation_spectrum(const CorrelationSeries& series,
                                                       const std::vector<double>& omega_list) {
    std::vector<std::complex<double>> out;
    out.reserve(omega_list.size());
    const std::size_t n_tau = series.tau.size();
    for (double omega : omega_list) {
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n_tau; ++j)
            sum += std::polar(1.0, omega * series.tau[j]) * series.values[j];
        out.push_back(sum / double(n_tau));
    }
    return out;
}

} // namespace dtqw
