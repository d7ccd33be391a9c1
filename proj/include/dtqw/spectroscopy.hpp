#pragma once

#include <vector>

namespace dtqw {

// Single transmission-line mode weakly coupled to the walk. The resonance
// strength is named alpha_r to keep it apart from the initial-state
// expansion coefficients.
struct TransmissionModel {
    double omega0;  // bare mode frequency
    double alpha_r; // resonance strength, >= 0
    double gamma;   // dissipation, > 0
    double chi;     // coupling strength
};

struct TransmissionSample {
    double omega;
    double transmission;
};

struct LorentzianFit {
    double omega_res;
    double alpha_r;
    double gamma;
    double rms_residual;
};

// Lorentzian dip D(omega) = 1 - alpha_r / ((omega - omega_res)^2 + gamma^2)
// with omega_res = omega0 + chi * C_M(omega0).
std::vector<TransmissionSample> transmission_curve(const TransmissionModel& model,
                                                   double c_m_at_omega0,
                                                   const std::vector<double>& omega_grid);

// Three-parameter least-squares fit of the dip (linearized solve followed
// by Gauss-Newton refinement). Throws NoDipFoundError.
LorentzianFit fit_lorentzian(const std::vector<TransmissionSample>& samples);

// Recovers C_M(omega0) = (omega_res - omega0) / chi from dip samples.
double extract_correlator_from_dip(const std::vector<TransmissionSample>& samples,
                                   double omega0, double chi);

} // namespace dtqw
