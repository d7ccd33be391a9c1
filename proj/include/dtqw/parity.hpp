#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtqw/walk_model.hpp"

namespace dtqw {

// A candidate (K, G) pair for the generalized parity symmetry: reflection
// of momentum about K combined with a spin flip carrying phase G.
struct SymmetryWitness {
    double K;
    double G;
    double residual;        // max matrix-element deviation on the test grid
    std::string provenance; // analytic case id or "numeric-search"
};

struct SearchResult {
    std::optional<SymmetryWitness> witness; // present iff best residual < cut
    double best_K;
    double best_G;
    double best_residual;
};

// Max over an n_k grid of |u11(2K-k) - conj(u11(k))| and
// |u12(2K-k) - e^{iG} conj(u12(k))|.
double check_generalized_parity(const WalkSpec& spec, double K, double G, int n_k);

// m=1 walks are always symmetric: K = phi1, G = 2(phi2 - phi1).
SymmetryWitness analytic_symmetry_m1(const WalkSpec& spec, int n_k = 256);

// The three m=2 conditions; empty result predicts broken symmetry.
std::vector<SymmetryWitness> analytic_symmetry_m2(const WalkSpec& spec, double angle_tol = 1e-9,
                                                  int n_k = 256);

// The twelve tabulated theta-pair cases plus the flux-constrained case for
// m=3; empty result predicts broken symmetry.
std::vector<SymmetryWitness> analytic_symmetry_m3(const WalkSpec& spec, double angle_tol = 1e-9,
                                                  int n_k = 256);

// Numeric (K, G) grid scan with pattern-search refinement; fallback for
// parameters outside the analytic tables.
SearchResult search_symmetry(const WalkSpec& spec, int n_K = 128, int n_G = 128, int n_k = 512,
                             double residual_cut = 1e-6);

// Eigenstate-pairing consequence of an accepted witness: max over the grid
// of |M_+(2K-k) + M_+(k)| and |omega_+(2K-k) - omega_+(k)|.
double magnetization_antisymmetry_check(const WalkSpec& spec, const SymmetryWitness& witness,
                                        int n_k);

} // namespace dtqw
