#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtqw/walk_model.hpp"

namespace dtqw {

// Parsed run configuration: the walk, the subcommand, and numeric knobs.
struct RunConfig {
    WalkSpec walk;
    std::string command;
    std::string out = "out.csv";

    int n_k = 512;
    int n_omega = 256;
    int n_scan = 4096;
    int lattice_sites = 64;
    int t_periods = 4096;
    int tau_max_periods = 2048;
    std::uint64_t seed = 1;
    double refine_tol = 1e-12;
    double residual_cut = 1e-6;

    // Transmission-line readout.
    double sp_omega0 = 1.0;
    double sp_alpha = 1e-4;
    double sp_gamma = 0.01;
    double sp_chi = 0.1;
    std::optional<double> sp_cm; // planted correlator; computed if absent
    int sp_points = 401;
    double sp_span = 10.0; // half-width of the scan in units of gamma
};

// Angle literal with pi support: "pi/4", "-pi/2", "pi-0.43", "2*pi/5", "0.3".
double parse_angle_literal(const std::string& text);

// Flat key=value document ('#' comments). Throws ParseError with the line
// number, UnknownKeyError, or MissingRequiredError.
RunConfig parse_config(const std::string& text);

// Key/value form used by the CLI to layer --set overrides over the file.
std::map<std::string, std::string> parse_config_map(const std::string& text);
RunConfig build_config(const std::map<std::string, std::string>& kv);

// CSV with a header row, 17 significant digits, NaN as "nan".
void emit_csv(const std::vector<std::vector<double>>& rows,
              const std::vector<std::string>& header, const std::string& path);

// Executes the configured subcommand, writing its artifact files.
// Returns the process exit code (0 success; 2 config, 3 out-of-band,
// 4 convergence, 5 I/O).
int run_subcommand(const RunConfig& config);

} // namespace dtqw
