#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include <nlohmann/json.hpp>

#include "dtqw/angles.hpp"
#include "dtqw/band_structure.hpp"
#include "dtqw/config.hpp"
#include "dtqw/dynamics.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/magnetization.hpp"
#include "dtqw/parity.hpp"
#include "dtqw/spectroscopy.hpp"
#include "dtqw/walk_model.hpp"

namespace dtqw {

namespace {

using json = nlohmann::ordered_json;

std::string sibling_path(const std::string& out, const std::string& suffix) {
    const std::size_t dot = out.rfind('.');
    const std::size_t slash = out.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + suffix;
    return out.substr(0, dot) + suffix + out.substr(dot);
}

// Interior (+ branch) eigenfrequencies of the N-site momentum grid,
// deduplicated within tol, each paired with the grid magnetization sum.
struct GridFrequency {
    double omega;
    double m_plus_sum;
};

std::vector<GridFrequency> grid_frequencies(const WalkSpec& spec, int n_sites, double tol) {
    std::vector<GridFrequency> out;
    for (int j = 0; j < n_sites; ++j) {
        const double k = wrap_angle(two_pi * j / n_sites);
        const double omega = dispersion(spec, k).omega_plus;
        if (std::abs(std::sin(spec.m * omega)) < band_edge_tol)
            continue;
        const double m_plus = eigenstate_magnetization(spec, k, Branch::plus);
        auto it = std::find_if(out.begin(), out.end(), [&](const GridFrequency& g) {
            return std::abs(g.omega - omega) < tol;
        });
        if (it == out.end())
            out.push_back({omega, m_plus});
        else
            it->m_plus_sum += m_plus;
    }
    std::sort(out.begin(), out.end(),
              [](const GridFrequency& a, const GridFrequency& b) { return a.omega < b.omega; });
    return out;
}

void run_bands(const WalkSpec& spec, const RunConfig& cfg) {
    std::vector<std::vector<double>> rows;
    for (const BandPoint& p : sample_bands(spec, cfg.n_k))
        rows.push_back({p.k, p.omega_minus, p.omega_plus});
    emit_csv(rows, {"k", "omega_minus", "omega_plus"}, cfg.out);
}

void run_magnetize(const WalkSpec& spec, const RunConfig& cfg) {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < cfg.n_k; ++i) {
        const double k = -pi + two_pi * i / cfg.n_k;
        const BandPoint p = dispersion(spec, k);
        double m_plus = std::numeric_limits<double>::quiet_NaN();
        try {
            m_plus = eigenstate_magnetization(spec, k, Branch::plus);
        } catch (const BandEdgeDegeneracyError&) {
        }
        rows.push_back({k, p.omega_plus, m_plus});
    }
    emit_csv(rows, {"k", "omega_plus", "M_plus"}, cfg.out);
}

void run_spectral(const WalkSpec& spec, const RunConfig& cfg) {
    IsoOptions opt;
    opt.n_scan = cfg.n_scan;
    opt.refine_tol = cfg.refine_tol;
    std::vector<std::vector<double>> rows;
    for (const SpectralSample& s : spectral_magnetization_curve(spec, cfg.n_omega, opt))
        rows.push_back({s.omega, s.m_s, double(s.degeneracy), s.excluded ? 1.0 : 0.0});
    emit_csv(rows, {"omega", "M_s", "degeneracy", "excluded"}, cfg.out);
}

void run_symmetry(const WalkSpec& spec, const RunConfig& cfg) {
    json report;
    report["m"] = spec.m;

    std::vector<SymmetryWitness> witnesses;
    if (spec.m == 1)
        witnesses.push_back(analytic_symmetry_m1(spec, cfg.n_k));
    else if (spec.m == 2)
        witnesses = analytic_symmetry_m2(spec, 1e-9, cfg.n_k);
    else if (spec.m == 3)
        witnesses = analytic_symmetry_m3(spec, 1e-9, cfg.n_k);

    report["analytic"] = json::array();
    for (const SymmetryWitness& w : witnesses) {
        report["analytic"].push_back({{"case", w.provenance},
                                      {"K", w.K},
                                      {"G", w.G},
                                      {"residual", w.residual},
                                      {"magnetization_antisymmetry",
                                       magnetization_antisymmetry_check(spec, w, cfg.n_k)}});
    }

    const SearchResult search = search_symmetry(spec, 128, 128, cfg.n_k, cfg.residual_cut);
    report["search"] = {{"found", search.witness.has_value()},
                        {"K", search.best_K},
                        {"G", search.best_G},
                        {"residual", search.best_residual}};
    report["symmetric"] = !witnesses.empty() || search.witness.has_value();

    std::ofstream out(cfg.out);
    if (!out)
        throw IoError("cannot open '" + cfg.out + "' for writing");
    out << report.dump(2) << "\n";
}

void run_evolve(const WalkSpec& spec, const RunConfig& cfg) {
    const CorrelationSeries series = correlation(spec, cfg.lattice_sites, cfg.seed,
                                                 cfg.t_periods, cfg.tau_max_periods);
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 0; j < series.tau.size(); ++j)
        rows.push_back({series.tau[j], series.values[j].real(), series.values[j].imag()});
    emit_csv(rows, {"tau", "re_C", "im_C"}, cfg.out);

    const auto freqs = grid_frequencies(spec, cfg.lattice_sites, 1e-9);
    std::vector<double> omegas;
    for (const GridFrequency& g : freqs)
        omegas.push_back(g.omega);
    const auto spectrum = correlation_spectrum(series, omegas);
    std::vector<std::vector<double>> spec_rows;
    for (std::size_t i = 0; i < omegas.size(); ++i)
        spec_rows.push_back({omegas[i], spectrum[i].real(),
                             2.0 * cfg.lattice_sites * spectrum[i].real()});
    emit_csv(spec_rows, {"omega", "re_C", "two_N_re_C"}, sibling_path(cfg.out, "_spectrum"));
}

void run_spectroscopy(const WalkSpec& spec, const RunConfig& cfg) {
    double c_m;
    if (cfg.sp_cm) {
        c_m = *cfg.sp_cm;
    } else {
        const CorrelationSeries series = correlation(spec, cfg.lattice_sites, cfg.seed,
                                                     cfg.t_periods, cfg.tau_max_periods);
        c_m = correlation_spectrum(series, {cfg.sp_omega0})[0].real();
    }

    const TransmissionModel model{cfg.sp_omega0, cfg.sp_alpha, cfg.sp_gamma, cfg.sp_chi};
    std::vector<double> grid;
    for (int i = 0; i < cfg.sp_points; ++i)
        grid.push_back(cfg.sp_omega0 - cfg.sp_span * cfg.sp_gamma +
                       2.0 * cfg.sp_span * cfg.sp_gamma * i / (cfg.sp_points - 1));
    const auto curve = transmission_curve(model, c_m, grid);

    std::vector<std::vector<double>> rows;
    for (const TransmissionSample& s : curve)
        rows.push_back({s.omega, s.transmission});
    emit_csv(rows, {"omega", "D"}, cfg.out);

    const double recovered = extract_correlator_from_dip(curve, cfg.sp_omega0, cfg.sp_chi);
    json fit_report = {{"omega0", cfg.sp_omega0},
                       {"chi", cfg.sp_chi},
                       {"planted_c_m", c_m},
                       {"recovered_c_m", recovered}};
    std::string fit_path = sibling_path(cfg.out, "_fit");
    const std::size_t dot = fit_path.rfind('.');
    if (dot != std::string::npos)
        fit_path = fit_path.substr(0, dot);
    fit_path += ".json";
    std::ofstream fit_out(fit_path);
    if (!fit_out)
        throw IoError("cannot open '" + fit_path + "' for writing");
    fit_out << fit_report.dump(2) << "\n";
    std::cout << "recovered C_M(omega0) = " << recovered << "\n";
}

} // namespace

int run_subcommand(const RunConfig& cfg) {
    try {
        const auto [spec, total_phase] = canonical_phase_reduction(cfg.walk);
        (void)total_phase;
        if (cfg.command == "bands")
            run_bands(spec, cfg);
        else if (cfg.command == "magnetize")
            run_magnetize(spec, cfg);
        else if (cfg.command == "spectral")
            run_spectral(spec, cfg);
        else if (cfg.command == "symmetry")
            run_symmetry(spec, cfg);
        else if (cfg.command == "evolve")
            run_evolve(spec, cfg);
        else if (cfg.command == "spectroscopy")
            run_spectroscopy(spec, cfg);
        else
            throw ConfigError("unrecognized command '" + cfg.command + "'");
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfBandError& e) {
        std::cerr << "out-of-band request: " << e.what() << "\n";
        return 3;
    } catch (const BandEdgeDegeneracyError& e) {
        std::cerr << "band-edge degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const UnresolvedRootError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 4;
    } catch (const NoDipFoundError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 4;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace dtqw
