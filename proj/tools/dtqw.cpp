#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtqw/config.hpp"
#include "dtqw/errors.hpp"

namespace {

int run(const std::string& command, const std::string& config_path,
        const std::vector<std::string>& overrides, const std::string& out_path) {
    try {
        std::map<std::string, std::string> kv;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "I/O error: cannot read config file '" << config_path << "'\n";
                return 5;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            kv = dtqw::parse_config_map(buf.str());
        }
        for (const std::string& item : overrides) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                std::cerr << "config error: --set expects key=value, got '" << item << "'\n";
                return 2;
            }
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
        kv["run.command"] = command;
        if (!out_path.empty())
            kv["run.out"] = out_path;

        return dtqw::run_subcommand(dtqw::build_config(kv));
    } catch (const dtqw::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-periodic discrete-time quantum walk toolkit"};
    app.require_subcommand(1);

    struct Options {
        std::string config;
        std::vector<std::string> sets;
        std::string out;
    };

    static const std::vector<std::pair<std::string, std::string>> commands = {
        {"bands", "band structure CSV (k, omega_minus, omega_plus)"},
        {"magnetize", "eigenstate magnetization CSV (k, omega_plus, M_plus)"},
        {"spectral", "spectral magnetization CSV (omega, M_s, degeneracy, excluded)"},
        {"symmetry", "generalized parity symmetry JSON report"},
        {"evolve", "ring evolution correlator CSV plus its spectrum"},
        {"spectroscopy", "transmission dip CSV plus recovered correlator"},
    };

    std::map<std::string, Options> opts;
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        Options& o = opts[name];
        sub->add_option("--config", o.config, "flat key=value configuration file");
        sub->add_option("--set", o.sets, "override a config key (key=value), repeatable");
        sub->add_option("--out", o.out, "output path");
    }

    CLI11_PARSE(app, argc, argv);

    for (const auto& [name, desc] : commands) {
        if (app.get_subcommand(name)->parsed())
            return run(name, opts[name].config, opts[name].sets, opts[name].out);
    }
    return 2;
}
