#include "dtqw/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "dtqw/angles.hpp"
#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

// Tiny recursive-descent parser for angle expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ['+'|'-'] (number | 'pi')
struct AngleParser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    [[noreturn]] void fail() {
        throw ParseError("invalid angle literal: '" + text + "'");
    }

    double factor() {
        skip_ws();
        double sign = 1.0;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-')
                sign = -sign;
            ++pos;
            skip_ws();
        }
        if (text.compare(pos, 2, "pi") == 0) {
            pos += 2;
            return sign * pi;
        }
        const char* begin = text.data() + pos;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin)
            fail();
        pos += end - begin;
        return sign * value;
    }

    double term() {
        double value = factor();
        skip_ws();
        while (pos < text.size() && (text[pos] == '*' || text[pos] == '/')) {
            const char op = text[pos++];
            const double rhs = factor();
            value = (op == '*') ? value * rhs : value / rhs;
            skip_ws();
        }
        return value;
    }

    double expr() {
        double value = term();
        skip_ws();
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            const char op = text[pos++];
            const double rhs = term();
            value += (op == '+') ? rhs : -rhs;
            skip_ws();
        }
        return value;
    }
};

long parse_integer(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("key '" + key + "': expected an integer, got '" + value + "'");
    }
}

const std::set<std::string> recognized_commands = {"bands",    "magnetize", "spectral",
                                                   "symmetry", "evolve",    "spectroscopy"};

} // namespace

double parse_angle_literal(const std::string& text) {
    AngleParser p{text};
    const double value = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail();
    if (!std::isfinite(value))
        throw ParseError("angle literal is not finite: '" + text + "'");
    return value;
}

std::map<std::string, std::string> parse_config_map(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return (a == std::string::npos) ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
        kv[key] = value;
    }
    return kv;
}

RunConfig build_config(const std::map<std::string, std::string>& kv) {
    RunConfig cfg;

    auto it = kv.find("walk.m");
    if (it == kv.end())
        throw MissingRequiredError("missing required key walk.m");
    const long m = parse_integer("walk.m", it->second);
    if (m < 1)
        throw ConfigError("walk.m must be >= 1");
    cfg.walk.m = static_cast<int>(m);
    cfg.walk.coins.assign(cfg.walk.m, CoinParams{});

    const std::regex coin_key(R"(walk\.coin(\d+)\.(theta|phi|phi1|phi2))");
    std::set<int> coins_seen;
    for (const auto& [key, value] : kv) {
        std::smatch match;
        if (key == "walk.m")
            continue;
        if (std::regex_match(key, match, coin_key)) {
            const int idx = std::stoi(match[1]);
            if (idx < 1 || idx > cfg.walk.m)
                throw ConfigError("key '" + key + "': coin index out of range for m = " +
                                  std::to_string(cfg.walk.m));
            coins_seen.insert(idx);
            const double angle = parse_angle_literal(value);
            CoinParams& coin = cfg.walk.coins[idx - 1];
            const std::string field = match[2];
            if (field == "theta")
                coin.theta = angle;
            else if (field == "phi")
                coin.phi = angle;
            else if (field == "phi1")
                coin.phi1 = angle;
            else
                coin.phi2 = angle;
            continue;
        }
        if (key == "run.command") {
            if (!recognized_commands.count(value))
                throw ConfigError("unrecognized command '" + value + "'");
            cfg.command = value;
        } else if (key == "run.out") {
            cfg.out = value;
        } else if (key == "run.n_k") {
            cfg.n_k = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.n_omega") {
            cfg.n_omega = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.n_scan") {
            cfg.n_scan = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.N") {
            cfg.lattice_sites = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.T_periods") {
            cfg.t_periods = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.tau_max") {
            cfg.tau_max_periods = static_cast<int>(parse_integer(key, value));
        } else if (key == "run.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
        } else if (key == "run.refine_tol") {
            cfg.refine_tol = parse_angle_literal(value);
        } else if (key == "run.residual_cut") {
            cfg.residual_cut = parse_angle_literal(value);
        } else if (key == "spectro.omega0") {
            cfg.sp_omega0 = parse_angle_literal(value);
        } else if (key == "spectro.alpha_r") {
            cfg.sp_alpha = parse_angle_literal(value);
        } else if (key == "spectro.gamma") {
            cfg.sp_gamma = parse_angle_literal(value);
        } else if (key == "spectro.chi") {
            cfg.sp_chi = parse_angle_literal(value);
        } else if (key == "spectro.c_m") {
            cfg.sp_cm = parse_angle_literal(value);
        } else if (key == "spectro.n_points") {
            cfg.sp_points = static_cast<int>(parse_integer(key, value));
        } else if (key == "spectro.span") {
            cfg.sp_span = parse_angle_literal(value);
        } else {
            throw UnknownKeyError("unknown configuration key '" + key + "'");
        }
    }

    for (int i = 1; i <= cfg.walk.m; ++i)
        if (!coins_seen.count(i))
            throw MissingRequiredError("missing walk.coin" + std::to_string(i) +
                                       ".* for m = " + std::to_string(cfg.walk.m));
    auto positive = [](const char* name, long v) {
        if (v <= 0)
            throw ConfigError(std::string("knob ") + name + " must be positive");
    };
    positive("run.n_k", cfg.n_k);
    positive("run.n_omega", cfg.n_omega);
    positive("run.n_scan", cfg.n_scan);
    positive("run.N", cfg.lattice_sites);
    positive("run.T_periods", cfg.t_periods);
    positive("run.tau_max", cfg.tau_max_periods);
    positive("spectro.n_points", cfg.sp_points);

    cfg.walk = validate_walk_spec(cfg.walk);
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg = build_config(parse_config_map(text));
    if (cfg.command.empty())
        throw MissingRequiredError("missing required key run.command");
    return cfg;
}

void emit_csv(const std::vector<std::vector<double>>& rows,
              const std::vector<std::string>& header, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    char buf[40];
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw IoError("row width does not match CSV schema");
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out << (i ? "," : "") << buf;
        }
        out << "\n";
    }
    if (!out)
        throw IoError("write failure on '" + path + "'");
}

} // namespace dtqw
