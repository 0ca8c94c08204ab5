// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "curlcurl/io.hpp"

namespace curlcurl {

namespace {

struct Entry {
    std::string value;
    int line;
    bool quoted;
};

// Minimal TOML subset: [tables], key = value with numbers, quoted strings,
// and booleans; '#' comments. Line numbers are kept for error anchoring.
std::map<std::string, Entry> scan(const std::string& text, const std::string& origin) {
    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string line, table;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated table header");
            table = trim(line.substr(1, line.size() - 2));
            if (table.empty()) fail("empty table name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("empty key");
        if (value.empty()) fail("empty value for key '" + key + "'");
        bool quoted = false;
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"') fail("unterminated string");
            value = value.substr(1, value.size() - 2);
            quoted = true;
        }
        const std::string full = table.empty() ? key : table + "." + key;
        if (entries.count(full)) fail("duplicate key '" + full + "'");
        entries[full] = {value, lineno, quoted};
    }
    return entries;
}

class Reader {
public:
    Reader(std::map<std::string, Entry> entries, std::string origin)
        : entries_(std::move(entries)), origin_(std::move(origin)) {}

    double number(const std::string& key, double fallback) {
        const Entry* e = take(key);
        if (!e) return fallback;
        if (e->quoted) fail(*e, key, "expected a number, got a string");
        char* end = nullptr;
        const double v = std::strtod(e->value.c_str(), &end);
        if (end == e->value.c_str() || *end != '\0')
            fail(*e, key, "expected a number, got '" + e->value + "'");
        return v;
    }

    int integer(const std::string& key, int fallback) {
        const double v = number(key, fallback);
        const int n = static_cast<int>(v);
        if (v != n) {
            const Entry* e = find(key);
            if (e) fail(*e, key, "expected an integer");
        }
        return n;
    }

    std::string str(const std::string& key, const std::string& fallback) {
        const Entry* e = take(key);
        if (!e) return fallback;
        return e->value;
    }

    std::uint64_t u64(const std::string& key, std::uint64_t fallback) {
        const Entry* e = take(key);
        if (!e) return fallback;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(e->value.c_str(), &end, 10);
        if (end == e->value.c_str() || *end != '\0')
            fail(*e, key, "expected an unsigned integer");
        return v;
    }

    void reject_unknown() const {
        for (const auto& [key, e] : entries_)
            if (!used_.count(key))
                throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": unknown key '" +
                                  key + "'");
    }

    void check(bool ok, const std::string& key, const std::string& msg) {
        if (ok) return;
        const Entry* e = find(key);
        const int line = e ? e->line : 0;
        throw ConfigError(origin_ + ":" + std::to_string(line) + ": " + msg);
    }

private:
    const Entry* find(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }
    const Entry* take(const std::string& key) {
        used_.insert(key);
        return find(key);
    }
    [[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& msg) const {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": key '" + key + "': " + msg);
    }

    std::map<std::string, Entry> entries_;
    std::string origin_;
    std::set<std::string> used_;
};

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    Reader r(scan(text, origin), origin);
    RunConfig cfg;

    cfg.rmax = r.number("grid.rmax", cfg.rmax);
    cfg.zmax = r.number("grid.zmax", cfg.zmax);
    cfg.nr = r.integer("grid.nr", cfg.nr);
    cfg.nz = r.integer("grid.nz", cfg.nz);
    r.check(cfg.rmax > 0 && cfg.zmax > 0, "grid.rmax", "grid extents must be positive");
    r.check(cfg.nr >= 3, "grid.nr", "grid.nr must be at least 3");
    r.check(cfg.nz >= 3 && cfg.nz % 2 == 1, "grid.nz", "grid.nz must be odd and at least 3");

    cfg.nonlinearity_kind = r.str("nonlinearity.kind", cfg.nonlinearity_kind);
    cfg.p = r.number("nonlinearity.p", cfg.p);
    r.check(cfg.nonlinearity_kind == "power" || cfg.nonlinearity_kind == "log",
            "nonlinearity.kind", "nonlinearity.kind must be 'power' or 'log'");
    r.check(cfg.p > 1.0 && cfg.p < 5.0, "nonlinearity.p", "nonlinearity.p must lie in (1,5)");

    cfg.gamma_kind = r.str("gamma.kind", cfg.gamma_kind);
    cfg.gamma_value = r.number("gamma.value", cfg.gamma_value);
    cfg.gamma_path = r.str("gamma.path", cfg.gamma_path);
    r.check(cfg.gamma_kind == "constant" || cfg.gamma_kind == "csv", "gamma.kind",
            "gamma.kind must be 'constant' or 'csv'");
    r.check(cfg.gamma_kind != "csv" || !cfg.gamma_path.empty(), "gamma.kind",
            "gamma.kind = csv requires gamma.path");

    cfg.potential_kind = r.str("potential.kind", cfg.potential_kind);
    cfg.potential_value = r.number("potential.value", cfg.potential_value);
    cfg.potential_path = r.str("potential.path", cfg.potential_path);
    r.check(cfg.potential_kind == "constant" || cfg.potential_kind == "csv", "potential.kind",
            "potential.kind must be 'constant' or 'csv'");
    r.check(cfg.potential_kind != "csv" || !cfg.potential_path.empty(), "potential.kind",
            "potential.kind = csv requires potential.path");

    cfg.init = r.str("solver.init", cfg.init);
    cfg.init_path = r.str("solver.init_path", cfg.init_path);
    r.check(cfg.init == "gaussian" || cfg.init == "csv", "solver.init",
            "solver.init must be 'gaussian' or 'csv'");
    r.check(cfg.init != "csv" || !cfg.init_path.empty(), "solver.init",
            "solver.init = csv requires solver.init_path");
    cfg.solver.max_iters = r.integer("solver.max_iters", cfg.solver.max_iters);
    cfg.solver.tol_nehari = r.number("solver.tol_nehari", cfg.solver.tol_nehari);
    cfg.solver.tol_J = r.number("solver.tol_j", cfg.solver.tol_J);
    cfg.solver.symmetrize_every = r.integer("solver.symmetrize_every", cfg.solver.symmetrize_every);
    cfg.solver.step_init = r.number("solver.step_init", cfg.solver.step_init);
    cfg.solver.step_shrink = r.number("solver.step_shrink", cfg.solver.step_shrink);
    cfg.solver.armijo_c = r.number("solver.armijo_c", cfg.solver.armijo_c);
    cfg.solver.max_backtracks = r.integer("solver.max_backtracks", cfg.solver.max_backtracks);
    r.check(cfg.solver.max_iters >= 1, "solver.max_iters", "solver.max_iters must be >= 1");
    r.check(cfg.solver.tol_nehari > 0 && cfg.solver.tol_J > 0, "solver.tol_nehari",
            "solver tolerances must be positive");
    r.check(cfg.solver.step_shrink > 0 && cfg.solver.step_shrink < 1, "solver.step_shrink",
            "solver.step_shrink must lie in (0,1)");

    cfg.output_dir = r.str("output.dir", cfg.output_dir);
    cfg.seed = r.u64("random.seed", cfg.seed);

    r.reject_unknown();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path);
}

GridPtr build_grid(const RunConfig& cfg) { return make_grid(cfg.rmax, cfg.zmax, cfg.nr, cfg.nz); }

namespace {

Coefficient load_coefficient(const std::string& kind, double value, const std::string& path,
                             const GridPtr& grid, const std::string& what) {
    if (kind == "constant") return Coefficient::constant(value);
    CylField f = read_field_csv(path);
    if (!f.grid().same_layout(*grid))
        throw ConfigError(what + " CSV '" + path + "' does not match the configured grid");
    return Coefficient::from_field(CylField(grid, std::vector<double>(f.values().begin(),
                                                                      f.values().end())));
}

}  // namespace

Nonlinearity build_nonlinearity(const RunConfig& cfg, const GridPtr& grid) {
    Coefficient gamma =
        load_coefficient(cfg.gamma_kind, cfg.gamma_value, cfg.gamma_path, grid, "gamma");
    if (cfg.nonlinearity_kind == "log") return Nonlinearity::logarithmic(std::move(gamma), cfg.p);
    return Nonlinearity::power(cfg.p, std::move(gamma));
}

Potential build_potential(const RunConfig& cfg, const GridPtr& grid) {
    Coefficient c = load_coefficient(cfg.potential_kind, cfg.potential_value, cfg.potential_path,
                                     grid, "potential");
    if (c.is_constant()) return Potential::constant(c.constant_value());
    return Potential::from_field(c.field());
}

}  // namespace curlcurl
