#include "drp/config.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>

namespace drp {

ErrorModelConfig RunConfig::error_model() const {
    ErrorModelConfig cfg;
    cfg.packet1 = packet1;
    cfg.packet2 = packet2;
    cfg.c = c;
    cfg.x_min = exp_x_min;
    cfg.x_max = exp_x_max;
    cfg.nx = exp_nx;
    cfg.t_final = exp_t_final;
    cfg.nt = exp_nt;
    return cfg;
}

ErrorModelConfig RunConfig::energy_window() const {
    ErrorModelConfig cfg;
    cfg.packet1 = packet1;
    cfg.packet2 = packet2;
    cfg.c = c;
    cfg.x_min = grid_x_min;
    cfg.x_max = grid_x_max;
    cfg.nx = grid_nx;
    cfg.t_final = grid_t_final;
    cfg.nt = grid_nt;
    return cfg;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct Parser {
    RunConfig cfg;
    std::vector<ConfigError> errors;

    void fail(int line, const std::string& msg) { errors.push_back({line, msg}); }

    bool parse_double(const std::string& text, double& out) {
        const std::string t = trim(text);
        if (t.empty()) return false;
        char* end = nullptr;
        out = std::strtod(t.c_str(), &end);
        return end == t.c_str() + t.size();
    }

    bool parse_long(const std::string& text, long& out) {
        const std::string t = trim(text);
        if (t.empty()) return false;
        char* end = nullptr;
        out = std::strtol(t.c_str(), &end, 10);
        return end == t.c_str() + t.size();
    }

    using Setter = std::function<void(int line, const std::string& value)>;

    std::map<std::pair<std::string, std::string>, Setter> registry;

    void add_double(const std::string& section, const std::string& key, double& field,
                    std::function<bool(double)> ok = nullptr, const std::string& constraint = "") {
        registry[{section, key}] = [this, &field, ok, constraint, key](int line,
                                                                       const std::string& value) {
            double v;
            if (!parse_double(value, v)) {
                fail(line, "key '" + key + "': expected a real number, got '" + trim(value) + "'");
                return;
            }
            if (ok && !ok(v)) {
                fail(line, "key '" + key + "': " + constraint);
                return;
            }
            field = v;
        };
    }

    template <typename Int>
    void add_int(const std::string& section, const std::string& key, Int& field,
                 std::function<bool(long)> ok = nullptr, const std::string& constraint = "") {
        registry[{section, key}] = [this, &field, ok, constraint, key](int line,
                                                                      const std::string& value) {
            long v;
            if (!parse_long(value, v)) {
                fail(line, "key '" + key + "': expected an integer, got '" + trim(value) + "'");
                return;
            }
            if (ok && !ok(v)) {
                fail(line, "key '" + key + "': " + constraint);
                return;
            }
            field = static_cast<Int>(v);
        };
    }

    Parser() {
        const auto positive = [](double v) { return v > 0.0; };
        const auto nonzero = [](double v) { return v != 0.0; };
        const auto lpositive = [](long v) { return v > 0; };

        add_int("", "m", cfg.m, lpositive, "must be a positive integer");
        add_double("", "sigma", cfg.sigma, positive, "must be positive");
        add_double("", "c", cfg.c, nonzero, "must be nonzero");
        add_double("", "h", cfg.h, positive, "must be positive");
        add_int("", "phi_samples", cfg.phi_samples, [](long v) { return v >= 2; },
                "must be at least 2");
        registry[{"", "backend"}] = [this](int line, const std::string& value) {
            const std::string v = trim(value);
            if (v == "general")
                cfg.backend = DispersionBackend::GeneralLog;
            else if (v == "threepoint")
                cfg.backend = DispersionBackend::ThreePointClosedForm;
            else
                fail(line, "key 'backend': expected 'general' or 'threepoint', got '" + v + "'");
        };

        add_int("caustics", "scan_points", cfg.caustic_scan.scan_points,
                [](long v) { return v >= 8; }, "must be at least 8");
        add_double("caustics", "bisect_tol", cfg.caustic_scan.bisect_tol, positive,
                   "must be positive");
        add_double("caustics", "classify_step", cfg.caustic_scan.classify_step, positive,
                   "must be positive");

        for (auto [name, packet] : {std::pair<std::string, WavePacket*>{"packet1", &cfg.packet1},
                                    {"packet2", &cfg.packet2}}) {
            add_double(name, "alpha", packet->alpha, positive, "must be positive");
            add_double(name, "x0", packet->x0);
            add_double(name, "k", packet->k);
            add_double(name, "v", packet->v);
        }

        add_double("experiment", "x_min", cfg.exp_x_min);
        add_double("experiment", "x_max", cfg.exp_x_max);
        add_int("experiment", "nx", cfg.exp_nx, [](long v) { return v >= 2; }, "must be at least 2");
        add_double("experiment", "t_final", cfg.exp_t_final, positive, "must be positive");
        add_int("experiment", "nt", cfg.exp_nt, [](long v) { return v >= 2; }, "must be at least 2");

        add_double("energy_grid", "x_min", cfg.grid_x_min);
        add_double("energy_grid", "x_max", cfg.grid_x_max);
        add_int("energy_grid", "nx", cfg.grid_nx, [](long v) { return v >= 2; },
                "must be at least 2");
        add_double("energy_grid", "t_final", cfg.grid_t_final, positive, "must be positive");
        add_int("energy_grid", "nt", cfg.grid_nt, [](long v) { return v >= 2; },
                "must be at least 2");

        add_int("simulate", "nx", cfg.sim_nx, [](long v) { return v >= 3; }, "must be at least 3");
        add_int("simulate", "steps", cfg.sim_steps, [](long v) { return v >= 0; },
                "must be nonnegative");
        add_double("simulate", "x_min", cfg.sim_x_min);
        add_int("simulate", "snapshot_stride", cfg.sim_snapshot_stride, lpositive,
                "must be positive");
    }

    void run(const std::string& text) {
        std::string section;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            std::string line =
                eol == std::string::npos ? text.substr(pos) : text.substr(pos, eol - pos);
            pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
            ++line_no;

            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;

            if (line.front() == '[') {
                if (line.back() != ']') {
                    fail(line_no, "malformed section header '" + line + "'");
                    continue;
                }
                const std::string name = trim(line.substr(1, line.size() - 2));
                bool known = false;
                for (const auto& [sk, _] : registry)
                    if (sk.first == name) known = true;
                if (!known) {
                    fail(line_no, "unknown section '" + name + "'");
                    section.clear();
                    continue;
                }
                section = name;
                continue;
            }

            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                fail(line_no, "expected 'key = value', got '" + line + "'");
                continue;
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = line.substr(eq + 1);
            const auto it = registry.find({section, key});
            if (it == registry.end()) {
                const std::string where = section.empty() ? "top level" : "section [" + section + "]";
                fail(line_no, "unknown key '" + key + "' at " + where);
                continue;
            }
            it->second(line_no, value);
        }
    }

    void cross_validate() {
        if (cfg.exp_x_max <= cfg.exp_x_min)
            fail(0, "[experiment]: x_max must exceed x_min");
        if (cfg.grid_x_max <= cfg.grid_x_min)
            fail(0, "[energy_grid]: x_max must exceed x_min");
        if (cfg.sim_nx <= 2 * cfg.m)
            fail(0, "[simulate]: nx must exceed 2*m");
        if (cfg.backend == DispersionBackend::ThreePointClosedForm && cfg.m != 1)
            fail(0, "backend 'threepoint' requires m = 1");
    }
};

}  // namespace

ParseResult parse_config(const std::string& text) {
    Parser parser;
    parser.run(text);
    parser.cross_validate();
    ParseResult result;
    result.errors = std::move(parser.errors);
    if (result.errors.empty()) result.config = std::move(parser.cfg);
    return result;
}

}  // namespace drp
