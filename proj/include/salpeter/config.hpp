#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "salpeter/units.hpp"

namespace salpeter {

/// One plane-wave entry of a run configuration: amplitude modulus, phase
/// in radians and momentum.
struct ModeSpec {
    double amp = 1.0;
    double phase = 0.0;
    double p = 0.0;
};

/// Everything a command run depends on. Flat key = value file format with
/// repeatable [mode] sections; unknown keys are rejected.
struct RunConfig {
    double m = 1.0;
    double c = 1.0;
    double hbar = 1.0;
    int n = 256;
    double length = 64.0;
    std::vector<ModeSpec> modes;
    double v = 0.5;
    double dt = 1e-3;
    std::optional<double> tol;  ///< unset means each command applies its own default
    std::uint64_t seed = 42;
    std::string out;

    UnitSystem units() const { return UnitSystem(m, c, hbar); }
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail {

inline void config_fail(const std::string& what) {
    throw std::invalid_argument("config error: " + what);
}

inline std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const std::string& value, const std::string& key) {
    char* end = nullptr;
    const double x = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty())
        config_fail("invalid number for key '" + key + "'");
    return x;
}

inline long long parse_integer(const std::string& value, const std::string& key) {
    char* end = nullptr;
    const long long x = std::strtoll(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || value.empty())
        config_fail("invalid integer for key '" + key + "'");
    return x;
}

inline void range_fail(const std::string& key, const std::string& need) {
    config_fail("value for key '" + key + "' out of range (need " + need + ")");
}

}  // namespace detail

/// Validate cross-field constraints, naming the offending key.
inline void validate_config(const RunConfig& cfg) {
    if (!(cfg.m >= 0.0)) detail::range_fail("m", "m >= 0");
    if (!(cfg.c > 0.0)) detail::range_fail("c", "c > 0");
    if (!(cfg.hbar > 0.0)) detail::range_fail("hbar", "hbar > 0");
    if (cfg.n <= 0 || cfg.n % 2 != 0) detail::range_fail("n", "positive even n");
    if (!(cfg.length > 0.0)) detail::range_fail("length", "length > 0");
    if (!(std::abs(cfg.v) < cfg.c)) detail::range_fail("v", "|v| < c");
    if (!(cfg.dt > 0.0)) detail::range_fail("dt", "dt > 0");
    if (cfg.tol && !(*cfg.tol > 0.0)) detail::range_fail("tol", "tol > 0");
    for (const ModeSpec& mode : cfg.modes) {
        if (!(mode.amp >= 0.0)) detail::range_fail("amp", "amp >= 0");
        if (!std::isfinite(mode.phase)) detail::range_fail("phase", "finite phase");
        if (!std::isfinite(mode.p)) detail::range_fail("p", "finite p");
    }
}

/// Parse the key = value text of a config. Strict: unknown keys, malformed
/// lines and out-of-range values all throw with a message naming the cause.
inline RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    bool in_mode = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = detail::trim(line);
        if (text.empty()) continue;
        if (text == "[mode]") {
            cfg.modes.push_back({});
            in_mode = true;
            continue;
        }
        const size_t eq = text.find('=');
        if (eq == std::string::npos)
            detail::config_fail("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = detail::trim(text.substr(0, eq));
        const std::string value = detail::trim(text.substr(eq + 1));
        if (key.empty())
            detail::config_fail("line " + std::to_string(lineno) + ": expected 'key = value'");

        if (key == "amp" || key == "phase" || key == "p") {
            if (!in_mode)
                detail::config_fail("key '" + key + "' is only valid inside a [mode] section");
            ModeSpec& mode = cfg.modes.back();
            if (key == "amp") mode.amp = detail::parse_double(value, key);
            else if (key == "phase") mode.phase = detail::parse_double(value, key);
            else mode.p = detail::parse_double(value, key);
            continue;
        }

        if (key == "m") cfg.m = detail::parse_double(value, key);
        else if (key == "c") cfg.c = detail::parse_double(value, key);
        else if (key == "hbar") cfg.hbar = detail::parse_double(value, key);
        else if (key == "n") cfg.n = static_cast<int>(detail::parse_integer(value, key));
        else if (key == "length") cfg.length = detail::parse_double(value, key);
        else if (key == "v") cfg.v = detail::parse_double(value, key);
        else if (key == "dt") cfg.dt = detail::parse_double(value, key);
        else if (key == "tol") cfg.tol = detail::parse_double(value, key);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(detail::parse_integer(value, key));
        else if (key == "out") cfg.out = value;
        else detail::config_fail("unknown key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) detail::config_fail("cannot open file '" + path + "'");
    return parse_config(in);
}

/// Inverse of parse_config: the emitted text parses back to an equal config.
inline std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "m = " << format_g17(cfg.m) << "\n";
    out << "c = " << format_g17(cfg.c) << "\n";
    out << "hbar = " << format_g17(cfg.hbar) << "\n";
    out << "n = " << cfg.n << "\n";
    out << "length = " << format_g17(cfg.length) << "\n";
    out << "v = " << format_g17(cfg.v) << "\n";
    out << "dt = " << format_g17(cfg.dt) << "\n";
    if (cfg.tol) out << "tol = " << format_g17(*cfg.tol) << "\n";
    out << "seed = " << cfg.seed << "\n";
    if (!cfg.out.empty()) out << "out = " << cfg.out << "\n";
    for (const ModeSpec& mode : cfg.modes) {
        out << "[mode]\n";
        out << "amp = " << format_g17(mode.amp) << "\n";
        out << "phase = " << format_g17(mode.phase) << "\n";
        out << "p = " << format_g17(mode.p) << "\n";
    }
    return out.str();
}

}  // namespace salpeter
