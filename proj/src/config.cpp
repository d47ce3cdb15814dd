#include "tiltwall/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tiltwall {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ConfigError(os.str());
}

unsigned parse_threads(const std::string& origin, int line, const std::string& value) {
    Integer n;
    try {
        n = parse_integer(value);
    } catch (const std::invalid_argument& ex) {
        fail(origin, line, ex.what());
    }
    if (n < 1 || n > 1024) fail(origin, line, "threads must be between 1 and 1024");
    return static_cast<unsigned>(n.get_ui());
}

}  // namespace

JobConfig parse_config_text(const std::string& text, const std::string& origin) {
    JobConfig cfg;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");
        if (value.empty()) fail(origin, lineno, "empty value for key '" + key + "'");
        if (!seen.insert(key).second) fail(origin, lineno, "duplicate key '" + key + "'");

        try {
            if (key == "surface") {
                cfg.surface_preset = value;
            } else if (key == "h2") {
                cfg.h2 = parse_integer(value);
            } else if (key == "lambda") {
                cfg.lambda = Rational::parse(value);
            } else if (key == "chi-o") {
                cfg.chi_o = parse_integer(value);
            } else if (key.rfind("class.", 0) == 0) {
                std::string name = key.substr(6);
                if (name.empty()) fail(origin, lineno, "class key needs a name: class.<NAME>");
                cfg.classes.emplace_back(name, parse_chern(value));
            } else if (key == "h0") {
                cfg.h0 = parse_integer(value);
            } else if (key == "reg") {
                cfg.reg = Rational::parse(value);
            } else if (key == "rank-min") {
                cfg.rank_min = parse_integer(value);
            } else if (key == "rank-max") {
                cfg.rank_max = parse_integer(value);
            } else if (key == "rank-step") {
                cfg.rank_step = parse_integer(value);
            } else if (key == "deg-step") {
                cfg.deg_step = Rational::parse(value);
            } else if (key == "ch2-step") {
                cfg.ch2_step = Rational::parse(value);
            } else if (key == "min-radius-sq") {
                cfg.min_radius_sq = Rational::parse(value);
            } else if (key == "threads") {
                cfg.threads = parse_threads(origin, lineno, value);
            } else if (key == "beta-min") {
                cfg.beta_min = Rational::parse(value);
            } else if (key == "beta-max") {
                cfg.beta_max = Rational::parse(value);
            } else if (key == "alpha-max") {
                cfg.alpha_max = Rational::parse(value);
            } else if (key == "out") {
                cfg.out_path = value;
            } else if (key == "format") {
                if (value != "text" && value != "csv" && value != "svg") {
                    fail(origin, lineno, "format must be text, csv or svg");
                }
                cfg.format = value;
            } else {
                fail(origin, lineno, "unknown key '" + key + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& ex) {
            fail(origin, lineno, std::string("bad value for '") + key + "': " + ex.what());
        }
    }
    return cfg;
}

JobConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error while reading config file: " + path);
    return parse_config_text(buf.str(), path);
}

Surface surface_from_config(const JobConfig& c) {
    if (c.surface_preset) {
        if (c.h2 || c.lambda || c.chi_o) {
            throw ConfigError("surface preset and h2/lambda/chi-o are mutually exclusive");
        }
        try {
            return make_surface(*c.surface_preset);
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }
    if (c.h2 || c.lambda || c.chi_o) {
        if (!c.h2 || !c.lambda) {
            throw ConfigError("custom surface needs both h2 and lambda (chi-o defaults to 1)");
        }
        try {
            return make_surface(*c.h2, *c.lambda, c.chi_o.value_or(Integer(1)));
        } catch (const std::invalid_argument& ex) {
            throw ConfigError(ex.what());
        }
    }
    throw ConfigError("no surface specified: set surface=del-pezzo:<d> or h2=/lambda=");
}

}  // namespace tiltwall
