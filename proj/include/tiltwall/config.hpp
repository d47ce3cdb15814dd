#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/surface.hpp"

namespace tiltwall {

/// Bad option values, malformed config files, contradictory settings.
/// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failures (unreadable config, unwritable output).
/// The CLI maps this to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything a job can configure, each field optional so that command-line
/// flags can override file values.  Classes keep file/flag order.
struct JobConfig {
    std::optional<std::string> surface_preset;
    std::optional<Integer> h2;
    std::optional<Rational> lambda;
    std::optional<Integer> chi_o;

    std::vector<std::pair<std::string, ChernClass>> classes;

    std::optional<Integer> h0;
    std::optional<Rational> reg;

    std::optional<Integer> rank_min;
    std::optional<Integer> rank_max;
    std::optional<Integer> rank_step;
    std::optional<Rational> deg_step;
    std::optional<Rational> ch2_step;
    std::optional<Rational> min_radius_sq;
    std::optional<unsigned> threads;

    std::optional<Rational> beta_min;
    std::optional<Rational> beta_max;
    std::optional<Rational> alpha_max;

    std::optional<std::string> out_path;
    std::optional<std::string> format;  // text | csv | svg
};

/// Parse a flat key = value config file ('#' comments, blank lines ignored).
/// Unknown or duplicate keys are errors; diagnostics carry file:line.
/// Throws IoError when the file cannot be read, ConfigError on bad content.
JobConfig parse_config_file(const std::string& path);

/// Same parser on in-memory text; origin names the source in diagnostics.
JobConfig parse_config_text(const std::string& text, const std::string& origin);

/// Resolve the configured surface: either the preset or the h2/lambda pair
/// (chi-o defaults to 1).  Throws ConfigError when neither or both are given.
Surface surface_from_config(const JobConfig& c);

}  // namespace tiltwall
