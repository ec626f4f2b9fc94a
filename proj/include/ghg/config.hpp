#pragma once

#include "ghg/params.hpp"
#include "ghg/series.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ghg {

// Parse failure; path names the offending field ("a[1][0]") or line ("line 7").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& msg) : std::runtime_error(path + ": " + msg), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct JobConfig {
    ParameterSet params;
    int eta_order = 8;
    int x_order = 12;
    int j = 1, k = 2;
    Point point = Point::Zero;
    double eta = 20.0;
    double tp_tol = 1e-10;          // turning-point residuals and separation
    double summability_tol = 0.0;   // |Re kappa| <= tol counts as a Stokes line
};

// Generic N = 3 parameters used when no config is given.
JobConfig default_config();

// Fields: N, a, b (lists of [x0, x1] rational strings), truncation
// {eta_order, x_order}, pair [j, k], point "0" | "inf", eta, tolerance
// {turning_points, summability}. Missing optional fields keep the defaults.
JobConfig parse_config(const nlohmann::json& j);

// TOML document as the equivalent JSON value. Dates and times are rejected.
nlohmann::json parse_toml(const std::string& text);

// JSON unless the file name ends in .toml.
JobConfig load_config(const std::string& path);

nlohmann::json config_to_json(const JobConfig& c);

}  // namespace ghg
