#pragma once

#include "spirits/dynamics.hpp"
#include "spirits/errors.hpp"
#include "spirits/feedback.hpp"
#include "spirits/micro.hpp"
#include "spirits/shocks.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spirits {

struct GridConfig {
    double c0_lo = 0.0;
    double c0_hi = 1.6;
    int n_c0 = 200;
    double theta_lo = 1.0;
    double theta_hi = 10.0;
    int n_theta = 200;
};

struct RatesConfig {
    int n_sigma = 6;
    double t_min = 2e2;
    double t_max = 2e5;
    std::int64_t n_min_transitions = 50;
    std::int64_t max_steps_per_sigma = 200000000;
};

struct MicroConfig {
    double f = 1.0;
    double z = 1.0;
};

struct RunConfig {
    MapParams map;
    ShockParams shocks; // seed filled from master_seed
    Preferences prefs;
    FirmParams firm;
    double phi_taylor = 1.5;
    double crisis_prob = 0.0;
    SimConfig sim; // map/shocks mirrored in at build time
    GridConfig grid;
    RatesConfig rates;
    MicroConfig micro;
    int inflation_truncation = 0; // 0 = auto
    std::uint64_t master_seed = 42;
    int threads = 0; // 0 = auto
    std::string out_dir = ".";

    // Fully resolved key -> value view of the effective configuration,
    // in deterministic key order (for the manifest and `defaults` dump).
    std::map<std::string, std::string> flatten() const;
};

// Layered parse: built-in defaults, then an optional config file, then
// command-line overrides ("section.key", "value"). Unknown keys are errors;
// all violations are reported together.
RunConfig parse_config(const std::optional<std::string>& file_path,
                       const std::vector<std::pair<std::string, std::string>>& overrides);

// The default configuration rendered in config-file syntax.
std::string dump_defaults();

} // namespace spirits
