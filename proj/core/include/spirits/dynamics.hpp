#pragma once

#include "spirits/errors.hpp"
#include "spirits/feedback.hpp"
#include "spirits/shocks.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spirits {

enum class InitialCondition { value, fixed_point_high, fixed_point_low };

struct SimConfig {
    MapParams map;
    ShockParams shocks;
    std::int64_t steps = 100000;
    std::int64_t burn_in = 10000;
    InitialCondition initial = InitialCondition::fixed_point_high;
    double initial_value = 1.0;   // used when initial == value
    double ema_epsilon = 1.0;     // 1 = plain map; <1 = EMA recursion

    void validate() const;
};

enum class Basin : std::uint8_t { high, low, transit };

struct Histogram {
    std::vector<double> edges;   // n_bins + 1
    std::vector<double> density; // integrates to 1
};

struct TrajectoryStats {
    double mean_x = 0.0;
    std::optional<double> var_delta;           // empirical Var[(c-c_>)/c_>]
    std::optional<double> var_delta_predicted; // Eq.-11-style linearised value
    Histogram hist;
    std::optional<double> occupancy_high, occupancy_low; // phase C only
};

struct Trajectory {
    std::vector<double> x;  // log output
    std::vector<double> xi; // realised shocks, same length
    std::vector<Basin> basin;
    TrajectoryStats stats;
    FixedPointSet fps; // fixed points of the noiseless map
    std::int64_t burn_in = 0;
};

// Iterates x_t = H(x_{t-1}) + xi_t (or the EMA recursion for epsilon < 1),
// then fills statistics over the post-burn-in samples. Deterministic for a
// fixed seed.
Trajectory simulate(const SimConfig& cfg);

// Linearised stationary variance of the output gap around c_>:
// sigma^2/(1-G'^2) * (1+eta G')/(1-eta G').
double gap_variance_prediction(const MapParams& map, const ShockParams& shocks);

// Hysteresis basin labelling (phase C only): switch to high on entering
// x >= (x*+x_>)/2, to low on entering x <= (x_<+x*)/2, transit before the
// first commitment.
void classify_basins(Trajectory& traj, const FixedPointSet& fps);

} // namespace spirits
