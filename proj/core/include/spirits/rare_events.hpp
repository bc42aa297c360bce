#pragma once

#include "spirits/dynamics.hpp"
#include "spirits/errors.hpp"
#include "spirits/feedback.hpp"

#include <cstdint>
#include <vector>

namespace spirits {

// Potential of the continuous-time limit, V'(x) = x - H(x), with V(x_<) = 0.
struct PotentialProfile {
    std::vector<double> x_grid;
    std::vector<double> v;
    double x_low, x_star, x_high;
    double w_high_to_low; // V(x*) - V(x_>)
    double w_low_to_high; // V(x*) - V(x_<)
};

enum class Direction { high_to_low, low_to_high };

struct RateEstimate {
    double sigma = 0.0;
    double mean_T_high_to_low = 0.0;
    double mean_T_low_to_high = 0.0;
    std::int64_t n_high_to_low = 0;
    std::int64_t n_low_to_high = 0;
    double std_err_logT_high_to_low = 0.0;
    double std_err_logT_low_to_high = 0.0;
    bool insufficient = false; // budget exhausted below n_min

    std::int64_t n_transitions(Direction d) const {
        return d == Direction::high_to_low ? n_high_to_low : n_low_to_high;
    }
    double mean_T(Direction d) const {
        return d == Direction::high_to_low ? mean_T_high_to_low : mean_T_low_to_high;
    }
    double std_err_logT(Direction d) const {
        return d == Direction::high_to_low ? std_err_logT_high_to_low
                                           : std_err_logT_low_to_high;
    }
};

struct BarrierFit {
    double w_fit;      // slope of log T vs sigma^-2
    double intercept;
    double r_squared;
    Direction direction;
};

struct KramersRates {
    double rate_high_to_low;
    double rate_low_to_high;
};

// Quadrature of V over [x_lo, x_hi] on n_grid points (composite Simpson per
// cell); barriers are evaluated at the analytic fixed points. Phase C only.
PotentialProfile potential(const MapParams& map, double x_lo, double x_hi, int n_grid);

// Same, with the grid range chosen automatically around [x_<, x_>].
PotentialProfile potential(const MapParams& map, int n_grid = 100000);

// Escape rates of the continuous-time limit:
//   Gamma(x_> -> x_<) = sqrt(|H'(x_>) H'(x*)|)/(2 pi) * exp(-2W/(eps sigma^2)).
// textbook_prefactor swaps in sqrt(V''(x_b) |V''(x*)|)/(2 pi) with
// V'' = 1 - H'.
KramersRates kramers_rate(const MapParams& map, double sigma, double epsilon,
                          bool textbook_prefactor = false);

// Raw per-direction residence durations plus the aggregated estimate.
struct ResidenceResult {
    RateEstimate estimate;
    std::vector<double> durations_high;
    std::vector<double> durations_low;
};

// Monte Carlo residence-time estimation: fixed-length ensemble members with
// derived seeds, hysteresis labelling, first/last intervals censored, bootstrap
// (200 resamples) standard errors of log T. Deterministic for a fixed seed
// and any thread count. chunk_steps is the per-member length (0 = auto); it
// must stay much larger than the expected residence time or censoring biases
// the means low.
ResidenceResult residence_times(const SimConfig& cfg, std::int64_t n_min_transitions,
                                std::int64_t max_steps, int threads = 1,
                                std::int64_t chunk_steps = 0);

// Weighted least squares of log mean_T on sigma^-2 over admissible estimates.
BarrierFit arrhenius_fit(const std::vector<RateEstimate>& estimates, Direction direction,
                         std::int64_t n_min = 50);

// Sigma grid such that the predicted residence times span [t_min, t_max]
// steps (geometric spacing in the predicted log T).
std::vector<double> sigma_grid_for(const MapParams& map, double epsilon, int n_sigma,
                                   double t_min, double t_max);

struct BarrierRow {
    double c_0;
    bool in_phase_c;
    double w_fit_high_to_low;
    double w_fit_low_to_high;
    double w_kramers_high_to_low; // 2W/eps, the continuous-limit slope
    double w_kramers_low_to_high;
};

struct BarrierScanConfig {
    MapParams map;             // c_0 overridden per row
    ShockParams shocks;        // seed is re-derived per (c_0, sigma)
    double epsilon = 1.0;
    int n_sigma = 6;
    double t_min = 2e2;
    double t_max = 2e5;
    std::int64_t n_min_transitions = 50;
    std::int64_t max_steps_per_sigma = 200000000;
    int threads = 1;
};

// Full pipeline (sigma grid -> residence times -> Arrhenius fit) per c_0;
// non-C nodes are flagged and skipped.
std::vector<BarrierRow> barrier_vs_c0(const BarrierScanConfig& cfg,
                                      const std::vector<double>& c0_values);

// Kolmogorov-Smirnov distance between the sample and Exp(mean(sample)).
double ks_distance_exponential(std::vector<double> sample);

} // namespace spirits
