#pragma once

#include "spirits/dynamics.hpp"
#include "spirits/errors.hpp"
#include "spirits/feedback.hpp"
#include "spirits/shocks.hpp"

#include <vector>

namespace spirits {

struct PolicyParams {
    double phi_taylor = 1.5; // must exceed 1
    double beta = 0.99;
    double kappa_high = 0.0; // 3 G'(c_>), set via make_policy
    double crisis_prob = 0.0; // p = 1/T(c_> -> c_<)

    void validate() const;
};

// The only sanctioned way to fill kappa_high: 3 G'(c_>) recomputed from the
// map's high fixed point.
PolicyParams make_policy(double phi_taylor, double beta, const MapParams& map,
                         double crisis_prob = 0.0);

double kappa_high_of(const MapParams& map);

struct InflationPath {
    std::vector<double> pi;
    std::vector<double> r;
    double delta_pi_crisis = 0.0;
};

// E_t[delta_{t+k}] for k = 1..horizon under delta_{t+1} = G' delta_t + xi_{t+1}
// with E_t[xi_{t+j}] = eta^j xi_t (closed form, with the eta == G' limit).
std::vector<double> expected_gap_path(const MapParams& map, const ShockParams& shocks,
                                      double delta_t, double xi_t, int horizon);

// Current inflation from the forward-solved Taylor-rule relation:
// pi_t = -(k/Phi)(delta_t - delta_prev)
//        + (1 - k/Phi) sum_k Phi^(-k-1) E_t[delta_{t+k+1} - delta_{t+k}].
double inflation_now(const PolicyParams& policy, const MapParams& map,
                     const ShockParams& shocks, double delta_t, double delta_prev,
                     double xi_t, int truncation);

// Constant downward shift from crisis anticipation:
// delta_pi = -(p/(Phi-1)) (c_> - c_<)/c_<.
double crisis_inflation_correction(const PolicyParams& policy, const FixedPointSet& fps);

// Per-step inflation along a realised trajectory confined to the high basin,
// plus the Taylor-rule interest rate.
InflationPath inflation_path(const Trajectory& traj, const PolicyParams& policy,
                             const MapParams& map, const ShockParams& shocks,
                             int truncation = 0 /* 0 = auto */);

} // namespace spirits
