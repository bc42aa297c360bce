#pragma once

#include "spirits/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spirits {

// Parameters of the shifted-logistic confidence feedback
//   G(c) = c_min + (c_max - c_min) / (1 + exp(2 theta (c_0 - c))).
struct MapParams {
    double c_min = 0.4;
    double c_max = 1.4;
    double c_0 = 0.75; // confidence threshold
    double theta = 5.0; // transition sharpness

    double delta() const { return c_max - c_min; }
    void validate() const;
};

enum class Phase { A, B_plus, C, B_minus, boundary };

std::string phase_name(Phase p); // "A", "B+", "C", "B-", "boundary"

struct FixedPoint {
    double value;
    double slope; // G'(value)
    bool stable;  // |G'| < 1
};

struct FixedPointSet {
    std::vector<FixedPoint> roots; // ascending
    Phase phase;
    std::optional<double> c_low, c_star, c_high;
    std::optional<double> distance_ratio; // (c_high - c_star) / (c_star - c_low)
};

// The feedback map, its derivative, and the log-space forms H(x) = log G(e^x).
double g_eval(const MapParams& p, double c);
double g_prime(const MapParams& p, double c);
double h_eval(const MapParams& p, double x);
double h_prime(const MapParams& p, double x);

// Supremum of H'(x) over all x; the exact A / B+ discriminator is
// max_x H'(x) < 1 (no shock can create additional fixed points).
double max_h_prime(const MapParams& p);

// All roots of G(c) = c with stability labels and phase classification.
// Tangencies (double roots) are reported with phase = boundary.
FixedPointSet fixed_points(const MapParams& p);

// Analytic approximation to the A / B+ boundary: c_0 = (1 + 2 c_min/Delta)/theta.
double boundary_hyperbola(const MapParams& p, double theta);

// Closed-form saddle-node boundaries of the bistable region in c_0 at given
// theta; nullopt when theta*Delta <= 2 (no bistable region).
struct TangencyBounds {
    double c0_low;
    double c0_high;
};
std::optional<TangencyBounds> boundary_tangency(const MapParams& p, double theta);

struct PhaseCell {
    double c_0;
    double theta;
    Phase phase;
    std::optional<double> distance_ratio;
};

// Per-node fixed_points over a (c_0, theta) grid; deterministic row-major
// order regardless of thread count.
std::vector<PhaseCell> phase_diagram_scan(const MapParams& base,
                                          double c0_lo, double c0_hi, int n_c0,
                                          double theta_lo, double theta_hi, int n_theta,
                                          int threads = 1);

} // namespace spirits
