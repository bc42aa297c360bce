#include "spirits/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace spirits {

void SimConfig::validate() const {
    map.validate();
    shocks.validate();
    if (steps < 1) throw DomainError("steps must be >= 1");
    if (burn_in < 0 || burn_in >= steps) throw DomainError("need 0 <= burn_in < steps");
    if (!(ema_epsilon > 0.0 && ema_epsilon <= 1.0)) throw DomainError("ema_epsilon must be in (0,1]");
    if (initial == InitialCondition::value && !(initial_value > 0.0))
        throw DomainError("initial_c must be > 0");
}

namespace {

double resolve_initial_x(const SimConfig& cfg, const FixedPointSet& fps) {
    switch (cfg.initial) {
        case InitialCondition::value:
            return std::log(cfg.initial_value);
        case InitialCondition::fixed_point_high:
            if (!fps.c_high) throw DomainError("initial fixed-point-high: no high root exists");
            return std::log(*fps.c_high);
        case InitialCondition::fixed_point_low:
            if (!fps.c_low) throw DomainError("initial fixed-point-low: no low root exists");
            return std::log(*fps.c_low);
    }
    throw DomainError("unknown initial condition");
}

Histogram make_histogram(const std::vector<double>& x, std::size_t from) {
    Histogram h;
    if (x.size() <= from) return h;
    double lo = x[from], hi = x[from];
    for (std::size_t i = from; i < x.size(); ++i) {
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
    }
    const int n_bins = 200;
    double width = (hi - lo) / n_bins;
    if (width <= 0.0) width = std::max(1e-12, std::abs(lo) * 1e-12);
    lo -= 3.0 * width;
    hi += 3.0 * width;
    width = (hi - lo) / n_bins;

    h.edges.resize(n_bins + 1);
    for (int b = 0; b <= n_bins; ++b) h.edges[static_cast<std::size_t>(b)] = lo + b * width;
    h.density.assign(n_bins, 0.0);
    const double count = static_cast<double>(x.size() - from);
    for (std::size_t i = from; i < x.size(); ++i) {
        int b = static_cast<int>((x[i] - lo) / width);
        b = std::clamp(b, 0, n_bins - 1);
        h.density[static_cast<std::size_t>(b)] += 1.0;
    }
    for (auto& d : h.density) d /= count * width;
    return h;
}

} // namespace

Trajectory simulate(const SimConfig& cfg) {
    cfg.validate();

    Trajectory traj;
    traj.fps = fixed_points(cfg.map);
    traj.burn_in = cfg.burn_in;

    const std::size_t n = static_cast<std::size_t>(cfg.steps);
    traj.x.resize(n);
    traj.xi.resize(n);

    ShockStream shocks(cfg.shocks);
    double x = resolve_initial_x(cfg, traj.fps);
    traj.x[0] = x;
    traj.xi[0] = shocks.current();

    const bool plain = cfg.ema_epsilon == 1.0;
    const double eps = cfg.ema_epsilon;
    const MapParams& mp = cfg.map;
    for (std::size_t t = 1; t < n; ++t) {
        const double xi = shocks.next();
        if (plain) {
            x = h_eval(mp, x) + xi;
        } else {
            x += eps * (h_eval(mp, x) - x + xi);
        }
        if (!(x > -700.0 && x < 700.0))
            throw NumericOverflow("log output left [-700, 700]");
        traj.x[t] = x;
        traj.xi[t] = xi;
    }

    const std::size_t from = static_cast<std::size_t>(cfg.burn_in);
    double sum = 0.0;
    for (std::size_t t = from; t < n; ++t) sum += traj.x[t];
    const double m = static_cast<double>(n - from);
    traj.stats.mean_x = sum / m;
    traj.stats.hist = make_histogram(traj.x, from);

    if (traj.fps.c_high) {
        const double c_high = *traj.fps.c_high;
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t t = from; t < n; ++t) {
            const double d = (std::exp(traj.x[t]) - c_high) / c_high;
            s1 += d;
            s2 += d * d;
        }
        traj.stats.var_delta = s2 / m - (s1 / m) * (s1 / m);
        const double slope = g_prime(cfg.map, c_high);
        if (std::abs(slope) < 1.0) {
            const double s = cfg.shocks.sigma, e = cfg.shocks.eta;
            traj.stats.var_delta_predicted =
                s * s / (1.0 - slope * slope) * (1.0 + e * slope) / (1.0 - e * slope);
        }
    }

    if (traj.fps.phase == Phase::C) {
        classify_basins(traj, traj.fps);
        std::size_t high = 0, low = 0;
        for (std::size_t t = from; t < n; ++t) {
            if (traj.basin[t] == Basin::high) ++high;
            else if (traj.basin[t] == Basin::low) ++low;
        }
        traj.stats.occupancy_high = static_cast<double>(high) / m;
        traj.stats.occupancy_low = static_cast<double>(low) / m;
    }
    return traj;
}

double gap_variance_prediction(const MapParams& map, const ShockParams& shocks) {
    map.validate();
    shocks.validate();
    const FixedPointSet fps = fixed_points(map);
    if (!fps.c_high) throw DomainError("gap variance needs a high fixed point");
    const double slope = g_prime(map, *fps.c_high);
    if (!(std::abs(slope) < 1.0)) throw DomainError("|G'(c_>)| >= 1: high root not stable");
    const double s = shocks.sigma, e = shocks.eta;
    return s * s / (1.0 - slope * slope) * (1.0 + e * slope) / (1.0 - e * slope);
}

void classify_basins(Trajectory& traj, const FixedPointSet& fps) {
    if (fps.phase != Phase::C)
        throw PhaseError("basin classification requires phase C");
    const double x_low = std::log(*fps.c_low);
    const double x_star = std::log(*fps.c_star);
    const double x_high = std::log(*fps.c_high);
    const double hi_trig = 0.5 * (x_star + x_high);
    const double lo_trig = 0.5 * (x_low + x_star);

    traj.basin.resize(traj.x.size());
    Basin state = Basin::transit;
    for (std::size_t t = 0; t < traj.x.size(); ++t) {
        if (traj.x[t] >= hi_trig) state = Basin::high;
        else if (traj.x[t] <= lo_trig) state = Basin::low;
        traj.basin[t] = state;
    }
}

} // namespace spirits
