#include "spirits/rare_events.hpp"

#include "spirits/parallel.hpp"
#include "spirits/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spirits {

namespace {

// Composite Simpson with n subintervals (midpoint form, O(h^4)).
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        acc += (h / 6.0) * (f(x0) + 4.0 * f(0.5 * (x0 + x1)) + f(x1));
    }
    return acc;
}

FixedPointSet require_phase_c(const MapParams& map, const char* who) {
    FixedPointSet fps = fixed_points(map);
    if (fps.phase != Phase::C)
        throw PhaseError(std::string(who) + " requires phase C (two stable fixed points)");
    return fps;
}

} // namespace

PotentialProfile potential(const MapParams& map, double x_lo, double x_hi, int n_grid) {
    const FixedPointSet fps = require_phase_c(map, "potential");
    if (n_grid < 10) throw DomainError("potential n_grid too small");

    PotentialProfile prof;
    prof.x_low = std::log(*fps.c_low);
    prof.x_star = std::log(*fps.c_star);
    prof.x_high = std::log(*fps.c_high);
    if (!(x_lo < prof.x_low && x_hi > prof.x_high))
        throw DomainError("potential x range must cover [x_<, x_>] with margin");

    auto vprime = [&](double x) { return x - h_eval(map, x); };

    prof.x_grid.resize(static_cast<std::size_t>(n_grid));
    prof.v.resize(static_cast<std::size_t>(n_grid));
    const double h = (x_hi - x_lo) / (n_grid - 1);
    // V referenced to x_<: integrate once from x_lo to x_< to anchor the grid.
    double v = -simpson(vprime, x_lo, prof.x_low, 2000);
    prof.x_grid[0] = x_lo;
    prof.v[0] = v;
    for (int i = 1; i < n_grid; ++i) {
        const double x0 = x_lo + (i - 1) * h;
        const double x1 = x_lo + i * h;
        v += (h / 6.0) * (vprime(x0) + 4.0 * vprime(0.5 * (x0 + x1)) + vprime(x1));
        prof.x_grid[static_cast<std::size_t>(i)] = x1;
        prof.v[static_cast<std::size_t>(i)] = v;
    }

    // Barriers from dedicated quadrature between the analytic fixed points.
    const double v_star = simpson(vprime, prof.x_low, prof.x_star, n_grid);
    const double v_high = simpson(vprime, prof.x_low, prof.x_high, n_grid);
    prof.w_low_to_high = v_star;
    prof.w_high_to_low = v_star - v_high;
    return prof;
}

PotentialProfile potential(const MapParams& map, int n_grid) {
    const FixedPointSet fps = require_phase_c(map, "potential");
    const double x_low = std::log(*fps.c_low);
    const double x_high = std::log(*fps.c_high);
    const double margin = 0.25 * (x_high - x_low);
    return potential(map, x_low - margin, x_high + margin, n_grid);
}

KramersRates kramers_rate(const MapParams& map, double sigma, double epsilon,
                          bool textbook_prefactor) {
    if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must be in (0,1]");
    const PotentialProfile prof = potential(map, 20000);

    const double hp_low = h_prime(map, prof.x_low);
    const double hp_star = h_prime(map, prof.x_star);
    const double hp_high = h_prime(map, prof.x_high);

    const double two_pi = 6.283185307179586476925286766559;
    double pref_high, pref_low;
    if (textbook_prefactor) {
        pref_high = std::sqrt((1.0 - hp_high) * std::abs(1.0 - hp_star)) / two_pi;
        pref_low = std::sqrt((1.0 - hp_low) * std::abs(1.0 - hp_star)) / two_pi;
    } else {
        pref_high = std::sqrt(std::abs(hp_high * hp_star)) / two_pi;
        pref_low = std::sqrt(std::abs(hp_low * hp_star)) / two_pi;
    }
    const double inv = 1.0 / (epsilon * sigma * sigma);
    return {pref_high * std::exp(-2.0 * prof.w_high_to_low * inv),
            pref_low * std::exp(-2.0 * prof.w_low_to_high * inv)};
}

namespace {

struct MemberResult {
    std::vector<double> high;
    std::vector<double> low;
};

// One fixed-length ensemble member: streaming map iteration with hysteresis
// residence accounting. First completed interval (started at t=0) and the
// final open interval are censored.
MemberResult run_member(const SimConfig& cfg, const FixedPointSet& fps,
                        std::uint64_t member_seed, std::int64_t steps) {
    MemberResult out;
    const double x_low = std::log(*fps.c_low);
    const double x_star = std::log(*fps.c_star);
    const double x_high = std::log(*fps.c_high);
    const double hi_trig = 0.5 * (x_star + x_high);
    const double lo_trig = 0.5 * (x_low + x_star);

    ShockParams sp = cfg.shocks;
    sp.seed = member_seed;
    ShockStream shocks(sp);

    double x = x_high;
    Basin state = Basin::high;
    std::int64_t t_enter = 0;
    const bool plain = cfg.ema_epsilon == 1.0;
    const double eps = cfg.ema_epsilon;

    for (std::int64_t t = 1; t <= steps; ++t) {
        const double xi = shocks.next();
        if (plain) {
            x = h_eval(cfg.map, x) + xi;
        } else {
            x += eps * (h_eval(cfg.map, x) - x + xi);
        }
        Basin next = state;
        if (x >= hi_trig) next = Basin::high;
        else if (x <= lo_trig) next = Basin::low;
        if (next != state) {
            if (t_enter > 0) {
                const double dur = static_cast<double>(t - t_enter);
                if (state == Basin::high) out.high.push_back(dur);
                else out.low.push_back(dur);
            }
            state = next;
            t_enter = t;
        }
    }
    return out;
}

double bootstrap_stderr_log_mean(const std::vector<double>& sample, SplitMix64& rng) {
    if (sample.size() < 2) return std::numeric_limits<double>::infinity();
    const int B = 200;
    std::vector<double> logs;
    logs.reserve(B);
    for (int b = 0; b < B; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            const std::size_t j = static_cast<std::size_t>(rng.next() % sample.size());
            s += sample[j];
        }
        logs.push_back(std::log(s / static_cast<double>(sample.size())));
    }
    double m = std::accumulate(logs.begin(), logs.end(), 0.0) / B;
    double v = 0.0;
    for (double l : logs) v += (l - m) * (l - m);
    return std::sqrt(v / (B - 1));
}

} // namespace

ResidenceResult residence_times(const SimConfig& cfg, std::int64_t n_min_transitions,
                                std::int64_t max_steps, int threads,
                                std::int64_t chunk_steps) {
    cfg.map.validate();
    cfg.shocks.validate();
    const FixedPointSet fps = require_phase_c(cfg.map, "residence_times");

    // Fixed-size member chunks processed in fixed-size rounds; both sizes are
    // independent of the thread count so stopping is deterministic.
    const std::int64_t chunk =
        chunk_steps > 0 ? std::min(chunk_steps, max_steps)
                        : std::clamp<std::int64_t>(max_steps / 16, 1000000, max_steps);
    const std::int64_t n_members = std::max<std::int64_t>(1, (max_steps + chunk - 1) / chunk);

    ResidenceResult res;
    std::int64_t done = 0;
    std::int64_t round_size = 1; // doubles each round up to 16
    while (done < n_members) {
        const std::int64_t round_n = std::min<std::int64_t>(round_size, n_members - done);
        round_size = std::min<std::int64_t>(round_size * 2, 16);
        std::vector<MemberResult> members(static_cast<std::size_t>(round_n));
        parallel_for(static_cast<std::size_t>(round_n), threads, [&](std::size_t k) {
            const std::uint64_t seed = mix64(cfg.shocks.seed, static_cast<std::uint64_t>(done + static_cast<std::int64_t>(k)));
            members[k] = run_member(cfg, fps, seed, chunk);
        });
        for (auto& m : members) {
            res.durations_high.insert(res.durations_high.end(), m.high.begin(), m.high.end());
            res.durations_low.insert(res.durations_low.end(), m.low.begin(), m.low.end());
        }
        done += round_n;
        const std::int64_t n_min_dir =
            std::min<std::int64_t>(static_cast<std::int64_t>(res.durations_high.size()),
                                   static_cast<std::int64_t>(res.durations_low.size()));
        if (n_min_dir >= n_min_transitions) break;
    }

    RateEstimate& est = res.estimate;
    est.sigma = cfg.shocks.sigma;
    est.n_high_to_low = static_cast<std::int64_t>(res.durations_high.size());
    est.n_low_to_high = static_cast<std::int64_t>(res.durations_low.size());
    auto mean = [](const std::vector<double>& v) {
        return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    };
    est.mean_T_high_to_low = mean(res.durations_high);
    est.mean_T_low_to_high = mean(res.durations_low);

    SplitMix64 boot_rng(mix64(cfg.shocks.seed, 0x626f6f7473ULL));
    est.std_err_logT_high_to_low = bootstrap_stderr_log_mean(res.durations_high, boot_rng);
    est.std_err_logT_low_to_high = bootstrap_stderr_log_mean(res.durations_low, boot_rng);
    est.insufficient = std::min(est.n_high_to_low, est.n_low_to_high) < n_min_transitions;
    return res;
}

BarrierFit arrhenius_fit(const std::vector<RateEstimate>& estimates, Direction direction,
                         std::int64_t n_min) {
    std::vector<double> u, y, se;
    for (const auto& e : estimates) {
        if (e.insufficient || e.n_transitions(direction) < n_min) continue;
        if (!(e.sigma > 0.0) || !(e.mean_T(direction) > 0.0)) continue;
        u.push_back(1.0 / (e.sigma * e.sigma));
        y.push_back(std::log(e.mean_T(direction)));
        se.push_back(e.std_err_logT(direction));
    }
    if (u.size() < 4) throw FitError("arrhenius_fit needs at least 4 admissible estimates");
    const auto [umin, umax] = std::minmax_element(u.begin(), u.end());
    if (*umax < 2.0 * *umin)
        throw FitError("arrhenius_fit needs sigma^-2 to span at least a factor 2");

    bool weighted = true;
    for (double s : se)
        if (!(s > 0.0) || !std::isfinite(s)) weighted = false;

    std::vector<double> w(u.size(), 1.0);
    if (weighted)
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = 1.0 / (se[i] * se[i]);

    double sw = 0, swu = 0, swy = 0, swuu = 0, swuy = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sw += w[i];
        swu += w[i] * u[i];
        swy += w[i] * y[i];
        swuu += w[i] * u[i] * u[i];
        swuy += w[i] * u[i] * y[i];
    }
    const double det = sw * swuu - swu * swu;
    if (det == 0.0) throw FitError("arrhenius_fit: degenerate design matrix");
    const double slope = (sw * swuy - swu * swy) / det;
    const double intercept = (swuu * swy - swu * swuy) / det;

    const double ybar = swy / sw;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = y[i] - intercept - slope * u[i];
        ss_res += w[i] * r * r;
        ss_tot += w[i] * (y[i] - ybar) * (y[i] - ybar);
    }
    const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return {slope, intercept, r2, direction};
}

std::vector<double> sigma_grid_for(const MapParams& map, double epsilon, int n_sigma,
                                   double t_min, double t_max) {
    if (n_sigma < 2) throw DomainError("sigma grid needs at least 2 points");
    if (!(t_min > 1.0 && t_max > 2.0 * t_min)) throw DomainError("bad residence-time targets");
    const PotentialProfile prof = potential(map, 20000);
    // Measured Arrhenius slopes run at roughly (2W/eps)/1.8; size the grid for
    // the slower direction so its residence times stay within [t_min, t_max].
    const double w_ref =
        2.0 * std::max(prof.w_high_to_low, prof.w_low_to_high) / (1.8 * epsilon);
    std::vector<double> sigmas;
    const double y_lo = std::log(t_min), y_hi = std::log(t_max);
    for (int i = 0; i < n_sigma; ++i) {
        const double y = y_hi - (y_hi - y_lo) * i / (n_sigma - 1);
        sigmas.push_back(std::sqrt(w_ref / y));
    }
    return sigmas;
}

std::vector<BarrierRow> barrier_vs_c0(const BarrierScanConfig& cfg,
                                      const std::vector<double>& c0_values) {
    std::vector<BarrierRow> rows;
    for (std::size_t i = 0; i < c0_values.size(); ++i) {
        MapParams mp = cfg.map;
        mp.c_0 = c0_values[i];
        BarrierRow row{mp.c_0, false, 0.0, 0.0, 0.0, 0.0};
        if (fixed_points(mp).phase == Phase::C) {
            row.in_phase_c = true;
            const PotentialProfile prof = potential(mp, 20000);
            row.w_kramers_high_to_low = 2.0 * prof.w_high_to_low / cfg.epsilon;
            row.w_kramers_low_to_high = 2.0 * prof.w_low_to_high / cfg.epsilon;

            const std::vector<double> sigmas =
                sigma_grid_for(mp, cfg.epsilon, cfg.n_sigma, cfg.t_min, cfg.t_max);
            // Keep member chunks far above the slowest expected residence time.
            const std::int64_t chunk = std::clamp<std::int64_t>(
                static_cast<std::int64_t>(100.0 * cfg.t_max), 1000000, cfg.max_steps_per_sigma);
            std::vector<RateEstimate> estimates;
            for (std::size_t j = 0; j < sigmas.size(); ++j) {
                SimConfig sim;
                sim.map = mp;
                sim.shocks = cfg.shocks;
                sim.shocks.sigma = sigmas[j];
                sim.shocks.seed = mix64(mix64(cfg.shocks.seed, i), j);
                sim.ema_epsilon = cfg.epsilon;
                estimates.push_back(residence_times(sim, cfg.n_min_transitions,
                                                    cfg.max_steps_per_sigma, cfg.threads, chunk)
                                        .estimate);
            }
            row.w_fit_high_to_low =
                arrhenius_fit(estimates, Direction::high_to_low, cfg.n_min_transitions).w_fit;
            row.w_fit_low_to_high =
                arrhenius_fit(estimates, Direction::low_to_high, cfg.n_min_transitions).w_fit;
        }
        rows.push_back(row);
    }
    return rows;
}

double ks_distance_exponential(std::vector<double> sample) {
    if (sample.size() < 2) throw DomainError("KS distance needs at least 2 samples");
    std::sort(sample.begin(), sample.end());
    const double mean = std::accumulate(sample.begin(), sample.end(), 0.0) /
                        static_cast<double>(sample.size());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = 1.0 - std::exp(-sample[i] / mean);
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
        d = std::max(d, std::abs(static_cast<double>(i) / n - f));
    }
    return d;
}

} // namespace spirits
