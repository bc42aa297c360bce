#include "spirits/feedback.hpp"

#include "spirits/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace spirits {

void MapParams::validate() const {
    if (!(c_min > 0.0)) throw DomainError("c_min must be > 0");
    if (!(c_max > c_min)) throw DomainError("c_max must exceed c_min");
    if (!(theta > 0.0)) throw DomainError("theta must be > 0");
    if (!(c_0 > 0.0)) throw DomainError("c_0 must be > 0");
}

std::string phase_name(Phase p) {
    switch (p) {
        case Phase::A: return "A";
        case Phase::B_plus: return "B+";
        case Phase::C: return "C";
        case Phase::B_minus: return "B-";
        case Phase::boundary: return "boundary";
    }
    return "?";
}

double g_eval(const MapParams& p, double c) {
    const double t = 2.0 * p.theta * (p.c_0 - c);
    // Numerically stable logistic: saturates to c_min / c_max instead of
    // overflowing exp.
    if (t >= 0.0) {
        const double e = std::exp(-t);
        return p.c_min + p.delta() * e / (1.0 + e);
    }
    return p.c_min + p.delta() / (1.0 + std::exp(t));
}

double g_prime(const MapParams& p, double c) {
    const double g = g_eval(p, c);
    return 2.0 * p.theta * (g - p.c_min) * (p.c_max - g) / p.delta();
}

double h_eval(const MapParams& p, double x) {
    return std::log(g_eval(p, std::exp(x)));
}

double h_prime(const MapParams& p, double x) {
    const double c = std::exp(x);
    return c * g_prime(p, c) / g_eval(p, c);
}

namespace {

// H'(x) expressed in c = e^x; used by the max-H' search.
double h_prime_c(const MapParams& p, double c) {
    return c * g_prime(p, c) / g_eval(p, c);
}

double residual(const MapParams& p, double c) { return g_eval(p, c) - c; }

double bisect_root(const MapParams& p, double lo, double hi) {
    double flo = residual(p, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = residual(p, mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // Two Newton polish steps on G(c)-c; kept inside the bracket.
    double c = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
        const double denom = g_prime(p, c) - 1.0;
        if (denom == 0.0) break;
        const double step = residual(p, c) / denom;
        const double cand = c - step;
        if (cand >= lo - 1e-12 && cand <= hi + 1e-12) c = cand;
    }
    return c;
}

} // namespace

double max_h_prime(const MapParams& p) {
    // G' is concentrated within ~1/theta of c_0; scan a generous window in c
    // then refine around the best node by golden section.
    const double lo = std::max(1e-12, p.c_0 - 60.0 / p.theta);
    const double hi = p.c_0 + 60.0 / p.theta + p.c_max;
    const int n = 20000;
    const double step = (hi - lo) / n;
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        const double v = h_prime_c(p, lo + i * step);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    double a = lo + std::max(0, best_i - 1) * step;
    double b = lo + std::min(n, best_i + 1) * step;
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = h_prime_c(p, x1), f2 = h_prime_c(p, x2);
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, b); ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = h_prime_c(p, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = h_prime_c(p, x1);
        }
    }
    return std::max(f1, f2);
}

FixedPointSet fixed_points(const MapParams& p) {
    p.validate();

    const double lo = p.c_min * (1.0 - 1e-9);
    const double hi = p.c_max * (1.0 + 1e-9);
    const int n = 10000;
    const double step = (hi - lo) / n;

    std::vector<double> grid_res(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) grid_res[static_cast<std::size_t>(i)] = residual(p, lo + i * step);

    std::vector<double> roots;
    bool degenerate = false;

    for (int i = 0; i < n; ++i) {
        const double fa = grid_res[static_cast<std::size_t>(i)];
        const double fb = grid_res[static_cast<std::size_t>(i) + 1];
        if (fa == 0.0) {
            roots.push_back(lo + i * step);
        } else if ((fa < 0.0) != (fb < 0.0)) {
            roots.push_back(bisect_root(p, lo + i * step, lo + (i + 1) * step));
        }
    }
    if (grid_res.back() == 0.0) roots.push_back(hi);

    // Near-tangency without a sign change: a local extremum of G(c)-c that
    // touches zero within grid tolerance counts as a (double) root.
    for (int i = 1; i < n; ++i) {
        const double fm = grid_res[static_cast<std::size_t>(i)];
        const bool extremum =
            (fm < grid_res[static_cast<std::size_t>(i) - 1] && fm <= grid_res[static_cast<std::size_t>(i) + 1] && fm > 0.0) ||
            (fm > grid_res[static_cast<std::size_t>(i) - 1] && fm >= grid_res[static_cast<std::size_t>(i) + 1] && fm < 0.0);
        if (extremum && std::abs(fm) < 1e-9) {
            roots.push_back(lo + i * step);
            degenerate = true;
        }
    }

    std::sort(roots.begin(), roots.end());
    // Collapse duplicates from grid-point hits.
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-10; }),
                roots.end());

    FixedPointSet out;
    for (double r : roots) {
        const double s = g_prime(p, r);
        if (std::abs(s - 1.0) < 1e-7) degenerate = true;
        out.roots.push_back({r, s, std::abs(s) < 1.0});
    }

    if (degenerate || out.roots.size() == 2 || out.roots.empty() || out.roots.size() > 3) {
        out.phase = Phase::boundary;
        return out;
    }

    if (out.roots.size() == 3) {
        out.phase = Phase::C;
        out.c_low = out.roots[0].value;
        out.c_star = out.roots[1].value;
        out.c_high = out.roots[2].value;
        out.distance_ratio = (*out.c_high - *out.c_star) / (*out.c_star - *out.c_low);
        return out;
    }

    const double r = out.roots[0].value;
    if (r > p.c_0) {
        out.phase = (max_h_prime(p) < 1.0) ? Phase::A : Phase::B_plus;
        out.c_high = r;
    } else {
        out.phase = Phase::B_minus;
        out.c_low = r;
    }
    return out;
}

double boundary_hyperbola(const MapParams& p, double theta) {
    if (!(theta > 0.0)) throw DomainError("theta must be > 0");
    return (1.0 + 2.0 * p.c_min / p.delta()) / theta;
}

std::optional<TangencyBounds> boundary_tangency(const MapParams& p, double theta) {
    if (!(theta > 0.0)) throw DomainError("theta must be > 0");
    const double d = p.delta();
    if (theta * d <= 2.0) return std::nullopt;
    const double m = 0.5 * (p.c_min + p.c_max);
    const double s = std::sqrt(d * d / 4.0 - d / (2.0 * theta));
    auto c0_of_tangency = [&](double g) {
        return g + std::log((p.c_max - g) / (g - p.c_min)) / (2.0 * theta);
    };
    double a = c0_of_tangency(m - s);
    double b = c0_of_tangency(m + s);
    if (a > b) std::swap(a, b);
    return TangencyBounds{a, b};
}

std::vector<PhaseCell> phase_diagram_scan(const MapParams& base,
                                          double c0_lo, double c0_hi, int n_c0,
                                          double theta_lo, double theta_hi, int n_theta,
                                          int threads) {
    if (n_c0 < 2 || n_theta < 2) throw DomainError("phase diagram grid must be at least 2x2");
    if (!(c0_lo >= 0.0 && c0_hi > c0_lo && theta_lo > 0.0 && theta_hi > theta_lo))
        throw DomainError("phase diagram ranges must be positive and increasing");

    const std::size_t total = static_cast<std::size_t>(n_c0) * static_cast<std::size_t>(n_theta);
    std::vector<PhaseCell> cells(total);
    parallel_for(total, threads, [&](std::size_t k) {
        const int i = static_cast<int>(k) / n_theta;
        const int j = static_cast<int>(k) % n_theta;
        MapParams mp = base;
        mp.c_0 = c0_lo + (c0_hi - c0_lo) * i / (n_c0 - 1);
        mp.theta = theta_lo + (theta_hi - theta_lo) * j / (n_theta - 1);
        if (mp.c_0 <= 0.0) mp.c_0 = 1e-12; // grid may start at 0
        const FixedPointSet fps = fixed_points(mp);
        cells[k] = {mp.c_0, mp.theta, fps.phase, fps.distance_ratio};
    });
    return cells;
}

} // namespace spirits
