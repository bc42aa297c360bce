#include "spirits/inflation.hpp"

#include <cmath>

namespace spirits {

void PolicyParams::validate() const {
    if (!(phi_taylor > 1.0)) throw DomainError("phi_taylor must exceed 1");
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must be in (0,1)");
    if (!(kappa_high >= 0.0)) throw DomainError("kappa_high must be >= 0");
    if (!(crisis_prob >= 0.0 && crisis_prob < 1.0)) throw DomainError("crisis_prob must be in [0,1)");
}

double kappa_high_of(const MapParams& map) {
    const FixedPointSet fps = fixed_points(map);
    if (!fps.c_high) throw DomainError("kappa_high needs a high fixed point");
    return 3.0 * g_prime(map, *fps.c_high);
}

PolicyParams make_policy(double phi_taylor, double beta, const MapParams& map,
                         double crisis_prob) {
    PolicyParams p;
    p.phi_taylor = phi_taylor;
    p.beta = beta;
    p.kappa_high = kappa_high_of(map);
    p.crisis_prob = crisis_prob;
    p.validate();
    return p;
}

namespace {

double high_slope(const MapParams& map) {
    const FixedPointSet fps = fixed_points(map);
    if (!fps.c_high) throw DomainError("no high fixed point");
    const double slope = g_prime(map, *fps.c_high);
    if (!(std::abs(slope) < 1.0)) throw DomainError("|G'(c_>)| >= 1: linearisation invalid");
    return slope;
}

} // namespace

std::vector<double> expected_gap_path(const MapParams& map, const ShockParams& shocks,
                                      double delta_t, double xi_t, int horizon) {
    if (horizon < 1) throw DomainError("horizon must be >= 1");
    const double gp = high_slope(map);
    const double eta = shocks.eta;

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(horizon));
    double gp_k = 1.0, eta_k = 1.0;
    for (int k = 1; k <= horizon; ++k) {
        gp_k *= gp;
        eta_k *= eta;
        double shock_term;
        if (std::abs(eta - gp) < 1e-12) {
            shock_term = xi_t * k * gp_k; // sum_{j=1}^k gp^{k-j} eta^j at eta == gp
        } else {
            shock_term = xi_t * eta * (eta_k - gp_k) / (eta - gp);
        }
        out.push_back(gp_k * delta_t + shock_term);
    }
    return out;
}

double inflation_now(const PolicyParams& policy, const MapParams& map,
                     const ShockParams& shocks, double delta_t, double delta_prev,
                     double xi_t, int truncation) {
    policy.validate();
    if (truncation < 1) throw DomainError("truncation must be >= 1");
    const double phi = policy.phi_taylor;
    const std::vector<double> e = expected_gap_path(map, shocks, delta_t, xi_t, truncation + 1);

    double sum = 0.0;
    double phi_pow = 1.0 / phi; // Phi^{-k-1} at k = 0
    double prev = delta_t;      // E_t[delta_t]
    for (int k = 0; k <= truncation; ++k) {
        const double cur = e[static_cast<std::size_t>(k)];
        sum += phi_pow * (cur - prev);
        prev = cur;
        phi_pow /= phi;
    }
    const double ratio = policy.kappa_high / phi;
    return -ratio * (delta_t - delta_prev) + (1.0 - ratio) * sum;
}

double crisis_inflation_correction(const PolicyParams& policy, const FixedPointSet& fps) {
    policy.validate();
    if (fps.phase != Phase::C)
        throw PhaseError("crisis correction requires phase C");
    return -(policy.crisis_prob / (policy.phi_taylor - 1.0)) *
           (*fps.c_high - *fps.c_low) / *fps.c_low;
}

InflationPath inflation_path(const Trajectory& traj, const PolicyParams& policy,
                             const MapParams& map, const ShockParams& shocks,
                             int truncation) {
    policy.validate();
    if (traj.x.size() < 2) throw DomainError("trajectory too short");
    if (!traj.fps.c_high) throw DomainError("inflation path needs a high fixed point");

    if (truncation <= 0) {
        // Phi^{-K} < 1e-14.
        truncation = static_cast<int>(std::ceil(14.0 * std::log(10.0) / std::log(policy.phi_taylor))) + 1;
    }

    if (traj.fps.phase == Phase::C) {
        for (std::size_t t = 0; t < traj.basin.size(); ++t)
            if (traj.basin[t] != Basin::high)
                throw BasinError("trajectory leaves the high basin; linearisation invalid");
    }

    InflationPath out;
    if (policy.crisis_prob > 0.0 && traj.fps.phase == Phase::C)
        out.delta_pi_crisis = crisis_inflation_correction(policy, traj.fps);

    const double c_high = *traj.fps.c_high;
    const double log_beta = std::log(policy.beta);
    out.pi.reserve(traj.x.size() - 1);
    out.r.reserve(traj.x.size() - 1);
    for (std::size_t t = 1; t < traj.x.size(); ++t) {
        const double delta_t = (std::exp(traj.x[t]) - c_high) / c_high;
        const double delta_prev = (std::exp(traj.x[t - 1]) - c_high) / c_high;
        const double pi = inflation_now(policy, map, shocks, delta_t, delta_prev,
                                        traj.xi[t], truncation) +
                          out.delta_pi_crisis;
        out.pi.push_back(pi);
        out.r.push_back(policy.phi_taylor * pi - log_beta);
    }
    return out;
}

} // namespace spirits
