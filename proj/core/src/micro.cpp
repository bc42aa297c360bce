#include "spirits/micro.hpp"

#include <cmath>

namespace spirits {

void Preferences::validate() const {
    if (!(gamma > 0.0)) throw DomainError("gamma must be > 0");
    if (!(varsigma > 0.0 && varsigma <= 1.0)) throw DomainError("varsigma must be in (0,1]");
    if (!(phi > 0.0)) throw DomainError("phi must be > 0");
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must be in (0,1)");
}

void FirmParams::validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must be in (0,1)");
    if (!(zbar > 0.0)) throw DomainError("zbar must be > 0");
}

namespace {

constexpr double kStdExpTol = 1e-13;

bool standard_exponents(const Preferences& prefs, const FirmParams& firm) {
    return std::abs(prefs.varsigma - 1.0) < kStdExpTol &&
           std::abs(prefs.phi - 1.0) < kStdExpTol &&
           std::abs(firm.alpha - 1.0 / 3.0) < kStdExpTol;
}

// Residual of the labour first-order condition in t = log n, after
// substituting u = z e^(-alpha t) and c = z e^((1-alpha) t) / (1-alpha):
//   phi*t - [log f + log u - log gamma - varsigma*log c] = 0.
// Strictly increasing in t, so the root is unique.
double labour_residual(double t, const Preferences& p, const FirmParams& fm,
                       double f, double z) {
    const double log_u = std::log(z) - fm.alpha * t;
    const double log_c = std::log(z) + (1.0 - fm.alpha) * t - std::log1p(-fm.alpha);
    return p.phi * t - (std::log(f) + log_u - std::log(p.gamma) - p.varsigma * log_c);
}

Equilibrium from_log_n(double t, const Preferences& p, const FirmParams& fm,
                       double f, double z) {
    Equilibrium eq;
    eq.n = std::exp(t);
    eq.u = z * std::exp(-fm.alpha * t);
    eq.c = z * std::exp((1.0 - fm.alpha) * t) / (1.0 - fm.alpha);
    eq.lambda_p = f / std::pow(eq.c, p.varsigma);
    return eq;
}

} // namespace

Equilibrium solve_equilibrium(const Preferences& prefs, const FirmParams& firm,
                              double f, double z) {
    prefs.validate();
    firm.validate();
    if (!(f > 0.0)) throw DomainError("confidence f must be > 0");
    if (!(z > 0.0)) throw DomainError("productivity z must be > 0");

    double lo = std::log(1e-12);
    double hi = std::log(1e12);

    if (standard_exponents(prefs, firm)) {
        // Closed form: n = sqrt(2f/(3 gamma)), used as the bracket seed.
        const double t0 = 0.5 * std::log(2.0 * f / (3.0 * prefs.gamma));
        lo = t0 - 1e-6;
        hi = t0 + 1e-6;
        // Widen until the residual brackets the root (guards rounding).
        while (labour_residual(lo, prefs, firm, f, z) > 0.0) lo -= 1.0;
        while (labour_residual(hi, prefs, firm, f, z) < 0.0) hi += 1.0;
    }

    double flo = labour_residual(lo, prefs, firm, f, z);
    double fhi = labour_residual(hi, prefs, firm, f, z);
    if (flo > 0.0 || fhi < 0.0)
        throw NonConvergence("labour FOC root not bracketed in [1e-12, 1e12]");

    // Bisection in log n to 1e-12 absolute.
    const int max_iter = 200;
    int it = 0;
    while (hi - lo > 1e-12) {
        if (++it > max_iter) throw NonConvergence("equilibrium bisection exceeded max iterations");
        const double mid = 0.5 * (lo + hi);
        const double fm = labour_residual(mid, prefs, firm, f, z);
        if (fm < 0.0) { lo = mid; flo = fm; } else { hi = mid; fhi = fm; }
    }
    return from_log_n(0.5 * (lo + hi), prefs, firm, f, z);
}

double invert_confidence(const FirmParams& firm, const Preferences& prefs,
                         double g_value) {
    firm.validate();
    prefs.validate();
    if (!(g_value > 0.0)) throw DomainError("g_value must be > 0");
    const double ratio = g_value / firm.zbar;
    return 4.0 * prefs.gamma * ratio * ratio * ratio / 9.0;
}

double taylor_rate(double pi, const Preferences& prefs, double phi_taylor) {
    return phi_taylor * pi - std::log(prefs.beta);
}

} // namespace spirits
