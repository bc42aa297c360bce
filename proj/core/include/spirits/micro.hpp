#pragma once

#include "spirits/errors.hpp"

namespace spirits {

// Household preference block.
struct Preferences {
    double gamma = 1.0;    // labour disutility factor
    double varsigma = 1.0; // consumption curvature, in (0,1]
    double phi = 1.0;      // labour curvature, > 0
    double beta = 0.99;    // discount factor, in (0,1)

    void validate() const;
};

struct FirmParams {
    double alpha = 1.0 / 3.0; // returns parameter, in (0,1)
    double zbar = 1.0;        // mean productivity, > 0

    void validate() const;
};

// Per-period market-clearing equilibrium given confidence f and productivity z.
struct Equilibrium {
    double c;        // per-capita consumption
    double n;        // per-capita labour
    double u;        // real wage w/p
    double lambda_p; // the product lambda*p = f / c^varsigma
};

// Solves the per-period system
//   c^varsigma = f / (lambda p)
//   n^phi      = u (lambda p) / gamma
//   u          = z n^(-alpha)
//   c          = z n^(1-alpha) / (1-alpha)
// for the unique positive (c, n, u). At varsigma=phi=1, alpha=1/3 the
// closed form c = z (9f/(4 gamma))^(1/3) is reproduced to 1e-10 relative.
Equilibrium solve_equilibrium(const Preferences& prefs, const FirmParams& firm,
                              double f, double z);

// Inverts the standard-exponent consumption map: returns the confidence F
// such that solve_equilibrium(..., F, zbar).c == g_value, i.e.
// F = 4 gamma (g/zbar)^3 / 9.
double invert_confidence(const FirmParams& firm, const Preferences& prefs,
                         double g_value);

// Taylor rule: r = phi_taylor * pi - log(beta).
double taylor_rate(double pi, const Preferences& prefs, double phi_taylor);

} // namespace spirits
