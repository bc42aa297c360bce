#pragma once

#include "spirits/errors.hpp"
#include "spirits/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spirits {

// AR(1) log-productivity: xi_t = eta*xi_{t-1} + sqrt(1-eta^2)*N(0, sigma^2),
// so the stationary variance is sigma^2 for every eta.
struct ShockParams {
    double sigma = 0.6;       // stationary std
    double eta = 0.5;         // lag-1 autocorrelation, in [0,1)
    std::uint64_t seed = 42;

    void validate() const;
};

struct ShockPath {
    std::vector<double> values;
    ShockParams params;
};

// Streaming AR(1) generator; value type, one per ensemble member.
class ShockStream {
public:
    // initial = nullopt draws xi_0 from the stationary N(0, sigma^2).
    ShockStream(const ShockParams& p, std::optional<double> initial = std::nullopt);

    double current() const { return xi_; }
    double next(); // advances and returns xi_{t+1}

private:
    double eta_;
    double innov_scale_; // sqrt(1-eta^2)*sigma
    double xi_;
    GaussianGen gauss_;
};

ShockPath sample_path(const ShockParams& p, std::size_t length,
                      std::optional<double> initial = std::nullopt);

// T_eta = 1/|ln eta| for eta in (0,1); 0 for eta = 0.
double correlation_time(const ShockParams& p);

} // namespace spirits
