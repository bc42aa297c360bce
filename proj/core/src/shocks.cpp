#include "spirits/shocks.hpp"

#include <cmath>

namespace spirits {

void ShockParams::validate() const {
    if (!(sigma >= 0.0)) throw DomainError("sigma must be >= 0");
    if (!(eta >= 0.0 && eta < 1.0)) throw DomainError("eta must be in [0,1)");
}

ShockStream::ShockStream(const ShockParams& p, std::optional<double> initial)
    : eta_(p.eta),
      innov_scale_(std::sqrt(1.0 - p.eta * p.eta) * p.sigma),
      gauss_(p.seed) {
    p.validate();
    xi_ = initial ? *initial : p.sigma * gauss_.next();
}

double ShockStream::next() {
    xi_ = eta_ * xi_ + innov_scale_ * gauss_.next();
    return xi_;
}

ShockPath sample_path(const ShockParams& p, std::size_t length,
                      std::optional<double> initial) {
    if (length < 1) throw DomainError("path length must be >= 1");
    ShockStream stream(p, initial);
    ShockPath path;
    path.params = p;
    path.values.reserve(length);
    path.values.push_back(stream.current());
    for (std::size_t t = 1; t < length; ++t) path.values.push_back(stream.next());
    return path;
}

double correlation_time(const ShockParams& p) {
    p.validate();
    if (p.eta == 0.0) return 0.0;
    return 1.0 / std::abs(std::log(p.eta));
}

} // namespace spirits
