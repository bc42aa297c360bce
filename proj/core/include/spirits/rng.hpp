#pragma once

#include <cmath>
#include <cstdint>

namespace spirits {

// 64-bit finalizer from splitmix64. Used both as the stream mixer and as
// the per-draw output scrambler, so child streams are reproducible across
// implementations from the published formula alone.
inline std::uint64_t splitmix64_fin(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Child-stream derivation: seed_i = mix64(master_seed, i).
inline std::uint64_t mix64(std::uint64_t master, std::uint64_t stream) {
    return splitmix64_fin(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

// Counter-based splitmix64 stream. Value type, trivially copyable; one per
// thread / ensemble member.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_fin(state_);
    }

    // Uniform on (0,1]; never returns 0 so log() is safe.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Standard-normal generator with exact Gaussian tails (Box-Muller transform,
// both branches used). Deterministic sequence for a fixed seed.
class GaussianGen {
public:
    explicit GaussianGen(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = eng_.uniform01();
        const double u2 = eng_.uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    SplitMix64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace spirits
