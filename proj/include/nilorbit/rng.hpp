#pragma once

#include <cstdint>

namespace nilorbit {

/// SplitMix64. Hand-rolled so that sampled streams are identical across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent substream derived from (seed, stream index).
    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed);
        r.state_ ^= 0x9e3779b97f4a7c15ULL * (stream + 1);
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return lo + static_cast<std::int64_t>(v % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace nilorbit
