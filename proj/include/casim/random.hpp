#pragma once

#include <cstdint>

namespace casim {

/// Reproducible counter-based random stream (splitmix64 core).
///
/// A stream is identified by (master seed, stream index). Substreams are
/// derived by index, never by sharing state, so parallel samplers that use
/// stream.substream(i) for sample i produce results independent of
/// scheduling and thread count.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0)
        : seed_(seed), index_(index), state_(mix(mix(seed + 0x632be59bd9b4e019ULL) ^ mix(index))) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t index() const { return index_; }

    /// Independent child stream; deterministic function of (seed, index, i).
    RandomStream substream(std::uint64_t i) const {
        return RandomStream(mix(seed_ ^ 0x9e3779b97f4a7c15ULL) ^ mix(index_ + 0x2545f4914f6cdd1dULL), i);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Modulo bias is negligible at the
    /// bounds used here (bound << 2^32).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t state_;
};

}  // namespace casim
