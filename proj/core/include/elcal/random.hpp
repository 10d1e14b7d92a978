#pragma once

#include <cstdint>

namespace elcal {

/// Counter-based deterministic random stream. The draw sequence depends only
/// on (seed, replicate_index): replicate streams can be assigned to workers
/// in any order without changing results. State setup hashes the pair through
/// a SplitMix64-style finalizer; the generator core is xoshiro256++.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t replicate_index);

    std::uint64_t next_u64();

    /// Uniform draw strictly inside (0, 1): ((u >> 11) + 0.5) * 2^-53.
    double uniform01();

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t replicate_index() const noexcept { return replicate_; }

  private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t replicate_;
};

/// SplitMix64 finalizer; also used to derive per-sample-size sub-seeds.
std::uint64_t mix64(std::uint64_t z);

/// Sub-seed for the batch at sample size n within a run seeded by `seed`.
/// Distinct n get fresh, unrelated streams; recorded in output metadata.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n);

inline RandomStream::RandomStream(std::uint64_t seed, std::uint64_t replicate_index)
    : seed_(seed), replicate_(replicate_index) {
    // SplitMix64 walk from a hashed per-replicate origin fills the state.
    std::uint64_t sm = mix64(seed + 0x9E3779B97F4A7C15ULL * replicate_index);
    for (auto& w : s_) {
        sm += 0x9E3779B97F4A7C15ULL;
        w = mix64(sm);
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = 1;  // xoshiro forbids the all-zero state
    }
}

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t n) {
    return mix64(seed ^ (0xD1B54A32D192ED03ULL * (n + 1)));
}

inline std::uint64_t RandomStream::next_u64() {
    auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

inline double RandomStream::uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace elcal
