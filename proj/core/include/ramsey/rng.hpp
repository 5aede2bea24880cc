#pragma once

#include <cstdint>

namespace ramsey {

// Counter-based generator: the n-th output word is a pure function of
// (seed, n), so trial streams can be partitioned across workers by index
// without changing the sampled values.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t word(std::uint64_t counter) const {
        // splitmix64 finalizer over the counter stream
        std::uint64_t z = seed_ + counter * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) via 128-bit multiply; n-independent counters keep
    // reproducibility (one counter consumed per call).
    std::uint64_t below(std::uint64_t counter, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(word(counter)) * n) >> 64);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace ramsey
