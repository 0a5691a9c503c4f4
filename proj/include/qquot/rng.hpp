#pragma once

// Counter-based random stream: the draws for sample i are a pure function of
// (seed, i), so randomized sweeps reproduce under any scheduling.

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace qquot {

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t counter) noexcept
        : state_(mix(seed ^ mix(counter + kGolden)))
    {
    }

    std::uint64_t next() noexcept
    {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform on [lo, hi], unbiased by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (hi < lo) throw std::domain_error("CounterRng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return lo + static_cast<std::int64_t>(x % span);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    // splitmix64 finalizer
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace qquot
