#pragma once

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so results do not depend on platform or scheduling.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hamspec {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : key_(splitmix64(seed ^ splitmix64(stream + 0x5851f42d4c957f2dULL))) {}

    std::uint64_t next() { return splitmix64(key_ + counter_++ * 0x9e3779b97f4a7c15ULL); }

    /// Uniform in [0, bound), Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// k distinct indices from [0, n), sorted ascending, via reservoir sampling over the enumeration.
inline std::vector<std::uint64_t> sample_indices(CounterRng& rng, std::uint64_t n, std::uint64_t k) {
    k = std::min(k, n);
    std::vector<std::uint64_t> reservoir;
    reservoir.reserve(k);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i < k) {
            reservoir.push_back(i);
        } else {
            const std::uint64_t j = rng.below(i + 1);
            if (j < k) reservoir[j] = i;
        }
    }
    std::sort(reservoir.begin(), reservoir.end());
    return reservoir;
}

}  // namespace hamspec
