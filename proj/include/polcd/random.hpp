#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace polcd {

/// Seeded generator with platform-independent derived draws. std::mt19937_64's
/// raw output is fixed by the standard; the distributions in <random> are not,
/// so the helpers below are hand-rolled to keep artifacts reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound), rejection sampled.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Fisher–Yates shuffle of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[below(i)]);
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace polcd
