#pragma once

#include <cstdint>
#include <random>

namespace mgrid {

// splitmix64 finalizer (Vigna). Bijective on u64.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Sub-seed for replicate/stream `index` of `base`. Injective in index for a
// fixed base: both inner maps are bijections of u64.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(splitmix64(base) ^ splitmix64(index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
}

// Deterministic random stream. mt19937_64 output is fully specified by the
// standard, so sequences are identical on every platform; the uniform
// mappings below are our own (std::uniform_*_distribution is not portable).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Unbiased integer in [0, bound), bound >= 1. Rejection sampling.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace mgrid
