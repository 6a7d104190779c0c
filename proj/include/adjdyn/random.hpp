#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace adjdyn {

/// Seeded 64-bit generator used by every randomized constructor.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Reals and bounded integers are derived from raw 64-bit draws
/// with explicit formulas rather than std distributions, so a given seed
/// produces the same structures with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Unbiased integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

    /// `count` distinct values from `pool`, in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_distinct(std::vector<std::size_t> pool, std::size_t count);

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed and a stream tag (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace adjdyn
