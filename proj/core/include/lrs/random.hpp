#pragma once

#include <cstdint>

#include "lrs/laurent.hpp"

namespace lrs {

// splitmix64: 64-bit state, reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Rejection-free modulo bias is
    // irrelevant at the bounds used here, but rejection keeps it exact.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

// gf:p draws a uniform residue; int draws uniformly from [-9, 9].
Value random_value(const Domain& dom, SplitMix64& rng);
Seq random_seq(const Domain& dom, int n, SplitMix64& rng);

}  // namespace lrs
