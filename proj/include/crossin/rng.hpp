// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace crossin {

// SplitMix64. Every sampling decision in the toolkit flows through this
// stream so that identical seeds give byte-identical artifacts on every
// platform. Do not swap in std::mt19937 or rand(): their streams are not
// part of any cross-platform contract.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) via rejection sampling. n must be > 0.
    uint64_t bounded(uint64_t n) {
        uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    uint64_t state_;
};

// Seeded Fisher-Yates. Consumes exactly size-1 bounded draws, high index
// down to 1.
template <typename T>
void fisher_yates(std::vector<T>& items, SplitMix64& rng) {
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded(i));
        std::swap(items[i - 1], items[j]);
    }
}

// Uniform permutation of {0,1,2,3}; consumes 3 bounded draws.
inline std::array<int, 4> permutation4(SplitMix64& rng) {
    std::array<int, 4> p{0, 1, 2, 3};
    for (size_t i = 4; i > 1; --i) {
        size_t j = static_cast<size_t>(rng.bounded(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace crossin
