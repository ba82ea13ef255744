#pragma once

#include <cstdint>

namespace cayley {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm, 64-bit seed, no
// platform-dependent state, so a (q, seed) pair reproduces the same W on
// any machine or implementation. Residues are taken as next() mod p; for
// p <= 61 the modulo bias is ~2^-58 and irrelevant for rejection sampling.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint32_t next_mod(uint32_t m) { return static_cast<uint32_t>(next() % m); }
};

}  // namespace cayley
