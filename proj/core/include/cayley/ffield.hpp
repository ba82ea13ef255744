#pragma once

#include <array>
#include <cstdint>

namespace cayley {

class FieldCtx;

// Residue in [0, p). Carries its modulus so that elements of different
// fields cannot be mixed silently.
struct Fp {
    uint16_t value = 0;
    uint16_t p = 0;

    friend bool operator==(Fp a, Fp b) = default;
};

// A prime field F_p, 2 <= p <= 61. The cap keeps every downstream identity
// check inside 128-bit signed arithmetic with headroom. Immutable after
// construction; all operations are pure.
class FieldCtx {
public:
    explicit FieldCtx(uint32_t p);

    uint32_t p() const { return p_; }

    Fp make(int64_t v) const;

    Fp add(Fp a, Fp b) const;
    Fp sub(Fp a, Fp b) const;
    Fp mul(Fp a, Fp b) const;
    Fp neg(Fp a) const;
    Fp inv(Fp a) const;
    Fp pow(Fp a, uint64_t e) const;

    Fp zero() const { return Fp{0, static_cast<uint16_t>(p_)}; }
    Fp one() const { return Fp{1, static_cast<uint16_t>(p_)}; }

    // Raw helpers for bulk code paths (residues already reduced mod p).
    uint32_t add_raw(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub_raw(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t mul_raw(uint32_t a, uint32_t b) const { return (a * b) % p_; }
    uint32_t neg_raw(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t inv_raw(uint32_t a) const;

private:
    void check(Fp a) const;

    uint32_t p_;
    std::array<uint8_t, 62> inv_table_{};
};

bool is_prime(uint32_t n);

}  // namespace cayley
