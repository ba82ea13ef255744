#include "cayley/ffield.hpp"

#include <stdexcept>
#include <string>

namespace cayley {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldCtx::FieldCtx(uint32_t p) : p_(p) {
    if (p < 2 || p > 61)
        throw std::domain_error("field characteristic " + std::to_string(p) + " out of range [2, 61]");
    if (!is_prime(p))
        throw std::domain_error("field characteristic " + std::to_string(p) + " is not prime");
    inv_table_[1] = 1;
    for (uint32_t a = 2; a < p; ++a) {
        // Fermat: a^(p-2) = a^-1.
        uint32_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        inv_table_[a] = static_cast<uint8_t>(r);
    }
}

void FieldCtx::check(Fp a) const {
    if (a.p != p_) throw std::invalid_argument("element belongs to a different field context");
    if (a.value >= p_) throw std::invalid_argument("element value not reduced mod p");
}

Fp FieldCtx::make(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return Fp{static_cast<uint16_t>(r), static_cast<uint16_t>(p_)};
}

Fp FieldCtx::add(Fp a, Fp b) const {
    check(a);
    check(b);
    return Fp{static_cast<uint16_t>(add_raw(a.value, b.value)), static_cast<uint16_t>(p_)};
}

Fp FieldCtx::sub(Fp a, Fp b) const {
    check(a);
    check(b);
    return Fp{static_cast<uint16_t>(sub_raw(a.value, b.value)), static_cast<uint16_t>(p_)};
}

Fp FieldCtx::mul(Fp a, Fp b) const {
    check(a);
    check(b);
    return Fp{static_cast<uint16_t>(mul_raw(a.value, b.value)), static_cast<uint16_t>(p_)};
}

Fp FieldCtx::neg(Fp a) const {
    check(a);
    return Fp{static_cast<uint16_t>(neg_raw(a.value)), static_cast<uint16_t>(p_)};
}

uint32_t FieldCtx::inv_raw(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_table_[a];
}

Fp FieldCtx::inv(Fp a) const {
    check(a);
    return Fp{static_cast<uint16_t>(inv_raw(a.value)), static_cast<uint16_t>(p_)};
}

Fp FieldCtx::pow(Fp a, uint64_t e) const {
    check(a);
    uint32_t r = 1, base = a.value;
    while (e) {
        if (e & 1) r = (r * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return Fp{static_cast<uint16_t>(r), static_cast<uint16_t>(p_)};
}

}  // namespace cayley
