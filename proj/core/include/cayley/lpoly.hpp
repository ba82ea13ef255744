#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cayley/checked.hpp"

namespace cayley {

// Polynomial in the Lefschetz class L with exact int64 coefficients,
// kept canonical (no trailing zeros; the zero polynomial is empty).
// Every arithmetic step is overflow-checked: in this artifact coefficient
// overflow signals a bug, never a need for bignums, since all polynomials
// in play have degree <= 24 and coefficients < 2^10.
class LPoly {
public:
    LPoly() = default;
    // coeffs[k] is the coefficient of L^k
    LPoly(std::initializer_list<int64_t> coeffs);
    explicit LPoly(std::vector<int64_t> coeffs);

    static LPoly constant(int64_t c);
    static LPoly monomial(int degree, int64_t coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int64_t coeff(int k) const;
    const std::vector<int64_t>& coeffs() const { return c_; }

    LPoly operator-() const;
    friend LPoly operator+(const LPoly& a, const LPoly& b);
    friend LPoly operator-(const LPoly& a, const LPoly& b);
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    friend bool operator==(const LPoly& a, const LPoly& b) = default;

    // Exact quotient a/b in Z[L]; throws std::domain_error when b does not
    // divide a (an inexact division here means a wrong identity, so it must
    // never silently truncate).
    static LPoly exact_div(const LPoly& a, const LPoly& b);

    // Exact evaluation at L = q, overflow-checked 128-bit.
    i128 eval_at(int64_t q) const;

    // "c_k*L^k + ... + c_0" with zero terms omitted; "0" for zero.
    std::string str() const;

private:
    void normalize();
    std::vector<int64_t> c_;
};

// [P^n] = L^n + ... + 1
LPoly class_projective(int n);

// Gaussian binomial [n choose k]_L, the class of the Grassmannian G(k, n),
// computed by exact division of prod(L^{n-i}-1) / prod(L^{k-i}-1).
LPoly class_grassmannian(int k, int n);

}  // namespace cayley
