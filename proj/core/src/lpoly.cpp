#include "cayley/lpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

LPoly::LPoly(std::initializer_list<int64_t> coeffs) : c_(coeffs) { normalize(); }

LPoly::LPoly(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

LPoly LPoly::constant(int64_t c) { return c == 0 ? LPoly{} : LPoly{{c}}; }

LPoly LPoly::monomial(int degree, int64_t coeff) {
    if (degree < 0) throw std::domain_error("monomial degree must be nonnegative");
    if (coeff == 0) return LPoly{};
    std::vector<int64_t> c(degree + 1, 0);
    c.back() = coeff;
    return LPoly{std::move(c)};
}

void LPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int64_t LPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& c : r.c_) c = checked_mul64(c, -1);
    return r;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
    std::vector<int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = checked_add64(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
    return LPoly{std::move(c)};
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return LPoly{};
    std::vector<int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = checked_add64(c[i + j], checked_mul64(a.c_[i], b.c_[j]));
    return LPoly{std::move(c)};
}

LPoly LPoly::exact_div(const LPoly& a, const LPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return LPoly{};
    if (a.degree() < b.degree()) throw std::domain_error("exact_div: inexact division (degree)");

    std::vector<int64_t> rem = a.c_;
    std::vector<int64_t> quot(a.degree() - b.degree() + 1, 0);
    const int64_t lead = b.c_.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        int64_t top = rem[k + b.degree()];
        if (top % lead != 0) throw std::domain_error("exact_div: inexact division (coefficient)");
        int64_t q = top / lead;
        quot[k] = q;
        for (int j = 0; j <= b.degree(); ++j)
            rem[k + j] = checked_add64(rem[k + j], checked_mul64(-q, b.c_[j]));
    }
    for (int64_t r : rem)
        if (r != 0) throw std::domain_error("exact_div: inexact division (remainder)");
    return LPoly{std::move(quot)};
}

i128 LPoly::eval_at(int64_t q) const {
    i128 acc = 0;
    for (int k = degree(); k >= 0; --k) acc = checked_add(checked_mul(acc, q), c_[k]);
    return acc;
}

std::string LPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        int64_t c = c_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        uint64_t mag = c < 0 ? -static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
        out << mag;
        if (k > 0) out << "*L^" << k;
    }
    return out.str();
}

LPoly class_projective(int n) {
    if (n < 0) throw std::domain_error("class_projective: dimension must be nonnegative");
    return LPoly{std::vector<int64_t>(n + 1, 1)};
}

LPoly class_grassmannian(int k, int n) {
    if (k < 0 || n < 0 || k > n) throw std::domain_error("class_grassmannian: need 0 <= k <= n");
    LPoly num = LPoly::constant(1);
    LPoly den = LPoly::constant(1);
    for (int i = 0; i < k; ++i) {
        num = num * (LPoly::monomial(n - i) - LPoly::constant(1));
        den = den * (LPoly::monomial(k - i) - LPoly::constant(1));
    }
    return LPoly::exact_div(num, den);
}

}  // namespace cayley
