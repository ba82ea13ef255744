#pragma once

#include <string>
#include <vector>

#include "cayley/lpoly.hpp"

namespace cayley {

// Element c1 + cX*[X] + cY*[Y] of the rank-3 free module over Z[L] spanned
// by {1, [X], [Y]}. The derivation below never multiplies two unknown
// classes, so scaling by a Z[L] scalar is the only product defined;
// a symbol-times-symbol product is a usage error.
struct MotivicExpr {
    LPoly c1, cX, cY;

    friend bool operator==(const MotivicExpr& a, const MotivicExpr& b) = default;
    friend MotivicExpr operator+(const MotivicExpr& a, const MotivicExpr& b);
    friend MotivicExpr operator-(const MotivicExpr& a, const MotivicExpr& b);
    // throws std::invalid_argument unless a or b is a pure scalar (cX = cY = 0)
    friend MotivicExpr operator*(const MotivicExpr& a, const MotivicExpr& b);

    bool is_scalar() const { return cX.is_zero() && cY.is_zero(); }
    std::string str() const;
};

MotivicExpr scalar(const LPoly& p);
MotivicExpr symbol_X();
MotivicExpr symbol_Y();

// [H] = [G(2,7)]*[P^5] + [X]*L^6
// (fibers of H -> G(2,7): all of PW over a plane in X, a hyperplane P^5
// elsewhere)
MotivicExpr class_H_via_X();

// [H~] = [H] * (L^2-1)(L^2-L), the frame-bundle factor
MotivicExpr class_tildeH_via_X();

// [H~_1] = [Y] * ((L^3-1)(L^7-L) + (L^7-L^3)(L^6-L))
// (over the rank-4 stratum the kernel is 3-dimensional; v1 splits by
// kernel membership)
MotivicExpr class_tildeH1();

// [H~_2] = ([P^6] - [Y]) * ((L-1)(L^7-L) + (L^7-L)(L^6-L))
// (rank-6 forms have a 1-dimensional kernel)
MotivicExpr class_tildeH2();

// [H~] = [P^6](L^7-L)(L^6-1) + [Y](L^2-1)(L-1)L^7
MotivicExpr class_tildeH_via_Y();

struct SymbolicCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass;
};

// The four exact identities tying the two expansions of [H~] together:
//   S1: [G(2,7)](L^2-1)(L^2-L) = (L^7-1)(L^7-L)
//   S2: [P^6](L^6-1) = [P^5](L^7-1)
//   S3: [H~_1] + [H~_2] = [H~ via Y]
//   S4: [H~ via X] - [H~ via Y] = ([X]-[Y])(L^2-1)(L-1)L^7
// S4 is the zero-divisor relation: the difference of the two expansions
// is exactly ([X]-[Y]) times (L^2-1)(L-1)L^7.
std::vector<SymbolicCheck> verify_symbolic();

}  // namespace cayley
