#include "cayley/motivic.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley {

MotivicExpr operator+(const MotivicExpr& a, const MotivicExpr& b) {
    return MotivicExpr{a.c1 + b.c1, a.cX + b.cX, a.cY + b.cY};
}

MotivicExpr operator-(const MotivicExpr& a, const MotivicExpr& b) {
    return MotivicExpr{a.c1 - b.c1, a.cX - b.cX, a.cY - b.cY};
}

MotivicExpr operator*(const MotivicExpr& a, const MotivicExpr& b) {
    if (a.is_scalar()) return MotivicExpr{a.c1 * b.c1, a.c1 * b.cX, a.c1 * b.cY};
    if (b.is_scalar()) return b * a;
    throw std::invalid_argument("product of two formal symbols is not defined in this module");
}

MotivicExpr scalar(const LPoly& p) { return MotivicExpr{p, {}, {}}; }
MotivicExpr symbol_X() { return MotivicExpr{{}, LPoly::constant(1), {}}; }
MotivicExpr symbol_Y() { return MotivicExpr{{}, {}, LPoly::constant(1)}; }

std::string MotivicExpr::str() const {
    if (c1.is_zero() && cX.is_zero() && cY.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const LPoly& p, const char* sym) {
        if (p.is_zero()) return;
        if (!first) out << " + ";
        out << "(" << p.str() << ")";
        if (*sym) out << "*" << sym;
        first = false;
    };
    emit(c1, "");
    emit(cX, "[X]");
    emit(cY, "[Y]");
    return out.str();
}

namespace {

LPoly lm(int d) { return LPoly::monomial(d); }
LPoly one() { return LPoly::constant(1); }

LPoly frame_factor() {  // (L^2-1)(L^2-L)
    return (lm(2) - one()) * (lm(2) - lm(1));
}

LPoly cofactor() {  // (L^2-1)(L-1)L^7
    return (lm(2) - one()) * (lm(1) - one()) * lm(7);
}

}  // namespace

MotivicExpr class_H_via_X() {
    return MotivicExpr{class_grassmannian(2, 7) * class_projective(5), lm(6), {}};
}

MotivicExpr class_tildeH_via_X() { return scalar(frame_factor()) * class_H_via_X(); }

MotivicExpr class_tildeH1() {
    LPoly fiber = (lm(3) - one()) * (lm(7) - lm(1)) + (lm(7) - lm(3)) * (lm(6) - lm(1));
    return MotivicExpr{{}, {}, fiber};
}

MotivicExpr class_tildeH2() {
    LPoly fiber = (lm(1) - one()) * (lm(7) - lm(1)) + (lm(7) - lm(1)) * (lm(6) - lm(1));
    return MotivicExpr{class_projective(6) * fiber, {}, -fiber};
}

MotivicExpr class_tildeH_via_Y() {
    return MotivicExpr{class_projective(6) * (lm(7) - lm(1)) * (lm(6) - one()), {}, cofactor()};
}

std::vector<SymbolicCheck> verify_symbolic() {
    std::vector<SymbolicCheck> checks;

    LPoly s1_lhs = class_grassmannian(2, 7) * frame_factor();
    LPoly s1_rhs = (lm(7) - one()) * (lm(7) - lm(1));
    checks.push_back({"S1", s1_lhs.str(), s1_rhs.str(), s1_lhs == s1_rhs});

    LPoly s2_lhs = class_projective(6) * (lm(6) - one());
    LPoly s2_rhs = class_projective(5) * (lm(7) - one());
    checks.push_back({"S2", s2_lhs.str(), s2_rhs.str(), s2_lhs == s2_rhs});

    MotivicExpr s3_lhs = class_tildeH1() + class_tildeH2();
    MotivicExpr s3_rhs = class_tildeH_via_Y();
    checks.push_back({"S3", s3_lhs.str(), s3_rhs.str(), s3_lhs == s3_rhs});

    MotivicExpr s4_lhs = class_tildeH_via_X() - class_tildeH_via_Y();
    MotivicExpr s4_rhs = MotivicExpr{{}, cofactor(), -cofactor()};
    checks.push_back({"S4", s4_lhs.str(), s4_rhs.str(), s4_lhs == s4_rhs});

    return checks;
}

}  // namespace cayley
