#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cayley/ffield.hpp"

namespace cayley {

// Everything here is fixed at n = 7: vectors live in F_p^7 and forms are
// 7x7 alternating bilinear forms.
inline constexpr int kDim = 7;
inline constexpr int kUpperCount = 21;

using Vec7 = std::array<uint8_t, kDim>;
using Mat7 = std::array<std::array<uint8_t, kDim>, kDim>;

// Coefficient order for the upper triangle, row-major:
// (0,1),(0,2),...,(0,6),(1,2),...,(5,6). All serialization depends on it.
extern const std::array<std::pair<uint8_t, uint8_t>, kUpperCount> kUpperPairs;

// index of pair (i,j), i < j, in kUpperPairs
int upper_index(int i, int j);

// An alternating bilinear form on F_p^7, stored as its 21 independent
// upper-triangle coefficients. The full matrix has zero diagonal and
// M[j][i] = -M[i][j]; over p = 2 that means zero diagonal and symmetry,
// which is the alternating condition proper, not mere skew-symmetry.
struct AlternatingForm {
    std::array<uint8_t, kUpperCount> upper{};

    friend bool operator==(const AlternatingForm& a, const AlternatingForm& b) = default;
};

// A 2-dimensional subspace of F_p^7 held as its unique reduced row echelon
// basis. Two Plane2 values are equal iff they are the same subspace.
struct Plane2 {
    std::array<Vec7, 2> rows{};
    std::array<uint8_t, 2> pivots{};

    friend bool operator==(const Plane2& a, const Plane2& b) = default;
};

Mat7 form_matrix(const FieldCtx& ctx, const AlternatingForm& w);

// w(v1, v2) = sum_{i<j} c_ij (v1_i v2_j - v1_j v2_i)
Fp form_eval(const FieldCtx& ctx, const AlternatingForm& w, const Vec7& v1, const Vec7& v2);

// Rank of the full 7x7 matrix by Gaussian elimination; always even.
int form_rank(const FieldCtx& ctx, const AlternatingForm& w);

// Basis of {v : w(v, .) = 0}, ordered by free column; size 7 - rank.
std::vector<Vec7> kernel_basis(const FieldCtx& ctx, const AlternatingForm& w);

// sum_k coeffs[k] * forms[k], coefficientwise. forms and coeffs must have
// equal length (at most 7).
AlternatingForm linear_combination(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                                   std::span<const uint8_t> coeffs);

// True iff w vanishes on the whole plane. For a 2-plane this reduces to
// w(r1, r2) = 0 on the canonical basis: a change of basis scales the value
// by the determinant of the change.
bool restrict_vanishes(const FieldCtx& ctx, const AlternatingForm& w, const Plane2& t);

// Canonical RREF representative of span(v1, v2); nullopt if dependent.
std::optional<Plane2> plane_from_span(const FieldCtx& ctx, const Vec7& v1, const Vec7& v2);

bool is_canonical_rref(const Plane2& t);

// Elimination helpers shared with the census scans.
int rank7(const FieldCtx& ctx, Mat7 m);
int rank_rows(const FieldCtx& ctx, std::span<std::array<uint8_t, kUpperCount>> rows);

}  // namespace cayley
