#include "cayley/altform.hpp"

#include <stdexcept>

namespace cayley {

namespace {

constexpr std::array<std::pair<uint8_t, uint8_t>, kUpperCount> make_upper_pairs() {
    std::array<std::pair<uint8_t, uint8_t>, kUpperCount> pairs{};
    int t = 0;
    for (uint8_t i = 0; i < kDim; ++i)
        for (uint8_t j = i + 1; j < kDim; ++j) pairs[t++] = {i, j};
    return pairs;
}

}  // namespace

const std::array<std::pair<uint8_t, uint8_t>, kUpperCount> kUpperPairs = make_upper_pairs();

int upper_index(int i, int j) {
    // row-major offset into the strict upper triangle
    return i * kDim - i * (i + 1) / 2 + (j - i - 1);
}

Mat7 form_matrix(const FieldCtx& ctx, const AlternatingForm& w) {
    Mat7 m{};
    for (int t = 0; t < kUpperCount; ++t) {
        auto [i, j] = kUpperPairs[t];
        m[i][j] = w.upper[t];
        m[j][i] = static_cast<uint8_t>(ctx.neg_raw(w.upper[t]));
    }
    return m;
}

Fp form_eval(const FieldCtx& ctx, const AlternatingForm& w, const Vec7& v1, const Vec7& v2) {
    uint32_t p = ctx.p();
    uint32_t acc = 0;
    for (int t = 0; t < kUpperCount; ++t) {
        auto [i, j] = kUpperPairs[t];
        // minor v1_i v2_j - v1_j v2_i, kept nonnegative before reduction
        uint32_t minor = static_cast<uint32_t>(v1[i]) * v2[j] + p * p -
                         static_cast<uint32_t>(v1[j]) * v2[i];
        acc += static_cast<uint32_t>(w.upper[t]) * (minor % p);
    }
    return Fp{static_cast<uint16_t>(acc % p), static_cast<uint16_t>(p)};
}

namespace {

// Reduce m to row echelon form in place; returns (rank, pivot columns).
// Row space is preserved, so this backs both rank and kernel extraction.
struct Echelon {
    int rank;
    std::array<int8_t, kDim> pivot_col;  // pivot column of row r, -1 past rank
};

Echelon echelonize(const FieldCtx& ctx, Mat7& m) {
    Echelon e{0, {}};
    e.pivot_col.fill(-1);
    int row = 0;
    for (int col = 0; col < kDim && row < kDim; ++col) {
        int sel = -1;
        for (int r = row; r < kDim; ++r)
            if (m[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        uint32_t inv = ctx.inv_raw(m[row][col]);
        for (int c = col; c < kDim; ++c) m[row][c] = static_cast<uint8_t>(ctx.mul_raw(m[row][c], inv));
        for (int r = 0; r < kDim; ++r) {
            if (r == row || m[r][col] == 0) continue;
            uint32_t f = m[r][col];
            for (int c = col; c < kDim; ++c)
                m[r][c] = static_cast<uint8_t>(ctx.sub_raw(m[r][c], ctx.mul_raw(f, m[row][c])));
        }
        e.pivot_col[row] = static_cast<int8_t>(col);
        ++row;
    }
    e.rank = row;
    return e;
}

}  // namespace

int rank7(const FieldCtx& ctx, Mat7 m) { return echelonize(ctx, m).rank; }

int form_rank(const FieldCtx& ctx, const AlternatingForm& w) {
    Mat7 m = form_matrix(ctx, w);
    return rank7(ctx, m);
}

std::vector<Vec7> kernel_basis(const FieldCtx& ctx, const AlternatingForm& w) {
    // Right kernel of M; since M^T = -M the left and right kernels agree,
    // so each basis vector v satisfies w(v, .) = 0.
    Mat7 m = form_matrix(ctx, w);
    Echelon e = echelonize(ctx, m);

    std::array<bool, kDim> is_pivot{};
    for (int r = 0; r < e.rank; ++r) is_pivot[e.pivot_col[r]] = true;

    std::vector<Vec7> basis;
    basis.reserve(kDim - e.rank);
    for (int f = 0; f < kDim; ++f) {
        if (is_pivot[f]) continue;
        Vec7 v{};
        v[f] = 1;
        for (int r = 0; r < e.rank; ++r)
            v[e.pivot_col[r]] = static_cast<uint8_t>(ctx.neg_raw(m[r][f]));
        basis.push_back(v);
    }
    return basis;
}

AlternatingForm linear_combination(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                                   std::span<const uint8_t> coeffs) {
    if (forms.size() != coeffs.size() || forms.empty() || forms.size() > kDim)
        throw std::invalid_argument("linear_combination: need 1..7 forms with matching coefficients");
    uint32_t p = ctx.p();
    AlternatingForm out;
    for (int t = 0; t < kUpperCount; ++t) {
        uint32_t acc = 0;
        for (size_t k = 0; k < forms.size(); ++k)
            acc += static_cast<uint32_t>(coeffs[k]) * forms[k].upper[t];
        out.upper[t] = static_cast<uint8_t>(acc % p);
    }
    return out;
}

bool restrict_vanishes(const FieldCtx& ctx, const AlternatingForm& w, const Plane2& t) {
    return form_eval(ctx, w, t.rows[0], t.rows[1]).value == 0;
}

std::optional<Plane2> plane_from_span(const FieldCtx& ctx, const Vec7& v1, const Vec7& v2) {
    std::array<Vec7, 2> rows = {v1, v2};
    int row = 0;
    std::array<uint8_t, 2> pivots{};
    for (int col = 0; col < kDim && row < 2; ++col) {
        int sel = -1;
        for (int r = row; r < 2; ++r)
            if (rows[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[row]);
        uint32_t inv = ctx.inv_raw(rows[row][col]);
        for (int c = 0; c < kDim; ++c) rows[row][c] = static_cast<uint8_t>(ctx.mul_raw(rows[row][c], inv));
        for (int r = 0; r < 2; ++r) {
            if (r == row || rows[r][col] == 0) continue;
            uint32_t f = rows[r][col];
            for (int c = 0; c < kDim; ++c)
                rows[r][c] = static_cast<uint8_t>(ctx.sub_raw(rows[r][c], ctx.mul_raw(f, rows[row][c])));
        }
        pivots[row] = static_cast<uint8_t>(col);
        ++row;
    }
    if (row != 2) return std::nullopt;
    return Plane2{rows, pivots};
}

bool is_canonical_rref(const Plane2& t) {
    auto [i, j] = std::pair{t.pivots[0], t.pivots[1]};
    if (i >= j || j >= kDim) return false;
    for (int c = 0; c < kDim; ++c) {
        if (c < i && t.rows[0][c] != 0) return false;
        if (c < j && t.rows[1][c] != 0) return false;
    }
    return t.rows[0][i] == 1 && t.rows[1][j] == 1 && t.rows[0][j] == 0 && t.rows[1][i] == 0;
}

int rank_rows(const FieldCtx& ctx, std::span<std::array<uint8_t, kUpperCount>> rows) {
    size_t nrows = rows.size();
    int rank = 0;
    for (int col = 0; col < kUpperCount && rank < static_cast<int>(nrows); ++col) {
        int sel = -1;
        for (size_t r = rank; r < nrows; ++r)
            if (rows[r][col] != 0) { sel = static_cast<int>(r); break; }
        if (sel < 0) continue;
        std::swap(rows[sel], rows[rank]);
        uint32_t inv = ctx.inv_raw(rows[rank][col]);
        for (int c = col; c < kUpperCount; ++c)
            rows[rank][c] = static_cast<uint8_t>(ctx.mul_raw(rows[rank][c], inv));
        for (size_t r = 0; r < nrows; ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            uint32_t f = rows[r][col];
            for (int c = col; c < kUpperCount; ++c)
                rows[r][c] = static_cast<uint8_t>(ctx.sub_raw(rows[r][c], ctx.mul_raw(f, rows[rank][c])));
        }
        ++rank;
    }
    return rank;
}

}  // namespace cayley
