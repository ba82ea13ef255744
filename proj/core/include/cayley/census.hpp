#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/altform.hpp"
#include "cayley/ffield.hpp"

namespace cayley::census {

// ---------------------------------------------------------------------------
// Plane enumeration.
//
// Every 2-subspace of F_q^7 is visited exactly once as its canonical RREF
// basis: outer loop over pivot pairs (i, j) in lexicographic order, inner
// odometer over the free entries in row-major order, last entry fastest.
// Enumeration is a pure function of (q, index range), so any partition into
// contiguous ranges yields the same planes and the same counts.
// ---------------------------------------------------------------------------

struct PairLayout {
    uint8_t piv0 = 0, piv1 = 0;
    int nfree = 0;
    std::array<uint8_t, 11> free_row{};
    std::array<uint8_t, 11> free_col{};
    int64_t block_size = 0;  // q^nfree
    int64_t offset = 0;      // global index of the first plane in this block
};

std::array<PairLayout, kUpperCount> plane_layouts(uint32_t q);

// Total number of planes the enumeration visits (sum of block sizes).
int64_t plane_count(uint32_t q);

// fn(rows, piv0, piv1) for each plane with global index in [begin, end).
template <typename Fn>
void for_each_plane(uint32_t q, int64_t begin, int64_t end, Fn&& fn) {
    const auto layouts = plane_layouts(q);
    for (const PairLayout& L : layouts) {
        if (end <= L.offset || begin >= L.offset + L.block_size) continue;
        const int64_t lo = std::max<int64_t>(begin - L.offset, 0);
        const int64_t hi = std::min<int64_t>(end - L.offset, L.block_size);

        std::array<uint8_t, 11> digits{};
        int64_t rem = lo;
        for (int t = L.nfree - 1; t >= 0; --t) {
            digits[t] = static_cast<uint8_t>(rem % q);
            rem /= q;
        }

        std::array<Vec7, 2> rows;
        for (int64_t idx = lo; idx < hi; ++idx) {
            rows = {};
            rows[0][L.piv0] = 1;
            rows[1][L.piv1] = 1;
            for (int t = 0; t < L.nfree; ++t) rows[L.free_row[t]][L.free_col[t]] = digits[t];
            fn(static_cast<const std::array<Vec7, 2>&>(rows), L.piv0, L.piv1);
            for (int t = L.nfree - 1; t >= 0; --t) {
                if (++digits[t] < q) break;
                digits[t] = 0;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Projective point enumeration: one representative per point, first nonzero
// coordinate normalized to 1. Order: position of the leading 1 ascending,
// then the tail entries in lexicographic order, last entry fastest.
// ---------------------------------------------------------------------------

int64_t projective_count(uint32_t q, int dim);

template <typename Fn>
void for_each_projective_point(uint32_t q, int dim, Fn&& fn) {
    const int n = dim + 1;
    std::vector<uint8_t> coords(n, 0);
    for (int lead = 0; lead < n; ++lead) {
        std::fill(coords.begin(), coords.end(), 0);
        coords[lead] = 1;
        for (;;) {
            fn(std::span<const uint8_t>(coords.data(), n));
            int t = n - 1;
            for (; t > lead; --t) {
                if (++coords[t] < q) break;
                coords[t] = 0;
            }
            if (t == lead) break;
        }
    }
}

// ---------------------------------------------------------------------------
// W systems and genericity.
// ---------------------------------------------------------------------------

// An ordered basis of a 7-dimensional space W of alternating forms, with
// the (q, seed) provenance that reproduces it.
struct WSystem {
    uint32_t q = 0;
    uint64_t seed = 0;
    std::array<AlternatingForm, 7> forms{};
};

struct GenericityWitness {
    std::array<uint8_t, 7> coeffs{};  // projective combination violating the dichotomy
    int rank = 0;
};

// Verdict of the rank-dichotomy scan over all of PW. Genericity here means
// exactly: every nonzero combination has rank 4 or 6. Smoothness is not
// part of the certificate; the dichotomy is the precise hypothesis the
// fiber-counting identities consume.
struct GenericityResult {
    bool pass = false;
    std::map<int, int64_t> rank_histogram;
    std::optional<GenericityWitness> witness;
};

GenericityResult check_genericity(const FieldCtx& ctx, std::span<const AlternatingForm> forms);

struct SampleStats {
    int attempts = 0;
    std::map<std::string, int> rejected_for;
};

struct SampleExhausted : std::runtime_error {
    SampleExhausted(std::string msg, SampleStats s)
        : std::runtime_error(std::move(msg)), stats(std::move(s)) {}
    SampleStats stats;
};

// Draws 7x21 coefficient grids from SplitMix64(seed) until one spans a
// 7-dimensional W that passes the dichotomy scan. Deterministic: the same
// (q, seed) always yields the same W. Throws SampleExhausted after
// max_retries failed attempts.
WSystem sample_w(const FieldCtx& ctx, uint64_t seed, int max_retries, SampleStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Point counts. All counters are pure functions of (q, forms, index range);
// with workers > 1 the range is split into contiguous chunks whose partial
// sums are added in chunk order, so results are identical for any worker
// count and any chunking.
// ---------------------------------------------------------------------------

// Thrown when a brute-force counter is asked to run far beyond its design
// size (the double and triple loops are quadratic/cubic in q^7).
struct BruteForceRefused : std::domain_error {
    using std::domain_error::domain_error;
};

// Number of planes on which all of W vanishes. Tests the 7 basis forms
// only: vanishing is linear in w, so basis vanishing is equivalent to
// vanishing of every combination. Also reports the number of planes
// enumerated (the N1 left-hand side).
struct PlaneCensus {
    int64_t n_planes = 0;
    int64_t n_x = 0;
};
PlaneCensus count_x(const FieldCtx& ctx, std::span<const AlternatingForm> forms, int workers = 1);
PlaneCensus count_x_range(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                          int64_t begin, int64_t end, int workers);

// Number of points of PW whose form has rank < 6, plus the full rank
// histogram over PW.
struct YCensus {
    int64_t n_y = 0;
    std::map<int, int64_t> rank_histogram;
};
YCensus count_y(const FieldCtx& ctx, std::span<const AlternatingForm> forms);

// Pairs (plane, point of PW) whose form vanishes on the plane, by direct
// double loop. Refuses when q exceeds the ceiling (default 3: the loop is
// ~ #G * #P^6 pair evaluations).
int64_t count_h_brute(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                      int workers = 1, uint32_t q_ceiling = 3);

// Frame-bundle counts: triples (v1, v2, w) with v1, v2 independent,
// w in PW, w(v1, v2) = 0, stratified by w in Y and by v1 in Ker(w).
struct TildeCounts {
    int64_t n_th = 0;    // all triples
    int64_t n_th1 = 0;   // w in Y
    int64_t n_th2 = 0;   // w not in Y
    int64_t n_th11 = 0;  // w in Y, v1 in Ker(w)
    int64_t n_th12 = 0;  // w in Y, v1 not in Ker(w)

    friend bool operator==(const TildeCounts& a, const TildeCounts& b) = default;
};

// Pair-level count (q <= 7): for each w in PW, the kernel of w is computed
// by elimination and v1 is accounted by kernel membership (q^k - 1 kernel
// vectors, the rest outside); the admissible v2 for a fixed (w, v1) form
// V minus span(v1) when v1 is in the kernel (q^7 - q vectors) and a
// 6-dimensional hyperplane minus span(v1) otherwise (q^6 - q).
TildeCounts count_tilde_pairs(const FieldCtx& ctx, std::span<const AlternatingForm> forms);

// Triple-level brute force (q = 2 only): iterates every independent
// ordered pair (v1, v2) against every point of PW and classifies each
// vanishing triple individually.
TildeCounts count_tilde_triples(const FieldCtx& ctx, std::span<const AlternatingForm> forms);

// Materialized helpers (tests and small q).
std::vector<Plane2> planes_slice(uint32_t q, int64_t begin, int64_t end);
std::vector<std::array<uint8_t, 7>> projective_points(uint32_t q, int dim);

}  // namespace cayley::census
