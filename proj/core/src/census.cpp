#include "cayley/census.hpp"

#include <thread>
#include <utility>

#include "cayley/checked.hpp"
#include "cayley/splitmix.hpp"

namespace cayley::census {

std::array<PairLayout, kUpperCount> plane_layouts(uint32_t q) {
    std::array<PairLayout, kUpperCount> out{};
    int64_t offset = 0;
    for (int t = 0; t < kUpperCount; ++t) {
        auto [i, j] = kUpperPairs[t];
        PairLayout& L = out[t];
        L.piv0 = i;
        L.piv1 = j;
        // Free entries of the RREF matrix with pivots (i, j): row 0 owns the
        // columns right of i except the pivot column j, row 1 owns the
        // columns right of j.
        for (int c = i + 1; c < kDim; ++c)
            if (c != j) {
                L.free_row[L.nfree] = 0;
                L.free_col[L.nfree] = static_cast<uint8_t>(c);
                ++L.nfree;
            }
        for (int c = j + 1; c < kDim; ++c) {
            L.free_row[L.nfree] = 1;
            L.free_col[L.nfree] = static_cast<uint8_t>(c);
            ++L.nfree;
        }
        L.block_size = 1;
        for (int f = 0; f < L.nfree; ++f) L.block_size = checked_mul64(L.block_size, q);
        L.offset = offset;
        offset = checked_add64(offset, L.block_size);
    }
    return out;
}

int64_t plane_count(uint32_t q) {
    const auto layouts = plane_layouts(q);
    const PairLayout& last = layouts.back();
    return last.offset + last.block_size;
}

int64_t projective_count(uint32_t q, int dim) {
    int64_t total = 0;
    int64_t power = 1;  // q^k
    for (int k = 0; k <= dim; ++k) {
        total = checked_add64(total, power);
        power = checked_mul64(power, q);
    }
    return total;
}

std::vector<Plane2> planes_slice(uint32_t q, int64_t begin, int64_t end) {
    std::vector<Plane2> out;
    if (end > begin) out.reserve(static_cast<size_t>(end - begin));
    for_each_plane(q, begin, end, [&](const std::array<Vec7, 2>& rows, uint8_t p0, uint8_t p1) {
        out.push_back(Plane2{rows, {p0, p1}});
    });
    return out;
}

std::vector<std::array<uint8_t, 7>> projective_points(uint32_t q, int dim) {
    std::vector<std::array<uint8_t, 7>> out;
    out.reserve(static_cast<size_t>(projective_count(q, dim)));
    for_each_projective_point(q, dim, [&](std::span<const uint8_t> coords) {
        std::array<uint8_t, 7> v{};
        std::copy(coords.begin(), coords.end(), v.begin());
        out.push_back(v);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Genericity and sampling.
// ---------------------------------------------------------------------------

namespace {

// Combined forms for every point of PW, in enumeration order.
std::vector<AlternatingForm> projective_span(const FieldCtx& ctx,
                                             std::span<const AlternatingForm> forms) {
    if (forms.empty() || forms.size() > static_cast<size_t>(kDim))
        throw std::invalid_argument("census: need 1..7 spanning forms");
    std::vector<AlternatingForm> out;
    out.reserve(static_cast<size_t>(projective_count(ctx.p(), static_cast<int>(forms.size()) - 1)));
    for_each_projective_point(ctx.p(), static_cast<int>(forms.size()) - 1,
                              [&](std::span<const uint8_t> coords) {
                                  out.push_back(linear_combination(ctx, forms, coords));
                              });
    return out;
}

}  // namespace

GenericityResult check_genericity(const FieldCtx& ctx, std::span<const AlternatingForm> forms) {
    if (forms.empty() || forms.size() > static_cast<size_t>(kDim))
        throw std::invalid_argument("census: need 1..7 spanning forms");
    GenericityResult res;
    res.pass = true;
    for_each_projective_point(ctx.p(), static_cast<int>(forms.size()) - 1,
                              [&](std::span<const uint8_t> coords) {
                                  AlternatingForm w = linear_combination(ctx, forms, coords);
                                  int r = form_rank(ctx, w);
                                  ++res.rank_histogram[r];
                                  if (r != 4 && r != 6 && !res.witness) {
                                      res.pass = false;
                                      GenericityWitness wit;
                                      std::copy(coords.begin(), coords.end(), wit.coeffs.begin());
                                      wit.rank = r;
                                      res.witness = wit;
                                  }
                              });
    return res;
}

WSystem sample_w(const FieldCtx& ctx, uint64_t seed, int max_retries, SampleStats* stats) {
    if (max_retries < 1) throw std::invalid_argument("sample_w: max_retries must be >= 1");
    SplitMix64 rng(seed);
    SampleStats local;
    SampleStats& st = stats ? *stats : local;
    st = SampleStats{};
    std::string last_reason = "none";

    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ++st.attempts;
        WSystem w;
        w.q = ctx.p();
        w.seed = seed;
        for (auto& form : w.forms)
            for (auto& c : form.upper) c = static_cast<uint8_t>(rng.next_mod(ctx.p()));

        std::array<std::array<uint8_t, kUpperCount>, 7> coeff_rows{};
        for (int k = 0; k < kDim; ++k) coeff_rows[k] = w.forms[k].upper;
        if (rank_rows(ctx, coeff_rows) != kDim) {
            last_reason = "dependent";
            ++st.rejected_for[last_reason];
            continue;
        }

        GenericityResult gen = check_genericity(ctx, w.forms);
        if (!gen.pass) {
            last_reason = "rank" + std::to_string(gen.witness->rank);
            ++st.rejected_for[last_reason];
            continue;
        }
        return w;
    }
    throw SampleExhausted("sample_w: no generic system after " + std::to_string(st.attempts) +
                              " attempts (last rejection: " + last_reason + ")",
                          st);
}

// ---------------------------------------------------------------------------
// Counting.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<int64_t, int64_t>> split_range(int64_t begin, int64_t end, int workers) {
    if (workers < 1) workers = 1;
    const int64_t len = end > begin ? end - begin : 0;
    if (static_cast<int64_t>(workers) > len && len > 0) workers = static_cast<int>(len);
    if (len == 0) workers = 1;
    std::vector<std::pair<int64_t, int64_t>> out;
    out.reserve(static_cast<size_t>(workers));
    for (int k = 0; k < workers; ++k)
        out.emplace_back(begin + len * k / workers, begin + len * (k + 1) / workers);
    return out;
}

// Partial counts are produced per contiguous chunk and then added in chunk
// order, so totals cannot depend on thread count or scheduling.
template <typename Part, typename ChunkFn>
std::vector<Part> run_chunks(std::span<const std::pair<int64_t, int64_t>> ranges, ChunkFn fn) {
    std::vector<Part> parts(ranges.size());
    if (ranges.size() == 1) {
        parts[0] = fn(ranges[0].first, ranges[0].second);
        return parts;
    }
    std::vector<std::thread> pool;
    pool.reserve(ranges.size());
    for (size_t k = 0; k < ranges.size(); ++k)
        pool.emplace_back([&parts, &ranges, &fn, k] { parts[k] = fn(ranges[k].first, ranges[k].second); });
    for (auto& th : pool) th.join();
    return parts;
}

PlaneCensus count_x_chunk(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                          int64_t begin, int64_t end) {
    const uint32_t p = ctx.p();
    const uint32_t p2 = p * p;
    const size_t nf = forms.size();
    PlaneCensus out;
    for_each_plane(p, begin, end, [&](const std::array<Vec7, 2>& rows, uint8_t, uint8_t) {
        ++out.n_planes;
        const Vec7& r0 = rows[0];
        const Vec7& r1 = rows[1];
        // The 21 Pluecker minors of the plane, each congruent mod p to the
        // true minor; kept unreduced (p2 offset keeps them nonnegative) so
        // the whole test is one modulo per form.
        uint32_t minors[kUpperCount];
        for (int t = 0; t < kUpperCount; ++t) {
            auto [i, j] = kUpperPairs[t];
            minors[t] =
                static_cast<uint32_t>(r0[i]) * r1[j] + p2 - static_cast<uint32_t>(r0[j]) * r1[i];
        }
        for (size_t k = 0; k < nf; ++k) {
            const auto& u = forms[k].upper;
            uint32_t acc = 0;
            for (int t = 0; t < kUpperCount; ++t) acc += static_cast<uint32_t>(u[t]) * minors[t];
            if (acc % p != 0) return;  // some basis form is nonzero on the plane
        }
        ++out.n_x;
    });
    return out;
}

}  // namespace

PlaneCensus count_x_range(const FieldCtx& ctx, std::span<const AlternatingForm> forms,
                          int64_t begin, int64_t end, int workers) {
    if (forms.empty() || forms.size() > static_cast<size_t>(kDim))
        throw std::invalid_argument("census: need 1..7 spanning forms");
    const auto ranges = split_range(begin, end, workers);
    auto parts = run_chunks<PlaneCensus>(
        ranges, [&](int64_t lo, int64_t hi) { return count_x_chunk(ctx, forms, lo, hi); });
    PlaneCensus total;
    for (const PlaneCensus& part : parts) {
        total.n_planes = checked_add64(total.n_planes, part.n_planes);
        total.n_x = checked_add64(total.n_x, part.n_x);
    }
    return total;
}

PlaneCensus count_x(const FieldCtx& ctx, std::span<const AlternatingForm> forms, int workers) {
    return count_x_range(ctx, forms, 0, plane_count(ctx.p()), workers);
}

YCensus count_y(const FieldCtx& ctx, std::span<const AlternatingForm> forms) {
    if (forms.empty() || forms.size() > static_cast<size_t>(kDim))
        throw std::invalid_argument("census: need 1..7 spanning forms");
    YCensus out;
    for_each_projective_point(ctx.p(), static_cast<int>(forms.size()) - 1,
                              [&](std::span<const uint8_t> coords) {
                                  AlternatingForm w = linear_combination(ctx, forms, coords);
                                  int r = form_rank(ctx, w);
                                  ++out.rank_histogram[r];
                                  if (r < 6) ++out.n_y;
                              });
    return out;
}

int64_t count_h_brute(const FieldCtx& ctx, std::span<const AlternatingForm> forms, int workers,
                      uint32_t q_ceiling) {
    const uint32_t p = ctx.p();
    if (p > q_ceiling)
        throw BruteForceRefused("count_h_brute: q=" + std::to_string(p) +
                                " exceeds the brute-force ceiling " + std::to_string(q_ceiling));
    const std::vector<AlternatingForm> reps = projective_span(ctx, forms);
    const uint32_t p2 = p * p;

    auto chunk = [&](int64_t lo, int64_t hi) {
        int64_t pairs = 0;
        for_each_plane(p, lo, hi, [&](const std::array<Vec7, 2>& rows, uint8_t, uint8_t) {
            const Vec7& r0 = rows[0];
            const Vec7& r1 = rows[1];
            uint32_t minors[kUpperCount];
            for (int t = 0; t < kUpperCount; ++t) {
                auto [i, j] = kUpperPairs[t];
                minors[t] =
                    static_cast<uint32_t>(r0[i]) * r1[j] + p2 - static_cast<uint32_t>(r0[j]) * r1[i];
            }
            for (const AlternatingForm& w : reps) {
                uint32_t acc = 0;
                for (int t = 0; t < kUpperCount; ++t)
                    acc += static_cast<uint32_t>(w.upper[t]) * minors[t];
                if (acc % p == 0) ++pairs;
            }
        });
        return pairs;
    };

    const auto ranges = split_range(0, plane_count(p), workers);
    auto parts = run_chunks<int64_t>(ranges, chunk);
    int64_t total = 0;
    for (int64_t part : parts) total = checked_add64(total, part);
    return total;
}

TildeCounts count_tilde_pairs(const FieldCtx& ctx, std::span<const AlternatingForm> forms) {
    const uint32_t p = ctx.p();
    if (p > 7)
        throw BruteForceRefused("count_tildeH pair-level: q=" + std::to_string(p) +
                                " exceeds the pair-level ceiling 7");
    int64_t qp[kDim + 1];
    qp[0] = 1;
    for (int k = 1; k <= kDim; ++k) qp[k] = qp[k - 1] * p;
    const int64_t n_nonzero = qp[7] - 1;
    const int64_t v2_kernel = qp[7] - p;  // v1 in Ker(w): any v2 outside span(v1)
    const int64_t v2_other = qp[6] - p;   // else: the hyperplane w(v1,.)=0 minus span(v1)

    TildeCounts tc;
    for_each_projective_point(
        ctx.p(), static_cast<int>(forms.size()) - 1, [&](std::span<const uint8_t> coords) {
            AlternatingForm w = linear_combination(ctx, forms, coords);
            int r = form_rank(ctx, w);
            const int64_t n_kernel = qp[kDim - r] - 1;  // nonzero kernel vectors
            const int64_t via_kernel = checked_mul64(n_kernel, v2_kernel);
            const int64_t via_other = checked_mul64(n_nonzero - n_kernel, v2_other);
            if (r < 6) {
                tc.n_th11 = checked_add64(tc.n_th11, via_kernel);
                tc.n_th12 = checked_add64(tc.n_th12, via_other);
            } else {
                tc.n_th2 = checked_add64(tc.n_th2, checked_add64(via_kernel, via_other));
            }
        });
    tc.n_th1 = checked_add64(tc.n_th11, tc.n_th12);
    tc.n_th = checked_add64(tc.n_th1, tc.n_th2);
    return tc;
}

TildeCounts count_tilde_triples(const FieldCtx& ctx, std::span<const AlternatingForm> forms) {
    if (ctx.p() != 2)
        throw BruteForceRefused("count_tildeH triple-brute: supported at q=2 only");
    const std::vector<AlternatingForm> reps = projective_span(ctx, forms);
    // Over F_2 every nonzero vector is its own projective representative,
    // and independence of (v1, v2) means v2 != 0 and v2 != v1.
    const std::vector<std::array<uint8_t, 7>> vecs = projective_points(2, kDim - 1);

    TildeCounts tc;
    for (const AlternatingForm& w : reps) {
        const Mat7 m = form_matrix(ctx, w);
        const bool in_y = form_rank(ctx, w) < 6;
        for (const auto& v1 : vecs) {
            // b = v1^T M, so w(v1, v2) = b . v2
            std::array<uint8_t, kDim> b{};
            bool in_kernel = true;
            for (int j = 0; j < kDim; ++j) {
                uint32_t acc = 0;
                for (int i = 0; i < kDim; ++i) acc += static_cast<uint32_t>(v1[i]) * m[i][j];
                b[j] = static_cast<uint8_t>(acc & 1u);
                if (b[j]) in_kernel = false;
            }
            for (const auto& v2 : vecs) {
                if (v2 == v1) continue;
                uint32_t acc = 0;
                for (int j = 0; j < kDim; ++j) acc += static_cast<uint32_t>(b[j]) * v2[j];
                if (acc & 1u) continue;
                ++tc.n_th;
                if (in_y) {
                    ++tc.n_th1;
                    if (in_kernel)
                        ++tc.n_th11;
                    else
                        ++tc.n_th12;
                } else {
                    ++tc.n_th2;
                }
            }
        }
    }
    return tc;
}

}  // namespace cayley::census
