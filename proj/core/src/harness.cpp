#include "cayley/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "json.hpp"

#include "cayley/checked.hpp"
#include "cayley/lpoly.hpp"
#include "cayley/motivic.hpp"
#include "cayley/version.hpp"

namespace cayley::harness {

namespace {

using nlohmann::ordered_json;

constexpr const char* kCoeffOrder = "upper-row-major-(1,2)..(6,7)";

struct Stopwatch {
    std::chrono::steady_clock::time_point t = std::chrono::steady_clock::now();

    int64_t lap() {
        auto now = std::chrono::steady_clock::now();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - t).count();
        t = now;
        return static_cast<int64_t>(ms);
    }
};

int64_t pow_i64(uint32_t q, int e) {
    int64_t r = 1;
    for (int k = 0; k < e; ++k) r = checked_mul64(r, static_cast<int64_t>(q));
    return r;
}

std::string dec(i128 v) { return cayley::to_string(v); }
std::string dec64(int64_t v) { return std::to_string(v); }

std::string render_tilde(const census::TildeCounts& t) {
    return "tH=" + dec64(t.n_th) + " tH1=" + dec64(t.n_th1) + " tH2=" + dec64(t.n_th2) +
           " tH11=" + dec64(t.n_th11) + " tH12=" + dec64(t.n_th12);
}

std::string render_plane_census(const census::PlaneCensus& c) {
    return "planes=" + dec64(c.n_planes) + " x=" + dec64(c.n_x);
}

}  // namespace

bool Report::verdict() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string Report::to_json() const {
    ordered_json j;
    j["mode"] = mode;
    if (q) j["q"] = *q;
    if (seed) j["seed"] = std::to_string(*seed);
    j["version"] = version;
    if (mode == "numeric") {
        ordered_json c = ordered_json::object();
        auto put = [&](const char* key, const std::optional<int64_t>& v) {
            if (v) c[key] = std::to_string(*v);
        };
        put("n_G", counts.n_G);
        put("n_P6", counts.n_P6);
        put("n_P5", counts.n_P5);
        put("n_X", counts.n_X);
        put("n_Y", counts.n_Y);
        put("n_H", counts.n_H);
        put("n_tH", counts.n_tH);
        put("n_tH1", counts.n_tH1);
        put("n_tH2", counts.n_tH2);
        put("n_tH11", counts.n_tH11);
        put("n_tH12", counts.n_tH12);
        ordered_json hist = ordered_json::object();
        for (const auto& [rank, n] : counts.rank_histogram) hist[std::to_string(rank)] = std::to_string(n);
        c["rank_histogram"] = hist;
        j["counts"] = c;
    }
    ordered_json ck = ordered_json::array();
    for (const CheckResult& c : checks)
        ck.push_back(ordered_json{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    j["checks"] = ck;
    if (sampling) {
        ordered_json s = ordered_json::object();
        s["attempts"] = sampling->attempts;
        ordered_json rf = ordered_json::object();
        for (const auto& [reason, n] : sampling->rejected_for) rf[reason] = n;
        s["rejected_for"] = rf;
        j["sampling"] = s;
    }
    ordered_json tm = ordered_json::object();
    if (emit_timing)
        for (const auto& [phase, ms] : timing_ms) tm[phase] = ms;
    j["timing_ms"] = tm;
    return j.dump(2) + "\n";
}

Report run_symbolic() {
    Report rep;
    rep.mode = "symbolic";
    rep.version = kVersion;
    Stopwatch sw;
    for (const SymbolicCheck& c : verify_symbolic()) rep.checks.push_back({c.name, c.lhs, c.rhs, c.pass});
    rep.timing_ms.emplace_back("checks", sw.lap());
    return rep;
}

namespace {

void require_supported_q(uint32_t q) {
    if (!is_prime(q)) throw std::invalid_argument("q=" + std::to_string(q) + " is not prime");
    static constexpr uint32_t kAllowed[] = {2, 3, 5, 7, 11, 13};
    if (std::find(std::begin(kAllowed), std::end(kAllowed), q) == std::end(kAllowed))
        throw std::invalid_argument("q must be one of 2, 3, 5, 7, 11, 13");
}

}  // namespace

Report run_numeric(const NumericOptions& opt) {
    require_supported_q(opt.q);
    if (opt.q >= 7 && !opt.long_run)
        throw std::invalid_argument("q >= 7 enumerates 3.4e8+ planes (minutes to hours); pass --long to confirm");
    if (opt.workers < 1) throw std::invalid_argument("workers must be >= 1");

    const FieldCtx ctx(opt.q);
    const uint32_t q = opt.q;

    Report rep;
    rep.mode = "numeric";
    rep.q = q;
    rep.seed = opt.seed;
    rep.version = kVersion;
    rep.emit_timing = opt.emit_timing;

    Stopwatch sw;

    census::SampleStats stats;
    const census::WSystem w = census::sample_w(ctx, opt.seed, opt.max_retries, &stats);
    rep.sampling = stats;
    rep.timing_ms.emplace_back("sample", sw.lap());

    // Re-scan once for the certificate histogram that goes into the report
    // (sample_w certified but does not keep the histogram).
    const census::GenericityResult gen = census::check_genericity(ctx, w.forms);
    rep.counts.rank_histogram = gen.rank_histogram;
    rep.timing_ms.emplace_back("genericity", sw.lap());

    if (!opt.save_w_path.empty()) save_w(w, gen.rank_histogram, opt.save_w_path);

    const std::span<const AlternatingForm> forms(w.forms);
    const bool full = opt.level == Level::full;

    const census::PlaneCensus planes = census::count_x(ctx, forms, opt.workers);
    rep.counts.n_G = planes.n_planes;
    rep.counts.n_X = planes.n_x;
    rep.timing_ms.emplace_back("count_x", sw.lap());

    const census::YCensus y = census::count_y(ctx, forms);
    rep.counts.n_Y = y.n_y;
    rep.timing_ms.emplace_back("count_y", sw.lap());

    rep.counts.n_P6 = census::projective_count(q, 6);
    rep.counts.n_P5 = census::projective_count(q, 5);

    std::optional<census::TildeCounts> tilde;
    if (q <= 7) {
        tilde = census::count_tilde_pairs(ctx, forms);
        rep.counts.n_tH = tilde->n_th;
        rep.counts.n_tH1 = tilde->n_th1;
        rep.counts.n_tH2 = tilde->n_th2;
        rep.counts.n_tH11 = tilde->n_th11;
        rep.counts.n_tH12 = tilde->n_th12;
        rep.timing_ms.emplace_back("tilde_pairs", sw.lap());
    }

    std::optional<int64_t> h_brute;
    if (full && q <= 3) {
        h_brute = census::count_h_brute(ctx, forms, opt.workers);
        rep.counts.n_H = *h_brute;
        rep.timing_ms.emplace_back("h_brute", sw.lap());
    }

    std::optional<census::TildeCounts> tilde3;
    if (full && q == 2) {
        tilde3 = census::count_tilde_triples(ctx, forms);
        rep.timing_ms.emplace_back("tilde_triples", sw.lap());
    }

    // Determinism probe (N7): identical subrange, single worker vs a forced
    // multi-chunk split.
    const int64_t probe_end = std::min<int64_t>(census::plane_count(q), 100000);
    const census::PlaneCensus probe_one = census::count_x_range(ctx, forms, 0, probe_end, 1);
    const census::PlaneCensus probe_many =
        census::count_x_range(ctx, forms, 0, probe_end, std::max(opt.workers, 3));
    rep.timing_ms.emplace_back("probe", sw.lap());

    auto add = [&](const char* name, std::string lhs, std::string rhs, bool pass) {
        rep.checks.push_back({name, std::move(lhs), std::move(rhs), pass});
    };

    const i128 q6 = pow_i64(q, 6);
    const i128 q7 = pow_i64(q, 7);
    const i128 h_formula =
        checked_add(checked_mul(static_cast<i128>(planes.n_planes), static_cast<i128>(*rep.counts.n_P5)),
                    checked_mul(static_cast<i128>(planes.n_x), q6));

    // N1: enumerated planes match the Gaussian binomial.
    const i128 gauss = class_grassmannian(2, 7).eval_at(q);
    add("N1", dec64(planes.n_planes), dec(gauss), static_cast<i128>(planes.n_planes) == gauss);

    // N2: brute H census matches n_G*n_P5 + n_X*q^6.
    if (full && q <= 3) add("N2", dec64(*h_brute), dec(h_formula), static_cast<i128>(*h_brute) == h_formula);

    // N3: frame bundle is H times (q^2-1)(q^2-q).
    if (full && q <= 7) {
        const i128 frame = checked_mul(static_cast<i128>(q) * q - 1, static_cast<i128>(q) * q - q);
        const i128 rhs = checked_mul(h_formula, frame);
        const int64_t lhs = (q == 2 ? tilde3 : tilde)->n_th;
        add("N3", dec64(lhs), dec(rhs), static_cast<i128>(lhs) == rhs);
    }

    // N4: stratum over Y with its closed-form fiber count.
    if (q <= 7) {
        const i128 q3 = pow_i64(q, 3);
        const i128 fiber = checked_add(checked_mul(q3 - 1, q7 - q), checked_mul(q7 - q3, q6 - q));
        const i128 rhs = checked_mul(static_cast<i128>(y.n_y), fiber);
        add("N4", dec64(tilde->n_th1), dec(rhs), static_cast<i128>(tilde->n_th1) == rhs);
    }

    // N5: stratum over the rank-6 locus.
    if (q <= 7) {
        const i128 fiber = checked_add(checked_mul(static_cast<i128>(q) - 1, q7 - q),
                                       checked_mul(q7 - q, q6 - q));
        const i128 rhs = checked_mul(static_cast<i128>(*rep.counts.n_P6 - y.n_y), fiber);
        add("N5", dec64(tilde->n_th2), dec(rhs), static_cast<i128>(tilde->n_th2) == rhs);
    }

    // N6: the zero-divisor identity forces the two point counts to agree.
    add("N6", dec64(planes.n_x), dec64(y.n_y), planes.n_x == y.n_y);

    // N7: worker-count independence on the probe range.
    add("N7", render_plane_census(probe_many), render_plane_census(probe_one),
        probe_many.n_planes == probe_one.n_planes && probe_many.n_x == probe_one.n_x);

    // N8: pair-level aggregation vs honest triple loop.
    if (full && q == 2)
        add("N8", render_tilde(*tilde), render_tilde(*tilde3), *tilde == *tilde3);

    rep.timing_ms.emplace_back("checks", sw.lap());
    return rep;
}

Report run_count(uint32_t q, const std::string& w_path, int workers) {
    require_supported_q(q);
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");

    const census::WSystem w = load_w(w_path);
    if (w.q != q)
        throw LoadError("q mismatch: file stores q=" + std::to_string(w.q) + ", requested q=" +
                        std::to_string(q));
    const FieldCtx ctx(q);

    Report rep;
    rep.mode = "numeric";
    rep.q = q;
    rep.seed = w.seed;
    rep.version = kVersion;

    Stopwatch sw;
    const std::span<const AlternatingForm> forms(w.forms);

    const census::PlaneCensus planes = census::count_x(ctx, forms, workers);
    rep.counts.n_G = planes.n_planes;
    rep.counts.n_X = planes.n_x;
    rep.timing_ms.emplace_back("count_x", sw.lap());

    const census::YCensus y = census::count_y(ctx, forms);
    rep.counts.n_Y = y.n_y;
    rep.counts.rank_histogram = y.rank_histogram;
    rep.timing_ms.emplace_back("count_y", sw.lap());

    rep.counts.n_P6 = census::projective_count(q, 6);
    rep.counts.n_P5 = census::projective_count(q, 5);

    if (q <= 7) {
        const census::TildeCounts tilde = census::count_tilde_pairs(ctx, forms);
        rep.counts.n_tH = tilde.n_th;
        rep.counts.n_tH1 = tilde.n_th1;
        rep.counts.n_tH2 = tilde.n_th2;
        rep.counts.n_tH11 = tilde.n_th11;
        rep.counts.n_tH12 = tilde.n_th12;
        rep.timing_ms.emplace_back("tilde_pairs", sw.lap());
    }
    if (q <= 3) {
        rep.counts.n_H = census::count_h_brute(ctx, forms, workers);
        rep.timing_ms.emplace_back("h_brute", sw.lap());
    }
    return rep;
}

void save_w(const census::WSystem& w, const std::map<int, int64_t>& rank_histogram,
            const std::string& path) {
    ordered_json j;
    j["q"] = w.q;
    j["seed"] = std::to_string(w.seed);
    j["coeff_order"] = kCoeffOrder;
    ordered_json grid = ordered_json::array();
    for (const AlternatingForm& f : w.forms) {
        ordered_json row = ordered_json::array();
        for (uint8_t c : f.upper) row.push_back(static_cast<int>(c));
        grid.push_back(row);
    }
    j["forms"] = grid;
    ordered_json hist = ordered_json::object();
    for (const auto& [rank, n] : rank_histogram) hist[std::to_string(rank)] = n;
    j["rank_histogram"] = hist;

    std::ofstream out(path);
    if (!out) throw LoadError("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
    out.flush();
    if (!out) throw LoadError("write failed: " + path);
}

census::WSystem load_w(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open: " + path);

    census::WSystem w;
    std::map<int, int64_t> stored_hist;
    try {
        nlohmann::json j;
        in >> j;
        w.q = j.at("q").get<uint32_t>();
        const auto& seed = j.at("seed");
        w.seed = seed.is_string() ? std::stoull(seed.get<std::string>()) : seed.get<uint64_t>();
        if (j.at("coeff_order").get<std::string>() != kCoeffOrder)
            throw LoadError(std::string("unsupported coeff_order, expected \"") + kCoeffOrder + "\"");
        const auto& grid = j.at("forms");
        if (!grid.is_array() || grid.size() != 7) throw LoadError("forms must be a 7x21 grid");
        for (size_t k = 0; k < 7; ++k) {
            const auto& row = grid[k];
            if (!row.is_array() || row.size() != static_cast<size_t>(kUpperCount))
                throw LoadError("forms must be a 7x21 grid");
            for (size_t t = 0; t < static_cast<size_t>(kUpperCount); ++t) {
                const int64_t c = row[t].get<int64_t>();
                if (c < 0 || c >= static_cast<int64_t>(w.q))
                    throw LoadError("coefficient " + std::to_string(c) + " out of range [0, " +
                                    std::to_string(w.q) + ") at form " + std::to_string(k) +
                                    ", entry " + std::to_string(t));
                w.forms[k].upper[t] = static_cast<uint8_t>(c);
            }
        }
        for (const auto& [key, val] : j.at("rank_histogram").items())
            stored_hist[std::stoi(key)] = val.get<int64_t>();
    } catch (const LoadError&) {
        throw;
    } catch (const std::exception& e) {
        throw LoadError("malformed W file " + path + ": " + e.what());
    }

    std::optional<FieldCtx> ctx;
    try {
        ctx.emplace(w.q);
    } catch (const std::exception& e) {
        throw LoadError("invalid q in " + path + ": " + e.what());
    }

    std::array<std::array<uint8_t, kUpperCount>, 7> rows{};
    for (int k = 0; k < kDim; ++k) rows[k] = w.forms[k].upper;
    if (rank_rows(*ctx, rows) != kDim)
        throw LoadError("forms are linearly dependent: dim W < 7");

    const census::GenericityResult gen = census::check_genericity(*ctx, w.forms);
    if (!gen.pass) {
        std::string combo;
        for (uint8_t c : gen.witness->coeffs) combo += (combo.empty() ? "" : ",") + std::to_string(c);
        throw LoadError("rank dichotomy fails: combination (" + combo + ") has rank " +
                        std::to_string(gen.witness->rank));
    }
    if (gen.rank_histogram != stored_hist)
        throw LoadError("stored rank histogram does not match the recomputed one");

    return w;
}

}  // namespace cayley::harness
