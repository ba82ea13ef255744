#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/census.hpp"

namespace cayley::harness {

struct CheckResult {
    std::string name;  // S1..S4 (symbolic) or N1..N8 (numeric)
    std::string lhs;   // integer or polynomial rendering
    std::string rhs;
    bool pass = false;
};

// Census totals; a field is empty when the run did not compute it (levels
// and field-size ceilings gate the expensive counters).
struct Counts {
    std::optional<int64_t> n_G, n_P6, n_P5, n_X, n_Y, n_H;
    std::optional<int64_t> n_tH, n_tH1, n_tH2, n_tH11, n_tH12;
    std::map<int, int64_t> rank_histogram;
};

struct Report {
    std::string mode;  // "symbolic" | "numeric"
    std::optional<uint32_t> q;
    std::optional<uint64_t> seed;
    std::string version;
    Counts counts;
    std::vector<CheckResult> checks;
    std::optional<census::SampleStats> sampling;

    // Phase timings are always measured (the CLI prints them to stderr)
    // but serialized only on request: the default report must be
    // byte-identical across runs and machines.
    std::vector<std::pair<std::string, int64_t>> timing_ms;
    bool emit_timing = false;

    bool verdict() const;  // conjunction of all check passes

    // Fixed field order, all counts as decimal strings (they exceed 2^53
    // at q = 7, so JSON doubles would truncate them).
    std::string to_json() const;
};

enum class Level { fast, full };

struct NumericOptions {
    uint32_t q = 2;
    uint64_t seed = 1;
    Level level = Level::fast;
    int workers = 1;
    int max_retries = 100;
    bool long_run = false;     // explicit opt-in for q >= 7 (minutes to hours)
    bool emit_timing = false;  // serialize timings (sacrifices byte-stability)
    std::string save_w_path;   // when nonempty, save the certified W here
};

// S1-S4 on exact polynomials.
Report run_symbolic();

// Samples W from (q, seed), certifies the rank dichotomy, runs the level's
// census checks. Deterministic for fixed (q, seed, level) and any workers.
//   fast: N1, N4, N5 (q <= 7), N6, N7
//   full: adds N2 (q <= 3), N3 (q <= 7), N8 (q = 2)
Report run_numeric(const NumericOptions& opt);

// Counts for a W loaded from disk; no checks, just the census.
Report run_count(uint32_t q, const std::string& w_path, int workers);

struct LoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// W system files: {q, seed, coeff_order, forms: 7x21, rank_histogram};
// load re-verifies every invariant (dimension, ranges, dichotomy,
// histogram) and throws LoadError with a witness on any mismatch.
void save_w(const census::WSystem& w, const std::map<int, int64_t>& rank_histogram,
            const std::string& path);
census::WSystem load_w(const std::string& path);

}  // namespace cayley::harness
