#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <vector>

#include "json.hpp"

#include "cayley/harness.hpp"

using namespace cayley;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* tag) {
    return fs::temp_directory_path() / (std::string("cayley_harness_") + tag + ".json");
}

nlohmann::json slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

void spit(const fs::path& p, const nlohmann::json& j) {
    std::ofstream out(p);
    out << j.dump(2) << "\n";
}

// what load_w complains about, or "" if it accepts the file
std::string load_complaint(const fs::path& p) {
    try {
        harness::load_w(p.string());
        return "";
    } catch (const harness::LoadError& e) {
        return e.what();
    }
}

std::vector<std::string> keys_in_order(const nlohmann::ordered_json& j) {
    std::vector<std::string> ks;
    for (auto it = j.begin(); it != j.end(); ++it) ks.push_back(it.key());
    return ks;
}

harness::Report verified_q2(int workers = 1, const std::string& save_path = "") {
    harness::NumericOptions opt;
    opt.q = 2;
    opt.seed = 1;
    opt.level = harness::Level::full;
    opt.workers = workers;
    opt.save_w_path = save_path;
    return harness::run_numeric(opt);
}

}  // namespace

TEST_CASE("symbolic report carries the four polynomial checks") {
    harness::Report rep = harness::run_symbolic();
    CHECK(rep.mode == "symbolic");
    CHECK_FALSE(rep.q.has_value());
    CHECK_FALSE(rep.seed.has_value());
    CHECK_FALSE(rep.version.empty());
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.checks[0].name == "S1");
    CHECK(rep.checks[3].name == "S4");
    CHECK(rep.verdict());

    auto j = nlohmann::ordered_json::parse(rep.to_json());
    CHECK(keys_in_order(j) == std::vector<std::string>{"mode", "version", "checks", "timing_ms"});
    CHECK(j["timing_ms"].is_object());
    CHECK(j["timing_ms"].empty());
}

TEST_CASE("full census at q = 2 freezes every count and passes N1 through N8") {
    harness::Report rep = verified_q2();
    CHECK(rep.mode == "numeric");
    CHECK(rep.q == 2u);
    CHECK(rep.seed == 1u);
    CHECK(rep.verdict());

    REQUIRE(rep.checks.size() == 8);
    const char* names[] = {"N1", "N2", "N3", "N4", "N5", "N6", "N7", "N8"};
    for (size_t k = 0; k < 8; ++k) {
        CAPTURE(rep.checks[k].name);
        CHECK(rep.checks[k].name == names[k]);
        CHECK(rep.checks[k].pass);
    }

    const harness::Counts& c = rep.counts;
    CHECK(c.n_G == 2667);
    CHECK(c.n_P6 == 127);
    CHECK(c.n_P5 == 63);
    CHECK(c.n_X == 22);
    CHECK(c.n_Y == 22);
    CHECK(c.n_H == 2667 * 63 + 22 * 64);
    CHECK(c.rank_histogram == std::map<int, int64_t>{{4, 22}, {6, 105}});

    // the frame-bundle strata against their closed-form fibers
    CHECK(c.n_tH == *c.n_H * 6);
    CHECK(c.n_tH1 == 22 * 8322);
    CHECK(c.n_tH2 == 105 * 7938);
    CHECK(c.n_tH11 == 22 * 7 * 126);
    CHECK(c.n_tH12 == 22 * 120 * 62);
    CHECK(*c.n_tH1 + *c.n_tH2 == *c.n_tH);

    REQUIRE(rep.sampling.has_value());
    CHECK(rep.sampling->attempts == 1);
    CHECK(rep.sampling->rejected_for.empty());
}

TEST_CASE("reports are byte-identical for any worker count") {
    std::string one = verified_q2(1).to_json();
    std::string four = verified_q2(4).to_json();
    CHECK(one == four);
    CHECK(one.back() == '\n');
}

TEST_CASE("report serialization has a pinned shape") {
    harness::Report rep = verified_q2();
    auto j = nlohmann::ordered_json::parse(rep.to_json());

    CHECK(keys_in_order(j) == std::vector<std::string>{"mode", "q", "seed", "version", "counts",
                                                       "checks", "sampling", "timing_ms"});
    CHECK(j["q"].is_number());
    CHECK(j["seed"].is_string());  // 64-bit seeds do not fit JSON doubles
    CHECK(j["seed"] == "1");

    // counts are decimal strings in a fixed order (they exceed 2^53 at q=7)
    CHECK(keys_in_order(j["counts"]) ==
          std::vector<std::string>{"n_G", "n_P6", "n_P5", "n_X", "n_Y", "n_H", "n_tH", "n_tH1",
                                   "n_tH2", "n_tH11", "n_tH12", "rank_histogram"});
    CHECK(j["counts"]["n_G"].is_string());
    CHECK(j["counts"]["n_G"] == "2667");
    CHECK(j["counts"]["n_H"] == "169429");
    CHECK(j["counts"]["rank_histogram"]["4"] == "22");
    CHECK(j["counts"]["rank_histogram"]["6"] == "105");

    for (const auto& entry : j["checks"]) {
        CHECK(keys_in_order(entry) == std::vector<std::string>{"name", "lhs", "rhs", "pass"});
        CHECK(entry["lhs"].is_string());
        CHECK(entry["pass"].is_boolean());
    }

    CHECK(j["sampling"]["attempts"] == 1);
    CHECK(j["sampling"]["rejected_for"].is_object());
    CHECK(j["timing_ms"].empty());

    // timings appear only on request, since they break byte-stability
    harness::NumericOptions opt;
    opt.q = 2;
    opt.seed = 1;
    opt.emit_timing = true;
    auto timed = nlohmann::ordered_json::parse(harness::run_numeric(opt).to_json());
    CHECK_FALSE(timed["timing_ms"].empty());
    CHECK(timed["timing_ms"].contains("count_x"));
}

TEST_CASE("fast level skips the brute-force counters") {
    harness::NumericOptions opt;
    opt.q = 3;
    opt.seed = 9;
    opt.level = harness::Level::fast;
    harness::Report rep = harness::run_numeric(opt);
    CHECK(rep.verdict());

    std::vector<std::string> names;
    for (const auto& c : rep.checks) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"N1", "N4", "N5", "N6", "N7"});

    CHECK(rep.counts.n_G == 99463);
    CHECK_FALSE(rep.counts.n_H.has_value());  // full-level only
    CHECK(rep.counts.n_tH.has_value());

    auto j = nlohmann::ordered_json::parse(rep.to_json());
    CHECK_FALSE(j["counts"].contains("n_H"));
}

TEST_CASE("certified systems round trip through disk") {
    FieldCtx ctx(3);
    census::WSystem w = census::sample_w(ctx, 9, 100);
    auto gen = census::check_genericity(ctx, w.forms);
    REQUIRE(gen.pass);

    fs::path path = temp_file("roundtrip");
    harness::save_w(w, gen.rank_histogram, path.string());
    census::WSystem back = harness::load_w(path.string());
    CHECK(back.q == w.q);
    CHECK(back.seed == w.seed);
    CHECK(back.forms == w.forms);

    auto j = slurp(path);
    CHECK(j["q"] == 3);
    CHECK(j["seed"] == "9");
    CHECK(j["coeff_order"] == "upper-row-major-(1,2)..(6,7)");
    CHECK(j["forms"].size() == 7);
    CHECK(j["forms"][0].size() == 21);
    fs::remove(path);
}

TEST_CASE("loading re-verifies every stored invariant") {
    FieldCtx ctx(3);
    census::WSystem w = census::sample_w(ctx, 9, 100);
    auto gen = census::check_genericity(ctx, w.forms);
    fs::path good = temp_file("tamper");
    harness::save_w(w, gen.rank_histogram, good.string());
    const nlohmann::json pristine = slurp(good);

    SUBCASE("missing file") {
        CHECK(load_complaint(temp_file("nonexistent")).find("cannot open") != std::string::npos);
    }
    SUBCASE("malformed json") {
        std::ofstream(good) << "{not json";
        CHECK(load_complaint(good).find("malformed W file") != std::string::npos);
    }
    SUBCASE("foreign coefficient order") {
        auto j = pristine;
        j["coeff_order"] = "lower-col-major";
        spit(good, j);
        CHECK(load_complaint(good).find("coeff_order") != std::string::npos);
    }
    SUBCASE("grid of the wrong shape") {
        auto j = pristine;
        j["forms"][3].erase(20);
        spit(good, j);
        CHECK(load_complaint(good).find("7x21") != std::string::npos);
    }
    SUBCASE("coefficient outside the field") {
        auto j = pristine;
        j["forms"][0][0] = 3;  // q = 3, so legal values are 0..2
        spit(good, j);
        std::string what = load_complaint(good);
        CHECK(what.find("out of range") != std::string::npos);
        CHECK(what.find("form 0") != std::string::npos);
    }
    SUBCASE("composite q") {
        auto j = pristine;
        j["q"] = 4;
        spit(good, j);
        CHECK(load_complaint(good).find("invalid q") != std::string::npos);
    }
    SUBCASE("linearly dependent basis") {
        auto j = pristine;
        j["forms"][1] = j["forms"][0];
        spit(good, j);
        CHECK(load_complaint(good).find("linearly dependent") != std::string::npos);
    }
    SUBCASE("basis form violating the rank dichotomy") {
        auto j = pristine;
        std::vector<int> rank2(21, 0);
        rank2[0] = 1;  // the elementary form on coordinates (1,2): rank 2
        j["forms"][0] = rank2;
        spit(good, j);
        std::string what = load_complaint(good);
        CHECK(what.find("rank dichotomy fails") != std::string::npos);
        CHECK(what.find("rank 2") != std::string::npos);
    }
    SUBCASE("doctored histogram") {
        auto j = pristine;
        j["rank_histogram"]["4"] = j["rank_histogram"]["4"].get<int64_t>() + 1;
        spit(good, j);
        CHECK(load_complaint(good).find("histogram") != std::string::npos);
    }
    SUBCASE("pristine file still loads") {
        spit(good, pristine);
        CHECK(load_complaint(good).empty());
    }
    fs::remove(good);
}

TEST_CASE("count mode recomputes the same census from a saved system") {
    fs::path path = temp_file("count");
    harness::Report verify = verified_q2(1, path.string());
    harness::Report count = harness::run_count(2, path.string(), 2);

    CHECK(count.mode == "numeric");
    CHECK(count.q == 2u);
    CHECK(count.seed == 1u);
    CHECK(count.checks.empty());
    CHECK(count.verdict());  // vacuously: count mode asserts nothing

    CHECK(count.counts.n_G == verify.counts.n_G);
    CHECK(count.counts.n_X == verify.counts.n_X);
    CHECK(count.counts.n_Y == verify.counts.n_Y);
    CHECK(count.counts.n_H == verify.counts.n_H);
    CHECK(count.counts.n_tH == verify.counts.n_tH);
    CHECK(count.counts.n_tH11 == verify.counts.n_tH11);
    CHECK(count.counts.rank_histogram == verify.counts.rank_histogram);

    // the stored q is authoritative; asking for a different one is an error
    try {
        harness::run_count(5, path.string(), 1);
        FAIL("q mismatch must throw");
    } catch (const harness::LoadError& e) {
        CHECK(std::string(e.what()).find("q mismatch") != std::string::npos);
    }
    fs::remove(path);
}

TEST_CASE("numeric options are validated before any work") {
    auto complaint = [](harness::NumericOptions opt) -> std::string {
        try {
            harness::run_numeric(opt);
            return "";
        } catch (const std::invalid_argument& e) {
            return e.what();
        }
    };

    harness::NumericOptions opt;
    opt.q = 9;
    CHECK(complaint(opt).find("not prime") != std::string::npos);
    opt.q = 23;
    CHECK(complaint(opt).find("one of 2, 3, 5, 7, 11, 13") != std::string::npos);
    opt.q = 7;
    opt.long_run = false;
    CHECK(complaint(opt).find("--long") != std::string::npos);
    opt.q = 2;
    opt.workers = 0;
    CHECK(complaint(opt).find("workers") != std::string::npos);
}
