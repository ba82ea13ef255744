#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cayley/harness.hpp"
#include "cayley/version.hpp"

namespace {

// Report to stdout (or --out), human summary and timings to stderr.
int emit(const cayley::harness::Report& rep, const std::string& out_path) {
    const std::string doc = rep.to_json();
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot open for writing: " << out_path << "\n";
            return 4;
        }
        out << doc;
        out.flush();
        if (!out) {
            std::cerr << "error: write failed: " << out_path << "\n";
            return 4;
        }
    }
    for (const auto& c : rep.checks)
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.lhs
                  << (c.pass ? " == " : " != ") << c.rhs << "\n";
    for (const auto& [phase, ms] : rep.timing_ms) std::cerr << "  " << phase << ": " << ms << " ms\n";
    const bool ok = rep.verdict();
    std::cerr << (ok ? "verdict: pass" : "verdict: FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plane/skew-form incidence checks: polynomial identities in the class L "
                 "and integer point censuses over small prime fields"};
    app.set_version_flag("--version", std::string(cayley::kVersion));
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->require_subcommand(1);

    auto* sym = verify->add_subcommand("symbolic", "polynomial identities S1-S4");

    auto* num = verify->add_subcommand("numeric", "finite-field census checks N1-N8");
    cayley::harness::NumericOptions nopt;
    std::string level = "fast";
    std::string out_path;
    num->add_option("--q", nopt.q, "field size (one of 2, 3, 5, 7, 11, 13)")->required();
    num->add_option("--seed", nopt.seed, "64-bit sampling seed")->required();
    num->add_option("--level", level, "check selection")
        ->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    num->add_option("--workers", nopt.workers, "parallel counting workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    num->add_option("--max-retries", nopt.max_retries, "sampling attempts before giving up")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    num->add_option("--save-w", nopt.save_w_path, "write the certified W system to this path");
    num->add_option("--out", out_path, "write the report to this path instead of stdout");
    num->add_flag("--long", nopt.long_run, "confirm a long run (required for q >= 7)");
    num->add_flag("--timing", nopt.emit_timing,
                  "serialize phase timings into the report (report is then not byte-stable)");

    auto* cnt = app.add_subcommand("count", "census counts for a pre-saved W system");
    uint32_t count_q = 0;
    std::string w_path;
    int count_workers = 1;
    cnt->add_option("--q", count_q, "field size, must match the file")->required();
    cnt->add_option("--w", w_path, "path of the W system file")->required();
    cnt->add_option("--workers", count_workers, "parallel counting workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;  // help/version exit clean, usage errors map to 4
    }

    try {
        cayley::harness::Report rep;
        if (sym->parsed()) {
            rep = cayley::harness::run_symbolic();
        } else if (num->parsed()) {
            nopt.level =
                level == "full" ? cayley::harness::Level::full : cayley::harness::Level::fast;
            rep = cayley::harness::run_numeric(nopt);
        } else {
            rep = cayley::harness::run_count(count_q, w_path, count_workers);
        }
        return emit(rep, num->parsed() ? out_path : std::string());
    } catch (const cayley::census::SampleExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& [reason, n] : e.stats.rejected_for)
            std::cerr << "  rejected " << n << "x: " << reason << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
