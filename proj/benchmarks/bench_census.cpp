#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "cayley/altform.hpp"
#include "cayley/census.hpp"
#include "cayley/splitmix.hpp"

using namespace cayley;

namespace {

census::WSystem certified(uint32_t q) {
    FieldCtx ctx(q);
    return census::sample_w(ctx, 1, 100);
}

}  // namespace

static void BM_plane_enumeration(benchmark::State& state) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    const int64_t end = std::min<int64_t>(census::plane_count(q), 200000);
    for (auto _ : state) {
        int64_t seen = 0;
        census::for_each_plane(q, 0, end,
                               [&](const std::array<Vec7, 2>&, uint8_t, uint8_t) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
    state.SetItemsProcessed(state.iterations() * end);
}
BENCHMARK(BM_plane_enumeration)->Arg(2)->Arg(5)->Arg(7);

static void BM_count_x_slice(benchmark::State& state) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    FieldCtx ctx(q);
    const census::WSystem w = certified(q);
    const int64_t end = std::min<int64_t>(census::plane_count(q), 100000);
    for (auto _ : state) {
        auto c = census::count_x_range(ctx, w.forms, 0, end, 1);
        benchmark::DoNotOptimize(c.n_x);
    }
    state.SetItemsProcessed(state.iterations() * end);
}
BENCHMARK(BM_count_x_slice)->Arg(2)->Arg(5)->Arg(7);

static void BM_form_rank(benchmark::State& state) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    FieldCtx ctx(q);
    SplitMix64 rng(42);
    std::vector<AlternatingForm> batch(256);
    for (auto& f : batch)
        for (auto& c : f.upper) c = static_cast<uint8_t>(rng.next_mod(q));
    for (auto _ : state) {
        int acc = 0;
        for (const auto& f : batch) acc += form_rank(ctx, f);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(batch.size()));
}
BENCHMARK(BM_form_rank)->Arg(2)->Arg(7)->Arg(13);

static void BM_genericity_scan(benchmark::State& state) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    FieldCtx ctx(q);
    const census::WSystem w = certified(q);
    for (auto _ : state) {
        auto res = census::check_genericity(ctx, w.forms);
        benchmark::DoNotOptimize(res.pass);
    }
    state.SetItemsProcessed(state.iterations() * census::projective_count(q, 6));
}
BENCHMARK(BM_genericity_scan)->Arg(2)->Arg(3)->Arg(5);

static void BM_tilde_pairs(benchmark::State& state) {
    const uint32_t q = static_cast<uint32_t>(state.range(0));
    FieldCtx ctx(q);
    const census::WSystem w = certified(q);
    for (auto _ : state) {
        auto t = census::count_tilde_pairs(ctx, w.forms);
        benchmark::DoNotOptimize(t.n_th);
    }
    state.SetItemsProcessed(state.iterations() * census::projective_count(q, 6));
}
BENCHMARK(BM_tilde_pairs)->Arg(2)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
