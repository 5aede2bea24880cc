#include <benchmark/benchmark.h>

#include "ramsey/construct.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/treegen.hpp"

using namespace ramsey;

namespace {

Colouring make_product(std::uint32_t t) {
    static BaseColouring base = find_base_colouring(8, 6, 20000, 1);
    return build_product_colouring(base, t);
}

void bm_colour_queries(benchmark::State& state) {
    auto f = random_colouring(static_cast<Vertex>(state.range(0)), 3);
    Vertex m = f.size();
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (Vertex x = 0; x + 1 < m; ++x) {
            for (Vertex y = x + 1; y < m; ++y) acc += f.colour(x, y);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (std::uint64_t{m} * (m - 1) / 2));
}
BENCHMARK(bm_colour_queries)->Arg(64)->Arg(256)->Arg(1024);

void bm_unstability(benchmark::State& state) {
    auto f = make_product(state.range(0));
    auto a = IndexSet::full(f.size());
    for (auto _ : state) {
        auto prof = unstability(f, a);
        benchmark::DoNotOptimize(prof.max_blocks);
    }
}
BENCHMARK(bm_unstability)->Arg(2)->Arg(3);

void bm_oracle_product(benchmark::State& state) {
    auto f = make_product(2);  // 64 vertices
    for (auto _ : state) {
        auto r = max_homogeneous(f, 1);
        benchmark::DoNotOptimize(r.size);
    }
}
BENCHMARK(bm_oracle_product);

void bm_grouping(benchmark::State& state) {
    auto f = make_product(2);
    auto a = IndexSet::full(64);
    for (auto _ : state) {
        auto r = grouping(f, a, 4, 3);
        benchmark::DoNotOptimize(r.index());
    }
}
BENCHMARK(bm_grouping);

void bm_exact_run_prob(benchmark::State& state) {
    for (auto _ : state) {
        auto p = exact_run_prob(30, static_cast<std::uint32_t>(state.range(0)));
        benchmark::DoNotOptimize(p.favourable);
    }
}
BENCHMARK(bm_exact_run_prob)->Arg(2)->Arg(8);

void bm_estimate_event(benchmark::State& state) {
    for (auto _ : state) {
        auto e = estimate_event_prob({16, 3, 10000, 7});
        benchmark::DoNotOptimize(e.p_hat);
    }
}
BENCHMARK(bm_estimate_event);

}  // namespace

BENCHMARK_MAIN();
