#include <benchmark/benchmark.h>

#include <random>

#include "ops.hpp"
#include "tecc/matching.hpp"
#include "tecc/part_tree.hpp"

using namespace tecc;
using namespace tecc::tools;

namespace {

// Mixed insert/delete stream from empty; reports merges+splits per update.
void BM_Updates(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto ops = random_workload({.n = n, .ops = 4 * n, .seed = 1, .query_fraction = 0.0});
    std::uint64_t updates = 0, work = 0;
    for (auto _ : state) {
        Session s(n);
        for (const Op& op : ops) s.apply(op);
        updates += ops.size();
        const auto& st = s.structure().forest().tree().stats();
        work += st.merges + st.splits;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(updates));
    state.counters["merges_splits_per_update"] =
        benchmark::Counter(static_cast<double>(work) / static_cast<double>(updates));
}
BENCHMARK(BM_Updates)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond);

// Queries on a fixed random graph.
template <OpKind K>
void BM_Query(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    Session s(n);
    for (const Op& op : random_workload({.n = n, .ops = 4 * n, .seed = 2, .query_fraction = 0.0})) s.apply(op);
    std::mt19937_64 rng(3);
    for (auto _ : state) {
        const Op op{K, static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n)};
        benchmark::DoNotOptimize(s.apply(op));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Query<OpKind::Bridge>)->Range(64, 4096);
BENCHMARK(BM_Query<OpKind::TwoConn>)->Range(64, 4096);
BENCHMARK(BM_Query<OpKind::TwoSize>)->Range(64, 4096);

void BM_PartTreeSplitJoin(benchmark::State& state) {
    const int keys = static_cast<int>(state.range(0));
    PartArena arena(keys + 2);
    std::vector<std::int32_t> ones(static_cast<std::size_t>(keys + 2), 1);
    PartTree t;
    for (int k = -1; k <= keys; ++k) t = arena.join(t, arena.single(k, ones.data(), ones.data(), 0, 0), PartTree{});
    int k = 0;
    for (auto _ : state) {
        auto [lo, hi] = arena.split(t, k - 1);
        t = arena.concat(lo, hi);
        k = (k + 7) % (keys + 1);
    }
}
BENCHMARK(BM_PartTreeSplitJoin)->Arg(8)->Arg(16)->Arg(32);

void BM_UniqueMatching(benchmark::State& state) {
    // A long path has a unique perfect matching and a bridge at every step.
    const auto n = static_cast<std::uint32_t>(state.range(0));
    oracle::Snapshot g{n, {}};
    for (std::uint32_t v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
    for (auto _ : state) benchmark::DoNotOptimize(unique_perfect_matching(g));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UniqueMatching)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
