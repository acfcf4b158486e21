#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "astres/finger.hpp"
#include "astres/tree.hpp"
#include "astres/window.hpp"

using namespace astres;

namespace {

std::vector<Interval> random_intervals(std::int64_t n, std::size_t count,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Interval> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t len =
            1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
        const std::int64_t start = static_cast<std::int64_t>(
            rng() % static_cast<std::uint64_t>(n - len + 1));
        out.push_back({start, start + len});
    }
    return out;
}

Tree loaded_tree(int levels, std::uint64_t seed) {
    Tree tree(binary_config(levels));
    for (const Interval& iv :
         random_intervals(tree.slot_count(), 1000, seed))
        tree.insert({iv, 5});
    return tree;
}

void BM_Build(benchmark::State& state) {
    const TreeConfig cfg = binary_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Tree tree(cfg);
        benchmark::DoNotOptimize(tree.records().data());
    }
}
BENCHMARK(BM_Build)->Arg(10)->Arg(14)->Arg(18);

void BM_Insert(benchmark::State& state) {
    Tree tree(binary_config(static_cast<int>(state.range(0))));
    const auto ivs = random_intervals(tree.slot_count(), 4096, 1);
    std::size_t i = 0;
    for (auto _ : state) {
        tree.insert({ivs[i & 4095], 3});
        ++i;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Insert)->Arg(10)->Arg(14)->Arg(18);

void BM_MaxReserved(benchmark::State& state) {
    Tree tree = loaded_tree(static_cast<int>(state.range(0)), 2);
    const auto ivs = random_intervals(tree.slot_count(), 4096, 3);
    std::size_t i = 0;
    Bandwidth sink = 0;
    for (auto _ : state) {
        sink += tree.max_reserved(ivs[i & 4095]);
        ++i;
    }
    benchmark::DoNotOptimize(sink);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MaxReserved)->Arg(10)->Arg(14)->Arg(18);

void BM_InsertChecked(benchmark::State& state) {
    Tree tree = loaded_tree(static_cast<int>(state.range(0)), 4);
    const auto ivs = random_intervals(tree.slot_count(), 4096, 5);
    std::size_t i = 0;
    // capacity low enough that both outcomes occur
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree.insert_checked({ivs[i & 4095], 1}, 60));
        ++i;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_InsertChecked)->Arg(10)->Arg(14);

void BM_FingerQueryNearby(benchmark::State& state) {
    Tree tree = loaded_tree(10, 6);
    Finger finger;
    std::mt19937_64 rng(7);
    Interval q{100, 140};
    for (auto _ : state) {
        const std::int64_t shift =
            static_cast<std::int64_t>(rng() % 17) - 8;
        q.start = std::clamp<std::int64_t>(q.start + shift, 0, 1000);
        q.end = q.start + 40;
        benchmark::DoNotOptimize(query_with_finger(tree, finger, q).value);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_FingerQueryNearby);

void BM_WindowWrap(benchmark::State& state) {
    WrappingWindow window(binary_config(static_cast<int>(state.range(0))));
    const std::int64_t horizon = window.horizon_slots();
    std::int64_t now = 0;
    for (auto _ : state) {
        window.reserve({now, now + 1}, 1, 1 << 20);
        now += horizon;
        window.advance(now);  // exactly one wrap per iteration
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_WindowWrap)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
