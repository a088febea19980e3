// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nss/crystal_graph.hpp"
#include "nss/kernels.hpp"
#include "nss/mvoracle.hpp"

namespace {

nss::NssDatum datum(int n, const std::vector<int>& word) {
    auto m = nss::NssDatum::zero(nss::CartanData(n));
    for (int i : word) m = m.apply_fhat(i);
    return m;
}

// Table fill for the last letter of a length-5 word; args: n, max_boxes.
template <bool Parallel>
void BM_FillTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto index = nss::DiagramIndex::get(n, static_cast<int>(state.range(1)));
    const std::vector<int> word = {0, 1, n - 1, 0, 1};
    const auto parent = datum(n, std::vector<int>(word.begin(), word.end() - 1));
    const auto parent_values = parent.fingerprint(index->max_boxes);
    const int exponent = datum(n, word).step_exponent();
    std::vector<int> out(index->diagrams.size());
    for (auto _ : state) {
        if constexpr (Parallel)
            nss::kernels::fill_table_omp(*index, word.back(), exponent, parent_values, out);
        else
            nss::kernels::fill_table_serial(*index, word.back(), exponent, parent_values, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["diagrams"] = static_cast<double>(index->diagrams.size());
}

template <nss::Execution Exec>
void BM_Compare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto m = datum(n, n == 2 ? std::vector<int>{0, 1, 0, 1} : std::vector<int>{0, 1, 2});
    const auto gammas = nss::sigma_canonical_diagrams(n, 6);
    for (auto _ : state) {
        auto report = nss::compare(m, gammas, {}, Exec);
        benchmark::DoNotOptimize(report.pass);
    }
}

template <bool Parallel>
void BM_Explore(benchmark::State& state) {
    nss::ExploreOptions opts;
    opts.parallel = Parallel;
    for (auto _ : state) {
        auto g = nss::explore(nss::CartanData(static_cast<int>(state.range(0))), static_cast<int>(state.range(1)), opts);
        benchmark::DoNotOptimize(g.size());
    }
}

}  // namespace

BENCHMARK(BM_FillTable<false>)->Name("fill_table/serial")->Args({2, 16})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillTable<true>)->Name("fill_table/omp")->Args({2, 16})->Args({3, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compare<nss::Execution::Serial>)->Name("compare/serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Compare<nss::Execution::Parallel>)->Name("compare/omp")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Explore<false>)->Name("explore/serial")->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Explore<true>)->Name("explore/omp")->Args({3, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
