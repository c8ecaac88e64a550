#include <benchmark/benchmark.h>

#include "neurideal/betti.hpp"
#include "neurideal/enumerate.hpp"
#include "neurideal/families.hpp"
#include "neurideal/homology.hpp"
#include "neurideal/structure.hpp"

using namespace neurideal;

namespace {

void BM_BettiTableThm36(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto ideal = family_thm36(k, k);
    for (auto _ : state) benchmark::DoNotOptimize(betti_table(ideal.ideal()));
    state.SetLabel(std::to_string(ideal.ideal().size()) + " generators");
}
BENCHMARK(BM_BettiTableThm36)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BettiTableField(benchmark::State& state) {
    const Field f = state.range(0) ? Field::Rationals : Field::F2;
    Rng rng(5);
    std::vector<MonomialIdeal> ideals;
    for (int k = 0; k < 32; ++k) ideals.push_back(random_degree_n_ideal(4, rng).ideal());
    for (auto _ : state)
        for (const auto& i : ideals) benchmark::DoNotOptimize(betti_table(i, f));
    state.SetLabel(f == Field::F2 ? "f2" : "q");
}
BENCHMARK(BM_BettiTableField)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LinearQuotientSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Rng rng(11);
    std::vector<MonomialIdeal> ideals;
    for (int k = 0; k < 64; ++k) ideals.push_back(random_degree_n_ideal(n, rng).ideal());
    for (auto _ : state)
        for (const auto& i : ideals) benchmark::DoNotOptimize(linear_quotients_search(i));
}
BENCHMARK(BM_LinearQuotientSearch)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

void BM_RecursiveCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const bool refined = state.range(1) != 0;
    Rng rng(17);
    std::vector<PolarizedNeuralIdeal> ideals;
    for (int k = 0; k < 64; ++k) ideals.push_back(random_degree_n_ideal(n, rng));
    for (auto _ : state)
        for (const auto& i : ideals)
            benchmark::DoNotOptimize(refined ? refined_linear_check(i) : recursive_linear_check(i));
    state.SetLabel(refined ? "refined" : "nested");
}
BENCHMARK(BM_RecursiveCheck)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_HomologyFullSimplexBoundary(benchmark::State& state) {
    const int v = static_cast<int>(state.range(0));
    const std::uint64_t all = (std::uint64_t{1} << v) - 1;
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < v; ++i) facets.push_back(all & ~(std::uint64_t{1} << i));
    const auto sphere = SimplicialComplex::from_faces(all, facets);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_homology_ranks(sphere, Field::F2));
}
BENCHMARK(BM_HomologyFullSimplexBoundary)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
