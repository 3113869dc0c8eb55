#include <benchmark/benchmark.h>

#include "qshuffle/harness.hpp"

using namespace qshuffle;

namespace {

ShuffleElement chain_element(int n, int length) {
    ShuffleElement el = gen_e(n, 1, 0);
    for (int d = 1; d < length; ++d) el = star(el, gen_e(n, 1 + d % (n - 1), d % 3 - 1));
    return el;
}

void BM_star_same_color(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto a = chain_element(2, d);
    const auto b = gen_e(2, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_star_same_color)->DenseRange(1, 5);

void BM_star_rank3(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto a = chain_element(3, d);
    const auto b = gen_e(3, 2, -1);
    for (auto _ : state) benchmark::DoNotOptimize(star(a, b));
}
BENCHMARK(BM_star_rank3)->DenseRange(1, 5);

void BM_divided_power(benchmark::State& state) {
    const auto e = gen_e(2, 1, 0);
    for (auto _ : state) benchmark::DoNotOptimize(divided_power(e, state.range(0)));
}
BENCHMARK(BM_divided_power)->DenseRange(2, 4);

void BM_is_good(benchmark::State& state) {
    const auto el = divided_power(e_root(3, {1, 2}, 1), 2);
    for (auto _ : state) benchmark::DoNotOptimize(is_good(el));
}
BENCHMARK(BM_is_good);

void BM_pair_higher_root(benchmark::State& state) {
    const auto x = star(e_root(3, {1, 2}, 0), gen_e(3, 1, 1));
    const std::vector<Decomposition> m{Decomposition({1, 2}, {1, 0}),
                                       Decomposition::leading({1, 1}, -2)};
    for (auto _ : state) benchmark::DoNotOptimize(pair_product(x, m));
}
BENCHMARK(BM_pair_higher_root);

void BM_extract_coefficient(benchmark::State& state) {
    const auto x = star(star(gen_e(2, 1, -1), gen_e(2, 1, 0)), gen_e(2, 1, 1));
    const auto exprs = pairing_series(x, {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}});
    const std::map<ColorVar, int> target{{{1, 1}, 1}, {{1, 2}, 0}, {{1, 3}, -1}};
    for (auto _ : state)
        for (const auto& e : exprs) benchmark::DoNotOptimize(extract_coefficient(e, target));
}
BENCHMARK(BM_extract_coefficient);

void BM_duality_window(benchmark::State& state) {
    WindowConfig cfg;
    cfg.n = 3;
    cfg.max_total_degree = 2;
    cfg.mode_min = -1;
    cfg.mode_max = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_duality(cfg));
}
BENCHMARK(BM_duality_window)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
