#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "privword/avoidance.hpp"
#include "privword/border.hpp"
#include "privword/census.hpp"

namespace {

using namespace privword;

std::vector<Symbol> random_word(std::size_t n, int q, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Symbol> out(n);
    for (auto& s : out) s = static_cast<Symbol>(rng() % q);
    return out;
}

void BM_BorderArray(benchmark::State& state) {
    const auto word = random_word(state.range(0), 2, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(border_array(std::span<const Symbol>(word)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BorderArray)->Arg(16)->Arg(256)->Arg(4096);

void BM_Classify(benchmark::State& state) {
    const auto word = random_word(state.range(0), 2, 7);
    detail::Classifier classifier;
    for (auto _ : state)
        benchmark::DoNotOptimize(classifier.classify(word));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Classify)->Arg(16)->Arg(64)->Arg(256);

void BM_PrivilegeOracle(benchmark::State& state) {
    const auto word = random_word(state.range(0), 2, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            is_privileged_oracle(std::span<const Symbol>(word)));
}
BENCHMARK(BM_PrivilegeOracle)->Arg(8)->Arg(14)->Arg(18);

void BM_CountAvoiding(benchmark::State& state) {
    const Word pattern(random_word(state.range(0), 2, 3), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_avoiding(pattern, 1000));
}
BENCHMARK(BM_CountAvoiding)->Arg(2)->Arg(8)->Arg(16);

void BM_Mu(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mu(2, 16, state.range(0)));
}
BENCHMARK(BM_Mu)->Arg(4)->Arg(8);

void BM_Census(benchmark::State& state) {
    CensusOptions opts;
    opts.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(census(2, state.range(0), opts));
    state.SetItemsProcessed(state.iterations() *
                            (std::int64_t{1} << (state.range(0) - 1)));
}
BENCHMARK(BM_Census)
    ->Args({14, 1})
    ->Args({18, 1})
    ->Args({18, 4})
    ->Args({20, 1})
    ->Args({20, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
