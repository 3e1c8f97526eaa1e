#include "vfilt/filtration.hpp"
#include "vfilt/oracle.hpp"
#include "vfilt/spaces.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace vfilt;

std::vector<std::pair<RootPoly, RootPoly>> random_pairs(size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    std::vector<std::pair<RootPoly, RootPoly>> pairs;
    for (size_t i = 0; i < count; ++i) {
        RootPoly p, q;
        for (long j = pick(0, 6); j > 0; --j)
            p *= RootPoly::linear_root(make_rational(pick(-5, 5), pick(1, 3)));
        for (long j = pick(1, 6); j > 0; --j)
            q *= RootPoly::linear_root(make_rational(pick(-5, 5), pick(1, 3)));
        pairs.emplace_back(std::move(p), std::move(q));
    }
    return pairs;
}

void BM_c_poly_recursion(benchmark::State& state) {
    auto pairs = random_pairs(64, 7);
    size_t i = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(c_poly(p, q));
    }
}
BENCHMARK(BM_c_poly_recursion);

void BM_c_poly_bruteforce(benchmark::State& state) {
    auto pairs = random_pairs(64, 7);
    size_t i = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[i++ % pairs.size()];
        benchmark::DoNotOptimize(oracle::c_poly_bruteforce(p, q));
    }
}
BENCHMARK(BM_c_poly_bruteforce);

void BM_p_function_closed(benchmark::State& state) {
    SpaceFamily fam = SpaceFamily::builtin("det", state.range(0));
    auto weights = fam.module_weights(2);
    const Rational alpha = make_rational(7, 2);
    size_t i = 0;
    for (auto _ : state) {
        const auto& w = weights[i++ % weights.size()];
        benchmark::DoNotOptimize(p_function(fam.b_of_weight(w), alpha).poly.degree());
    }
}
BENCHMARK(BM_p_function_closed)->Arg(2)->Arg(4);

void BM_p_function_greedy(benchmark::State& state) {
    SpaceFamily fam = SpaceFamily::builtin("det", state.range(0));
    auto weights = fam.module_weights(2);
    const Rational alpha = make_rational(7, 2);
    size_t i = 0;
    for (auto _ : state) {
        const auto& w = weights[i++ % weights.size()];
        benchmark::DoNotOptimize(oracle::p_function_greedy(fam.b_of_weight(w), alpha).degree());
    }
}
BENCHMARK(BM_p_function_greedy)->Arg(2)->Arg(4);

void BM_ideal_weight_set(benchmark::State& state) {
    SpaceFamily fam = SpaceFamily::builtin("det", 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ideal_weight_set(fam, 3, make_rational(1, 2), state.range(0)).weights.size());
}
BENCHMARK(BM_ideal_weight_set)->Arg(3)->Arg(6);

void BM_fs_hodge_test(benchmark::State& state) {
    SpaceFamily fam = SpaceFamily::builtin("e6", 27);
    std::vector<long> w{2, 1, -1};
    BFunction b = fam.b_of_weight(w);
    PiSets pi = PiSets::structure_sheaf(r_lambda(b), 12, 12);
    const Rational alpha = make_rational(5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(fs_hodge_test(b, alpha, pi, 12));
}
BENCHMARK(BM_fs_hodge_test);

void BM_jordan_weight_dim(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::jordan_weight_dim(state.range(0), make_rational(1, 3), 2));
}
BENCHMARK(BM_jordan_weight_dim)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
