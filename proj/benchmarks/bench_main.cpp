#include <benchmark/benchmark.h>

#include <random>

#include "snccc/construction.hpp"
#include "snccc/correlation.hpp"
#include "snccc/mos.hpp"
#include "snccc/permutation.hpp"
#include "snccc/seeds.hpp"
#include "snccc/verification.hpp"

using namespace snccc;

namespace {

Sequence random_sequence(std::mt19937& rng, std::size_t L, bool unimodular) {
    std::uniform_int_distribution<int> d(-1, 1);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    std::vector<Complex> v(L);
    for (auto& x : v) x = unimodular ? std::polar(1.0, phase(rng)) : Complex(d(rng), 0.0);
    return Sequence(v);
}

// Ternary operands take the exact integer path, unimodular ones the floating path.
void BM_AperiodicProfile(benchmark::State& state) {
    std::mt19937 rng(1);
    const auto L = static_cast<std::size_t>(state.range(0));
    const bool complex_entries = state.range(1) != 0;
    const auto a = random_sequence(rng, L, complex_entries);
    const auto b = random_sequence(rng, L, complex_entries);
    const Code ca(1, L, {a.entries().begin(), a.entries().end()});
    const Code cb(1, L, {b.entries().begin(), b.entries().end()});
    for (auto _ : state) benchmark::DoNotOptimize(correlation_profile(ca, cb, CorrelationMode::aperiodic));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AperiodicProfile)->ArgsProduct({{64, 256, 1024}, {0, 1}});

void BM_VerifyCcc(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const auto seed = seed_ccc("hadamard:" + std::to_string(M));
    const auto set = build_snc_ccc(seed, mos_generate(M, MosKind::hadamard), make_partition(static_cast<int>(M), M, PartitionStrategy::even));
    for (auto _ : state) benchmark::DoNotOptimize(verify_ccc(set));
}
BENCHMARK(BM_VerifyCcc)->Arg(4)->Arg(8)->Arg(16);

void BM_PermutationSearch(benchmark::State& state) {
    const auto M = static_cast<std::size_t>(state.range(0));
    const auto P = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(search_perm_family(M, P, true));
}
BENCHMARK(BM_PermutationSearch)->Args({4, 4})->Args({8, 4})->Args({8, 2});

}  // namespace

BENCHMARK_MAIN();
