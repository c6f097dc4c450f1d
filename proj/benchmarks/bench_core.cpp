#include <benchmark/benchmark.h>

#include <random>

#include "ktheta/exact_linalg.hpp"
#include "ktheta/fock.hpp"
#include "ktheta/verifier.hpp"

using namespace ktheta;

namespace {

SparseIntMatrix random_matrix(long rows, long cols, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> val(-6, 6);
    SparseIntMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            if (gen() % 3 == 0) m.add(r, c, val(gen));
        }
    }
    return m;
}

void BM_RankBareiss(benchmark::State& state) {
    const long n = state.range(0);
    const SparseIntMatrix m = random_matrix(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m));
}

void BM_RankModP(benchmark::State& state) {
    const long n = state.range(0);
    const SparseIntMatrix m = random_matrix(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank_modp(m));
}

void BM_Spectrum(benchmark::State& state) {
    const FockRealization r = build_realization(parse_pair("(Sp2R,O(2,2))"), 0);
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(r, d).entries.size());
}

void BM_SpectrumTwoFactor(benchmark::State& state) {
    const FockRealization r = build_realization(parse_pair("(O(2,1),Sp4R)"), 0);
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum(r, d).entries.size());
}

void BM_DegreeFormula(benchmark::State& state) {
    const DualPairConfig cfg = parse_pair("(Sp4R,O(4,2))");
    const KTypeParam t = parse_ktype("U2[3,1]");
    for (auto _ : state) benchmark::DoNotOptimize(degree_formula(cfg, 0, t));
}

void BM_Dim(benchmark::State& state) {
    const KTypeParam t = parse_ktype("O5[4,2;+]");
    for (auto _ : state) benchmark::DoNotOptimize(dim(t).get_ui());
}

} // namespace

BENCHMARK(BM_RankBareiss)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RankModP)->Arg(32)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_SpectrumTwoFactor)->Arg(4)->Arg(6);
BENCHMARK(BM_DegreeFormula);
BENCHMARK(BM_Dim);

BENCHMARK_MAIN();
