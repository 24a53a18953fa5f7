#include <benchmark/benchmark.h>

#include "approxdim/approx.hpp"
#include "approxdim/corpus.hpp"
#include "approxdim/transport.hpp"

using namespace approxdim;

namespace {

Matrix random_matrix(const Fp& F, std::size_t n, Rng& rng)
{
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rng.field_element(F);
    return m;
}

void BM_rref(benchmark::State& state)
{
    Fp F(kDefaultPrime);
    Rng rng(1);
    Matrix m = random_matrix(F, static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(64);

void BM_kernel_basis(benchmark::State& state)
{
    Fp F(kDefaultPrime);
    Rng rng(2);
    Matrix m = random_matrix(F, 48, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel_basis);

void BM_build_algebra(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(corpus_algebra("square"));
}
BENCHMARK(BM_build_algebra);

void BM_hom_basis(benchmark::State& state)
{
    AlgebraPtr a = corpus_algebra("nak33");
    RepPtr reg = regular_module(a);
    RepPtr co = cogenerator_module(a);
    for (auto _ : state)
        benchmark::DoNotOptimize(hom_basis(reg, co));
}
BENCHMARK(BM_hom_basis);

void BM_tau(benchmark::State& state)
{
    AlgebraPtr a = corpus_algebra("square");
    RepPtr s = standard_module(a, StandardKind::Simple, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(tau(s));
}
BENCHMARK(BM_tau);

void BM_decompose_regular(benchmark::State& state)
{
    AlgebraPtr a = corpus_algebra("square");
    RepPtr reg = regular_module(a);
    for (auto _ : state) {
        Rng rng(0);
        benchmark::DoNotOptimize(decompose(reg, rng));
    }
}
BENCHMARK(BM_decompose_regular);

void BM_minimal_approximation(benchmark::State& state)
{
    AlgebraPtr a = corpus_algebra("a3");
    Rng rng(0);
    AddClass dlam = add_class(cogenerator_module(a), rng);
    RepPtr reg = regular_module(a);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_left_approximation(reg, dlam));
}
BENCHMARK(BM_minimal_approximation);

void BM_fadim(benchmark::State& state)
{
    AlgebraPtr a = corpus_algebra("nak33");
    Rng rng(0);
    AddClass lam = add_class(regular_module(a), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(fadim_chain(lam, 8));
}
BENCHMARK(BM_fadim);

void BM_verify_fadim_transfer(benchmark::State& state)
{
    PairSpec pair = curated_pair("nak33-syz1");
    for (auto _ : state)
        benchmark::DoNotOptimize(run_check(pair, CheckKind::Fadim, 6, 0));
}
BENCHMARK(BM_verify_fadim_transfer);

} // namespace

BENCHMARK_MAIN();
