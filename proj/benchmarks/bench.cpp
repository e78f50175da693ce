#include <benchmark/benchmark.h>

#include "u21/cosets.hpp"
#include "u21/lattice.hpp"
#include "u21/sampling.hpp"

using namespace u21;

namespace {

void BM_group_multiply(benchmark::State& state) {
    LocalField F(state.range(0));
    Rng rng(1);
    GroupElem a = random_Kn(F, 2, rng);
    GroupElem b = random_Kn(F, 2, rng);
    for (auto _ : state) {
        GroupElem c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_group_multiply)->Arg(3)->Arg(5);

void BM_random_word(benchmark::State& state) {
    LocalField F(state.range(0));
    Rng rng(2);
    for (auto _ : state) {
        GroupElem g = random_Kn(F, 2, rng);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_random_word)->Arg(3)->Arg(5);

void BM_hecke_reduce(benchmark::State& state) {
    LocalField F(state.range(0));
    CosetRepList L = hecke_reps(F, 2);
    Rng rng(3);
    std::vector<GroupElem> samples;
    for (int i = 0; i < 64; ++i)
        samples.push_back(L.reps[rng.uniform(0, static_cast<long>(L.reps.size()) - 1)] *
                          random_Kn(F, 2, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = coset_reduce(L, samples[i++ % samples.size()]);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hecke_reduce)->Arg(3)->Arg(5);

void BM_level_reduce(benchmark::State& state) {
    LocalField F(state.range(0));
    CosetRepList L = level_reps(F, 2);
    Rng rng(4);
    std::vector<GroupElem> samples;
    for (int i = 0; i < 64; ++i)
        samples.push_back(L.reps[rng.uniform(0, static_cast<long>(L.reps.size()) - 1)] *
                          random_Kn(F, 1, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = coset_reduce(L, samples[i++ % samples.size()]);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_level_reduce)->Arg(3)->Arg(5);

void BM_fourier_roundtrip(benchmark::State& state) {
    LocalField F(3);
    Rng rng(5);
    LatticeFn f = random_lattice_fn(F, rng, true);
    for (auto _ : state) {
        LatticeFn g = fourier_hat(fourier_hat(f));
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_fourier_roundtrip);

void BM_zeta_integral(benchmark::State& state) {
    LocalField F(3);
    Rng rng(6);
    Mat2Q g = random_lattice_stabilizer(F, 2, rng);
    LatticeFn phi = fourier_hat(LatticeFn::phi_n(F, 2));
    for (auto _ : state) {
        RationalFn z = z_integral(g, phi);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_zeta_integral);

void BM_newvector_value(benchmark::State& state) {
    LocalField F(3);
    Rng rng(7);
    GroupElem2 k = random_KnH(F, 2, rng);
    LatticeFn phi = LatticeFn::phi_n(F, 2);
    for (auto _ : state) {
        RationalFn v = f_function(k, phi);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_newvector_value);

}  // namespace

BENCHMARK_MAIN();
