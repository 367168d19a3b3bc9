#include <benchmark/benchmark.h>

#include <cmath>

#include "nclwe/dist.hpp"
#include "nclwe/pke_m2t.hpp"

namespace {

void BM_GroupMultiply(benchmark::State& state) {
    const auto p = nclwe::GroupParams::for_t(11);
    nclwe::GroupElement w1{1, 513}, w2{1, 7};
    for (auto _ : state) {
        w1 = nclwe::multiply(p, w1, w2);
        benchmark::DoNotOptimize(w1);
    }
}
BENCHMARK(BM_GroupMultiply);

void BM_RmpfVec(benchmark::State& state) {
    const auto p = nclwe::GroupParams::for_t(11);
    nclwe::RandomSource src(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    nclwe::ElementVector w(n);
    nclwe::ExponentVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = nclwe::uniform_cycle_element(src, p,
                                            i < n / 2 ? nclwe::CycleBase::ba : nclwe::CycleBase::a);
        x[i] = nclwe::uniform_mod(src, p.rho);
    }
    for (auto _ : state) {
        auto v = nclwe::rmpf_vec(p, w, x);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RmpfVec)->Arg(16)->Arg(64);

void BM_KeygenEncryptDecrypt(benchmark::State& state) {
    nclwe::M2tParams params;
    params.group = nclwe::GroupParams::for_t(11);
    params.m = 32;
    params.n = 16;
    params.n_c = 8;
    params.sigma = std::pow(static_cast<double>(params.group.rho), 0.25);
    nclwe::RandomSource src(1);
    for (auto _ : state) {
        auto [pk, sk] = nclwe::keygen(src, params);
        const auto ct = nclwe::encrypt(src, pk, 1);
        benchmark::DoNotOptimize(nclwe::decrypt(sk, ct));
    }
}
BENCHMARK(BM_KeygenEncryptDecrypt);

void BM_ErrorTermPmf(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    const std::uint64_t rho = 1024;
    const double sigma = std::pow(static_cast<double>(rho), 0.25);
    for (auto _ : state) {
        auto pmf = nclwe::dist::error_term_pmf(r, nclwe::GaussianSpec{sigma, rho});
        benchmark::DoNotOptimize(pmf);
    }
}
BENCHMARK(BM_ErrorTermPmf)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
