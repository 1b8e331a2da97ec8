#include <benchmark/benchmark.h>

#include <random>

#include "porism/blaschke.hpp"
#include "porism/cmv.hpp"
#include "porism/numrange.hpp"
#include "porism/poncelet.hpp"

using porism::cplx;

namespace {

std::vector<cplx> random_foci(int n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> out;
    for (int i = 0; i < n; ++i) out.push_back(std::polar(0.9 * std::sqrt(u(rng)), porism::kTwoPi * u(rng)));
    return out;
}

void BM_Solve(benchmark::State& state) {
    const auto b = porism::blaschke::BlaschkeProduct::from_foci(random_foci(static_cast<int>(state.range(0))));
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(porism::blaschke::solve(b, porism::unit(t)));
        t += 0.01;
    }
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(4, 64);

void BM_CharPoly(benchmark::State& state) {
    const auto foci = random_foci(static_cast<int>(state.range(0)));
    const auto al = porism::opuc::verblunsky_from_poly(porism::opuc::monic_from_foci(foci));
    const auto m = porism::cmv::unitary_dilation(al, porism::unit(0.3));
    for (auto _ : state) benchmark::DoNotOptimize(porism::cmv::char_poly(m));
}
BENCHMARK(BM_CharPoly)->RangeMultiplier(2)->Range(4, 32);

void BM_Boundary(benchmark::State& state) {
    const auto al = porism::opuc::verblunsky_from_poly(porism::opuc::monic_from_foci(random_foci(static_cast<int>(state.range(0)))));
    const auto m = porism::cmv::cutoff_cmv(al);
    for (auto _ : state) benchmark::DoNotOptimize(porism::numrange::boundary(m, 256));
}
BENCHMARK(BM_Boundary)->RangeMultiplier(2)->Range(4, 16);

void BM_SamplePackage(benchmark::State& state) {
    const porism::poncelet::PonceletFamily fam(random_foci(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(porism::poncelet::sample_package(fam, 128));
}
BENCHMARK(BM_SamplePackage)->DenseRange(2, 8, 3);

}  // namespace

BENCHMARK_MAIN();
