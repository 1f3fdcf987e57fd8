#include <benchmark/benchmark.h>

#include "gegchain/chain.hpp"
#include "gegchain/dieudonne.hpp"
#include "gegchain/metrics.hpp"
#include "gegchain/numerics.hpp"
#include "gegchain/positivity.hpp"

namespace {

void BM_eig_symmetric(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const gegchain::GegenbauerParam p(1.0);
    const gegchain::SymmetricMatrix theta = gegchain::tridiagonal_metric(n, p, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(gegchain::eig_symmetric(theta));
}
BENCHMARK(BM_eig_symmetric)->Arg(9)->Arg(20)->Arg(40);

void BM_boundary(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const gegchain::GegenbauerParam p(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(gegchain::boundary(n, p, 0, 1e-9));
}
BENCHMARK(BM_boundary)->Arg(5)->Arg(9);

void BM_solve_banded(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const gegchain::GegenbauerParam p(1.0);
    const gegchain::ChainHamiltonian h = gegchain::build_hamiltonian(n, p);
    for (auto _ : state) benchmark::DoNotOptimize(gegchain::solve_banded(h, 2, 1e-10));
}
BENCHMARK(BM_solve_banded)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
