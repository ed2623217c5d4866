// Serial reference vs OpenMP kernels on the heavier verifiers.
// The second benchmark argument selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "hopf2x/kernels.hpp"

using namespace hopf2x;

namespace {

void use_exec(const benchmark::State& state)
{
    kernels::set_default_exec(state.range(0) ? kernels::Exec::parallel : kernels::Exec::serial);
}

void BM_first_failure(benchmark::State& state)
{
    const auto exec = state.range(0) ? kernels::Exec::parallel : kernels::Exec::serial;
    const std::size_t n = 1u << 20;
    for (auto _ : state) {
        auto at = kernels::first_failure(
            n, [](std::size_t i) { return (i * 2654435761u) % 1000003u != 17u; }, exec);
        benchmark::DoNotOptimize(at);
    }
}
BENCHMARK(BM_first_failure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_verify_hopf_tensor(benchmark::State& state)
{
    use_exec(state);
    HopfAlgebra h = tensor_hopf(group_algebra(FiniteGroup::symmetric3(), fixtures::Q()),
                                group_algebra(FiniteGroup::dihedral(4), fixtures::Q()));
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(h).ok());
}
BENCHMARK(BM_verify_hopf_tensor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_g2_build_verify(benchmark::State& state)
{
    use_exec(state);
    Hopf2XMod x = linearize_group_2xmod(fixtures::c2c4c2(), fixtures::Q());
    for (auto _ : state) benchmark::DoNotOptimize(verify_simplicial(g2(x)).ok());
}
BENCHMARK(BM_g2_build_verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_moore_both(benchmark::State& state)
{
    use_exec(state);
    TruncatedSimplicialHopf t = g1(fixtures::c4_c2());
    for (auto _ : state) benchmark::DoNotOptimize(moore_complex(t, MooreMode::both).terms.size());
}
BENCHMARK(BM_moore_both)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
