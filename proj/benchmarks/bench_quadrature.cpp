#include <benchmark/benchmark.h>

#include <cmath>

#include "bergman/moments.hpp"
#include "bergman/quadrature.hpp"
#include "bergman/weights.hpp"

namespace {

void BM_GaussJacobiRule(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rule = bergman::gauss_jacobi_rule(order, 0.5);
        benchmark::DoNotOptimize(rule.nodes.data());
    }
}
BENCHMARK(BM_GaussJacobiRule)->Arg(64)->Arg(256)->Arg(1024)->Arg(2048);

void BM_MomentTable(benchmark::State& state) {
    auto mu = bergman::WeightSpec::parse("alpha=0.5;M=exp-r2:1");
    int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = bergman::MomentTable::compute(mu, n_max);
        benchmark::DoNotOptimize(table.value(n_max));
    }
}
BENCHMARK(BM_MomentTable)->Arg(128)->Arg(512)->Arg(2000);

void BM_IntegrateCompensated(benchmark::State& state) {
    auto rule = bergman::gauss_jacobi_rule(static_cast<int>(state.range(0)), 0.5);
    auto f = [](double u) { return std::exp(u - 1.0) * u; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(bergman::integrate(rule, f));
    }
}
BENCHMARK(BM_IntegrateCompensated)->Arg(256)->Arg(2048);

void BM_IntegrateExtended(benchmark::State& state) {
    auto rule = bergman::gauss_jacobi_rule(static_cast<int>(state.range(0)), 0.5);
    auto f = [](double u) { return std::exp(u - 1.0) * u; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(bergman::integrate(rule, f, bergman::Precision::Extended));
    }
}
BENCHMARK(BM_IntegrateExtended)->Arg(256)->Arg(2048);

} // namespace
