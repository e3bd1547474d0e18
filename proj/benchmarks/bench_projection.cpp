#include <benchmark/benchmark.h>

#include <memory>

#include "bergman/analysis.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/grid.hpp"
#include "bergman/projector.hpp"
#include "bergman/weights.hpp"

namespace {

void BM_AngularModes(benchmark::State& state) {
    auto mu = bergman::WeightSpec::parse("alpha=0;M=poly-r2:2,-1");
    auto grid = std::make_shared<const bergman::PolarGrid>(mu, static_cast<int>(state.range(0)),
                                                           static_cast<int>(state.range(1)));
    auto f = bergman::sample("sing:0.4", grid);
    for (auto _ : state) {
        auto withmodes = bergman::angular_modes(f);
        benchmark::DoNotOptimize(withmodes.mode(0, 0));
    }
}
BENCHMARK(BM_AngularModes)->Args({256, 512})->Args({512, 2048});

void BM_Project(benchmark::State& state) {
    auto mu = bergman::WeightSpec::parse("alpha=0;M=poly-r2:2,-1");
    auto grid = std::make_shared<const bergman::PolarGrid>(mu, 256, 512);
    auto f = bergman::angular_modes(bergman::sample("sing:0.4", grid));
    int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto coeffs = bergman::project(f, mu, degree);
        benchmark::DoNotOptimize(coeffs.c.data());
    }
}
BENCHMARK(BM_Project)->Arg(32)->Arg(128);

void BM_BvReport(benchmark::State& state) {
    auto mu = bergman::WeightSpec::parse("alpha=0.5;M=exp-r2:1");
    int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = bergman::bv_report(mu, 0.5, n_max);
        benchmark::DoNotOptimize(report.sup_scaled);
    }
}
BENCHMARK(BM_BvReport)->Arg(256)->Arg(2000);

} // namespace
