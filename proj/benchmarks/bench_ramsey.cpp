#include <benchmark/benchmark.h>

#include "ramsey/averaging.hpp"
#include "ramsey/evolution.hpp"
#include "ramsey/spectroscopy.hpp"
#include "ramsey/units.hpp"

using namespace ramsey;

namespace {

const double eta = units::ghz_to_angular(0.1);

struct Point {
    RegimeQuantities res;
    RegimeQuantities disp;
    DriveParams drive;
};

Point operating_point(double omega_ghz) {
    const DriveParams drive{eta, units::ghz_to_angular(omega_ghz)};
    const auto pair = bias_quantities(default_transmon(), drive);
    return {pair.res, pair.disp, drive};
}

void BM_i_s_dawson(benchmark::State& state) {
    double y = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(i_s_dawson(y, 1.0));
        y = y > 30.0 ? 0.1 : y + 0.37;
    }
}
BENCHMARK(BM_i_s_dawson);

void BM_i_s_quadrature(benchmark::State& state) {
    double y = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(i_s_quadrature(y, 1.0));
        y = y > 30.0 ? 0.1 : y + 0.37;
    }
}
BENCHMARK(BM_i_s_quadrature);

void BM_compose_train(benchmark::State& state) {
    const auto p = operating_point(4.505);
    const BiasTrain train{static_cast<int>(state.range(0)), 1.1e-9, 0.045};
    for (auto _ : state) benchmark::DoNotOptimize(compose_train(p.res, p.disp, p.drive, train));
}
BENCHMARK(BM_compose_train)->Arg(2)->Arg(3)->Arg(8);

void BM_pe_avg_double(benchmark::State& state) {
    const auto p = operating_point(4.505);
    const AveragingParams avg{0.68 * units::pi / (3.0 * eta), 0.001, 2};
    for (auto _ : state) benchmark::DoNotOptimize(pe_avg_double(p.res, p.disp, avg));
}
BENCHMARK(BM_pe_avg_double);

void BM_pe_avg_triple_numeric(benchmark::State& state) {
    const auto p = operating_point(4.3);
    const AveragingParams avg{0.68 * units::pi / (2.0 * eta), 0.045, 3};
    for (auto _ : state) benchmark::DoNotOptimize(pe_avg_triple_numeric(p.res, p.disp, avg));
}
BENCHMARK(BM_pe_avg_triple_numeric);

void BM_double_spectrum(benchmark::State& state) {
    SystemParams system;
    system.eta = eta;
    SchemeSpec scheme;
    scheme.s = 0.68 * units::pi / (3.0 * eta);
    scheme.ratio_r = 0.001;
    const SweepPlan plan{3.5, 5.5, 0.001, true, 0.0001};
    for (auto _ : state) benchmark::DoNotOptimize(measure(system, scheme, plan));
}
BENCHMARK(BM_double_spectrum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
