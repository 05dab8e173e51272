#include <benchmark/benchmark.h>

#include "homeo/map.hpp"
#include "homeo/metric.hpp"

using namespace homeo;

namespace {

void BM_SupOnDisk(benchmark::State& state) {
    MetricConfig cfg;
    cfg.radial_samples = static_cast<int>(state.range(0));
    cfg.angular_samples = static_cast<int>(state.range(0));
    const Homeo f = compose(Homeo::translation(Complex{0.1, 0.0}), Homeo::scaling(2.0));
    const Homeo g = Homeo::scaling(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sup_on_disk(f, g, 3, cfg));
    }
}
BENCHMARK(BM_SupOnDisk)->Arg(64)->Arg(128)->Arg(256);

void BM_Du(benchmark::State& state) {
    MetricConfig cfg;
    cfg.truncation = static_cast<int>(state.range(0));
    cfg.radial_samples = 64;
    cfg.angular_samples = 64;
    const Homeo f = compose(Homeo::translation(Complex{0.1, 0.0}), Homeo::scaling(2.0));
    const Homeo g = Homeo::scaling(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(du(f, g, cfg));
    }
}
BENCHMARK(BM_Du)->Arg(10)->Arg(40);

} // namespace
