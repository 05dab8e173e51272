#include <benchmark/benchmark.h>

#include <random>

#include "homeo/compact.hpp"
#include "homeo/fixed_point.hpp"
#include "homeo/map.hpp"

using namespace homeo;

namespace {

CompactSet random_cloud(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::vector<Complex> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.emplace_back(coord(rng), coord(rng));
    return make_compact_set(std::move(pts));
}

void BM_Hausdorff(benchmark::State& state) {
    const CompactSet a = random_cloud(static_cast<int>(state.range(0)), 1);
    const CompactSet b = random_cloud(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hausdorff(a, b));
    }
}
BENCHMARK(BM_Hausdorff)->Arg(100)->Arg(1000);

void BM_Winding(benchmark::State& state) {
    const Homeo h = Homeo::scaling(2.0);
    const Disk disk{Complex{0.0, 0.0}, 1.0, true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(winding_certificate(h, disk));
    }
}
BENCHMARK(BM_Winding);

void BM_CertifyGrid(benchmark::State& state) {
    const Homeo h = Homeo::translation(Complex{1.0, 0.0});
    const Disk region{Complex{0.0, 0.0}, 2.0, true};
    const double spacing = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_fixed_point_free(h, region, spacing));
    }
}
BENCHMARK(BM_CertifyGrid)->Arg(50)->Arg(200);

} // namespace
