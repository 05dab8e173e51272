#include <benchmark/benchmark.h>

#include <complex>

#include "homeo/map.hpp"

using namespace homeo;

namespace {

Homeo primitive_chain() {
    return compose(Homeo::translation(Complex{0.5, -0.25}),
                   compose(Homeo::rotation(0.7), Homeo::scaling(1.5)));
}

Homeo glide() {
    return compose(Homeo::translation(Complex{0.001, 0.0}), Homeo::conjugation());
}

Homeo lifted_bump() {
    return plane_from_disk(DiskMap::radial_bump(Complex{0.1, 0.05}, 0.2, 0.05, 0.1));
}

Homeo plane_bump() {
    return cell_bump(make_cell(Homeo::identity(), Complex{0.0, 0.0}, 0.25, 0.1), 0.05);
}

void BM_EvalPrimitiveChain(benchmark::State& state) {
    const Homeo h = primitive_chain();
    Complex z{0.3, 0.4};
    for (auto _ : state) {
        z = h.eval(z);
        if (std::abs(z) > 1e6) z = Complex{0.3, 0.4};
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_EvalPrimitiveChain);

void BM_EvalGlide(benchmark::State& state) {
    const Homeo h = glide();
    Complex z{0.3, 0.4};
    for (auto _ : state) {
        z = h.eval(z);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_EvalGlide);

void BM_EvalCellBump(benchmark::State& state) {
    const Homeo h = plane_bump();
    const Complex z{0.2, 0.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(h.eval(z));
    }
}
BENCHMARK(BM_EvalCellBump);

void BM_EvalLiftedBump(benchmark::State& state) {
    const Homeo h = lifted_bump();
    const Complex z{0.4, 0.2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(h.eval(z));
    }
}
BENCHMARK(BM_EvalLiftedBump);

void BM_EvalInverseRoundTrip(benchmark::State& state) {
    const Homeo h = primitive_chain();
    const Complex z{0.3, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(h.eval_inverse(h.eval(z)));
    }
}
BENCHMARK(BM_EvalInverseRoundTrip);

} // namespace
