#include <benchmark/benchmark.h>

#include "foldcusp/bundles.hpp"
#include "foldcusp/curve_moves.hpp"
#include "foldcusp/generator.hpp"
#include "foldcusp/homology.hpp"
#include "foldcusp/surface.hpp"

using namespace foldcusp;

namespace {

SurfacePtr surface_of_size(int level) {
    SurfacePtr m = canonical_surface(SurfaceClass{true, 2});
    for (int i = 0; i < level; ++i) m = subdivide(m).sub;
    return m;
}

void BM_BuildSurface(benchmark::State& state) {
    const GluingScheme s = torus_diag_scheme(static_cast<int>(state.range(0)),
                                             static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_surface(s));
}
BENCHMARK(BM_BuildSurface)->Arg(3)->Arg(8);

void BM_Subdivide(benchmark::State& state) {
    auto m = surface_of_size(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(subdivide(m).sub);
}
BENCHMARK(BM_Subdivide)->Arg(0)->Arg(1);

void BM_Homology(benchmark::State& state) {
    auto m = surface_of_size(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(homology(m));
}
BENCHMARK(BM_Homology)->Arg(0)->Arg(1);

void BM_TangentEuler(benchmark::State& state) {
    auto m = surface_of_size(static_cast<int>(state.range(0)));
    auto h = homology(m);
    for (auto _ : state) {
        auto b = discrete_tangent(m);
        benchmark::DoNotOptimize(bundle_invariants(b, h));
    }
}
BENCHMARK(BM_TangentEuler)->Arg(0)->Arg(1);

void BM_FoldEuler(benchmark::State& state) {
    Rng rng(5);
    auto m = surface_of_size(0);
    auto h = homology(m);
    auto curve = random_curve(rng, m, true);
    auto tangent = discrete_tangent(m);
    for (auto _ : state) {
        auto b = fold_modify(tangent, *curve);
        benchmark::DoNotOptimize(bundle_invariants(b, h));
    }
}
BENCHMARK(BM_FoldEuler);

void BM_RealizeClass(benchmark::State& state) {
    auto m = canonical_surface(SurfaceClass{true, static_cast<int>(state.range(0))});
    auto h = homology(m);
    std::vector<Z2Class1> classes{h.class_of_basis(0)};
    for (auto _ : state) benchmark::DoNotOptimize(realize_classes(m, classes));
}
BENCHMARK(BM_RealizeClass)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
