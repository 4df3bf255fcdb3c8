#include <benchmark/benchmark.h>

#include "aqcube/aq_complex.hpp"
#include "aqcube/cubical_complex.hpp"
#include "aqcube/smith.hpp"

using namespace aqcube;

namespace {

IntMatrix dense_matrix(std::size_t n, int seed) {
    IntMatrix m(n, n);
    unsigned state = static_cast<unsigned>(seed);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            state = state * 1664525u + 1013904223u;
            m.at(r, c) = static_cast<int>(state % 19) - 9;
        }
    return m;
}

void bm_snf(benchmark::State& state) {
    IntMatrix m = dense_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        SmithResult r = snf(m);
        benchmark::DoNotOptimize(r.d);
    }
}
BENCHMARK(bm_snf)->Arg(8)->Arg(16)->Arg(24);

void bm_boundary_cube_complex(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    CoefficientSystem s = constant_system(cube_poset(n), FGAbelianGroup::free_group(2));
    CubicalComplex k = boundary_cube(n);
    for (auto _ : state) {
        CochainComplex c = build_limit_complex(k, s, 1);
        benchmark::DoNotOptimize(c.length());
    }
}
BENCHMARK(bm_boundary_cube_complex)->Arg(2)->Arg(3)->Arg(4);

void bm_cube_cohomology(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    CoefficientSystem s = constant_system(cube_poset(m), FGAbelianGroup::cyclic(Int(12)));
    for (auto _ : state) {
        CochainComplex c = build_cube_cphi(m, s, 1);
        for (int d = c.min_degree(); d <= c.max_degree(); ++d)
            benchmark::DoNotOptimize(c.cohomology_at(d));
    }
}
BENCHMARK(bm_cube_cohomology)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
