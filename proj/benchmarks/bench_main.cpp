#include <benchmark/benchmark.h>

#include "graphjac/divisor.hpp"
#include "graphjac/gluing.hpp"
#include "graphjac/intlinalg.hpp"
#include "graphjac/jacobian.hpp"
#include "graphjac/planar.hpp"
#include "graphjac/tuttepoly.hpp"

namespace {

using namespace graphjac;

void bm_snf_reduced_laplacian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const IntMatrix m = reduced_laplacian(complete_graph(n)).reduced;
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_snf_reduced_laplacian)->Arg(6)->Arg(10)->Arg(14)->Arg(20);

void bm_jacobian_glued_cycles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = glue_cycles_along_path(n, n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(jacobian(g));
}
BENCHMARK(bm_jacobian_glued_cycles)->Arg(10)->Arg(30)->Arg(60);

void bm_spanning_tree_count(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = fan(1, n);
    for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(g));
}
BENCHMARK(bm_spanning_tree_count)->Arg(10)->Arg(30)->Arg(60);

void bm_tutte_polynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = complete_graph(n);
    for (auto _ : state) benchmark::DoNotOptimize(tutte_polynomial(g));
}
BENCHMARK(bm_tutte_polynomial)->Arg(4)->Arg(5)->Arg(6);

void bm_q_reduce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = glue_cycles_along_path(n, n, 1);
    Divisor d(g.vertex_count(), 0);
    d[1] = -n;
    d[2] = 2 * n;
    for (auto _ : state) benchmark::DoNotOptimize(q_reduce(g, d, 0));
}
BENCHMARK(bm_q_reduce)->Arg(10)->Arg(30);

} // namespace

BENCHMARK_MAIN();
