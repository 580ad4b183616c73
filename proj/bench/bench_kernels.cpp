// Serial vs parallel kernels: Bareiss determinants of cover Laplacians,
// fiberwise Mahler sums and the cover growth table.

#include <benchmark/benchmark.h>

#include <string>

#include "lapgraph/io.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"
#include "lapgraph/parallel.hpp"
#include "lapgraph/spanning.hpp"

using namespace lapgraph;

namespace {

const std::string kData = LAPGRAPH_DATA_DIR;

// Reduced Laplacian of the n-fold ladder cover: a (2n-1) x (2n-1) matrix.
IntMatrix reduced_cover_laplacian(long n) {
  VoltageGraph ladder = read_graph_file(kData + "/ladder.lg").graph;
  IntMatrix l = laplacian_finite(cover_graph(ladder, Sublattice::cyclic(n)));
  IntMatrix r(l.rows() - 1, l.cols() - 1);
  for (std::size_t i = 0; i + 1 < l.rows(); ++i)
    for (std::size_t j = 0; j + 1 < l.cols(); ++j) r(i, j) = l(i, j);
  return r;
}

void BM_DetSerial(benchmark::State& state) {
  IntMatrix m = reduced_cover_laplacian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(int_det_serial(m));
}

void BM_DetParallel(benchmark::State& state) {
  IntMatrix m = reduced_cover_laplacian(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(int_det(m));
}

const LaurentPoly& mitsubishi() {
  static const LaurentPoly f = parse_laurent("6-x-x^-1-y-y^-1-x*y^-1-x^-1*y");
  return f;
}

void BM_MahlerSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mahler_2var_serial(mitsubishi(), state.range(0)));
}

void BM_MahlerParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mahler_2var(mitsubishi(), state.range(0)));
}

void BM_GrowthSerial(benchmark::State& state) {
  VoltageGraph g = read_graph_file(kData + "/girder.lg").graph;
  for (auto _ : state) benchmark::DoNotOptimize(growth_covers_serial(g, doubling_schedule(state.range(0))));
}

void BM_GrowthParallel(benchmark::State& state) {
  VoltageGraph g = read_graph_file(kData + "/girder.lg").graph;
  for (auto _ : state) benchmark::DoNotOptimize(growth_covers(g, doubling_schedule(state.range(0))));
}

}  // namespace

BENCHMARK(BM_DetSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MahlerSerial)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MahlerParallel)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GrowthSerial)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GrowthParallel)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();

int main(int argc, char** argv) {
  apply_thread_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
