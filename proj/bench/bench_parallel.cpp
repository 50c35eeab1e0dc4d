// Serial reference loops vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "hyperball/convergence.hpp"
#include "hyperball/marginal.hpp"
#include "hyperball/sampling.hpp"

using namespace hyperball;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_SampleCoordinates(benchmark::State& state) {
  const Exec exec = exec_of(state);
  const auto method = state.range(1) == 0 ? sampling::Method::RejectCube : sampling::Method::DirRadius;
  for (auto _ : state) {
    auto xs = sampling::sample_coordinate_streams(Dimension(8), method, 1 << 18, 1234, exec);
    benchmark::DoNotOptimize(xs.data());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 18));
}
BENCHMARK(BM_SampleCoordinates)->ArgsProduct({{0, 1}, {0, 1}})->ArgNames({"parallel", "dir_radius"});

void BM_PdfGrid(benchmark::State& state) {
  const marginal::MarginalDist d{Dimension(50)};
  std::vector<double> xs(1 << 20);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = -1.0 + 2.0 * static_cast<double>(i) / (xs.size() - 1);
  std::vector<double> out(xs.size());
  for (auto _ : state) {
    marginal::pdf_grid(d, xs, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_PdfGrid)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_ConvergenceReport(benchmark::State& state) {
  const auto dims = convergence::default_report_dims();
  for (auto _ : state) {
    auto report = convergence::build_report(dims, exec_of(state));
    benchmark::DoNotOptimize(report.pdf_sup_err.data());
  }
}
BENCHMARK(BM_ConvergenceReport)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
