#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ebsl/forward.hpp"
#include "ebsl/glm.hpp"
#include "ebsl/numerics/product.hpp"

namespace {

using std::numbers::pi;

ebsl::ProblemCoefficients cos2x(std::size_t intervals) {
  return ebsl::ProblemCoefficients::from_function([](double x) { return std::cos(2 * x); },
                                                  ebsl::UniformGrid(intervals), {0.3, 1, 2, 1});
}

// Eigenvalues plus norming constants for N + 1 indices.
void BM_ForwardSolve(benchmark::State& state) {
  const auto p = cos2x(256);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ebsl::forward_solve(p, count));
}
BENCHMARK(BM_ForwardSolve)->Arg(11)->Arg(41)->Unit(benchmark::kMillisecond);

// Full inversion from spectral data on an M-interval grid.
void BM_Reconstruct(benchmark::State& state) {
  const auto data = ebsl::forward_solve(cos2x(256), 41).spectral_data();
  ebsl::ReconstructionOptions o;
  o.intervals = static_cast<std::size_t>(state.range(0));
  o.tail_mode = ebsl::TailMode::FirstOrder;
  for (auto _ : state) benchmark::DoNotOptimize(ebsl::reconstruct_from_spectral_data(data, o));
}
BENCHMARK(BM_Reconstruct)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ProductEval(benchmark::State& state) {
  std::vector<double> roots{-0.5, 0.3};
  for (int n = 2; n <= state.range(0); ++n) {
    const double s = (n - 1) + 0.4 / ((n - 1) * pi);
    roots.push_back(s * s);
  }
  const ebsl::numerics::ProductEvaluator p(roots, -pi, 0.4);
  double lambda = 2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.eval(lambda));
    lambda += 1e-9;
  }
}
BENCHMARK(BM_ProductEval)->Arg(40)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
