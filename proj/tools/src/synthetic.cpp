#include "ebsl_cli/synthetic.hpp"

#include <cmath>

namespace ebsl::cli {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform(double lo, double hi) noexcept {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double RandomProblem::q(double x) const noexcept {
  double v = constant;
  for (std::size_t j = 0; j < cos_coeffs.size(); ++j) {
    v += cos_coeffs[j] * std::cos(static_cast<double>(j + 1) * x);
  }
  return v;
}

ProblemCoefficients RandomProblem::build(std::size_t intervals) const {
  return ProblemCoefficients::from_function([this](double x) { return q(x); },
                                            UniformGrid(intervals), boundary);
}

RandomProblem random_problem(std::uint64_t seed) {
  SplitMix64 rng(seed);
  RandomProblem p;
  p.constant = rng.uniform(-2.0, 2.0);
  for (double& a : p.cos_coeffs) a = rng.uniform(-2.0, 2.0);
  p.boundary.h = rng.uniform(-2.0, 2.0);
  p.boundary.H = rng.uniform(-2.0, 2.0);
  p.boundary.H1 = rng.uniform(-2.0, 2.0);
  const double rho = rng.uniform(0.25, 2.0);
  p.boundary.H2 = p.boundary.H * p.boundary.H1 - rho;
  return p;
}

}  // namespace ebsl::cli
