#pragma once

#include <array>
#include <cstdint>

#include "ebsl/types.hpp"

namespace ebsl::cli {

/// SplitMix64; stable across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) noexcept;

 private:
  std::uint64_t state_;
};

/// q(x) = c0 + sum_{j=1..3} a_j cos jx with coefficients in [-2, 2], boundary
/// coefficients in [-2, 2] and rho drawn from [0.25, 2]. Cosine terms keep
/// q'(0) = q'(pi) = 0, so the eigenvalue asymptotics settle quickly.
struct RandomProblem {
  double constant = 0.0;
  std::array<double, 3> cos_coeffs{};
  BoundaryCoefficients boundary;

  double q(double x) const noexcept;
  ProblemCoefficients build(std::size_t intervals) const;
};

RandomProblem random_problem(std::uint64_t seed);

}  // namespace ebsl::cli
