#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ebsl::numerics {

/// Row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) noexcept { return data[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data[i * n + j]; }
  static DenseMatrix identity(std::size_t size);
};

struct DenseSolution {
  std::vector<double> x;
  /// Smallest |U_ii| of the partially pivoted LU factorisation.
  double smallest_pivot = 0.0;
  /// max_i |(A x - b)_i|.
  double residual = 0.0;
};

/// Solves A x = b by LU with partial pivoting. Throws ConditioningError
/// carrying the smallest pivot when it falls below `pivot_floor`.
DenseSolution solve_dense(const DenseMatrix& a, std::span<const double> b,
                          double pivot_floor = 1e-14);

}  // namespace ebsl::numerics
