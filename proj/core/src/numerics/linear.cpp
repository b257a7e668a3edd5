#include "ebsl/numerics/linear.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

DenseMatrix DenseMatrix::identity(std::size_t size) {
  DenseMatrix m(size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
  return m;
}

DenseSolution solve_dense(const DenseMatrix& a, std::span<const double> b, double pivot_floor) {
  if (b.size() != a.n) throw InvalidArgument("solve_dense: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(a.n);
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMatrix> A(a.data.data(), n, n);
  const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), n);

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double pivot = n == 0 ? 0.0 : lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(pivot >= pivot_floor)) {
    throw ConditioningError("solve_dense: matrix singular to working precision (smallest pivot " +
                                std::to_string(pivot) + ")",
                            pivot);
  }
  const Eigen::VectorXd x = lu.solve(rhs);

  DenseSolution out;
  out.x.assign(x.data(), x.data() + n);
  out.smallest_pivot = pivot;
  out.residual = n == 0 ? 0.0 : (A * x - rhs).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace ebsl::numerics
