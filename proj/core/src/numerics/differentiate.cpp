#include "ebsl/numerics/differentiate.hpp"

#include <vector>

#include <Eigen/Sparse>

#include "ebsl/errors.hpp"
#include "ebsl/numerics/spline.hpp"

namespace ebsl::numerics {

namespace {

std::vector<double> centered(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  std::vector<double> d(n);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
  d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
  d[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
  return d;
}

// Reinsch smoothing spline on a uniform grid; returns node derivatives of the
// natural cubic spline through the smoothed values.
std::vector<double> smoothing_spline(std::span<const double> y, double h, double p) {
  const auto n = static_cast<Eigen::Index>(y.size());
  const Eigen::Index m = n - 2;
  // Q^T y and (R + p Q^T Q), both banded.
  Eigen::VectorXd qty(m);
  for (Eigen::Index i = 0; i < m; ++i) qty[i] = (y[i] - 2.0 * y[i + 1] + y[i + 2]) / h;

  std::vector<Eigen::Triplet<double>> t;
  const double inv_h2 = 1.0 / (h * h);
  for (Eigen::Index i = 0; i < m; ++i) {
    t.emplace_back(i, i, 2.0 * h / 3.0 + p * 6.0 * inv_h2);
    if (i + 1 < m) {
      t.emplace_back(i, i + 1, h / 6.0 - p * 4.0 * inv_h2);
      t.emplace_back(i + 1, i, h / 6.0 - p * 4.0 * inv_h2);
    }
    if (i + 2 < m) {
      t.emplace_back(i, i + 2, p * inv_h2);
      t.emplace_back(i + 2, i, p * inv_h2);
    }
  }
  Eigen::SparseMatrix<double> a(m, m);
  a.setFromTriplets(t.begin(), t.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success) throw Error("diff_diagonal: smoothing system failed");
  const Eigen::VectorXd gamma = solver.solve(qty);

  // g = y - p Q gamma
  std::vector<double> g(y.begin(), y.end());
  std::vector<double> m2(static_cast<std::size_t>(n), 0.0);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double c = p * gamma[i] / h;
    g[static_cast<std::size_t>(i)] -= c;
    g[static_cast<std::size_t>(i + 1)] += 2.0 * c;
    g[static_cast<std::size_t>(i + 2)] -= c;
    m2[static_cast<std::size_t>(i + 1)] = gamma[i];
  }
  std::vector<double> d(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k + 1 < g.size(); ++k) {
    d[k] = (g[k + 1] - g[k]) / h - h * (2.0 * m2[k] + m2[k + 1]) / 6.0;
  }
  const std::size_t l = g.size() - 1;
  d[l] = (g[l] - g[l - 1]) / h + h * (m2[l - 1] + 2.0 * m2[l]) / 6.0;
  return d;
}

}  // namespace

std::vector<double> diff_diagonal(std::span<const double> values, double step,
                                  const DiffOptions& options) {
  if (values.size() < 5) throw InvalidArgument("diff_diagonal: need at least 5 samples");
  if (!(step > 0.0)) throw InvalidArgument("diff_diagonal: step must be positive");
  if (options.scheme == DiffScheme::Centered) return centered(values, step);
  if (options.smoothing > 0.0) return smoothing_spline(values, step, options.smoothing);
  const CubicSpline spline(0.0, step, std::vector<double>(values.begin(), values.end()));
  return spline.node_derivatives();
}

}  // namespace ebsl::numerics
