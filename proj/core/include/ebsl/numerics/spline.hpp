#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ebsl::numerics {

/// Not-a-knot cubic spline through samples on a uniform grid. Reproduces
/// cubics exactly; used both as the interpolant of the potential between grid
/// nodes and as the differentiator of the kernel diagonal.
class CubicSpline {
 public:
  CubicSpline() = default;
  /// Requires at least 3 samples (3 samples give the interpolating parabola).
  CubicSpline(double x0, double step, std::vector<double> values);

  double operator()(double x) const noexcept;
  double derivative(double x) const noexcept;

  /// Spline derivative at every node.
  std::vector<double> node_derivatives() const;

  double x0() const noexcept { return x0_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return y_.size(); }
  std::span<const double> values() const noexcept { return y_; }

 private:
  std::size_t segment(double x) const noexcept;

  double x0_ = 0.0;
  double step_ = 1.0;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the nodes
};

}  // namespace ebsl::numerics
