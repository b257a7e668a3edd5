#include "ebsl/numerics/spline.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

CubicSpline::CubicSpline(double x0, double step, std::vector<double> values)
    : x0_(x0), step_(step), y_(std::move(values)) {
  const std::size_t n = y_.size();
  if (n < 3) throw InvalidArgument("CubicSpline: need at least 3 samples");
  if (!(step_ > 0.0)) throw InvalidArgument("CubicSpline: step must be positive");

  const double inv_h2 = 1.0 / (step_ * step_);
  m_.assign(n, 0.0);
  if (n == 3) {
    const double c = (y_[0] - 2.0 * y_[1] + y_[2]) * inv_h2;
    std::fill(m_.begin(), m_.end(), c);
    return;
  }

  // Uniform spacing: not-a-knot at node 1 together with the continuity
  // equation at node 1 collapses to M_1 = second difference at 1 (same at the
  // far end). The remaining interior equations are tridiagonal (1, 4, 1).
  const std::size_t last = n - 1;
  auto second_diff = [&](std::size_t i) {
    return (y_[i - 1] - 2.0 * y_[i] + y_[i + 1]) * inv_h2;
  };
  m_[1] = second_diff(1);
  m_[last - 1] = second_diff(last - 1);

  if (last >= 4) {
    const std::size_t lo = 2, hi = last - 2;  // unknowns lo..hi inclusive
    const std::size_t k = hi - lo + 1;
    std::vector<double> diag(k, 4.0), rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = 6.0 * second_diff(lo + j);
    rhs.front() -= m_[lo - 1];
    rhs.back() -= m_[hi + 1];
    // Thomas algorithm with unit off-diagonals.
    for (std::size_t j = 1; j < k; ++j) {
      const double w = 1.0 / diag[j - 1];
      diag[j] -= w;
      rhs[j] -= w * rhs[j - 1];
    }
    m_[hi] = rhs[k - 1] / diag[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) {
      m_[lo + j] = (rhs[j] - m_[lo + j + 1]) / diag[j];
    }
  }
  m_[0] = 2.0 * m_[1] - m_[2];
  m_[last] = 2.0 * m_[last - 1] - m_[last - 2];
}

std::size_t CubicSpline::segment(double x) const noexcept {
  const double u = (x - x0_) / step_;
  const auto last_segment = static_cast<double>(y_.size() - 2);
  const double k = std::clamp(std::floor(u), 0.0, last_segment);
  return static_cast<std::size_t>(k);
}

double CubicSpline::operator()(double x) const noexcept {
  const std::size_t k = segment(x);
  const double t = x - (x0_ + static_cast<double>(k) * step_);
  const double h = step_;
  const double b = (y_[k + 1] - y_[k]) / h - h * (2.0 * m_[k] + m_[k + 1]) / 6.0;
  return y_[k] + t * (b + t * (0.5 * m_[k] + t * (m_[k + 1] - m_[k]) / (6.0 * h)));
}

double CubicSpline::derivative(double x) const noexcept {
  const std::size_t k = segment(x);
  const double t = x - (x0_ + static_cast<double>(k) * step_);
  const double h = step_;
  const double b = (y_[k + 1] - y_[k]) / h - h * (2.0 * m_[k] + m_[k + 1]) / 6.0;
  return b + t * (m_[k] + t * (m_[k + 1] - m_[k]) / (2.0 * h));
}

std::vector<double> CubicSpline::node_derivatives() const {
  const std::size_t n = y_.size();
  const double h = step_;
  std::vector<double> d(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d[k] = (y_[k + 1] - y_[k]) / h - h * (2.0 * m_[k] + m_[k + 1]) / 6.0;
  }
  d[n - 1] = (y_[n - 1] - y_[n - 2]) / h + h * (m_[n - 2] + 2.0 * m_[n - 1]) / 6.0;
  return d;
}

}  // namespace ebsl::numerics
