#include "ebsl/numerics/product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

double SignedLog::value() const noexcept {
  if (sign == 0) return 0.0;
  return static_cast<double>(sign) * std::exp(log_abs);
}

SignedLog SignedLog::of(double v) noexcept {
  if (v == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
}

ProductEvaluator::ProductEvaluator(std::vector<double> roots, double scale, double shift,
                                   double cubic)
    : roots_(std::move(roots)), scale_(scale), shift_(shift), cubic_(cubic) {
  if (roots_.size() < 9) {
    throw InvalidArgument("ProductEvaluator: truncation N must be at least 8");
  }
  for (std::size_t n = 1; n < roots_.size(); ++n) {
    if (!(roots_[n] > roots_[n - 1])) {
      throw InvalidArgument("ProductEvaluator: roots must be strictly increasing");
    }
  }
  if (!std::isfinite(shift_) || !std::isfinite(cubic_)) {
    throw InvalidArgument("ProductEvaluator: tail coefficients must be finite");
  }
  if (scale_ == 0.0 || !std::isfinite(scale_)) {
    throw InvalidArgument("ProductEvaluator: scale must be finite and nonzero");
  }
}

SignedLog ProductEvaluator::factor(std::size_t n, double lambda) const noexcept {
  if (n < 2) return SignedLog::of(lambda - roots_[n]);
  const double m = static_cast<double>(n - 1);
  SignedLog f = SignedLog::of(roots_[n] - lambda);
  f.log_abs -= 2.0 * std::log(m);
  return f;
}

SignedLog ProductEvaluator::tail(double lambda) const {
  const std::size_t first = roots_.size();  // first model index n = N + 1
  const double span = std::max(4096.0, 32.0 * std::sqrt(std::abs(lambda)));
  const std::size_t last = first + static_cast<std::size_t>(span);  // exclusive
  const double c = shift_ / std::numbers::pi;

  double log_abs = 0.0;
  int sign = 1;
  for (std::size_t n = first; n < last; ++n) {
    const double m = static_cast<double>(n - 1);
    const double dm = c / m + cubic_ / (m * m * m);
    // ratio - 1 = ((m + dm)^2 - m^2 - lambda) / m^2, kept separate for log1p.
    const double d = (dm * (2.0 * m + dm) - lambda) / (m * m);
    if (d == -1.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (d < -1.0) {
      sign = -sign;
      log_abs += std::log(-(1.0 + d));
    } else {
      log_abs += std::log1p(d);
    }
  }
  // Remainder sum_{m >= L} log(1 + a/m^2 + ...) with a = 2c - lambda.
  const double l = static_cast<double>(last - 1);
  const double a = 2.0 * c - lambda;
  log_abs += a / (l - 0.5) - a * a / (6.0 * l * l * l);
  return {log_abs, sign};
}

SignedLog ProductEvaluator::eval(double lambda) const {
  SignedLog acc = SignedLog::of(scale_);
  for (std::size_t n = 0; n < roots_.size(); ++n) {
    const SignedLog f = factor(n, lambda);
    if (f.sign == 0) return {-std::numeric_limits<double>::infinity(), 0};
    acc = acc * f;
  }
  const SignedLog t = tail(lambda);
  if (t.sign == 0) return t;
  return acc * t;
}

double ProductEvaluator::derivative_at_root(std::size_t n) const {
  if (n >= roots_.size()) throw InvalidArgument("derivative_at_root: index out of range");
  const double lambda = roots_[n];
  SignedLog acc = SignedLog::of(scale_);
  for (std::size_t j = 0; j < roots_.size(); ++j) {
    if (j == n) continue;
    const SignedLog f = factor(j, lambda);
    if (f.sign == 0) {
      throw DegenerateRootError("derivative_at_root: lambda_" + std::to_string(n) +
                                " coincides with root " + std::to_string(j));
    }
    acc = acc * f;
  }
  // d/dlambda of the vanishing factor.
  if (n >= 2) {
    const double m = static_cast<double>(n - 1);
    acc = acc * SignedLog{-2.0 * std::log(m), -1};
  }
  const SignedLog t = tail(lambda);
  if (t.sign == 0) {
    throw DegenerateRootError("derivative_at_root: lambda_" + std::to_string(n) +
                              " coincides with a model tail root");
  }
  return (acc * t).value();
}

SignedLog product_eval(const ProductEvaluator& p, double lambda) { return p.eval(lambda); }

double product_derivative_at_root(const ProductEvaluator& p, std::size_t n) {
  return p.derivative_at_root(n);
}

}  // namespace ebsl::numerics
