#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace ebsl::numerics {

/// A real number held as log|v| plus a sign in {-1, 0, +1}.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 0;

  double value() const noexcept;
  SignedLog operator*(const SignedLog& o) const noexcept {
    return {log_abs + o.log_abs, sign * o.sign};
  }
  SignedLog operator/(const SignedLog& o) const noexcept {
    return {log_abs - o.log_abs, sign * o.sign};
  }
  static SignedLog of(double v) noexcept;
};

/// Truncated Hadamard product of an entire function of order 1/2 with zeros
/// r_0 < r_1 < ... < r_N:
///
///   P(lambda) = scale (lambda - r_0)(lambda - r_1) prod_{n=2}^{N} (r_n - lambda)/(n-1)^2
///               * prod_{n>N} (m_n - lambda)/(n-1)^2,
///
/// where the tail uses model roots m_n = (m + shift/(m pi) + cubic/m^3)^2 with
/// m = n - 1. shift = cubic = 0 gives the unperturbed roots (n-1)^2.
class ProductEvaluator {
 public:
  explicit ProductEvaluator(std::vector<double> roots, double scale = -std::numbers::pi,
                            double shift = 0.0, double cubic = 0.0);

  SignedLog eval(double lambda) const;
  double value(double lambda) const { return eval(lambda).value(); }

  /// dP/dlambda at r_n: the vanishing factor is replaced by its derivative.
  /// Throws DegenerateRootError if r_n coincides with another root.
  double derivative_at_root(std::size_t n) const;

  const std::vector<double>& roots() const noexcept { return roots_; }
  double scale() const noexcept { return scale_; }
  double shift() const noexcept { return shift_; }
  double cubic() const noexcept { return cubic_; }
  std::size_t truncation() const noexcept { return roots_.size() - 1; }

  /// log|tail| and its sign.
  SignedLog tail(double lambda) const;

 private:
  SignedLog factor(std::size_t n, double lambda) const noexcept;

  std::vector<double> roots_;
  double scale_;
  double shift_;
  double cubic_;
};

SignedLog product_eval(const ProductEvaluator& p, double lambda);
double product_derivative_at_root(const ProductEvaluator& p, std::size_t n);

}  // namespace ebsl::numerics
