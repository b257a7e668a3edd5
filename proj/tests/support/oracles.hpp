#pragma once

// Independent reference values for the tests. Nothing here calls into the
// library's solvers; closed forms are evaluated directly and roots are found
// by plain scanning and bisection.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "ebsl/types.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// xorshift64* generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x2545F4914F6CDD1DULL) {}
  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545F4914F6CDD1DULL;
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t s_;
};

/// Random trigonometric polynomial q = c0 + sum_j (a_j cos jx + b_j sin jx),
/// j = 1..3, coefficients in [-2, 2]; boundary coefficients in [-2, 2] with
/// rho = H H1 - H2 drawn from [0.2, 2].
struct TrigProblem {
  double c0 = 0.0;
  double a[3] = {};
  double b[3] = {};
  ebsl::BoundaryCoefficients bc;

  double q(double x) const {
    double v = c0;
    for (int j = 0; j < 3; ++j) v += a[j] * std::cos((j + 1) * x) + b[j] * std::sin((j + 1) * x);
    return v;
  }
  ebsl::ProblemCoefficients build(std::size_t intervals = 256) const {
    return ebsl::ProblemCoefficients::from_function([this](double x) { return q(x); },
                                                    ebsl::UniformGrid(intervals), bc);
  }
};

inline TrigProblem random_trig_problem(Rng& rng) {
  TrigProblem p;
  p.c0 = rng.uniform(-2, 2);
  for (int j = 0; j < 3; ++j) {
    p.a[j] = rng.uniform(-2, 2);
    p.b[j] = rng.uniform(-2, 2);
  }
  p.bc.h = rng.uniform(-2, 2);
  p.bc.H = rng.uniform(-2, 2);
  p.bc.H1 = rng.uniform(-2, 2);
  p.bc.H2 = p.bc.H * p.bc.H1 - rng.uniform(0.2, 2.0);
  return p;
}

// ---- worked example: lambda = {0, 1/4, (n-1)^2}, gamma = {pi, pi/2, ...} ----

inline double example_denominator(double x) { return pi + x + std::sin(x); }

inline double example_K(double x, double t) {
  return -2.0 * std::cos(x / 2) * std::cos(t / 2) / example_denominator(x);
}

inline double example_F(double x, double t) { return 2.0 / pi * std::cos(x / 2) * std::cos(t / 2); }

inline double example_q(double x) {
  const double d = example_denominator(x);
  return (2.0 * (pi + x) * std::sin(x) + 4.0 * (1.0 + std::cos(x))) / (d * d);
}

inline constexpr double example_h = -2.0 / pi;
// Boundary coefficients consistent with the example's spectral data.
inline constexpr double example_H = 0.0;
inline constexpr double example_H1 = 0.25;
inline constexpr double example_H2 = -1.0 / (4.0 * pi);
// Value printed alongside the example; it does not reproduce lambda_0 = 0.
inline constexpr double example_H2_stated = -1.0 / (8.0 * pi);

/// phi(x, lambda) = cos sx + int_0^x K(x, t) cos st dt for the example kernel,
/// with the t-integral done in closed form (lambda > 0).
inline double example_phi(double x, double lambda) {
  const double s = std::sqrt(lambda);
  auto sinc = [x](double w) { return std::abs(w) < 1e-12 ? x : std::sin(w * x) / w; };
  const double integral = 0.5 * (sinc(s + 0.5) + sinc(s - 0.5));
  return std::cos(s * x) - 2.0 * std::cos(x / 2) * integral / example_denominator(x);
}

/// The general-lambda display printed with the example.
inline double example_phi_as_printed(double x, double lambda) {
  const double s = std::sqrt(lambda);
  return std::cos(s * x) - (4.0 * s * std::sin(s * x) * (1.0 + std::cos(x)) -
                            std::cos(s * x) * std::sin(x)) /
                               ((4.0 * s * s - 1.0) * example_denominator(x));
}

inline std::vector<double> example_lambdas(std::size_t big_n) {
  std::vector<double> l{0.0, 0.25};
  for (std::size_t n = 2; n <= big_n; ++n) l.push_back(static_cast<double>((n - 1) * (n - 1)));
  return l;
}

inline std::vector<double> example_gammas(std::size_t big_n) {
  std::vector<double> g{pi};
  for (std::size_t n = 1; n <= big_n; ++n) g.push_back(pi / 2);
  return g;
}

inline ebsl::SpectralData example_data(std::size_t big_n) {
  return ebsl::SpectralData(example_lambdas(big_n), example_gammas(big_n));
}

inline ebsl::ProblemCoefficients example_problem(std::size_t intervals = 256,
                                                 double H2 = example_H2) {
  return ebsl::ProblemCoefficients::from_function(example_q, ebsl::UniformGrid(intervals),
                                                  {example_h, example_H, example_H1, H2});
}

// ---- constant potentials: q = c, phi = cos(s x) + (h/s) sin(s x), s^2 = lambda - c ----

inline double cos_entire(double z, double x) {
  return z >= 0 ? std::cos(std::sqrt(z) * x) : std::cosh(std::sqrt(-z) * x);
}
inline double sinc_entire(double z, double x) {
  if (z == 0) return x;
  return z > 0 ? std::sin(std::sqrt(z) * x) / std::sqrt(z) : std::sinh(std::sqrt(-z) * x) / std::sqrt(-z);
}

struct ConstantPotential {
  double c = 0.0;
  ebsl::BoundaryCoefficients bc;

  double phi(double x, double lambda) const {
    const double z = lambda - c;
    return cos_entire(z, x) + bc.h * sinc_entire(z, x);
  }
  double dphi(double x, double lambda) const {
    const double z = lambda - c;
    return -z * sinc_entire(z, x) + bc.h * cos_entire(z, x);
  }
  double char_fn(double lambda) const {
    const double p = phi(pi, lambda), dp = dphi(pi, lambda);
    return lambda * (dp + bc.H * p) - bc.H1 * dp - bc.H2 * p;
  }
  /// int_0^pi phi^2 by 2000-panel Simpson plus the boundary term.
  double gamma(double lambda) const {
    const int n = 4000;
    const double dx = pi / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      const double v = phi(i * dx, lambda);
      acc += w * v * v;
    }
    acc *= dx / 3.0;
    const double e = dphi(pi, lambda) + bc.H * phi(pi, lambda);
    return acc + e * e / bc.rho();
  }
  ebsl::ProblemCoefficients build(std::size_t intervals = 256) const {
    const double cc = c;
    return ebsl::ProblemCoefficients::from_function([cc](double) { return cc; },
                                                    ebsl::UniformGrid(intervals), bc);
  }
};

/// First `count` zeros of f scanned on u = sign(lambda) sqrt|lambda| from u_min
/// with step du, refined by bisection.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, std::size_t count,
                                      double u_min, double du) {
  std::vector<double> roots;
  auto lam = [](double u) { return u * std::abs(u); };
  double u0 = u_min, f0 = f(lam(u0));
  while (roots.size() < count) {
    const double u1 = u0 + du;
    const double f1 = f(lam(u1));
    if ((f0 < 0) != (f1 < 0)) {
      double lo = u0, hi = u1, flo = f0;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(lam(mid));
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(lam(0.5 * (lo + hi)));
    }
    u0 = u1;
    f0 = f1;
  }
  return roots;
}

inline double simpson(const std::vector<double>& v, double dx) {
  const std::size_t n = v.size() - 1;
  double acc = v.front() + v.back();
  for (std::size_t i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * v[i];
  return acc * dx / 3.0;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace oracle
