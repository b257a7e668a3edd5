#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ebsl/grid.hpp"
#include "ebsl/numerics/spline.hpp"

namespace ebsl {

/// Coefficients of the two boundary conditions
///   y'(0) - h y(0) = 0,
///   lambda (y'(pi) + H y(pi)) = H1 y'(pi) + H2 y(pi).
struct BoundaryCoefficients {
  double h = 0.0;
  double H = 0.0;
  double H1 = 0.0;
  double H2 = 0.0;

  /// H H1 - H2; the problem is self-adjoint in the weighted space iff > 0.
  double rho() const noexcept { return H * H1 - H2; }
};

/// Potential samples on a uniform grid over [0, pi] plus boundary
/// coefficients. Immutable; the constructor rejects rho <= 0, non-finite
/// samples and grids with fewer than 3 nodes.
class ProblemCoefficients {
 public:
  ProblemCoefficients(UniformGrid grid, std::vector<double> q, BoundaryCoefficients bc);

  static ProblemCoefficients from_function(const std::function<double(double)>& q,
                                           UniformGrid grid, BoundaryCoefficients bc);

  /// Skips invariant checks; only for handing malformed input to
  /// validate_problem().
  static ProblemCoefficients unchecked(UniformGrid grid, std::vector<double> q,
                                       BoundaryCoefficients bc);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const double> q() const noexcept { return q_; }
  const BoundaryCoefficients& boundary() const noexcept { return bc_; }
  double h() const noexcept { return bc_.h; }
  double H() const noexcept { return bc_.H; }
  double H1() const noexcept { return bc_.H1; }
  double H2() const noexcept { return bc_.H2; }
  double rho() const noexcept { return bc_.rho(); }

  /// Cubic interpolant of q between grid nodes, used by the ODE integrator.
  const numerics::CubicSpline& potential() const noexcept { return potential_; }

  /// Same potential, different left coefficient.
  ProblemCoefficients with_h(double h) const;

 private:
  struct NoCheck {};
  ProblemCoefficients(NoCheck, UniformGrid grid, std::vector<double> q, BoundaryCoefficients bc);

  UniformGrid grid_;
  std::vector<double> q_;
  BoundaryCoefficients bc_;
  numerics::CubicSpline potential_;
};

/// Eigenvalues and norming constants {lambda_n, gamma_n}, n = 0..N.
/// The constructor rejects unequal lengths, fewer than 2 pairs, non-finite
/// values, repeated eigenvalues, unsorted eigenvalues and gamma_n <= 0.
class SpectralData {
 public:
  SpectralData(std::vector<double> lambdas, std::vector<double> gammas,
               std::optional<double> omega = std::nullopt);

  static SpectralData unchecked(std::vector<double> lambdas, std::vector<double> gammas,
                                std::optional<double> omega = std::nullopt);

  std::span<const double> lambdas() const noexcept { return lambdas_; }
  std::span<const double> gammas() const noexcept { return gammas_; }
  std::optional<double> omega() const noexcept { return omega_; }
  /// N, the largest supplied index.
  std::size_t truncation() const noexcept { return lambdas_.size() - 1; }
  std::size_t size() const noexcept { return lambdas_.size(); }

 private:
  struct NoCheck {};
  SpectralData(NoCheck, std::vector<double> lambdas, std::vector<double> gammas,
               std::optional<double> omega);

  std::vector<double> lambdas_;
  std::vector<double> gammas_;
  std::optional<double> omega_;
};

/// Spectra of two problems that differ only in h: {lambda_n} for h and {mu_n}
/// for h + sigma. The constructor enforces strict interlacing
/// lambda_0 < mu_0 < lambda_1 < mu_1 < ... and sigma > 0 when given.
class TwoSpectra {
 public:
  TwoSpectra(std::vector<double> lambdas, std::vector<double> mus,
             std::optional<double> sigma = std::nullopt,
             std::optional<double> omega = std::nullopt);

  static TwoSpectra unchecked(std::vector<double> lambdas, std::vector<double> mus,
                              std::optional<double> sigma = std::nullopt,
                              std::optional<double> omega = std::nullopt);

  std::span<const double> lambdas() const noexcept { return lambdas_; }
  std::span<const double> mus() const noexcept { return mus_; }
  std::optional<double> sigma() const noexcept { return sigma_; }
  std::optional<double> omega() const noexcept { return omega_; }
  std::size_t size() const noexcept { return lambdas_.size(); }

 private:
  struct NoCheck {};
  TwoSpectra(NoCheck, std::vector<double> lambdas, std::vector<double> mus,
             std::optional<double> sigma, std::optional<double> omega);

  std::vector<double> lambdas_;
  std::vector<double> mus_;
  std::optional<double> sigma_;
  std::optional<double> omega_;
};

enum class KernelKind { F, K };

/// Samples of F(x, t) or K(x, t) on the triangle 0 <= t <= x <= pi, stored
/// row-packed: row i holds t_0..t_i. F is symmetric, so at(i, j) with j > i
/// reads the mirrored entry; K is zero above the diagonal.
class KernelField {
 public:
  KernelField(UniformGrid grid, KernelKind kind, std::vector<double> packed);

  static std::size_t packed_size(const UniformGrid& grid) noexcept {
    return grid.size() * (grid.size() + 1) / 2;
  }
  static std::size_t offset(std::size_t i) noexcept { return i * (i + 1) / 2; }

  const UniformGrid& grid() const noexcept { return grid_; }
  KernelKind kind() const noexcept { return kind_; }

  double at(std::size_t i, std::size_t j) const noexcept;
  /// Entries (x_i, t_0..t_i).
  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + offset(i), i + 1};
  }
  std::vector<double> diagonal() const;
  std::span<const double> packed() const noexcept { return values_; }

 private:
  UniformGrid grid_;
  KernelKind kind_;
  std::vector<double> values_;
};

/// Value and derivative of a solution at x = pi.
struct EndValues {
  double value = 0.0;
  double derivative = 0.0;
};

/// One eigenvalue of the direct problem together with the quantities the
/// inverse problems are built from. Rejects k == 0 and gamma <= 0.
class EigenRecord {
 public:
  EigenRecord(double lambda, EndValues phi_end, double gamma, double k,
              std::vector<double> phi_samples = {});

  double lambda() const noexcept { return lambda_; }
  const EndValues& phi_end() const noexcept { return phi_end_; }
  double gamma() const noexcept { return gamma_; }
  double k() const noexcept { return k_; }
  /// phi(x_i, lambda) on the problem grid; empty when not requested.
  std::span<const double> phi_samples() const noexcept { return phi_samples_; }

  /// A_n = k_n phi(pi, lambda_n).
  double a() const noexcept { return k_ * phi_end_.value; }
  /// B_n = k_n phi'(pi, lambda_n).
  double b() const noexcept { return k_ * phi_end_.derivative; }

 private:
  double lambda_;
  EndValues phi_end_;
  double gamma_;
  double k_;
  std::vector<double> phi_samples_;
};

}  // namespace ebsl
