#pragma once

#include <cstddef>
#include <vector>

#include "ebsl/numerics/ivp.hpp"
#include "ebsl/types.hpp"

namespace ebsl {

struct ForwardOptions {
  numerics::IvpOptions ivp{};
  /// Scan resolution on the u = sign(lambda) sqrt|lambda| axis.
  double scan_step = 0.1;
  /// Halvings of the scan step tried when two scans disagree on the root count.
  int max_scan_refinements = 4;
  /// Root tolerance on the u axis.
  double root_tol = 1e-12;
  /// Gauss points per panel for the norming-constant integral.
  int gauss_points = 8;
  /// Store phi(x_i, lambda_n) on the problem grid in every record.
  bool keep_phi_samples = true;
};

/// phi(x, lambda) with phi(0) = 1, phi'(0) = h, sampled on the problem grid.
numerics::IvpSolution solve_phi(const ProblemCoefficients& p, double lambda,
                                const numerics::IvpOptions& options = {});

/// psi(x, lambda) with psi(pi) = H1 - lambda, psi'(pi) = lambda H - H2,
/// sampled on the problem grid.
numerics::IvpSolution solve_psi(const ProblemCoefficients& p, double lambda,
                                const numerics::IvpOptions& options = {});

/// phi(pi, lambda) and phi'(pi, lambda).
EndValues phi_end(const ProblemCoefficients& p, double lambda,
                  const numerics::IvpOptions& options = {});

/// lambda (phi'(pi) + H phi(pi)) - H1 phi'(pi) - H2 phi(pi); its zeros are the
/// eigenvalues.
double char_function(const ProblemCoefficients& p, double lambda,
                     const numerics::IvpOptions& options = {});

/// d/dlambda of char_function by central differences with step
/// 1e-5 max(1, |lambda|); both neighbours reuse the step plan chosen at lambda.
double char_derivative(const ProblemCoefficients& p, double lambda,
                       const numerics::IvpOptions& options = {});

/// h + H + (1/2) int q: the constant in sqrt(lambda_n) ~ n - 1 + omega/(n pi).
double asymptotic_omega(const ProblemCoefficients& p);

/// First `count` eigenvalues in increasing order. Throws MissedRootError when
/// successive scan refinements disagree on the number of roots.
std::vector<double> find_eigenvalues(const ProblemCoefficients& p, std::size_t count,
                                     const ForwardOptions& options = {});

/// int_0^pi phi^2 + (phi'(pi) + H phi(pi))^2 / rho at an eigenvalue.
double norming_constant(const ProblemCoefficients& p, double lambda,
                        const ForwardOptions& options = {});

/// psi(0, lambda) at an eigenvalue, so that psi = k phi. Throws
/// DegenerateRootError if |k| < 1e-12.
double compute_k(const ProblemCoefficients& p, double lambda,
                 const numerics::IvpOptions& options = {});

/// max_x |psi - k phi| / max_x |psi| on the problem grid.
double proportionality_residual(const ProblemCoefficients& p, double lambda,
                                const numerics::IvpOptions& options = {});

class ForwardSolution {
 public:
  ForwardSolution(ProblemCoefficients problem, std::vector<EigenRecord> records,
                  numerics::IvpOptions ivp);

  const ProblemCoefficients& problem() const noexcept { return problem_; }
  const std::vector<EigenRecord>& records() const noexcept { return records_; }
  std::vector<double> eigenvalues() const;
  std::vector<double> gammas() const;
  SpectralData spectral_data() const;

  double char_fn(double lambda) const { return char_function(problem_, lambda, ivp_); }
  double operator()(double lambda) const { return char_fn(lambda); }

 private:
  ProblemCoefficients problem_;
  std::vector<EigenRecord> records_;
  numerics::IvpOptions ivp_;
};

/// Eigenvalues, norming constants and k_n for n = 0..count-1.
ForwardSolution forward_solve(const ProblemCoefficients& p, std::size_t count,
                              const ForwardOptions& options = {});

}  // namespace ebsl
