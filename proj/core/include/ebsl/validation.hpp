#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ebsl/types.hpp"

namespace ebsl {

/// Outcome of a validation pass. Empty `violations` iff the input is valid;
/// `warnings` carry advisory findings that only fail under strict mode.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  std::optional<double> rho;
  std::optional<double> omega;        ///< provided or estimated
  bool omega_estimated = false;
  std::optional<double> sigma;        ///< two spectra only
  /// Mean of zeta_n^2 over the upper half of indices divided by the mean over
  /// the lower half; one entry per residual sequence tested.
  std::vector<std::pair<std::string, double>> residual_growth;

  bool valid() const noexcept { return violations.empty(); }
};

struct ValidationOptions {
  /// Promote asymptotic-residual warnings to violations.
  bool strict = false;
  /// Allowed ratio of upper-half to lower-half mean square of a residual
  /// sequence before it is considered growing.
  double residual_growth_limit = 1.0;
  /// Absolute floor added to the comparison (exact model data has zero
  /// residuals).
  double residual_floor = 1e-8;
};

ValidationReport validate_problem(const ProblemCoefficients& p);

ValidationReport validate_spectral_data(const SpectralData& d, const ValidationOptions& options = {});

ValidationReport validate_two_spectra(const TwoSpectra& ts, const ValidationOptions& options = {});

/// Least-squares estimate of omega in sqrt(lambda_n) = m + omega/(m pi) + ...,
/// m = n - 1, over the upper half of the indices: m pi (s_n - m) is fitted by
/// omega + c/m^2 with weights m^2.
double estimate_omega(std::span<const double> lambdas);

/// With omega fixed, least-squares estimate of b in
/// sqrt(lambda_n) = m + omega/(m pi) + b/m^3 over the upper half of the indices.
double estimate_cubic_coefficient(std::span<const double> lambdas, double omega);

/// Least-squares estimate of g in gamma_n = pi/2 + g/m^2 + ..., m = n - 1,
/// over the upper half of the indices.
double estimate_gamma_coefficient(std::span<const double> gammas);

/// Weighted least-squares fit y ~ c0 + c1 x^(-power) with weights x^2;
/// returns c0. With fewer than 3 samples only the constant is fitted.
double fit_asymptotic_constant(std::span<const double> x, std::span<const double> y,
                               double power = 2.0);

}  // namespace ebsl
