#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ebsl/forward.hpp"
#include "ebsl/glm.hpp"
#include "ebsl/types.hpp"

namespace ebsl {

/// sigma from m pi (sqrt(mu_n) - sqrt(lambda_n)) ~ sigma + c/m^2, m = n - 1,
/// fitted over the upper half of the indices. Needs at least 8 pairs; throws OrderingError
/// when the estimate is not positive.
double estimate_sigma(const TwoSpectra& ts);

/// Characteristic-function products for both spectra. The lambda product's
/// tail is shifted by omega, the mu product's by omega + sigma.
struct SpectraProducts {
  numerics::ProductEvaluator phi;
  numerics::ProductEvaluator psi;
  double sigma = 0.0;
  double omega = 0.0;
};

SpectraProducts spectra_products(const TwoSpectra& ts);

/// gamma_n = -sigma Phi'(lambda_n) / Psi(lambda_n). Throws OrderingError when
/// any gamma_n is not positive.
SpectralData gammas_from_two_spectra(const TwoSpectra& ts);

/// m(lambda) = -Psi(lambda) / Phi(lambda). Throws PoleError within 1e-8 of
/// an eigenvalue lambda_n.
double m_function(const TwoSpectra& ts, double lambda);
double m_function(const SpectraProducts& products, double lambda);

struct TwoSpectraOptions {
  ReconstructionOptions reconstruction{};
  ForwardOptions forward{};
  /// Recompute the mu-spectrum from the recovered coefficients.
  bool verify = true;
  /// Largest |tau_n - mu_n| / max(1, |mu_n|) counted as a match.
  double verify_tolerance = 1e-3;
};

struct TwoSpectraResult {
  ReconstructionResult base;
  double sigma = 0.0;
  bool sigma_estimated = false;
  double h_tilde = 0.0;
  SpectralData spectral_data;  ///< synthesized {lambda_n, gamma_n}
  std::vector<double> check_spectrum;  ///< tau_n, empty when not verified
  double max_mu_deviation = 0.0;       ///< max |tau_n - mu_n|
  double max_mu_relative = 0.0;        ///< max |tau_n - mu_n| / max(1, |mu_n|)
  bool interlaced = false;             ///< lambda_n < tau_n < lambda_{n+1}
  bool verified = false;
};

TwoSpectraResult reconstruct_from_two_spectra(const TwoSpectra& ts,
                                              const TwoSpectraOptions& options = {});

}  // namespace ebsl
