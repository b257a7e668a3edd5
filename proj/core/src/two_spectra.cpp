#include "ebsl/two_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ebsl/errors.hpp"
#include "ebsl/validation.hpp"

namespace ebsl {

namespace {

std::vector<double> to_vector(std::span<const double> v) { return {v.begin(), v.end()}; }

double resolve_sigma(const TwoSpectra& ts, bool* estimated) {
  if (ts.sigma()) {
    *estimated = false;
    return *ts.sigma();
  }
  *estimated = true;
  return estimate_sigma(ts);
}

}  // namespace

double estimate_sigma(const TwoSpectra& ts) {
  const std::size_t count = ts.size();
  if (count < 8) throw InvalidArgument("estimate_sigma: need at least 8 pairs");
  const std::size_t big_n = count - 1;
  std::vector<double> idx, val;
  for (std::size_t n = std::max<std::size_t>(2, big_n / 2); n <= big_n; ++n) {
    const double l = ts.lambdas()[n], mu = ts.mus()[n];
    if (l < 0.0 || mu < 0.0) continue;
    const double m = static_cast<double>(n - 1);
    idx.push_back(m);
    val.push_back(m * std::numbers::pi * (std::sqrt(mu) - std::sqrt(l)));
  }
  if (idx.empty()) throw InvalidArgument("estimate_sigma: no usable pairs");
  const double sigma = fit_asymptotic_constant(idx, val);
  if (!(sigma > 0.0)) {
    throw OrderingError("estimate_sigma: estimate " + std::to_string(sigma) +
                        " is not positive; the spectra may be swapped");
  }
  return sigma;
}

SpectraProducts spectra_products(const TwoSpectra& ts) {
  bool estimated = false;
  const double sigma = resolve_sigma(ts, &estimated);
  const double omega = ts.omega() ? *ts.omega() : estimate_omega(ts.lambdas());
  const double cubic_l = estimate_cubic_coefficient(ts.lambdas(), omega);
  const double cubic_m = estimate_cubic_coefficient(ts.mus(), omega + sigma);
  return {numerics::ProductEvaluator(to_vector(ts.lambdas()), -std::numbers::pi, omega, cubic_l),
          numerics::ProductEvaluator(to_vector(ts.mus()), -std::numbers::pi, omega + sigma, cubic_m),
          sigma, omega};
}

SpectralData gammas_from_two_spectra(const TwoSpectra& ts) {
  const SpectraProducts p = spectra_products(ts);
  const auto lam = ts.lambdas();
  std::vector<double> gammas(lam.size());
  for (std::size_t n = 0; n < lam.size(); ++n) {
    const double dphi = p.phi.derivative_at_root(n);
    const double psi = p.psi.value(lam[n]);
    const double g = -p.sigma * dphi / psi;
    if (!(g > 0.0) || !std::isfinite(g)) {
      throw OrderingError("gammas_from_two_spectra: gamma_" + std::to_string(n) + " = " +
                          std::to_string(g) + " is not positive; check interlacing and sigma");
    }
    gammas[n] = g;
  }
  return SpectralData(to_vector(lam), std::move(gammas), p.omega);
}

double m_function(const SpectraProducts& products, double lambda) {
  for (double r : products.phi.roots()) {
    if (std::abs(lambda - r) < 1e-8) {
      throw PoleError("m_function: lambda = " + std::to_string(lambda) + " is within 1e-8 of a pole");
    }
  }
  const numerics::SignedLog psi = products.psi.eval(lambda);
  const numerics::SignedLog phi = products.phi.eval(lambda);
  if (phi.sign == 0) throw PoleError("m_function: lambda is a pole");
  if (psi.sign == 0) return 0.0;
  return -(psi / phi).value();
}

double m_function(const TwoSpectra& ts, double lambda) {
  return m_function(spectra_products(ts), lambda);
}

TwoSpectraResult reconstruct_from_two_spectra(const TwoSpectra& ts, const TwoSpectraOptions& options) {
  const ValidationReport report = validate_two_spectra(ts);
  if (!report.valid()) {
    throw ValidationError("reconstruct_from_two_spectra: " + report.violations.front());
  }
  bool sigma_estimated = false;
  const double sigma = resolve_sigma(ts, &sigma_estimated);
  const TwoSpectra resolved = TwoSpectra::unchecked(to_vector(ts.lambdas()), to_vector(ts.mus()),
                                                    sigma, ts.omega());
  SpectralData data = gammas_from_two_spectra(resolved);

  ReconstructionOptions ro = options.reconstruction;
  if (!ro.omega) ro.omega = data.omega();
  ReconstructionResult base = reconstruct_from_spectral_data(data, ro);
  const double h_tilde = base.coefficients.h() + sigma;

  TwoSpectraResult out{std::move(base), sigma, sigma_estimated, h_tilde, std::move(data), {}, 0.0,
                       0.0, false, false};
  if (options.verify) {
    const ProblemCoefficients shifted = out.base.coefficients.with_h(h_tilde);
    ForwardOptions fo = options.forward;
    fo.keep_phi_samples = false;
    out.check_spectrum = find_eigenvalues(shifted, ts.size(), fo);
    const auto lam = ts.lambdas();
    const auto mu = ts.mus();
    out.interlaced = true;
    for (std::size_t n = 0; n < mu.size(); ++n) {
      const double tau = out.check_spectrum[n];
      const double dev = std::abs(tau - mu[n]);
      out.max_mu_deviation = std::max(out.max_mu_deviation, dev);
      out.max_mu_relative = std::max(out.max_mu_relative, dev / std::max(1.0, std::abs(mu[n])));
      if (!(lam[n] < tau) || (n + 1 < lam.size() && !(tau < lam[n + 1]))) out.interlaced = false;
    }
    out.verified = out.max_mu_relative <= options.verify_tolerance;
  }
  return out;
}

}  // namespace ebsl
