#include "ebsl/validation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "ebsl/errors.hpp"

namespace ebsl {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Mean-square growth of n * r_n between the lower and upper halves of n = 1..N.
double residual_growth(const std::vector<double>& zeta) {
  const std::size_t n = zeta.size();
  if (n < 4) return 0.0;
  const std::size_t mid = n / 2;
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < mid; ++i) lo += zeta[i] * zeta[i];
  for (std::size_t i = mid; i < n; ++i) hi += zeta[i] * zeta[i];
  lo /= static_cast<double>(mid);
  hi /= static_cast<double>(n - mid);
  if (lo == 0.0) return hi == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return hi / lo;
}

void check_growth(const std::string& name, const std::vector<double>& zeta,
                  const ValidationOptions& options, ValidationReport& report) {
  const double g = residual_growth(zeta);
  report.residual_growth.emplace_back(name, g);
  double hi = 0.0;
  for (std::size_t i = zeta.size() / 2; i < zeta.size(); ++i) hi = std::max(hi, std::abs(zeta[i]));
  if (g > options.residual_growth_limit && hi > options.residual_floor) {
    std::string msg = name + " residuals grow across the supplied range (upper/lower mean-square ratio " +
                      fmt(g) + "); data may not follow the expected asymptotics";
    (options.strict ? report.violations : report.warnings).push_back(std::move(msg));
  }
}

std::complex<double> principal_sqrt(double lambda) {
  return std::sqrt(std::complex<double>(lambda, 0.0));
}

}  // namespace

double fit_asymptotic_constant(std::span<const double> x, std::span<const double> y, double power) {
  if (x.size() != y.size() || x.empty()) {
    throw InvalidArgument("fit_asymptotic_constant: need matching nonempty samples");
  }
  double sw = 0, su = 0, suu = 0, sy = 0, suy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = x[i] * x[i];
    const double u = std::pow(x[i], -power);
    sw += w;
    su += w * u;
    suu += w * u * u;
    sy += w * y[i];
    suy += w * u * y[i];
  }
  if (x.size() < 3) return sy / sw;
  const double det = sw * suu - su * su;
  if (std::abs(det) <= 1e-14 * sw * suu) return sy / sw;
  return (sy * suu - su * suy) / det;
}

double estimate_omega(std::span<const double> lambdas) {
  const std::size_t count = lambdas.size();
  if (count < 3) throw InvalidArgument("estimate_omega: need at least 3 eigenvalues");
  const std::size_t big_n = count - 1;
  std::vector<double> idx, val;
  for (std::size_t n = std::max<std::size_t>(2, big_n / 2); n <= big_n; ++n) {
    if (lambdas[n] < 0.0) continue;
    const double m = static_cast<double>(n - 1);
    idx.push_back(m);
    val.push_back(m * std::numbers::pi * (std::sqrt(lambdas[n]) - m));
  }
  if (idx.empty()) throw InvalidArgument("estimate_omega: no usable eigenvalues");
  return fit_asymptotic_constant(idx, val);
}

double estimate_cubic_coefficient(std::span<const double> lambdas, double omega) {
  const std::size_t count = lambdas.size();
  if (count < 3) return 0.0;
  const std::size_t big_n = count - 1;
  double num = 0.0, den = 0.0;
  for (std::size_t n = std::max<std::size_t>(2, big_n / 2); n <= big_n; ++n) {
    if (lambdas[n] < 0.0) continue;
    const double m = static_cast<double>(n - 1);
    const double y = m * std::numbers::pi * (std::sqrt(lambdas[n]) - m) - omega;
    // weights m^2 on the regressor 1/m^2
    num += y / (m * m);
    den += 1.0 / (m * m * m * m);
  }
  return den > 0.0 ? num / den / std::numbers::pi : 0.0;
}

double estimate_gamma_coefficient(std::span<const double> gammas) {
  const std::size_t count = gammas.size();
  if (count < 3) throw InvalidArgument("estimate_gamma_coefficient: need at least 3 norming constants");
  const std::size_t big_n = count - 1;
  std::vector<double> idx, val;
  for (std::size_t n = std::max<std::size_t>(2, big_n / 2); n <= big_n; ++n) {
    const double m = static_cast<double>(n - 1);
    idx.push_back(m);
    val.push_back(m * m * (gammas[n] - std::numbers::pi / 2.0));
  }
  return fit_asymptotic_constant(idx, val);
}

ValidationReport validate_problem(const ProblemCoefficients& p) {
  ValidationReport r;
  r.rho = p.rho();
  if (!(p.rho() > 0.0)) {
    r.violations.push_back("rho = H*H1 - H2 = " + fmt(p.rho()) + " must be positive");
  }
  if (p.q().size() != p.grid().size()) {
    r.violations.push_back("q has " + std::to_string(p.q().size()) + " samples but the grid has " +
                           std::to_string(p.grid().size()) + " nodes");
  }
  if (p.q().size() < 3) r.violations.push_back("q needs at least 3 samples");
  for (std::size_t i = 0; i < p.q().size(); ++i) {
    if (!std::isfinite(p.q()[i])) {
      r.violations.push_back("q sample " + std::to_string(i) + " is not finite");
      break;
    }
  }
  const auto& bc = p.boundary();
  if (!std::isfinite(bc.h) || !std::isfinite(bc.H) || !std::isfinite(bc.H1) || !std::isfinite(bc.H2)) {
    r.violations.push_back("boundary coefficients must be finite");
  }
  return r;
}

ValidationReport validate_spectral_data(const SpectralData& d, const ValidationOptions& options) {
  ValidationReport r;
  const auto lam = d.lambdas();
  const auto gam = d.gammas();
  if (lam.size() != gam.size()) {
    r.violations.push_back("lambdas (" + std::to_string(lam.size()) + ") and gammas (" +
                           std::to_string(gam.size()) + ") differ in length");
    return r;
  }
  if (lam.size() < 2) {
    r.violations.push_back("need at least 2 eigenvalue/norming-constant pairs");
    return r;
  }
  bool finite = true;
  for (std::size_t n = 0; n < lam.size(); ++n) {
    if (!std::isfinite(lam[n]) || !std::isfinite(gam[n])) {
      r.violations.push_back("entry " + std::to_string(n) + " is not finite");
      finite = false;
    }
  }
  if (!finite) return r;

  for (std::size_t n = 0; n < lam.size(); ++n) {
    for (std::size_t m = n + 1; m < lam.size(); ++m) {
      if (lam[n] == lam[m]) {
        r.violations.push_back("lambda_" + std::to_string(n) + " = lambda_" + std::to_string(m) +
                               " (eigenvalues must be distinct)");
      }
    }
    if (n + 1 < lam.size() && lam[n + 1] < lam[n]) {
      r.violations.push_back("eigenvalues not increasing at index " + std::to_string(n + 1));
    }
    if (!(gam[n] > 0.0)) {
      r.violations.push_back("gamma_" + std::to_string(n) + " = " + fmt(gam[n]) + " must be positive");
    }
  }

  if (lam.size() >= 4) {
    double omega = 0.0;
    if (d.omega()) {
      omega = *d.omega();
    } else {
      try {
        omega = estimate_omega(lam);
        r.omega_estimated = true;
      } catch (const Error& e) {
        r.warnings.push_back(std::string("omega could not be estimated: ") + e.what());
        return r;
      }
    }
    r.omega = omega;
    std::vector<double> zeta, zeta_gamma;
    for (std::size_t n = 1; n < lam.size(); ++n) {
      const double nn = static_cast<double>(n);
      const std::complex<double> s = principal_sqrt(lam[n]);
      zeta.push_back(nn * std::abs(s - (nn - 1.0) - omega / (nn * std::numbers::pi)));
      zeta_gamma.push_back(nn * (gam[n] - std::numbers::pi / 2.0));
    }
    check_growth("eigenvalue", zeta, options, r);
    check_growth("norming-constant", zeta_gamma, options, r);
  } else {
    r.warnings.push_back("too few pairs for an asymptotic residual test");
  }
  return r;
}

ValidationReport validate_two_spectra(const TwoSpectra& ts, const ValidationOptions& options) {
  ValidationReport r;
  const auto lam = ts.lambdas();
  const auto mu = ts.mus();
  if (lam.size() != mu.size()) {
    r.violations.push_back("lambdas and mus differ in length");
    return r;
  }
  if (lam.size() < 2) {
    r.violations.push_back("need at least 2 eigenvalues per spectrum");
    return r;
  }
  for (std::size_t n = 0; n < lam.size(); ++n) {
    if (!std::isfinite(lam[n]) || !std::isfinite(mu[n])) {
      r.violations.push_back("entry " + std::to_string(n) + " is not finite");
      return r;
    }
  }
  for (std::size_t n = 0; n < lam.size(); ++n) {
    if (!(lam[n] < mu[n])) {
      r.violations.push_back("interlacing fails: lambda_" + std::to_string(n) + " >= mu_" +
                             std::to_string(n));
    }
    if (n + 1 < lam.size() && !(mu[n] < lam[n + 1])) {
      r.violations.push_back("interlacing fails: mu_" + std::to_string(n) + " >= lambda_" +
                             std::to_string(n + 1));
    }
  }
  if (ts.sigma() && !(*ts.sigma() > 0.0)) {
    r.violations.push_back("sigma must be positive");
  }
  if (ts.sigma()) r.sigma = ts.sigma();
  if (lam.size() >= 4) {
    r.omega = ts.omega() ? *ts.omega() : estimate_omega(lam);
    r.omega_estimated = !ts.omega().has_value();
  }
  (void)options;
  return r;
}

}  // namespace ebsl
