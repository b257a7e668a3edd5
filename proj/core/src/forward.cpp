#include "ebsl/forward.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ebsl/errors.hpp"
#include "ebsl/numerics/quadrature.hpp"
#include "ebsl/numerics/roots.hpp"

namespace ebsl {

using numerics::Direction;
using numerics::IvpOptions;
using numerics::IvpSolution;

namespace {

const std::vector<double>& end_nodes() {
  static const std::vector<double> nodes{0.0, std::numbers::pi};
  return nodes;
}

double characteristic(const ProblemCoefficients& p, double lambda, const EndValues& e) {
  return lambda * (e.derivative + p.H() * e.value) - p.H1() * e.derivative - p.H2() * e.value;
}

IvpSolution phi_at_ends(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  return numerics::integrate_ivp(p.potential(), end_nodes(), {1.0, p.h()}, lambda,
                                 Direction::Forward, options);
}

double lambda_of(double u) { return u * std::abs(u); }

struct Bracketed {
  double lo;
  double hi;
};

// Sign changes of f on u_lo + k*step, k = 0.. while u <= u_hi.
std::vector<Bracketed> scan(const std::function<double(double)>& f, double u_lo, double u_hi,
                            double step) {
  std::vector<Bracketed> out;
  double prev_u = u_lo;
  double prev_f = f(u_lo);
  const auto count = static_cast<std::size_t>(std::ceil((u_hi - u_lo) / step));
  for (std::size_t k = 1; k <= count; ++k) {
    const double u = std::min(u_hi, u_lo + static_cast<double>(k) * step);
    const double v = f(u);
    if (v == 0.0) {
      out.push_back({u, u});
      // Step past the exact zero so it is not counted twice.
      prev_u = u;
      prev_f = 0.0;
      continue;
    }
    if (prev_f != 0.0 && std::signbit(v) != std::signbit(prev_f)) out.push_back({prev_u, u});
    prev_u = u;
    prev_f = v;
  }
  return out;
}

}  // namespace

IvpSolution solve_phi(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  return numerics::integrate_ivp(p.potential(), p.grid(), {1.0, p.h()}, lambda, Direction::Forward,
                                 options);
}

IvpSolution solve_psi(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  return numerics::integrate_ivp(p.potential(), p.grid(),
                                 {p.H1() - lambda, lambda * p.H() - p.H2()}, lambda,
                                 Direction::Backward, options);
}

EndValues phi_end(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  const IvpSolution s = phi_at_ends(p, lambda, options);
  return {s.y.back(), s.dy.back()};
}

double char_function(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  return characteristic(p, lambda, phi_end(p, lambda, options));
}

double char_derivative(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  const IvpSolution base = phi_at_ends(p, lambda, options);
  IvpOptions pinned = options;
  pinned.max_step = base.max_step;
  pinned.formulation = base.formulation;
  const double delta = 1e-5 * std::max(1.0, std::abs(lambda));
  const double up = char_function(p, lambda + delta, pinned);
  const double down = char_function(p, lambda - delta, pinned);
  return (up - down) / (2.0 * delta);
}

double asymptotic_omega(const ProblemCoefficients& p) {
  const auto w = numerics::uniform_weights(numerics::QuadratureKind::Simpson,
                                           p.grid().intervals(), p.grid().step());
  double integral = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) integral += w[i] * p.q()[i];
  return p.h() + p.H() + 0.5 * integral;
}

std::vector<double> find_eigenvalues(const ProblemCoefficients& p, std::size_t count,
                                     const ForwardOptions& options) {
  if (count == 0) return {};
  const auto f = [&](double u) { return char_function(p, lambda_of(u), options.ivp); };

  // Below the spectrum the characteristic function behaves like
  // -kappa^3 sinh(kappa pi) with kappa = sqrt(-lambda).
  const double omega = asymptotic_omega(p);
  double kappa = std::max(2.0, 1.0 + std::abs(omega));
  for (;; kappa *= 2.0) {
    if (kappa > 512.0) {
      throw MissedRootError("find_eigenvalues: no root-free region found below the spectrum");
    }
    const double ratio = f(-kappa) / (-kappa * kappa * kappa * std::sinh(kappa * std::numbers::pi));
    if (ratio > 0.5 && ratio < 2.0) break;
  }
  const double u_lo = -kappa;

  // Coarse scan until `count` roots are bracketed, with half a unit of margin.
  double step = options.scan_step;
  double u_hi = std::max(2.0, static_cast<double>(count) - 0.5);
  std::vector<Bracketed> brackets;
  for (;;) {
    brackets = scan(f, u_lo, u_hi, step);
    if (brackets.size() >= count) {
      u_hi = std::min(u_hi, brackets[count - 1].hi + 0.5);
      break;
    }
    u_hi += std::max(2.0, static_cast<double>(count - brackets.size()));
  }

  // Accept once two successive resolutions agree on the count below u_hi.
  brackets = scan(f, u_lo, u_hi, step);
  for (int refinement = 0;; ++refinement) {
    const double finer = 0.5 * step;
    std::vector<Bracketed> again = scan(f, u_lo, u_hi, finer);
    if (again.size() == brackets.size()) {
      brackets = std::move(again);
      break;
    }
    if (refinement >= options.max_scan_refinements) {
      throw MissedRootError("find_eigenvalues: root count did not stabilise (" +
                            std::to_string(brackets.size()) + " vs " +
                            std::to_string(again.size()) + " roots below u = " +
                            std::to_string(u_hi) + ")");
    }
    brackets = std::move(again);
    step = finer;
  }
  if (brackets.size() < count) {
    throw MissedRootError("find_eigenvalues: found " + std::to_string(brackets.size()) +
                          " roots, expected " + std::to_string(count));
  }

  std::vector<double> out;
  out.reserve(count);
  numerics::RootOptions ro;
  ro.tol = options.root_tol;
  for (std::size_t n = 0; n < count; ++n) {
    const Bracketed b = brackets[n];
    const double u = b.lo == b.hi ? b.lo : numerics::find_root_bracketed(f, {b.lo, b.hi}, ro);
    out.push_back(lambda_of(u));
  }
  for (std::size_t n = 1; n < out.size(); ++n) {
    if (!(out[n] > out[n - 1])) {
      throw MissedRootError("find_eigenvalues: eigenvalues " + std::to_string(n - 1) + " and " +
                            std::to_string(n) + " are not separated");
    }
  }
  return out;
}

double norming_constant(const ProblemCoefficients& p, double lambda, const ForwardOptions& options) {
  const double s = std::sqrt(std::max(lambda, 0.0));
  const auto panels = static_cast<std::size_t>(std::max(64.0, std::ceil(s * std::numbers::pi)));
  const auto rule =
      numerics::QuadratureRule::gauss_legendre(panels, options.gauss_points, std::numbers::pi);
  std::vector<double> nodes;
  nodes.reserve(rule.size() + 2);
  nodes.push_back(0.0);
  nodes.insert(nodes.end(), rule.nodes().begin(), rule.nodes().end());
  nodes.push_back(std::numbers::pi);
  const IvpSolution sol = numerics::integrate_ivp(p.potential(), nodes, {1.0, p.h()}, lambda,
                                                  Direction::Forward, options.ivp);
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    integral += rule.weights()[i] * sol.y[i + 1] * sol.y[i + 1];
  }
  const double boundary = sol.dy.back() + p.H() * sol.y.back();
  return integral + boundary * boundary / p.rho();
}

double compute_k(const ProblemCoefficients& p, double lambda, const IvpOptions& options) {
  const IvpSolution sol =
      numerics::integrate_ivp(p.potential(), end_nodes(), {p.H1() - lambda, lambda * p.H() - p.H2()},
                              lambda, Direction::Backward, options);
  const double k = sol.y.front();
  if (!(std::abs(k) >= 1e-12)) {
    throw DegenerateRootError("compute_k: |k| below 1e-12 at lambda = " + std::to_string(lambda));
  }
  return k;
}

double proportionality_residual(const ProblemCoefficients& p, double lambda,
                                const IvpOptions& options) {
  const IvpSolution phi = solve_phi(p, lambda, options);
  const IvpSolution psi = solve_psi(p, lambda, options);
  const double k = psi.y.front();
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < phi.y.size(); ++i) {
    worst = std::max(worst, std::abs(psi.y[i] - k * phi.y[i]));
    scale = std::max(scale, std::abs(psi.y[i]));
  }
  return scale > 0.0 ? worst / scale : worst;
}

ForwardSolution::ForwardSolution(ProblemCoefficients problem, std::vector<EigenRecord> records,
                                 IvpOptions ivp)
    : problem_(std::move(problem)), records_(std::move(records)), ivp_(ivp) {}

std::vector<double> ForwardSolution::eigenvalues() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.lambda());
  return out;
}

std::vector<double> ForwardSolution::gammas() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.gamma());
  return out;
}

SpectralData ForwardSolution::spectral_data() const { return SpectralData(eigenvalues(), gammas()); }

ForwardSolution forward_solve(const ProblemCoefficients& p, std::size_t count,
                              const ForwardOptions& options) {
  const std::vector<double> lambdas = find_eigenvalues(p, count, options);
  std::vector<EigenRecord> records;
  records.reserve(count);
  for (double lambda : lambdas) {
    EndValues end;
    std::vector<double> samples;
    if (options.keep_phi_samples) {
      IvpSolution phi = solve_phi(p, lambda, options.ivp);
      end = {phi.y.back(), phi.dy.back()};
      samples = std::move(phi.y);
    } else {
      end = phi_end(p, lambda, options.ivp);
    }
    const double gamma = norming_constant(p, lambda, options);
    const double k = compute_k(p, lambda, options.ivp);
    records.emplace_back(lambda, end, gamma, k, std::move(samples));
  }
  return ForwardSolution(p, std::move(records), options.ivp);
}

}  // namespace ebsl
