#pragma once

// Helpers shared by tests that need phi(x, lambda) at quadrature nodes rather
// than on the coarse problem grid.

#include <numbers>
#include <vector>

#include "ebsl/forward.hpp"
#include "ebsl/numerics/ivp.hpp"
#include "ebsl/numerics/quadrature.hpp"

namespace fixture {

struct GaussSamples {
  std::vector<double> weights;
  std::vector<double> phi;
};

/// phi(., lambda) at Gauss-Legendre nodes on [0, pi], tight integrator tolerance.
inline GaussSamples phi_gauss(const ebsl::ProblemCoefficients& p, double lambda,
                              std::size_t panels = 96, int points = 10) {
  const auto rule = ebsl::numerics::QuadratureRule::gauss_legendre(panels, points, std::numbers::pi);
  std::vector<double> nodes{0.0};
  nodes.insert(nodes.end(), rule.nodes().begin(), rule.nodes().end());
  ebsl::numerics::IvpOptions opt;
  opt.tol = 1e-13;
  const auto sol = ebsl::numerics::integrate_ivp(p.potential(), nodes, {1.0, p.h()}, lambda,
                                                 ebsl::numerics::Direction::Forward, opt);
  GaussSamples out;
  out.weights.assign(rule.weights().begin(), rule.weights().end());
  out.phi.assign(sol.y.begin() + 1, sol.y.end());
  return out;
}

inline double inner(const GaussSamples& a, const GaussSamples& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.weights.size(); ++i) acc += a.weights[i] * a.phi[i] * b.phi[i];
  return acc;
}

}  // namespace fixture
