#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "ebsl/grid.hpp"
#include "ebsl/numerics/spline.hpp"

namespace ebsl::numerics {

enum class Direction { Forward, Backward };

/// Cartesian integrates (y, y') directly; Pruefer integrates phase and
/// log-amplitude of y = r sin(theta), y' = sqrt(lambda) r cos(theta).
enum class Formulation { Cartesian, Pruefer };

struct IvpOptions {
  /// Per-step error bound: relative for Cartesian, absolute on phase and
  /// log-amplitude for Pruefer.
  double tol = 1e-10;
  /// Pruefer is used for lambda above this value.
  double lambda_switch = 25.0;
  /// Force a formulation instead of choosing by lambda_switch.
  std::optional<Formulation> formulation;
  /// Largest substep. 0 picks one from lambda; a positive value pins the
  /// step plan so that results are smooth in lambda.
  double max_step = 0.0;
  /// Halvings of the step before giving up with IntegrationError.
  int max_refinements = 16;
};

struct IvpSolution {
  std::vector<double> y;
  std::vector<double> dy;
  Formulation formulation = Formulation::Cartesian;
  /// Step plan actually used; pass back through IvpOptions::max_step to
  /// reproduce it at a neighbouring lambda.
  double max_step = 0.0;
};

/// Solves -y'' + q(x) y = lambda y through the given strictly increasing
/// nodes. Forward: y0 is (y, y') at nodes.front(); Backward: at nodes.back().
/// Results are indexed like `nodes`.
IvpSolution integrate_ivp(const CubicSpline& q, std::span<const double> nodes,
                          std::array<double, 2> y0, double lambda, Direction direction,
                          const IvpOptions& options = {});

IvpSolution integrate_ivp(const CubicSpline& q, const UniformGrid& grid,
                          std::array<double, 2> y0, double lambda, Direction direction,
                          const IvpOptions& options = {});

}  // namespace ebsl::numerics
