#include "ebsl/numerics/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

using State = std::array<double, 2>;

struct CartesianRhs {
  const CubicSpline& q;
  double lambda;
  State operator()(double x, const State& u) const { return {u[1], (q(x) - lambda) * u[0]}; }
};

// u = (theta, log r); y = r sin(theta), y' = s r cos(theta), s = sqrt(lambda).
struct PrueferRhs {
  const CubicSpline& q;
  double s;
  State operator()(double x, const State& u) const {
    const double qs = q(x) / s;
    const double sn = std::sin(u[0]);
    const double cs = std::cos(u[0]);
    return {s - qs * sn * sn, qs * sn * cs};
  }
};

State axpy(const State& u, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State r = u;
  for (auto [c, k] : terms) {
    r[0] += h * c * (*k)[0];
    r[1] += h * c * (*k)[1];
  }
  return r;
}

struct StepResult {
  State next;
  State error;
};

template <class Rhs>
StepResult dp5_step(const Rhs& f, double x, const State& u, double h) {
  const State k1 = f(x, u);
  const State k2 = f(x + c2 * h, axpy(u, h, {{a21, &k1}}));
  const State k3 = f(x + c3 * h, axpy(u, h, {{a31, &k1}, {a32, &k2}}));
  const State k4 = f(x + c4 * h, axpy(u, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
  const State k5 = f(x + c5 * h, axpy(u, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
  const State k6 =
      f(x + h, axpy(u, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
  const State next = axpy(u, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
  const State k7 = f(x + h, next);
  const State err = axpy(State{0.0, 0.0}, h,
                         {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
  return {next, err};
}

// Integrates through all nodes with a fixed plan. Returns the largest scaled
// local error (> 1 means the plan is too coarse).
template <class Rhs, class ErrorNorm>
double sweep(const Rhs& f, std::span<const double> nodes, State start, Direction dir,
             double max_step, const ErrorNorm& norm, std::vector<State>& out) {
  const std::size_t n = nodes.size();
  out.assign(n, State{});
  double worst = 0.0;
  if (dir == Direction::Forward) {
    out[0] = start;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double len = nodes[i + 1] - nodes[i];
      const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(len / max_step - 1e-9)));
      const double h = len / static_cast<double>(sub);
      State u = out[i];
      for (std::size_t k = 0; k < sub; ++k) {
        const double x = nodes[i] + static_cast<double>(k) * h;
        const StepResult r = dp5_step(f, x, u, h);
        worst = std::max(worst, norm(u, r.next, r.error));
        u = r.next;
      }
      out[i + 1] = u;
    }
  } else {
    out[n - 1] = start;
    for (std::size_t i = n - 1; i > 0; --i) {
      const double len = nodes[i] - nodes[i - 1];
      const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(len / max_step - 1e-9)));
      const double h = -len / static_cast<double>(sub);
      State u = out[i];
      for (std::size_t k = 0; k < sub; ++k) {
        const double x = nodes[i] + static_cast<double>(k) * h;
        const StepResult r = dp5_step(f, x, u, h);
        worst = std::max(worst, norm(u, r.next, r.error));
        u = r.next;
      }
      out[i - 1] = u;
    }
  }
  return worst;
}

}  // namespace

IvpSolution integrate_ivp(const CubicSpline& q, std::span<const double> nodes,
                          std::array<double, 2> y0, double lambda, Direction direction,
                          const IvpOptions& options) {
  if (nodes.size() < 2) throw InvalidArgument("integrate_ivp: need at least 2 nodes");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) {
      throw InvalidArgument("integrate_ivp: nodes must be strictly increasing");
    }
  }
  if (!std::isfinite(lambda)) throw InvalidArgument("integrate_ivp: lambda must be finite");

  const Formulation form = options.formulation.value_or(
      lambda > options.lambda_switch ? Formulation::Pruefer : Formulation::Cartesian);
  if (form == Formulation::Pruefer && !(lambda > 0.0)) {
    throw InvalidArgument("integrate_ivp: Pruefer form needs lambda > 0");
  }
  const double s = std::sqrt(std::abs(lambda));
  const double freq = std::max(1.0, s);

  IvpSolution sol;
  sol.formulation = form;
  const std::size_t n = nodes.size();
  sol.y.assign(n, 0.0);
  sol.dy.assign(n, 0.0);
  if (y0[0] == 0.0 && y0[1] == 0.0) {
    sol.max_step = options.max_step;
    return sol;
  }

  double max_step = options.max_step > 0.0 ? options.max_step : 0.5 / freq;
  const bool pinned = options.max_step > 0.0;
  std::vector<State> states;

  for (int attempt = 0;; ++attempt) {
    double worst = 0.0;
    if (form == Formulation::Cartesian) {
      const CartesianRhs f{q, lambda};
      auto norm = [&](const State& u, const State& v, const State& e) {
        const double mag = std::max(std::abs(u[0]) + std::abs(u[1]) / freq,
                                    std::abs(v[0]) + std::abs(v[1]) / freq);
        const double err = std::max(std::abs(e[0]), std::abs(e[1]) / freq);
        return err / (options.tol * std::max(mag, 1e-300));
      };
      worst = sweep(f, nodes, y0, direction, max_step, norm, states);
      for (double v : {states.front()[0], states.back()[0]}) {
        if (!std::isfinite(v)) worst = std::numeric_limits<double>::infinity();
      }
    } else {
      const PrueferRhs f{q, s};
      const State start{std::atan2(y0[0], y0[1] / s), 0.5 * std::log(y0[0] * y0[0] + y0[1] * y0[1] / lambda)};
      auto norm = [&](const State&, const State&, const State& e) {
        return std::max(std::abs(e[0]), std::abs(e[1])) / options.tol;
      };
      worst = sweep(f, nodes, start, direction, max_step, norm, states);
    }

    if (worst <= 1.0 || pinned) break;
    if (attempt >= options.max_refinements) {
      throw IntegrationError("integrate_ivp: step-size underflow at lambda = " +
                                 std::to_string(lambda),
                             lambda);
    }
    max_step *= 0.5;
  }

  sol.max_step = max_step;
  for (std::size_t i = 0; i < n; ++i) {
    if (form == Formulation::Cartesian) {
      sol.y[i] = states[i][0];
      sol.dy[i] = states[i][1];
    } else {
      const double r = std::exp(states[i][1]);
      sol.y[i] = r * std::sin(states[i][0]);
      sol.dy[i] = s * r * std::cos(states[i][0]);
    }
    if (!std::isfinite(sol.y[i]) || !std::isfinite(sol.dy[i])) {
      throw IntegrationError("integrate_ivp: solution overflow at lambda = " + std::to_string(lambda),
                             lambda);
    }
  }
  return sol;
}

IvpSolution integrate_ivp(const CubicSpline& q, const UniformGrid& grid, std::array<double, 2> y0,
                          double lambda, Direction direction, const IvpOptions& options) {
  const std::vector<double> x = grid.nodes();
  return integrate_ivp(q, x, y0, lambda, direction, options);
}

}  // namespace ebsl::numerics
