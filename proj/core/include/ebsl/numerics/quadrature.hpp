#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ebsl::numerics {

enum class QuadratureKind {
  Trapezoid,      ///< composite trapezoid on uniform nodes
  Simpson,        ///< composite Simpson (3/8 rule on the last panel if odd)
  GaussLegendre,  ///< Gauss-Legendre panels, nodes interior to each panel
};

/// Nodes and positive weights for integrals over [0, L].
class QuadratureRule {
 public:
  QuadratureRule(QuadratureKind kind, std::vector<double> nodes, std::vector<double> weights,
                 int order);

  /// `intervals` uniform cells of width `step` starting at 0; nodes are the
  /// cell endpoints. Trapezoid or Simpson only.
  static QuadratureRule uniform(QuadratureKind kind, std::size_t intervals, double step);

  /// `panels` equal panels over [0, length], `points` Gauss nodes each
  /// (supported: 2..10).
  static QuadratureRule gauss_legendre(std::size_t panels, int points, double length);

  QuadratureKind kind() const noexcept { return kind_; }
  int order() const noexcept { return order_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  double integrate(std::span<const double> values) const;

 private:
  QuadratureKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int order_;
};

/// Weights only, for the first `intervals + 1` nodes of a uniform grid.
std::vector<double> uniform_weights(QuadratureKind kind, std::size_t intervals, double step);

/// Running trapezoid integral: out[i] = integral of the samples from node 0 to
/// node i.
std::vector<double> cumulative_trapezoid(std::span<const double> values, double step);

}  // namespace ebsl::numerics
