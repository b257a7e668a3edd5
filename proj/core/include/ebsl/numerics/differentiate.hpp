#pragma once

#include <span>
#include <vector>

namespace ebsl::numerics {

enum class DiffScheme {
  Spline,    ///< derivative of a (smoothing) cubic spline fit
  Centered,  ///< second-order centered differences, one-sided at the ends
};

struct DiffOptions {
  DiffScheme scheme = DiffScheme::Spline;
  /// Penalty weight p of sum (y_i - g_i)^2 + p * int g''^2. Zero selects the
  /// not-a-knot interpolating spline.
  double smoothing = 0.0;
};

/// Derivative samples of uniformly spaced values (at least 5).
std::vector<double> diff_diagonal(std::span<const double> values, double step,
                                  const DiffOptions& options = {});

}  // namespace ebsl::numerics
