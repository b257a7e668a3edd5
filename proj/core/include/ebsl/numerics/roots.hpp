#pragma once

#include <functional>

namespace ebsl::numerics {

struct Bracket {
  double lo;
  double hi;
};

struct RootOptions {
  /// Absolute tolerance on the root, in the units of the argument of f.
  double tol = 1e-12;
  int max_iterations = 200;
  /// Bisection shrinks the bracket by this factor before the Newton polish.
  double bisection_shrink = 1e-3;
};

/// Root of a continuous f with a sign change across the bracket: bisection
/// first, then Newton polish with a secant slope, kept inside the bracket.
/// Throws BracketError if f(lo) and f(hi) have the same strict sign.
double find_root_bracketed(const std::function<double(double)>& f, Bracket bracket,
                           const RootOptions& options = {});

}  // namespace ebsl::numerics
