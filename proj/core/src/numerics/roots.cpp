#include "ebsl/numerics/roots.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

double find_root_bracketed(const std::function<double(double)>& f, Bracket bracket,
                           const RootOptions& options) {
  double a = bracket.lo, b = bracket.hi;
  if (a > b) std::swap(a, b);
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) {
    throw BracketError("find_root_bracketed: no sign change on [" + std::to_string(a) + ", " +
                       std::to_string(b) + "]");
  }

  const double target_width = std::max(options.tol, (b - a) * options.bisection_shrink);
  int it = 0;
  while (b - a > target_width && it < options.max_iterations) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    ++it;
    if (fm == 0.0) return m;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }

  // Newton polish. The slope comes from the current bracket (secant), and a
  // step leaving the bracket falls back to bisection.
  double x = std::abs(fa) < std::abs(fb) ? a : b;
  double fx = x == a ? fa : fb;
  while (b - a > options.tol && it < options.max_iterations) {
    const double slope = (fb - fa) / (b - a);
    double next = x - fx / slope;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    const double fn = f(next);
    ++it;
    if (fn == 0.0) return next;
    const double step = std::abs(next - x);
    if (std::signbit(fn) == std::signbit(fa)) {
      a = next;
      fa = fn;
    } else {
      b = next;
      fb = fn;
    }
    x = next;
    fx = fn;
    if (step < 0.5 * options.tol) break;
    // Guard against one-sided convergence: also probe the far side.
    const double guard = x == a ? std::min(b, x + options.tol) : std::max(a, x - options.tol);
    if (guard != x && (b - a) > options.tol) {
      const double fg = f(guard);
      ++it;
      if (fg == 0.0) return guard;
      if (std::signbit(fg) == std::signbit(fa)) {
        a = guard;
        fa = fg;
      } else {
        b = guard;
        fb = fg;
      }
    }
  }
  return std::abs(fa) < std::abs(fb) ? a : b;
}

}  // namespace ebsl::numerics
