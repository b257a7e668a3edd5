#include "ebsl/numerics/quadrature.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "ebsl/errors.hpp"

namespace ebsl::numerics {

QuadratureRule::QuadratureRule(QuadratureKind kind, std::vector<double> nodes,
                               std::vector<double> weights, int order)
    : kind_(kind), nodes_(std::move(nodes)), weights_(std::move(weights)), order_(order) {
  if (nodes_.size() != weights_.size() || nodes_.empty()) {
    throw InvalidArgument("QuadratureRule: nodes and weights must be nonempty and equal length");
  }
  for (double w : weights_) {
    if (!(w > 0.0)) throw InvalidArgument("QuadratureRule: weights must be positive");
  }
}

std::vector<double> uniform_weights(QuadratureKind kind, std::size_t intervals, double step) {
  std::vector<double> w(intervals + 1, 0.0);
  if (intervals == 0) return w;
  if (kind == QuadratureKind::Trapezoid || intervals == 1) {
    for (auto& v : w) v = step;
    w.front() = w.back() = 0.5 * step;
    return w;
  }
  if (kind != QuadratureKind::Simpson) {
    throw InvalidArgument("uniform_weights: only trapezoid and Simpson live on uniform nodes");
  }
  // Simpson over an even number of cells; an odd remainder of 3 cells goes to
  // the 3/8 rule at the right end.
  std::size_t simpson_cells = intervals;
  if (intervals % 2 == 1) simpson_cells = intervals - 3;
  for (std::size_t i = 0; i + 2 <= simpson_cells; i += 2) {
    w[i] += step / 3.0;
    w[i + 1] += 4.0 * step / 3.0;
    w[i + 2] += step / 3.0;
  }
  if (intervals % 2 == 1) {
    const std::size_t i = simpson_cells;
    const double c = 3.0 * step / 8.0;
    w[i] += c;
    w[i + 1] += 3.0 * c;
    w[i + 2] += 3.0 * c;
    w[i + 3] += c;
  }
  return w;
}

QuadratureRule QuadratureRule::uniform(QuadratureKind kind, std::size_t intervals, double step) {
  if (intervals == 0) throw InvalidArgument("QuadratureRule::uniform: need at least one interval");
  std::vector<double> x(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) x[i] = static_cast<double>(i) * step;
  const int order = (kind == QuadratureKind::Simpson && intervals >= 2) ? 4 : 2;
  return QuadratureRule(kind, std::move(x), uniform_weights(kind, intervals, step), order);
}

namespace {

template <int P>
void gauss_reference(std::vector<double>& x, std::vector<double>& w) {
  using G = boost::math::quadrature::gauss<double, P>;
  const auto& a = G::abscissa();
  const auto& b = G::weights();
  // Boost stores the non-negative half; mirror it onto [-1, 1].
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pts.emplace_back(a[i], b[i]);
    if (a[i] != 0.0) pts.emplace_back(-a[i], b[i]);
  }
  std::sort(pts.begin(), pts.end());
  for (auto [xi, wi] : pts) {
    x.push_back(xi);
    w.push_back(wi);
  }
}

void gauss_reference(int points, std::vector<double>& x, std::vector<double>& w) {
  switch (points) {
    case 2: gauss_reference<2>(x, w); break;
    case 3: gauss_reference<3>(x, w); break;
    case 4: gauss_reference<4>(x, w); break;
    case 5: gauss_reference<5>(x, w); break;
    case 6: gauss_reference<6>(x, w); break;
    case 7: gauss_reference<7>(x, w); break;
    case 8: gauss_reference<8>(x, w); break;
    case 9: gauss_reference<9>(x, w); break;
    case 10: gauss_reference<10>(x, w); break;
    default:
      throw InvalidArgument("gauss_legendre: unsupported point count " + std::to_string(points));
  }
}

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(std::size_t panels, int points, double length) {
  if (panels == 0) throw InvalidArgument("gauss_legendre: need at least one panel");
  std::vector<double> rx, rw;
  gauss_reference(points, rx, rw);
  const double width = length / static_cast<double>(panels);
  std::vector<double> x, w;
  x.reserve(panels * rx.size());
  w.reserve(panels * rx.size());
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * width;
    for (std::size_t i = 0; i < rx.size(); ++i) {
      x.push_back(mid + 0.5 * width * rx[i]);
      w.push_back(0.5 * width * rw[i]);
    }
  }
  return QuadratureRule(QuadratureKind::GaussLegendre, std::move(x), std::move(w), 2 * points);
}

double QuadratureRule::integrate(std::span<const double> values) const {
  if (values.size() != weights_.size()) {
    throw InvalidArgument("QuadratureRule::integrate: value count does not match node count");
  }
  return std::inner_product(weights_.begin(), weights_.end(), values.begin(), 0.0);
}

std::vector<double> cumulative_trapezoid(std::span<const double> values, double step) {
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t i = 1; i < values.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * step * (values[i - 1] + values[i]);
  }
  return out;
}

}  // namespace ebsl::numerics
