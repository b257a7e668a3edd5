#include "ebsl/glm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ebsl/errors.hpp"
#include "ebsl/numerics/linear.hpp"
#include "ebsl/validation.hpp"

namespace ebsl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kTailTerms = 4096;

// Unperturbed norming constants: pi for index 0, pi/2 otherwise.
double model_gamma(std::size_t m) { return m == 0 ? kPi : kPi / 2.0; }

double resolve_omega(const SpectralData& d, std::optional<double> omega, bool* estimated = nullptr) {
  if (estimated) *estimated = false;
  if (omega) return *omega;
  if (d.omega()) return *d.omega();
  if (estimated) *estimated = true;
  return estimate_omega(d.lambdas());
}

// Model tail for indices n > N with m = n - 1: s_n = m + omega/(m pi) + b/m^3,
// gamma_n = pi/2 + g/m^2. The first- and second-order parts in omega and the
// leading part in g are summed in closed form; the O(1/m^3) remainder is summed
// directly over `extra` terms. At a = 2 pi the left limit is taken so that F
// stays continuous up to the corner x = t = pi.
double model_tail(double a, std::size_t big_n, double omega, double g, double b, bool at_two_pi,
                  std::size_t extra) {
  const double c = omega / kPi;
  double partial_sin = 0.0, partial_cos2 = 0.0;
  for (std::size_t m = 1; m < big_n; ++m) {
    const double mm = static_cast<double>(m);
    partial_sin += std::sin(mm * a) / mm;
    partial_cos2 += std::cos(mm * a) / (mm * mm);
  }
  const double s1 = a == 0.0 ? 0.0 : (at_two_pi ? -kPi / 2.0 : (kPi - a) / 2.0) - partial_sin;
  const double c2 = kPi * kPi / 6.0 - kPi * a / 2.0 + a * a / 4.0 - partial_cos2;
  const double gg = 2.0 * g / kPi;
  double acc = -c * a * s1 - (0.5 * c * c * a * a + gg) * c2;
  for (std::size_t m = big_n; m < big_n + extra; ++m) {
    const double mm = static_cast<double>(m);
    const double d = c / mm;
    const double ma = mm * a;
    const double inv2 = 1.0 / (mm * mm);
    acc += std::cos((mm + d + b * inv2 / mm) * a) / (1.0 + gg * inv2) - std::cos(ma) +
           d * a * std::sin(ma) +
           (0.5 * d * d * a * a + gg * inv2) * std::cos(ma);
  }
  return (2.0 / kPi) * acc;
}

double resolve_gamma_coefficient(const SpectralData& d, std::optional<double> g) {
  if (g) return *g;
  return estimate_gamma_coefficient(d.gammas());
}

// Integrals of the two hat halves against cos(sqrt(lambda) t) on every cell:
// cell j contributes K_j * lo[j] + K_{j+1} * hi[j].
struct CellWeights {
  std::vector<double> lo;
  std::vector<double> hi;
};

CellWeights cell_weights(const UniformGrid& grid, double lambda) {
  const std::size_t m = grid.intervals();
  const double dx = grid.step();
  CellWeights cw;
  cw.lo.resize(m);
  cw.hi.resize(m);
  const double s = std::sqrt(std::abs(lambda));
  if (lambda <= 0.0 || s * dx < 0.5) {
    static constexpr double xi[4] = {0.5 - 0.5 * 0.8611363115940526, 0.5 - 0.5 * 0.3399810435848563,
                                     0.5 + 0.5 * 0.3399810435848563, 0.5 + 0.5 * 0.8611363115940526};
    static constexpr double wt[4] = {0.5 * 0.3478548451374538, 0.5 * 0.6521451548625461,
                                     0.5 * 0.6521451548625461, 0.5 * 0.3478548451374538};
    for (std::size_t j = 0; j < m; ++j) {
      const double t0 = grid.node(j);
      double lo = 0.0, hi = 0.0;
      for (int g = 0; g < 4; ++g) {
        const double c = cos_sqrt(lambda, t0 + xi[g] * dx);
        lo += wt[g] * (1.0 - xi[g]) * c;
        hi += wt[g] * xi[g] * c;
      }
      cw.lo[j] = lo * dx;
      cw.hi[j] = hi * dx;
    }
  } else {
    std::vector<double> sn(m + 1), cs(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      sn[j] = std::sin(s * grid.node(j));
      cs[j] = std::cos(s * grid.node(j));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const double hi = sn[j + 1] / s + (cs[j + 1] - cs[j]) / (s * s * dx);
      cw.hi[j] = hi;
      cw.lo[j] = (sn[j + 1] - sn[j]) / s - hi;
    }
  }
  return cw;
}

double row_integral(std::span<const double> row, const CellWeights& cw) {
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < row.size(); ++j) acc += row[j] * cw.lo[j] + row[j + 1] * cw.hi[j];
  return acc;
}

// phi(pi) and phi'(pi) from the last kernel rows.
EndValues end_values(const KernelField& K, double lambda, const CellWeights& cw) {
  const UniformGrid& grid = K.grid();
  const std::size_t m = grid.intervals();
  if (m < 5) throw InvalidArgument("rebuild_phi: need at least 5 intervals");
  const double dx = grid.step();
  const double c_pi = cos_sqrt(lambda, kPi);

  EndValues e;
  e.value = c_pi + row_integral(K.row(m), cw);

  // d/dx K(pi, t_j): one-sided three-point difference in x, extrapolated
  // quadratically in t for the two columns the lower rows do not reach.
  std::vector<double> dk(m + 1);
  for (std::size_t j = 0; j + 2 <= m; ++j) {
    dk[j] = (3.0 * K.at(m, j) - 4.0 * K.at(m - 1, j) + K.at(m - 2, j)) / (2.0 * dx);
  }
  for (std::size_t j = m - 1; j <= m; ++j) dk[j] = 3.0 * dk[j - 1] - 3.0 * dk[j - 2] + dk[j - 3];
  e.derivative = -lambda * sinc_sqrt(lambda, kPi) + K.at(m, m) * c_pi + row_integral(dk, cw);
  return e;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double med = v[mid];
  if (v.size() % 2 == 0) {
    med = 0.5 * (med + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
  }
  return med;
}

}  // namespace

std::string to_string(TailMode mode) {
  return mode == TailMode::Truncate ? "truncate" : "first-order";
}

TailMode tail_mode_from_string(const std::string& name) {
  if (name == "truncate") return TailMode::Truncate;
  if (name == "first-order") return TailMode::FirstOrder;
  throw InvalidArgument("unknown tail mode '" + name + "' (expected truncate or first-order)");
}

double cos_sqrt(double lambda, double x) noexcept {
  if (lambda >= 0.0) return std::cos(std::sqrt(lambda) * x);
  return std::cosh(std::sqrt(-lambda) * x);
}

double sinc_sqrt(double lambda, double x) noexcept {
  if (lambda == 0.0) return x;
  if (lambda > 0.0) {
    const double s = std::sqrt(lambda);
    return std::sin(s * x) / s;
  }
  const double k = std::sqrt(-lambda);
  return std::sinh(k * x) / k;
}

KernelField build_F(const SpectralData& d, const UniformGrid& grid, TailMode tail_mode,
                    std::optional<double> omega, std::optional<double> gamma_coefficient,
                    std::optional<double> cubic_coefficient) {
  const std::size_t m = grid.intervals();
  const auto lam = d.lambdas();
  const auto gam = d.gammas();
  const std::size_t big_n = d.truncation();

  // F(x, t) = (G(x + t) + G(x - t)) / 2 with G sampled at a_k = k dx.
  std::vector<double> g(2 * m + 1);
  for (std::size_t k = 0; k <= 2 * m; ++k) {
    const double a = k == 2 * m ? 2.0 * kPi : static_cast<double>(k) * grid.step();
    double acc = cos_sqrt(lam[0], a) / gam[0];
    for (std::size_t n = 1; n <= big_n; ++n) {
      acc += cos_sqrt(lam[n], a) / gam[n] - std::cos(static_cast<double>(n - 1) * a) / model_gamma(n - 1);
    }
    g[k] = acc;
  }
  if (tail_mode == TailMode::FirstOrder) {
    const double w = resolve_omega(d, omega);
    const double gc = resolve_gamma_coefficient(d, gamma_coefficient);
    const double bc = cubic_coefficient ? *cubic_coefficient : estimate_cubic_coefficient(lam, w);
    for (std::size_t k = 0; k <= 2 * m; ++k) {
      const double a = k == 2 * m ? 2.0 * kPi : static_cast<double>(k) * grid.step();
      g[k] += model_tail(a, big_n, w, gc, bc, k == 2 * m, kTailTerms);
    }
  }

  std::vector<double> packed(KernelField::packed_size(grid));
  for (std::size_t i = 0; i <= m; ++i) {
    double* row = packed.data() + KernelField::offset(i);
    for (std::size_t j = 0; j <= i; ++j) row[j] = 0.5 * (g[i + j] + g[i - j]);
  }
  return KernelField(grid, KernelKind::F, std::move(packed));
}

RowSolution solve_main_equation(const KernelField& F, std::size_t x_index,
                                const MainEquationOptions& options) {
  if (F.kind() != KernelKind::F) throw InvalidArgument("solve_main_equation: expected an F kernel");
  if (x_index >= F.grid().size()) throw InvalidArgument("solve_main_equation: row out of range");
  RowSolution out;
  if (x_index == 0) {
    out.k = {-F.at(0, 0)};
    return out;
  }
  const std::size_t n = x_index + 1;
  const std::vector<double> w = numerics::uniform_weights(options.quadrature, x_index, F.grid().step());
  numerics::DenseMatrix a(n);
  std::vector<double> rhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) a(j, l) = w[l] * F.at(l, j);
    a(j, j) += 1.0;
    rhs[j] = -F.at(x_index, j);
  }
  numerics::DenseSolution sol = numerics::solve_dense(a, rhs, options.pivot_floor);
  out.k = std::move(sol.x);
  out.residual = sol.residual;
  out.smallest_pivot = sol.smallest_pivot;
  return out;
}

KernelSolution solve_kernel(const KernelField& F, const MainEquationOptions& options) {
  const UniformGrid& grid = F.grid();
  std::vector<double> packed(KernelField::packed_size(grid));
  std::vector<double> residuals(grid.size());
  double pivot = std::numeric_limits<double>::infinity();
  std::size_t pivot_row = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RowSolution row = solve_main_equation(F, i, options);
    std::copy(row.k.begin(), row.k.end(), packed.begin() + static_cast<std::ptrdiff_t>(KernelField::offset(i)));
    residuals[i] = row.residual;
    if (i > 0 && row.smallest_pivot < pivot) {
      pivot = row.smallest_pivot;
      pivot_row = i;
    }
  }
  return {KernelField(grid, KernelKind::K, std::move(packed)), std::move(residuals), pivot, pivot_row};
}

PotentialRecovery recover_q_h(const KernelField& K, const numerics::DiffOptions& diff) {
  const UniformGrid& grid = K.grid();
  const std::vector<double> diag = K.diagonal();
  std::vector<double> q = numerics::diff_diagonal(diag, grid.step(), diff);
  for (double& v : q) v *= 2.0;
  const std::size_t m = grid.intervals();
  q[0] = 2.0 * q[1] - q[2];
  q[m] = 2.0 * q[m - 1] - q[m - 2];

  PotentialRecovery out;
  out.h = diag[0];
  const std::vector<double> integral = numerics::cumulative_trapezoid(q, grid.step());
  for (std::size_t i = 0; i <= m; ++i) {
    out.consistency = std::max(out.consistency, std::abs(out.h + 0.5 * integral[i] - diag[i]));
  }
  out.q = std::move(q);
  return out;
}

RebuiltPhi rebuild_phi(const KernelField& K, double lambda) {
  if (K.kind() != KernelKind::K) throw InvalidArgument("rebuild_phi: expected a K kernel");
  const UniformGrid& grid = K.grid();
  const CellWeights cw = cell_weights(grid, lambda);
  RebuiltPhi out;
  out.phi.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.phi[i] = cos_sqrt(lambda, grid.node(i)) + row_integral(K.row(i), cw);
  }
  out.end = end_values(K, lambda, cw);
  return out;
}

numerics::ProductEvaluator chi_from_product(const SpectralData& d, std::optional<double> omega,
                                            double cubic_coefficient) {
  const auto lam = d.lambdas();
  return numerics::ProductEvaluator(std::vector<double>(lam.begin(), lam.end()), -kPi,
                                    resolve_omega(d, omega), cubic_coefficient);
}

LineFit weighted_line(std::span<const double> x, std::span<const double> y,
                      std::span<const double> w) {
  if (x.size() != y.size() || x.size() != w.size() || x.size() < 2) {
    throw InvalidArgument("weighted_line: need at least 2 matching samples");
  }
  double sw = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += w[i];
    sx += w[i] * x[i];
    sy += w[i] * y[i];
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += w[i] * (x[i] - mx) * (x[i] - mx);
    sxy += w[i] * (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw InvalidArgument("weighted_line: abscissae are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += w[i] * r * r;
  }
  fit.residual = std::sqrt(ss / sw);
  return fit;
}

BoundaryRecovery recover_boundary_constants(const SpectralData& d, const KernelField& K,
                                            const numerics::ProductEvaluator& chi, double tol_kappa) {
  const auto lam = d.lambdas();
  const auto gam = d.gammas();
  const std::size_t count = lam.size();
  if (count < 4) throw InvalidArgument("recover_boundary_constants: need at least 4 eigenvalues");
  if (chi.roots().size() != count) {
    throw InvalidArgument("recover_boundary_constants: product roots do not match the data");
  }

  BoundaryRecovery out;
  std::vector<double> weights(count);
  out.k.resize(count);
  out.a.resize(count);
  out.b.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double k = chi.derivative_at_root(n) / gam[n];
    if (k == 0.0 || !std::isfinite(k)) {
      throw DegenerateRootError("recover_boundary_constants: k_" + std::to_string(n) + " vanished");
    }
    const EndValues e = end_values(K, lam[n], cell_weights(K.grid(), lam[n]));
    out.k[n] = k;
    out.a[n] = k * e.value;
    out.b[n] = k * e.derivative;
    weights[n] = 1.0 / (1.0 + lam[n] * lam[n]);
  }
  out.fit_a = weighted_line(lam, out.a, weights);
  out.fit_b = weighted_line(lam, out.b, weights);
  out.kappa = {out.fit_a.slope, out.fit_a.intercept, out.fit_b.slope, out.fit_b.intercept};
  if (!(std::abs(out.kappa[0] + 1.0) <= tol_kappa)) {
    throw InconsistentDataError("recover_boundary_constants: kappa_1 = " +
                                std::to_string(out.kappa[0]) + " is not within " +
                                std::to_string(tol_kappa) + " of -1");
  }
  const double scale = -1.0 / out.kappa[0];
  for (std::size_t n = 0; n < count; ++n) {
    out.a[n] *= scale;
    out.b[n] *= scale;
  }
  out.H1 = scale * out.kappa[1];
  // A_n = H1 - lambda_n and B_n = H lambda_n - H2 once normalised.
  out.H = scale * out.kappa[2];
  out.H2 = -scale * out.kappa[3];
  out.rho = out.H * out.H1 - out.H2;

  const std::size_t pairs_limit = std::min<std::size_t>(count, 16);
  std::vector<double> ratios;
  for (std::size_t n = 0; n < pairs_limit; ++n) {
    for (std::size_t m = n + 1; m < pairs_limit; ++m) {
      ratios.push_back((out.a[n] * out.b[m] - out.b[n] * out.a[m]) / (lam[m] - lam[n]));
    }
  }
  out.rho_pairs = median(std::move(ratios));
  if (!(out.rho > 0.0)) {
    throw InvalidReconstructionError("recover_boundary_constants: recovered rho = " +
                                     std::to_string(out.rho) + " is not positive");
  }
  return out;
}

ReconstructionResult reconstruct_from_spectral_data(const SpectralData& d,
                                                    const ReconstructionOptions& options) {
  const ValidationReport report = validate_spectral_data(d);
  if (!report.valid()) {
    throw ValidationError("reconstruct_from_spectral_data: invalid spectral data: " +
                          report.violations.front());
  }
  const UniformGrid grid(options.intervals);
  ReconstructionDiagnostics diag;
  diag.tail_mode = options.tail_mode;
  diag.omega = resolve_omega(d, options.omega, &diag.omega_estimated);

  if (options.tail_mode == TailMode::FirstOrder) {
    diag.gamma_coefficient = resolve_gamma_coefficient(d, options.gamma_coefficient);
    diag.cubic_coefficient = estimate_cubic_coefficient(d.lambdas(), diag.omega);
  }

  KernelField F = build_F(d, grid, options.tail_mode, diag.omega, diag.gamma_coefficient,
                          diag.cubic_coefficient);
  KernelSolution ks = solve_kernel(F, options.main);
  const PotentialRecovery rec = recover_q_h(ks.K, options.diff);
  const numerics::ProductEvaluator chi = chi_from_product(d, diag.omega, diag.cubic_coefficient);
  BoundaryRecovery boundary = recover_boundary_constants(d, ks.K, chi, options.tol_kappa);

  for (double v : F.packed()) diag.max_abs_F = std::max(diag.max_abs_F, std::abs(v));
  diag.residuals = std::move(ks.residuals);
  diag.max_residual = *std::max_element(diag.residuals.begin(), diag.residuals.end());
  diag.smallest_pivot = ks.smallest_pivot;
  diag.smallest_pivot_row = ks.smallest_pivot_row;
  diag.consistency = rec.consistency;

  ProblemCoefficients coefficients(grid, rec.q, {rec.h, boundary.H, boundary.H1, boundary.H2});
  return {std::move(coefficients), std::move(F), std::move(ks.K), std::move(boundary), std::move(diag)};
}

}  // namespace ebsl
