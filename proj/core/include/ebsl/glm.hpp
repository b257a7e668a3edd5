#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebsl/numerics/differentiate.hpp"
#include "ebsl/numerics/product.hpp"
#include "ebsl/numerics/quadrature.hpp"
#include "ebsl/types.hpp"

namespace ebsl {

/// How F treats the eigenvalues beyond the supplied truncation.
enum class TailMode {
  Truncate,    ///< data beyond N equal the unperturbed model; the tail vanishes
  /// analytic tail from s_n ~ m + omega/(m pi) + b/m^3, gamma_n ~ pi/2 + g/m^2,
  /// m = n - 1
  FirstOrder,
};

std::string to_string(TailMode mode);
TailMode tail_mode_from_string(const std::string& name);

/// cos(sqrt(lambda) x) as an entire function of lambda (cosh branch below 0).
double cos_sqrt(double lambda, double x) noexcept;
/// sin(sqrt(lambda) x) / sqrt(lambda), equal to x at lambda = 0.
double sinc_sqrt(double lambda, double x) noexcept;

/// Samples of F(x, t) on the grid triangle. `omega`, `gamma_coefficient` and
/// `cubic_coefficient` are only read in first-order mode; when absent they
/// are taken from the data or estimated.
KernelField build_F(const SpectralData& d, const UniformGrid& grid,
                    TailMode tail_mode = TailMode::Truncate,
                    std::optional<double> omega = std::nullopt,
                    std::optional<double> gamma_coefficient = std::nullopt,
                    std::optional<double> cubic_coefficient = std::nullopt);

struct RowSolution {
  std::vector<double> k;   ///< K(x_i, t_j), j = 0..i
  double residual = 0.0;   ///< max_j |F + K + sum_l w_l K(x_i, t_l) F(t_l, t_j)|
  double smallest_pivot = 1.0;
};

struct MainEquationOptions {
  numerics::QuadratureKind quadrature = numerics::QuadratureKind::Trapezoid;
  /// Rows whose LU pivot falls below this throw ConditioningError.
  double pivot_floor = 1e-10;
};

/// Collocation of F + K + int_0^x K(x, s) F(s, t) ds = 0 at t_j <= x_i.
RowSolution solve_main_equation(const KernelField& F, std::size_t x_index,
                                const MainEquationOptions& options = {});

struct KernelSolution {
  KernelField K;
  std::vector<double> residuals;  ///< per x_i
  double smallest_pivot = 1.0;
  std::size_t smallest_pivot_row = 0;
};

KernelSolution solve_kernel(const KernelField& F, const MainEquationOptions& options = {});

struct PotentialRecovery {
  std::vector<double> q;
  double h = 0.0;
  /// max_x |h + (1/2) int_0^x q - K(x, x)|.
  double consistency = 0.0;
};

/// q = 2 d/dx K(x, x) (end cells extrapolated linearly) and h = K(0, 0).
PotentialRecovery recover_q_h(const KernelField& K, const numerics::DiffOptions& diff = {});

struct RebuiltPhi {
  std::vector<double> phi;  ///< phi(x_i, lambda)
  EndValues end;            ///< phi(pi), phi'(pi)
};

/// phi(x, lambda) = cos(sx) + int_0^x K(x, t) cos(st) dt with K linear in t on
/// every cell; phi'(pi) from the differentiated representation.
RebuiltPhi rebuild_phi(const KernelField& K, double lambda);

/// Hadamard product with roots {lambda_n}; the model tail carries omega and
/// the cubic coefficient b of s_n ~ m + omega/(m pi) + b/m^3.
numerics::ProductEvaluator chi_from_product(const SpectralData& d,
                                            std::optional<double> omega = std::nullopt,
                                            double cubic_coefficient = 0.0);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< weighted RMS of the misfit
};

/// Weighted least-squares line y ~ slope x + intercept.
LineFit weighted_line(std::span<const double> x, std::span<const double> y,
                      std::span<const double> w);

struct BoundaryRecovery {
  double H = 0.0;
  double H1 = 0.0;
  double H2 = 0.0;
  double rho = 0.0;
  std::array<double, 4> kappa{};  ///< raw fits before normalisation
  LineFit fit_a;
  LineFit fit_b;
  double rho_pairs = 0.0;  ///< median of (A_n B_m - B_n A_m)/(lambda_m - lambda_n)
  std::vector<double> k;   ///< chi'(lambda_n) / gamma_n
  std::vector<double> a;   ///< normalised A_n
  std::vector<double> b;   ///< normalised B_n
};

/// H, H1, H2 from linear fits of A_n = k_n phi(pi) and B_n = k_n phi'(pi) in
/// lambda_n. Throws InconsistentDataError when |kappa_1 + 1| > tol_kappa and
/// InvalidReconstructionError when rho <= 0.
BoundaryRecovery recover_boundary_constants(const SpectralData& d, const KernelField& K,
                                            const numerics::ProductEvaluator& chi,
                                            double tol_kappa = 5e-2);

struct ReconstructionOptions {
  std::size_t intervals = UniformGrid::kDefaultIntervals;
  TailMode tail_mode = TailMode::Truncate;
  std::optional<double> omega;
  /// g in gamma_n ~ pi/2 + g/m^2 for the first-order tail; estimated when absent.
  std::optional<double> gamma_coefficient;
  MainEquationOptions main{};
  numerics::DiffOptions diff{};
  double tol_kappa = 5e-2;
};

struct ReconstructionDiagnostics {
  std::vector<double> residuals;
  double max_residual = 0.0;
  double max_abs_F = 0.0;
  double smallest_pivot = 1.0;
  std::size_t smallest_pivot_row = 0;
  double consistency = 0.0;
  TailMode tail_mode = TailMode::Truncate;
  double omega = 0.0;
  bool omega_estimated = false;
  double gamma_coefficient = 0.0;  ///< first-order mode only
  double cubic_coefficient = 0.0;  ///< first-order mode only
};

struct ReconstructionResult {
  ProblemCoefficients coefficients;
  KernelField F;
  KernelField K;
  BoundaryRecovery boundary;
  ReconstructionDiagnostics diagnostics;
};

ReconstructionResult reconstruct_from_spectral_data(const SpectralData& d,
                                                    const ReconstructionOptions& options = {});

}  // namespace ebsl
