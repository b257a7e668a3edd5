#include "ebsl/types.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ebsl/errors.hpp"

namespace ebsl {

namespace {

bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

UniformGrid::UniformGrid(std::size_t intervals) : intervals_(intervals) {
  if (intervals_ < 2) throw InvalidArgument("UniformGrid: need at least 3 nodes");
}

std::vector<double> UniformGrid::nodes() const {
  std::vector<double> x(size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = node(i);
  return x;
}

// ---------------------------------------------------------------------------

ProblemCoefficients::ProblemCoefficients(NoCheck, UniformGrid grid, std::vector<double> q,
                                         BoundaryCoefficients bc)
    : grid_(grid), q_(std::move(q)), bc_(bc) {
  if (q_.size() == grid_.size() && all_finite(q_)) {
    potential_ = numerics::CubicSpline(0.0, grid_.step(), q_);
  }
}

ProblemCoefficients::ProblemCoefficients(UniformGrid grid, std::vector<double> q,
                                         BoundaryCoefficients bc)
    : ProblemCoefficients(NoCheck{}, grid, std::move(q), bc) {
  if (q_.size() != grid_.size()) {
    throw InvalidArgument("ProblemCoefficients: q has " + std::to_string(q_.size()) +
                          " samples, grid has " + std::to_string(grid_.size()) + " nodes");
  }
  if (!all_finite(q_)) throw InvalidArgument("ProblemCoefficients: q samples must be finite");
  if (!std::isfinite(bc_.h) || !std::isfinite(bc_.H) || !std::isfinite(bc_.H1) ||
      !std::isfinite(bc_.H2)) {
    throw InvalidArgument("ProblemCoefficients: boundary coefficients must be finite");
  }
  if (!(bc_.rho() > 0.0)) {
    throw InvalidArgument("ProblemCoefficients: rho = H*H1 - H2 = " + std::to_string(bc_.rho()) +
                          " must be positive");
  }
}

ProblemCoefficients ProblemCoefficients::unchecked(UniformGrid grid, std::vector<double> q,
                                                   BoundaryCoefficients bc) {
  return ProblemCoefficients(NoCheck{}, grid, std::move(q), bc);
}

ProblemCoefficients ProblemCoefficients::from_function(const std::function<double(double)>& q,
                                                       UniformGrid grid,
                                                       BoundaryCoefficients bc) {
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = q(grid.node(i));
  return ProblemCoefficients(grid, std::move(samples), bc);
}

ProblemCoefficients ProblemCoefficients::with_h(double h) const {
  BoundaryCoefficients bc = bc_;
  bc.h = h;
  return ProblemCoefficients(grid_, q_, bc);
}

// ---------------------------------------------------------------------------

SpectralData::SpectralData(NoCheck, std::vector<double> lambdas, std::vector<double> gammas,
                           std::optional<double> omega)
    : lambdas_(std::move(lambdas)), gammas_(std::move(gammas)), omega_(omega) {}

SpectralData::SpectralData(std::vector<double> lambdas, std::vector<double> gammas,
                           std::optional<double> omega)
    : SpectralData(NoCheck{}, std::move(lambdas), std::move(gammas), omega) {
  if (lambdas_.size() != gammas_.size()) {
    throw InvalidArgument("SpectralData: lambdas and gammas differ in length");
  }
  if (lambdas_.size() < 2) throw InvalidArgument("SpectralData: need at least 2 pairs");
  if (!all_finite(lambdas_) || !all_finite(gammas_) || (omega_ && !std::isfinite(*omega_))) {
    throw InvalidArgument("SpectralData: values must be finite");
  }
  for (std::size_t n = 1; n < lambdas_.size(); ++n) {
    if (!(lambdas_[n] > lambdas_[n - 1])) {
      throw InvalidArgument("SpectralData: eigenvalues must be strictly increasing (index " +
                            std::to_string(n) + ")");
    }
  }
  for (std::size_t n = 0; n < gammas_.size(); ++n) {
    if (!(gammas_[n] > 0.0)) {
      throw InvalidArgument("SpectralData: gamma_" + std::to_string(n) + " must be positive");
    }
  }
}

SpectralData SpectralData::unchecked(std::vector<double> lambdas, std::vector<double> gammas,
                                     std::optional<double> omega) {
  return SpectralData(NoCheck{}, std::move(lambdas), std::move(gammas), omega);
}

// ---------------------------------------------------------------------------

TwoSpectra::TwoSpectra(NoCheck, std::vector<double> lambdas, std::vector<double> mus,
                       std::optional<double> sigma, std::optional<double> omega)
    : lambdas_(std::move(lambdas)), mus_(std::move(mus)), sigma_(sigma), omega_(omega) {}

TwoSpectra::TwoSpectra(std::vector<double> lambdas, std::vector<double> mus,
                       std::optional<double> sigma, std::optional<double> omega)
    : TwoSpectra(NoCheck{}, std::move(lambdas), std::move(mus), sigma, omega) {
  if (lambdas_.size() != mus_.size()) {
    throw InvalidArgument("TwoSpectra: lambdas and mus differ in length");
  }
  if (lambdas_.size() < 2) throw InvalidArgument("TwoSpectra: need at least 2 pairs");
  if (!all_finite(lambdas_) || !all_finite(mus_)) {
    throw InvalidArgument("TwoSpectra: values must be finite");
  }
  for (std::size_t n = 0; n < lambdas_.size(); ++n) {
    const bool ok = lambdas_[n] < mus_[n] && (n + 1 == lambdas_.size() || mus_[n] < lambdas_[n + 1]);
    if (!ok) {
      throw InvalidArgument("TwoSpectra: spectra do not interlace at index " + std::to_string(n));
    }
  }
  if (sigma_ && !(*sigma_ > 0.0 && std::isfinite(*sigma_))) {
    throw InvalidArgument("TwoSpectra: sigma must be positive");
  }
}

TwoSpectra TwoSpectra::unchecked(std::vector<double> lambdas, std::vector<double> mus,
                                 std::optional<double> sigma, std::optional<double> omega) {
  return TwoSpectra(NoCheck{}, std::move(lambdas), std::move(mus), sigma, omega);
}

// ---------------------------------------------------------------------------

KernelField::KernelField(UniformGrid grid, KernelKind kind, std::vector<double> packed)
    : grid_(grid), kind_(kind), values_(std::move(packed)) {
  if (values_.size() != packed_size(grid_)) {
    throw InvalidArgument("KernelField: packed storage has wrong size");
  }
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(values_[offset(i) + i])) {
      throw InvalidArgument("KernelField: non-finite diagonal entry at row " + std::to_string(i));
    }
  }
}

double KernelField::at(std::size_t i, std::size_t j) const noexcept {
  if (j <= i) return values_[offset(i) + j];
  if (kind_ == KernelKind::F) return values_[offset(j) + i];
  return 0.0;
}

std::vector<double> KernelField::diagonal() const {
  std::vector<double> d(grid_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = values_[offset(i) + i];
  return d;
}

// ---------------------------------------------------------------------------

EigenRecord::EigenRecord(double lambda, EndValues phi_end, double gamma, double k,
                         std::vector<double> phi_samples)
    : lambda_(lambda), phi_end_(phi_end), gamma_(gamma), k_(k), phi_samples_(std::move(phi_samples)) {
  if (k_ == 0.0) throw InvalidArgument("EigenRecord: k must be nonzero");
  if (!(gamma_ > 0.0)) throw InvalidArgument("EigenRecord: gamma must be positive");
}

}  // namespace ebsl
