#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace ebsl {

/// Uniform grid of `intervals + 1` nodes on [0, pi]. Every kernel and every
/// potential in the library lives on one of these.
class UniformGrid {
 public:
  static constexpr std::size_t kDefaultIntervals = 256;

  explicit UniformGrid(std::size_t intervals = kDefaultIntervals);

  std::size_t intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_ + 1; }
  double step() const noexcept { return std::numbers::pi / static_cast<double>(intervals_); }
  double length() const noexcept { return std::numbers::pi; }

  /// x_i = i * pi / M, with the last node pinned to pi exactly.
  double node(std::size_t i) const noexcept {
    return i == intervals_ ? std::numbers::pi : static_cast<double>(i) * step();
  }
  std::vector<double> nodes() const;

  bool operator==(const UniformGrid&) const = default;

 private:
  std::size_t intervals_;
};

}  // namespace ebsl
