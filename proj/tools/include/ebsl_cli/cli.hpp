#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ebsl/errors.hpp"
#include "ebsl/glm.hpp"

namespace ebsl::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int validation = 2;
inline constexpr int numerical = 3;
}  // namespace exit_code

enum class Command { Forward, InvertSpectral, InvertTwoSpectra, Roundtrip, Validate };

std::string to_string(Command c);
Command command_from_string(std::string_view name);

/// Bad command-line configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::Validate;
  std::filesystem::path input;
  std::filesystem::path out = ".";
  /// Eigenvalue count minus one for forward/roundtrip, truncation for the
  /// inverse commands. Unset: 40 for forward/roundtrip, all pairs otherwise.
  std::optional<std::size_t> N;
  std::size_t M = 256;
  /// Unset: truncate for invert-*, first-order for roundtrip.
  std::optional<TailMode> tail_mode;
  bool strict = false;
  std::optional<double> sigma;
  std::optional<double> omega;
  double tol_kappa = 5e-2;
  std::uint64_t seed = 1;

  /// Throws UsageError on N < 4, M < 32, empty paths or tol_kappa <= 0.
  void check() const;
};

/// Runs one command, writing artifacts under `config.out` and progress lines
/// to `log`. Returns one of the exit codes above; never throws.
int run(const RunConfig& config, std::ostream& log);

/// Parses argv and calls run().
int main_entry(int argc, char** argv);

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace ebsl::cli
