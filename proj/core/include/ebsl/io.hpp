#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ebsl/types.hpp"

namespace ebsl::io {

/// Shortest round-trip form is not required; 17 significant digits are.
std::string format_number(double v);

/// {"lambdas": [...], "gammas": [...], "omega": optional}. With `checked`
/// false the invariants are left for validate_spectral_data to report.
SpectralData parse_spectral_data(std::string_view text, bool checked = true,
                                 std::string_view source = "<input>");
SpectralData read_spectral_data(const std::filesystem::path& path, bool checked = true);

/// {"lambdas": [...], "mus": [...], "sigma": optional, "omega": optional}.
TwoSpectra parse_two_spectra(std::string_view text, bool checked = true,
                             std::string_view source = "<input>");
TwoSpectra read_two_spectra(const std::filesystem::path& path, bool checked = true);

struct PotentialSamples {
  UniformGrid grid;
  std::vector<double> q;
};

/// Two columns x,q with a header row; x must be the uniform grid on [0, pi].
PotentialSamples parse_q_csv(std::string_view text, std::string_view source = "<csv>");
PotentialSamples read_q_csv(const std::filesystem::path& path);
void write_q_csv(const std::filesystem::path& path, const UniformGrid& grid,
                 std::span<const double> q, std::string_view value_name = "q");

/// {"h", "H", "H1", "H2", "q"}; "q" is either an array of samples on the
/// uniform grid or a path to a q CSV, relative to the JSON file.
ProblemCoefficients read_problem(const std::filesystem::path& path, bool checked = true);
ProblemCoefficients parse_problem(std::string_view text, const std::filesystem::path& base_dir,
                                  bool checked = true, std::string_view source = "<input>");

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace ebsl::io
