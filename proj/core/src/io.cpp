#include "ebsl/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "ebsl/errors.hpp"

namespace ebsl::io {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(std::string_view source, const std::string& what) {
  throw SchemaError(std::string(source) + ": " + what);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) line += text[i] == '\n';
  return line;
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error(source, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON (" +
                             e.what() + ")");
  }
}

const json& require_object(const json& j, std::string_view source) {
  if (!j.is_object()) schema_error(source, "top level must be a JSON object");
  return j;
}

std::vector<double> number_array(const json& j, const char* field, std::string_view source) {
  if (!j.contains(field)) schema_error(source, std::string("missing field \"") + field + "\"");
  const json& a = j.at(field);
  if (!a.is_array()) schema_error(source, std::string("field \"") + field + "\" must be an array");
  std::vector<double> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) {
      schema_error(source, std::string("field \"") + field + "\"[" + std::to_string(i) +
                               "] must be a number");
    }
    out.push_back(a[i].get<double>());
  }
  return out;
}

std::optional<double> optional_number(const json& j, const char* field, std::string_view source) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  if (!j.at(field).is_number()) {
    schema_error(source, std::string("field \"") + field + "\" must be a number");
  }
  return j.at(field).get<double>();
}

double required_number(const json& j, const char* field, std::string_view source) {
  const auto v = optional_number(j, field, source);
  if (!v) schema_error(source, std::string("missing field \"") + field + "\"");
  return *v;
}

double parse_double(std::string_view cell, std::string_view source, std::size_t line,
                    const char* column) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
    cell.remove_suffix(1);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    schema_error(source, "line " + std::to_string(line) + ", column " + column + ": '" +
                             std::string(cell) + "' is not a number");
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw Error(path.string() + ": write failed");
}

SpectralData parse_spectral_data(std::string_view text, bool checked, std::string_view source) {
  const json j = parse_json(text, source);
  require_object(j, source);
  std::vector<double> lambdas = number_array(j, "lambdas", source);
  std::vector<double> gammas = number_array(j, "gammas", source);
  const std::optional<double> omega = optional_number(j, "omega", source);
  if (!checked) return SpectralData::unchecked(std::move(lambdas), std::move(gammas), omega);
  try {
    return SpectralData(std::move(lambdas), std::move(gammas), omega);
  } catch (const InvalidArgument& e) {
    schema_error(source, e.what());
  }
}

SpectralData read_spectral_data(const std::filesystem::path& path, bool checked) {
  return parse_spectral_data(read_text(path), checked, path.string());
}

TwoSpectra parse_two_spectra(std::string_view text, bool checked, std::string_view source) {
  const json j = parse_json(text, source);
  require_object(j, source);
  std::vector<double> lambdas = number_array(j, "lambdas", source);
  std::vector<double> mus = number_array(j, "mus", source);
  const std::optional<double> sigma = optional_number(j, "sigma", source);
  const std::optional<double> omega = optional_number(j, "omega", source);
  if (!checked) return TwoSpectra::unchecked(std::move(lambdas), std::move(mus), sigma, omega);
  try {
    return TwoSpectra(std::move(lambdas), std::move(mus), sigma, omega);
  } catch (const InvalidArgument& e) {
    schema_error(source, e.what());
  }
}

TwoSpectra read_two_spectra(const std::filesystem::path& path, bool checked) {
  return parse_two_spectra(read_text(path), checked, path.string());
}

PotentialSamples parse_q_csv(std::string_view text, std::string_view source) {
  std::vector<double> xs, qs;
  std::size_t line_no = 0;
  bool header = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      schema_error(source, "line " + std::to_string(line_no) + ": expected two columns x,q");
    }
    xs.push_back(parse_double(line.substr(0, comma), source, line_no, "x"));
    qs.push_back(parse_double(line.substr(comma + 1), source, line_no, "q"));
    if (end == text.size()) break;
  }
  if (header) schema_error(source, "missing header row");
  if (qs.size() < 3) schema_error(source, "need at least 3 data rows");
  const UniformGrid grid(qs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - grid.node(i)) > 1e-9 * std::numbers::pi) {
      schema_error(source, "line " + std::to_string(i + 2) + ", column x: expected " +
                               format_number(grid.node(i)) + " on the uniform grid over [0, pi]");
    }
  }
  return {grid, std::move(qs)};
}

PotentialSamples read_q_csv(const std::filesystem::path& path) {
  return parse_q_csv(read_text(path), path.string());
}

void write_q_csv(const std::filesystem::path& path, const UniformGrid& grid,
                 std::span<const double> q, std::string_view value_name) {
  if (q.size() != grid.size()) throw InvalidArgument("write_q_csv: sample count does not match grid");
  std::string out = "x," + std::string(value_name) + "\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    out += format_number(grid.node(i)) + "," + format_number(q[i]) + "\n";
  }
  write_text(path, out);
}

ProblemCoefficients parse_problem(std::string_view text, const std::filesystem::path& base_dir,
                                  bool checked, std::string_view source) {
  const json j = parse_json(text, source);
  require_object(j, source);
  const BoundaryCoefficients bc{required_number(j, "h", source), required_number(j, "H", source),
                                required_number(j, "H1", source), required_number(j, "H2", source)};
  if (!j.contains("q")) schema_error(source, "missing field \"q\"");
  PotentialSamples samples{UniformGrid(2), {}};
  if (j.at("q").is_string()) {
    samples = read_q_csv(base_dir / j.at("q").get<std::string>());
  } else {
    std::vector<double> q = number_array(j, "q", source);
    if (q.size() < 3) schema_error(source, "field \"q\" needs at least 3 samples");
    samples = {UniformGrid(q.size() - 1), std::move(q)};
  }
  if (!checked) return ProblemCoefficients::unchecked(samples.grid, std::move(samples.q), bc);
  try {
    return ProblemCoefficients(samples.grid, std::move(samples.q), bc);
  } catch (const InvalidArgument& e) {
    schema_error(source, e.what());
  }
}

ProblemCoefficients read_problem(const std::filesystem::path& path, bool checked) {
  return parse_problem(read_text(path), path.parent_path(), checked, path.string());
}

}  // namespace ebsl::io
