#include "ebsl_cli/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebsl/forward.hpp"
#include "ebsl/io.hpp"
#include "ebsl/two_spectra.hpp"
#include "ebsl/validation.hpp"
#include "ebsl_cli/json_writer.hpp"
#include "ebsl_cli/synthetic.hpp"

namespace ebsl::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::size_t kDefaultCount = 40;
constexpr double kRoundtripTolerance = 1e-4;

// Validation failures that are not ValidationError proper.
class InputRejected : public Error {
 public:
  using Error::Error;
};

struct Context {
  const RunConfig& cfg;
  std::ostream& log;
  std::string input_hash;

  json header() const {
    json j;
    j["tool"] = "ebsl";
    j["tool_version"] = std::string(kToolVersion);
    j["command"] = to_string(cfg.command);
    j["input"] = {{"path", cfg.input.string()}, {"sha256", input_hash}};
    json c;
    c["N"] = cfg.N ? json(*cfg.N) : json(nullptr);
    c["M"] = cfg.M;
    c["tail_mode"] = cfg.tail_mode ? json(to_string(*cfg.tail_mode)) : json(nullptr);
    c["strict"] = cfg.strict;
    c["sigma"] = cfg.sigma ? json(*cfg.sigma) : json(nullptr);
    c["omega"] = cfg.omega ? json(*cfg.omega) : json(nullptr);
    c["tol_kappa"] = cfg.tol_kappa;
    c["seed"] = cfg.seed;
    j["config"] = c;
    return j;
  }

  fs::path path(const std::string& name) const { return cfg.out / name; }

  void write_json(const std::string& name, const json& j) const {
    io::write_text(path(name), dump_json(j));
    log << to_string(cfg.command) << ": wrote " << path(name).string() << "\n";
  }

  void wrote(const std::string& name) const {
    log << to_string(cfg.command) << ": wrote " << path(name).string() << "\n";
  }
};

json report_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid();
  j["violations"] = r.violations;
  j["warnings"] = r.warnings;
  j["rho"] = r.rho ? json(*r.rho) : json(nullptr);
  j["omega"] = r.omega ? json(*r.omega) : json(nullptr);
  j["omega_estimated"] = r.omega_estimated;
  j["sigma"] = r.sigma ? json(*r.sigma) : json(nullptr);
  json growth = json::object();
  for (const auto& [name, ratio] : r.residual_growth) growth[name] = ratio;
  j["residual_growth"] = growth;
  return j;
}

void write_validation(const Context& ctx, const ValidationReport& r) {
  json j = ctx.header();
  j["validation"] = report_json(r);
  ctx.write_json("validation.json", j);
}

ValidationOptions validation_options(const RunConfig& cfg) {
  ValidationOptions o;
  o.strict = cfg.strict;
  return o;
}

void require_valid(const ValidationReport& r) {
  if (!r.valid()) throw InputRejected("validation failed: " + r.violations.front());
}

std::vector<double> head(std::span<const double> v, std::size_t count) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count)};
}

// Keeps the first N + 1 entries when --N is given.
std::size_t truncated_size(const RunConfig& cfg, std::size_t available) {
  if (!cfg.N) return available;
  if (*cfg.N + 1 > available) {
    throw InputRejected("--N " + std::to_string(*cfg.N) + " needs " + std::to_string(*cfg.N + 1) +
                        " pairs but the input has " + std::to_string(available));
  }
  return *cfg.N + 1;
}

std::string csv_line(std::initializer_list<double> values) {
  std::string s;
  bool first = true;
  for (double v : values) {
    if (!first) s += ",";
    first = false;
    s += io::format_number(v);
  }
  return s + "\n";
}

void write_kernel_csvs(const Context& ctx, const ReconstructionResult& r) {
  const UniformGrid& grid = r.K.grid();
  const std::size_t m = grid.intervals();

  std::string kd = "x,K_diag\n";
  const std::vector<double> diag = r.K.diagonal();
  for (std::size_t i = 0; i <= m; ++i) kd += csv_line({grid.node(i), diag[i]});
  io::write_text(ctx.path("k_diagonal.csv"), kd);
  ctx.wrote("k_diagonal.csv");

  // F(x_s, t) against t for x_s = pi/4, pi/2, 3pi/4, pi.
  const std::array<std::size_t, 4> rows{m / 4, m / 2, 3 * m / 4, m};
  std::string fsl = "t";
  for (std::size_t i : rows) fsl += ",F_x" + io::format_number(grid.node(i));
  fsl += "\n";
  for (std::size_t j = 0; j <= m; ++j) {
    fsl += io::format_number(grid.node(j));
    for (std::size_t i : rows) fsl += "," + io::format_number(r.F.at(i, j));
    fsl += "\n";
  }
  io::write_text(ctx.path("f_slices.csv"), fsl);
  ctx.wrote("f_slices.csv");

  std::string res = "x,residual\n";
  for (std::size_t i = 0; i <= m; ++i) res += csv_line({grid.node(i), r.diagnostics.residuals[i]});
  io::write_text(ctx.path("residuals.csv"), res);
  ctx.wrote("residuals.csv");

  io::write_q_csv(ctx.path("q.csv"), grid, r.coefficients.q());
  ctx.wrote("q.csv");
}

json fit_json(const LineFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"residual", f.residual}};
}

json reconstruction_json(const Context& ctx, const ReconstructionResult& r) {
  json j = ctx.header();
  const ProblemCoefficients& c = r.coefficients;
  j["coefficients"] = {{"h", c.h()}, {"H", c.H()}, {"H1", c.H1()}, {"H2", c.H2()}, {"rho", c.rho()}};
  j["q"] = "q.csv";
  j["kappa"] = r.boundary.kappa;
  j["kappa_fit"] = {{"A", fit_json(r.boundary.fit_a)},
                    {"B", fit_json(r.boundary.fit_b)},
                    {"rho_pairs", r.boundary.rho_pairs}};
  const ReconstructionDiagnostics& d = r.diagnostics;
  j["diagnostics"] = {
      {"max_residual", d.max_residual},
      {"residual_bound", 1e-8 * (1.0 + d.max_abs_F)},
      {"residuals", "residuals.csv"},
      {"max_abs_F", d.max_abs_F},
      {"smallest_pivot", d.smallest_pivot},
      {"smallest_pivot_row", d.smallest_pivot_row},
      {"diagonal_consistency", d.consistency},
      {"tail_mode", to_string(d.tail_mode)},
      {"omega", d.omega},
      {"omega_estimated", d.omega_estimated},
      {"gamma_coefficient", d.gamma_coefficient},
      {"cubic_coefficient", d.cubic_coefficient},
      {"grid_intervals", r.K.grid().intervals()},
  };
  j["artifacts"] = {"q.csv", "k_diagonal.csv", "f_slices.csv", "residuals.csv"};
  return j;
}

struct SpectrumCheck {
  std::vector<double> eigenvalues;
  double max_abs = 0.0;
  double max_rel = 0.0;
};

SpectrumCheck compare_spectrum(const ProblemCoefficients& p, std::span<const double> target) {
  SpectrumCheck s;
  s.eigenvalues = find_eigenvalues(p, target.size());
  for (std::size_t n = 0; n < target.size(); ++n) {
    const double dev = std::abs(s.eigenvalues[n] - target[n]);
    s.max_abs = std::max(s.max_abs, dev);
    s.max_rel = std::max(s.max_rel, dev / std::max(1.0, std::abs(target[n])));
  }
  return s;
}

// Recomputes the spectrum of the recovered problem; failures are reported,
// not raised, since the reconstruction itself succeeded.
json spectrum_check_json(const ProblemCoefficients& p, std::span<const double> target) {
  try {
    const SpectrumCheck s = compare_spectrum(p, target);
    return {{"eigenvalues", s.eigenvalues},
            {"max_abs_deviation", s.max_abs},
            {"max_rel_deviation", s.max_rel}};
  } catch (const Error& e) {
    return {{"error", e.what()}};
  }
}

ReconstructionOptions reconstruction_options(const RunConfig& cfg, TailMode fallback) {
  ReconstructionOptions o;
  o.intervals = cfg.M;
  o.tail_mode = cfg.tail_mode.value_or(fallback);
  o.omega = cfg.omega;
  o.tol_kappa = cfg.tol_kappa;
  return o;
}

json spectral_json(std::span<const double> lambdas, std::span<const double> gammas,
                   std::optional<double> omega) {
  json j;
  j["lambdas"] = std::vector<double>(lambdas.begin(), lambdas.end());
  j["gammas"] = std::vector<double>(gammas.begin(), gammas.end());
  if (omega) j["omega"] = *omega;
  return j;
}

int run_forward(Context& ctx) {
  const ProblemCoefficients raw = io::read_problem(ctx.cfg.input, false);
  const ValidationReport report = validate_problem(raw);
  write_validation(ctx, report);
  require_valid(report);
  const ProblemCoefficients p = io::read_problem(ctx.cfg.input);

  const std::size_t count = ctx.cfg.N.value_or(kDefaultCount) + 1;
  const ForwardSolution sol = forward_solve(p, count);
  const double omega = asymptotic_omega(p);

  json j = ctx.header();
  j["coefficients"] = {{"h", p.h()}, {"H", p.H()}, {"H1", p.H1()}, {"H2", p.H2()}, {"rho", p.rho()}};
  j["omega"] = omega;
  j["eigenvalues"] = sol.eigenvalues();
  j["gammas"] = sol.gammas();
  std::vector<double> ks, as, bs, props;
  for (const EigenRecord& r : sol.records()) {
    ks.push_back(r.k());
    as.push_back(r.a());
    bs.push_back(r.b());
  }
  j["k"] = ks;
  j["A"] = as;
  j["B"] = bs;
  j["spectral_data"] = "spectral_data.json";
  j["artifacts"] = {"spectral_data.json", "eigenfunctions.csv"};

  ctx.write_json("spectral_data.json", spectral_json(sol.eigenvalues(), sol.gammas(), omega));

  if (ctx.cfg.sigma) {
    const std::vector<double> mus = find_eigenvalues(p.with_h(p.h() + *ctx.cfg.sigma), count);
    json ts;
    ts["lambdas"] = sol.eigenvalues();
    ts["mus"] = mus;
    ts["sigma"] = *ctx.cfg.sigma;
    ts["omega"] = omega;
    ctx.write_json("two_spectra.json", ts);
    j["mus"] = mus;
    j["artifacts"].push_back("two_spectra.json");
  }

  const std::size_t shown = std::min<std::size_t>(5, count);
  std::string ef = "x";
  for (std::size_t n = 0; n < shown; ++n) ef += ",phi_" + std::to_string(n);
  ef += "\n";
  for (std::size_t i = 0; i < p.grid().size(); ++i) {
    ef += io::format_number(p.grid().node(i));
    for (std::size_t n = 0; n < shown; ++n) {
      ef += "," + io::format_number(sol.records()[n].phi_samples()[i]);
    }
    ef += "\n";
  }
  io::write_text(ctx.path("eigenfunctions.csv"), ef);
  ctx.wrote("eigenfunctions.csv");
  ctx.write_json("result.json", j);
  return exit_code::ok;
}

int run_invert_spectral(Context& ctx) {
  const SpectralData raw = io::read_spectral_data(ctx.cfg.input, false);
  const std::size_t keep = truncated_size(ctx.cfg, raw.size());
  const SpectralData cut = SpectralData::unchecked(head(raw.lambdas(), keep),
                                                   head(raw.gammas(), keep), raw.omega());
  const ValidationReport report = validate_spectral_data(cut, validation_options(ctx.cfg));
  write_validation(ctx, report);
  require_valid(report);
  const SpectralData d(head(cut.lambdas(), keep), head(cut.gammas(), keep), cut.omega());

  const ReconstructionResult r =
      reconstruct_from_spectral_data(d, reconstruction_options(ctx.cfg, TailMode::Truncate));
  write_kernel_csvs(ctx, r);
  json j = reconstruction_json(ctx, r);
  j["truncation"] = d.truncation();
  j["spectrum_check"] = spectrum_check_json(r.coefficients, d.lambdas());
  ctx.write_json("result.json", j);
  return exit_code::ok;
}

int run_invert_two_spectra(Context& ctx) {
  const TwoSpectra raw = io::read_two_spectra(ctx.cfg.input, false);
  const std::size_t keep = truncated_size(ctx.cfg, std::min(raw.lambdas().size(), raw.mus().size()));
  const std::optional<double> sigma = ctx.cfg.sigma ? ctx.cfg.sigma : raw.sigma();
  const std::optional<double> omega = ctx.cfg.omega ? ctx.cfg.omega : raw.omega();
  const TwoSpectra cut = TwoSpectra::unchecked(head(raw.lambdas(), std::min(keep, raw.lambdas().size())),
                                               head(raw.mus(), std::min(keep, raw.mus().size())),
                                               sigma, omega);
  const ValidationReport report = validate_two_spectra(cut, validation_options(ctx.cfg));
  write_validation(ctx, report);
  require_valid(report);
  const TwoSpectra ts(head(cut.lambdas(), keep), head(cut.mus(), keep), sigma, omega);

  TwoSpectraOptions o;
  o.reconstruction = reconstruction_options(ctx.cfg, TailMode::Truncate);
  const TwoSpectraResult r = reconstruct_from_two_spectra(ts, o);
  write_kernel_csvs(ctx, r.base);
  ctx.write_json("spectral_data.json",
                 spectral_json(r.spectral_data.lambdas(), r.spectral_data.gammas(),
                               r.spectral_data.omega()));

  json j = reconstruction_json(ctx, r.base);
  j["truncation"] = ts.size() - 1;
  j["coefficients"]["h_tilde"] = r.h_tilde;
  j["sigma"] = r.sigma;
  j["sigma_estimated"] = r.sigma_estimated;
  j["gammas"] = std::vector<double>(r.spectral_data.gammas().begin(), r.spectral_data.gammas().end());
  j["mu_check"] = {{"recomputed", r.check_spectrum},
                   {"max_abs_deviation", r.max_mu_deviation},
                   {"max_rel_deviation", r.max_mu_relative},
                   {"interlaced", r.interlaced},
                   {"verified", r.verified}};
  j["artifacts"].push_back("spectral_data.json");
  ctx.write_json("result.json", j);
  return exit_code::ok;
}

double l2_difference(const UniformGrid& grid, std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = (i == 0 || i + 1 == a.size()) ? 0.5 : 1.0;
    acc += w * (a[i] - b[i]) * (a[i] - b[i]);
  }
  return std::sqrt(acc * grid.step());
}

int run_roundtrip(Context& ctx) {
  const RandomProblem rp = random_problem(ctx.cfg.seed);
  const ProblemCoefficients truth = rp.build(ctx.cfg.M);
  const std::size_t count = ctx.cfg.N.value_or(kDefaultCount) + 1;

  const ForwardSolution sol = forward_solve(truth, count);
  const SpectralData d = sol.spectral_data();
  const ValidationReport report = validate_spectral_data(d, validation_options(ctx.cfg));
  write_validation(ctx, report);
  require_valid(report);
  ctx.write_json("spectral_data.json", spectral_json(d.lambdas(), d.gammas(), std::nullopt));

  const ReconstructionResult r =
      reconstruct_from_spectral_data(d, reconstruction_options(ctx.cfg, TailMode::FirstOrder));
  write_kernel_csvs(ctx, r);
  io::write_q_csv(ctx.path("q_true.csv"), truth.grid(), truth.q());
  ctx.wrote("q_true.csv");

  const ProblemCoefficients& c = r.coefficients;
  const SpectrumCheck check = compare_spectrum(c, d.lambdas());

  double q_inner = 0.0;
  for (std::size_t i = 0; i < c.q().size(); ++i) {
    const double x = c.grid().node(i);
    if (x >= 0.05 * std::numbers::pi && x <= 0.95 * std::numbers::pi) {
      q_inner = std::max(q_inner, std::abs(c.q()[i] - truth.q()[i]));
    }
  }

  json j = reconstruction_json(ctx, r);
  j["truncation"] = d.truncation();
  j["problem"] = {{"q_constant", rp.constant},
                  {"q_cos_coefficients", rp.cos_coeffs},
                  {"h", truth.h()},
                  {"H", truth.H()},
                  {"H1", truth.H1()},
                  {"H2", truth.H2()},
                  {"rho", truth.rho()},
                  {"q_true", "q_true.csv"}};
  j["errors"] = {{"q_l2", l2_difference(c.grid(), c.q(), truth.q())},
                 {"q_max_interior", q_inner},
                 {"h", std::abs(c.h() - truth.h())},
                 {"H", std::abs(c.H() - truth.H())},
                 {"H1", std::abs(c.H1() - truth.H1())},
                 {"H2", std::abs(c.H2() - truth.H2())}};
  j["spectrum_check"] = {{"eigenvalues", check.eigenvalues},
                         {"max_abs_deviation", check.max_abs},
                         {"max_rel_deviation", check.max_rel},
                         {"tolerance", kRoundtripTolerance},
                         {"within_tolerance", check.max_abs < kRoundtripTolerance}};
  j["artifacts"].push_back("q_true.csv");
  j["artifacts"].push_back("spectral_data.json");
  ctx.write_json("result.json", j);
  ctx.log << "roundtrip: max spectrum deviation " << io::format_number(check.max_abs) << "\n";
  return exit_code::ok;
}

int run_validate(Context& ctx) {
  const std::string text = io::read_text(ctx.cfg.input);
  json probe;
  try {
    probe = json::parse(text);
  } catch (const json::parse_error&) {
    // Re-parse through the typed reader for a located message.
    io::parse_spectral_data(text, false, ctx.cfg.input.string());
  }
  if (!probe.is_object()) throw SchemaError(ctx.cfg.input.string() + ": top level must be a JSON object");

  ValidationReport report;
  std::string kind;
  if (probe.contains("mus")) {
    kind = "two_spectra";
    TwoSpectra ts = io::parse_two_spectra(text, false, ctx.cfg.input.string());
    if (ctx.cfg.sigma) {
      ts = TwoSpectra::unchecked(head(ts.lambdas(), ts.lambdas().size()),
                                 head(ts.mus(), ts.mus().size()), ctx.cfg.sigma, ts.omega());
    }
    report = validate_two_spectra(ts, validation_options(ctx.cfg));
  } else if (probe.contains("gammas")) {
    kind = "spectral_data";
    report = validate_spectral_data(io::parse_spectral_data(text, false, ctx.cfg.input.string()),
                                    validation_options(ctx.cfg));
  } else if (probe.contains("q")) {
    kind = "problem";
    report = validate_problem(io::parse_problem(text, ctx.cfg.input.parent_path(), false,
                                                ctx.cfg.input.string()));
  } else {
    throw SchemaError(ctx.cfg.input.string() +
                      ": cannot tell the input kind (expected \"gammas\", \"mus\" or \"q\")");
  }
  json j = ctx.header();
  j["kind"] = kind;
  j["validation"] = report_json(report);
  ctx.write_json("validation.json", j);
  for (const std::string& v : report.violations) ctx.log << "violation: " << v << "\n";
  for (const std::string& w : report.warnings) ctx.log << "warning: " << w << "\n";
  return report.valid() ? exit_code::ok : exit_code::validation;
}

void write_error(const Context& ctx, const std::exception& e, int code) {
  try {
    json j = ctx.header();
    j["error"] = {{"message", e.what()}, {"exit_code", code}};
    io::write_text(ctx.path("error.json"), dump_json(j));
  } catch (...) {
    // Nothing more to report if the output directory is unusable.
  }
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Forward: return "forward";
    case Command::InvertSpectral: return "invert-spectral";
    case Command::InvertTwoSpectra: return "invert-two-spectra";
    case Command::Roundtrip: return "roundtrip";
    case Command::Validate: return "validate";
  }
  return "unknown";
}

Command command_from_string(std::string_view name) {
  for (Command c : {Command::Forward, Command::InvertSpectral, Command::InvertTwoSpectra,
                    Command::Roundtrip, Command::Validate}) {
    if (to_string(c) == name) return c;
  }
  throw UsageError("unknown command '" + std::string(name) + "'");
}

void RunConfig::check() const {
  if (N && *N < 4) throw UsageError("--N must be at least 4");
  if (M < 32) throw UsageError("--M must be at least 32");
  if (out.empty()) throw UsageError("--out must not be empty");
  if (command != Command::Roundtrip && input.empty()) {
    throw UsageError(to_string(command) + " needs --input");
  }
  if (!(tol_kappa > 0.0)) throw UsageError("--tol-kappa must be positive");
  if (sigma && !(*sigma > 0.0)) throw UsageError("--sigma must be positive");
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

int run(const RunConfig& config, std::ostream& log) {
  Context ctx{config, log, {}};
  try {
    config.check();
    fs::create_directories(config.out);
    if (config.command == Command::Roundtrip) {
      std::ostringstream key;
      key << "roundtrip seed=" << config.seed << " N=" << config.N.value_or(kDefaultCount)
          << " M=" << config.M;
      ctx.input_hash = sha256_hex(key.str());
    } else {
      ctx.input_hash = sha256_hex(io::read_text(config.input));
    }
    switch (config.command) {
      case Command::Forward: return run_forward(ctx);
      case Command::InvertSpectral: return run_invert_spectral(ctx);
      case Command::InvertTwoSpectra: return run_invert_two_spectra(ctx);
      case Command::Roundtrip: return run_roundtrip(ctx);
      case Command::Validate: return run_validate(ctx);
    }
    return exit_code::usage;
  } catch (const UsageError& e) {
    log << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const SchemaError& e) {
    log << "schema error: " << e.what() << "\n";
    write_error(ctx, e, exit_code::validation);
    return exit_code::validation;
  } catch (const InputRejected& e) {
    log << "error: " << e.what() << "\n";
    write_error(ctx, e, exit_code::validation);
    return exit_code::validation;
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << "\n";
    write_error(ctx, e, exit_code::validation);
    return exit_code::validation;
  } catch (const InvalidArgument& e) {
    log << "error: " << e.what() << "\n";
    write_error(ctx, e, exit_code::validation);
    return exit_code::validation;
  } catch (const std::exception& e) {
    log << "numerical failure: " << e.what() << "\n";
    write_error(ctx, e, exit_code::numerical);
    return exit_code::numerical;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Inverse Sturm-Liouville problems with an eigenparameter-dependent boundary condition"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string input, out = ".";
  std::string tail;
  std::size_t n_value = 0;
  std::optional<double> sigma, omega;

  app.add_option("--input", input, "Input JSON file");
  app.add_option("--out", out, "Output directory (created if missing)");
  auto* n_opt = app.add_option("--N", n_value, "Eigenvalue count minus one, or truncation index");
  app.add_option("--M", cfg.M, "Grid intervals on [0, pi]")->capture_default_str();
  app.add_option("--tail-mode", tail, "Tail of F beyond the data")
      ->check(CLI::IsMember({"truncate", "first-order"}));
  app.add_flag("--strict", cfg.strict, "Treat asymptotic-residual warnings as failures");
  app.add_option("--sigma", sigma, "h shift between the two spectra");
  app.add_option("--omega", omega, "Asymptotic constant h + H + (1/2) int q");
  app.add_option("--tol-kappa", cfg.tol_kappa, "Allowed |kappa_1 + 1|")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed of the synthetic roundtrip problem")->capture_default_str();

  app.add_subcommand("forward", "Eigenvalues and norming constants of a problem");
  app.add_subcommand("invert-spectral", "Recover q, h, H, H1, H2 from {lambda_n, gamma_n}");
  app.add_subcommand("invert-two-spectra", "Recover the problem from two interlacing spectra");
  app.add_subcommand("roundtrip", "Forward solve a seeded random problem and invert it");
  app.add_subcommand("validate", "Check spectral data, two spectra or a problem file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  cfg.command = command_from_string(app.get_subcommands().front()->get_name());
  cfg.input = input;
  cfg.out = out;
  if (n_opt->count() > 0) cfg.N = n_value;
  if (!tail.empty()) cfg.tail_mode = tail_mode_from_string(tail);
  cfg.sigma = sigma;
  cfg.omega = omega;
  return run(cfg, std::cerr);
}

}  // namespace ebsl::cli
