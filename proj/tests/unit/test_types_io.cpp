#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "ebsl/errors.hpp"
#include "ebsl/io.hpp"
#include "ebsl/types.hpp"
#include "oracles.hpp"

using namespace ebsl;
using oracle::pi;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "ebsl_test_types_io";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string error_text(const auto& fn) {
  try {
    fn();
  } catch (const SchemaError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("types") {
  TEST_CASE("grid nodes end exactly at pi") {
    const UniformGrid g(7);
    CHECK(g.size() == 8);
    CHECK(g.node(0) == 0.0);
    CHECK(g.node(7) == pi);
    CHECK(g.nodes().size() == 8);
    CHECK_THROWS_AS(UniformGrid(1), InvalidArgument);
  }

  TEST_CASE("problem coefficients enforce rho > 0") {
    const UniformGrid g(16);
    CHECK_NOTHROW(ProblemCoefficients(g, std::vector<double>(17, 0.0), {0, 0, 0, -1}));
    CHECK_THROWS_AS(ProblemCoefficients(g, std::vector<double>(17, 0.0), {0, 1, 1, 1}),
                    InvalidArgument);
    CHECK_THROWS_AS(ProblemCoefficients(g, std::vector<double>(16, 0.0), {0, 0, 0, -1}),
                    InvalidArgument);
    std::vector<double> bad(17, 0.0);
    bad[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ProblemCoefficients(g, bad, {0, 0, 0, -1}), InvalidArgument);
  }

  TEST_CASE("from_function samples on the grid and with_h keeps the rest") {
    const auto p = ProblemCoefficients::from_function([](double x) { return std::cos(2 * x); },
                                                      UniformGrid(32), {0.3, 1, 2, 1});
    CHECK(p.q()[0] == 1.0);
    CHECK(std::abs(p.q()[32] - 1.0) < 1e-14);
    CHECK(p.rho() == 1.0);
    const auto p2 = p.with_h(1.1);
    CHECK(p2.h() == 1.1);
    CHECK(p2.H2() == 1.0);
    CHECK(p2.q()[5] == p.q()[5]);
  }

  TEST_CASE("spectral data invariants") {
    CHECK_NOTHROW(SpectralData({0, 0.25, 1}, {pi, pi / 2, pi / 2}));
    CHECK_THROWS_AS(SpectralData({0, 0.25}, {pi}), InvalidArgument);
    CHECK_THROWS_AS(SpectralData({0}, {pi}), InvalidArgument);
    CHECK_THROWS_AS(SpectralData({0, 1, 1}, {1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(SpectralData({0, 2, 1}, {1, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(SpectralData({0, 1, 2}, {1, 0, 1}), InvalidArgument);
    CHECK_NOTHROW(SpectralData::unchecked({0, 1, 1}, {1, -1, 1}));
  }

  TEST_CASE("two spectra must interlace") {
    CHECK_NOTHROW(TwoSpectra({0, 1, 4}, {0.5, 2, 5}));
    CHECK_THROWS_AS(TwoSpectra({0, 1, 4}, {1.5, 2, 5}), InvalidArgument);
    CHECK_THROWS_AS(TwoSpectra({0, 1, 4}, {0.5, 2, 5}, -1.0), InvalidArgument);
  }

  TEST_CASE("kernel field storage") {
    const UniformGrid g(3);
    std::vector<double> packed(KernelField::packed_size(g));
    for (std::size_t i = 0; i < packed.size(); ++i) packed[i] = static_cast<double>(i);
    const KernelField f(g, KernelKind::F, packed);
    const KernelField k(g, KernelKind::K, packed);
    CHECK(f.at(1, 2) == f.at(2, 1));
    CHECK(k.at(1, 2) == 0.0);
    CHECK(k.row(2).size() == 3);
    CHECK(k.diagonal() == std::vector<double>{0, 2, 5, 9});
    CHECK_THROWS_AS(KernelField(g, KernelKind::K, std::vector<double>(3)), InvalidArgument);
  }

  TEST_CASE("eigen record") {
    const EigenRecord r(1.0, {0.5, -2.0}, 1.5, 4.0);
    CHECK(r.a() == 2.0);
    CHECK(r.b() == -8.0);
    CHECK_THROWS_AS(EigenRecord(1.0, {0.5, 0.5}, 1.5, 0.0), InvalidArgument);
    CHECK_THROWS_AS(EigenRecord(1.0, {0.5, 0.5}, 0.0, 1.0), InvalidArgument);
  }
}

TEST_SUITE("io") {
  TEST_CASE("spectral data JSON") {
    const auto d = io::parse_spectral_data(R"({"lambdas": [0, 0.25, 1], "gammas": [3, 1.5, 1.5]})");
    CHECK(d.size() == 3);
    CHECK(!d.omega());
    const auto e = io::parse_spectral_data(
        R"({"lambdas": [0, 0.25, 1], "gammas": [3, 1.5, 1.5], "omega": 0.5})");
    CHECK(*e.omega() == 0.5);
  }

  TEST_CASE("schema errors carry line or field context") {
    const std::string broken = "{\n  \"lambdas\": [0, 1],\n  \"gammas\": [1, \n}";
    CHECK(error_text([&] { io::parse_spectral_data(broken); }).find("line 4") != std::string::npos);
    const std::string wrong = R"({"lambdas": [0, 1, 2], "gammas": [1, 1, "x"]})";
    CHECK(error_text([&] { io::parse_spectral_data(wrong); }).find("\"gammas\"[2]") !=
          std::string::npos);
    CHECK(error_text([&] { io::parse_spectral_data(R"({"lambdas": [0, 1]})"); })
              .find("missing field \"gammas\"") != std::string::npos);
    CHECK(!error_text([&] { io::parse_spectral_data("[1, 2]"); }).empty());
  }

  TEST_CASE("checked parsing turns invariant violations into schema errors") {
    const std::string bad = R"({"lambdas": [0, 1, 2], "gammas": [1, 0, 1]})";
    CHECK_THROWS_AS(io::parse_spectral_data(bad), SchemaError);
    CHECK(io::parse_spectral_data(bad, false).gammas()[1] == 0.0);
  }

  TEST_CASE("two spectra JSON") {
    const auto ts = io::parse_two_spectra(R"({"lambdas": [0, 1, 4], "mus": [0.5, 2, 5], "sigma": 1})");
    CHECK(*ts.sigma() == 1.0);
    CHECK_THROWS_AS(io::parse_two_spectra(R"({"lambdas": [0, 1, 4], "mus": [2, 3, 5]})"), SchemaError);
  }

  TEST_CASE("q CSV round trip keeps 17 digits") {
    const UniformGrid g(16);
    std::vector<double> q(g.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = std::exp(0.1 * static_cast<double>(i)) / 3.0;
    const auto path = scratch_dir() / "q.csv";
    io::write_q_csv(path, g, q);
    const auto back = io::read_q_csv(path);
    CHECK(back.grid == g);
    CHECK(back.q == q);
  }

  TEST_CASE("q CSV errors") {
    CHECK_THROWS_AS(io::parse_q_csv("x,q\n0,1\n1,2\n"), SchemaError);
    const std::string off_grid = "x,q\n0,1\n1,2\n3.14159,3\n";
    CHECK(error_text([&] { io::parse_q_csv(off_grid); }).find("line 3") != std::string::npos);
    const std::string garbage = "x,q\n0,1\n1.5707963267948966,abc\n3.141592653589793,3\n";
    CHECK(error_text([&] { io::parse_q_csv(garbage); }).find("line 3, column q") != std::string::npos);
  }

  TEST_CASE("format_number round-trips doubles") {
    for (double v : {pi, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.1}) {
      CHECK(std::stod(io::format_number(v)) == v);
    }
  }

  TEST_CASE("problem JSON with inline samples or a CSV path") {
    const auto p = io::parse_problem(R"({"h": 0.3, "H": 1, "H1": 2, "H2": 1, "q": [0, 0, 0, 0, 0]})",
                                     scratch_dir());
    CHECK(p.grid().intervals() == 4);
    CHECK(p.h() == 0.3);
    const UniformGrid g(8);
    io::write_q_csv(scratch_dir() / "p.csv", g, std::vector<double>(9, 2.0));
    const auto p2 = io::parse_problem(R"({"h": 0, "H": 0, "H1": 0, "H2": -1, "q": "p.csv"})",
                                      scratch_dir());
    CHECK(p2.q()[4] == 2.0);
    CHECK_THROWS_AS(io::parse_problem(R"({"h": 0, "H": 1, "H1": 1, "H2": 1, "q": [0, 0, 0]})",
                                      scratch_dir()),
                    SchemaError);
    CHECK_THROWS_AS(io::parse_problem(R"({"H": 1, "H1": 1, "H2": 0, "q": [0, 0, 0]})", scratch_dir()),
                    SchemaError);
  }

  TEST_CASE("missing file") {
    CHECK_THROWS_AS(io::read_spectral_data(scratch_dir() / "does_not_exist.json"), SchemaError);
  }
}
