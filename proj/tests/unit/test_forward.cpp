#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ebsl/errors.hpp"
#include "ebsl/forward.hpp"
#include "ebsl/validation.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ebsl;
using oracle::pi;

namespace {

const BoundaryCoefficients kDirichletLike{0, 0, 0, -1};

oracle::ConstantPotential zero_potential() { return {0.0, kDirichletLike}; }

}  // namespace

TEST_SUITE("characteristic function") {
  TEST_CASE("worked example vanishes at 0 and 1/4") {
    const auto p = oracle::example_problem();
    CHECK(std::abs(char_function(p, 0.0)) < 1e-9);
    CHECK(std::abs(char_function(p, 0.25)) < 1e-9);
    CHECK(std::abs(char_function(p, 0.5)) > 1e-3);
  }

  TEST_CASE("zero potential at lambda = 4 equals 1") {
    const auto p = zero_potential().build();
    CHECK(std::abs(char_function(p, 4.0) - 1.0) < 1e-9);
  }

  TEST_CASE("derivative matches the closed form") {
    const auto c = zero_potential();
    const auto p = c.build();
    for (double l : {-2.0, 0.3, 7.0, 55.0}) {
      const double d = 1e-4;
      const double want = (c.char_fn(l + d) - c.char_fn(l - d)) / (2 * d);
      CAPTURE(l);
      CHECK(oracle::rel_err(char_derivative(p, l), want) < 1e-6);
    }
  }

  TEST_CASE("the printed H2 of the worked example does not give lambda_0 = 0") {
    const auto stated = oracle::example_problem(256, oracle::example_H2_stated);
    const auto l = find_eigenvalues(stated, 2);
    CHECK(std::abs(l[0]) > 1e-2);
    const auto consistent = oracle::example_problem();
    CHECK(std::abs(find_eigenvalues(consistent, 2)[0]) < 1e-9);
  }
}

TEST_SUITE("eigenvalues") {
  TEST_CASE("worked example, six eigenvalues") {
    const auto l = find_eigenvalues(oracle::example_problem(), 6);
    const double want[] = {0, 0.25, 1, 4, 9, 16};
    for (int n = 0; n < 6; ++n) CHECK(std::abs(l[n] - want[n]) < 1e-6);
  }

  TEST_CASE("zero potential agrees with a dense scan of the closed form") {
    const auto c = zero_potential();
    const auto want = oracle::scan_roots([&](double l) { return c.char_fn(l); }, 20, -6.0, 1e-4);
    const auto got = find_eigenvalues(c.build(), 20);
    for (std::size_t n = 0; n < 20; ++n) {
      CAPTURE(n);
      CHECK(std::abs(got[n] - want[n]) < 1e-7 * std::max(1.0, std::abs(want[n])));
    }
  }

  TEST_CASE("constant potential shifts the zero-potential spectrum") {
    const oracle::ConstantPotential c{1.5, {0.5, 1.0, 2.0, 1.0}};
    const auto want = oracle::scan_roots([&](double l) { return c.char_fn(l); }, 12, -6.0, 1e-4);
    const auto got = find_eigenvalues(c.build(), 12);
    for (std::size_t n = 0; n < 12; ++n) CHECK(std::abs(got[n] - want[n]) < 1e-7 * std::max(1.0, want[n]));
  }

  TEST_CASE("grid refinement M vs 2M") {
    auto make = [](std::size_t m) {
      return ProblemCoefficients::from_function([](double x) { return std::cos(2 * x); },
                                                UniformGrid(m), {0.3, 1, 2, 1});
    };
    const auto a = find_eigenvalues(make(256), 12);
    const auto b = find_eigenvalues(make(512), 12);
    for (std::size_t n = 0; n < 12; ++n) CHECK(std::abs(a[n] - b[n]) < 1e-8 * std::max(1.0, std::abs(a[n])));
  }
}

TEST_SUITE("norming constants and k") {
  TEST_CASE("worked example gamma_0 = pi and gamma_2 = pi/2") {
    const auto p = oracle::example_problem();
    CHECK(std::abs(norming_constant(p, 0.0) - pi) < 1e-8);
    CHECK(std::abs(norming_constant(p, 1.0) - pi / 2) < 1e-8);
  }

  TEST_CASE("zero potential against the closed form") {
    const auto c = zero_potential();
    const auto p = c.build();
    for (double l : find_eigenvalues(p, 6)) {
      CAPTURE(l);
      CHECK(oracle::rel_err(norming_constant(p, l), c.gamma(l)) < 1e-9);
    }
  }

  TEST_CASE("chi' = k gamma on the zero potential") {
    const auto p = zero_potential().build();
    for (double l : find_eigenvalues(p, 8)) {
      const double k = compute_k(p, l);
      CHECK(oracle::rel_err(char_derivative(p, l), k * norming_constant(p, l)) < 1e-6);
      CHECK(proportionality_residual(p, l) < 1e-6);
    }
  }

  TEST_CASE("worked example k_n alternates like (-1)^n n^2") {
    const auto sol = forward_solve(oracle::example_problem(), 30);
    for (std::size_t n = 2; n < 30; ++n) {
      const double k = sol.records()[n].k();
      const double m = static_cast<double>(n) - 1.0;
      CAPTURE(n);
      CHECK(k * (n % 2 ? -1.0 : 1.0) > 0.0);
      CHECK(std::abs(std::abs(k) - m * m) < 1.0 + m);
    }
  }

  TEST_CASE("forward_solve on the worked example") {
    const auto sol = forward_solve(oracle::example_problem(), 6);
    CHECK(std::abs(sol.records()[0].gamma() - pi) < 1e-6);
    for (std::size_t n = 1; n < 6; ++n) CHECK(std::abs(sol.records()[n].gamma() - pi / 2) < 1e-6);
    CHECK(sol.records()[3].phi_samples().size() == 257);
    CHECK(std::abs(sol(0.25)) < 1e-9);
  }
}

TEST_SUITE("forward properties") {
  TEST_CASE("property: orthogonality with the boundary weight") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = oracle::random_trig_problem(rng).build();
      const auto sol = forward_solve(p, 8);
      std::vector<fixture::GaussSamples> phi;
      for (const auto& r : sol.records()) phi.push_back(fixture::phi_gauss(p, r.lambda()));
      for (std::size_t n = 0; n < 8; ++n) {
        const double kn = sol.records()[n].k();
        const double self = sol.records()[n].gamma() - p.rho() / (kn * kn);
        CHECK(oracle::rel_err(fixture::inner(phi[n], phi[n]), self) < 1e-5);
        for (std::size_t m = n + 1; m < 8; ++m) {
          const double km = sol.records()[m].k();
          CAPTURE(n);
          CAPTURE(m);
          CHECK(oracle::rel_err(fixture::inner(phi[n], phi[m]), -p.rho() / (kn * km)) < 1e-5);
        }
      }
    }
  }

  TEST_CASE("property: pair relation A_n B_m - B_n A_m = rho (lambda_m - lambda_n)") {
    oracle::Rng rng(22);
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = oracle::random_trig_problem(rng).build();
      const auto sol = forward_solve(p, 11);
      const auto& r = sol.records();
      for (std::size_t n = 0; n < 11; ++n) {
        for (std::size_t m = n + 1; m < 11; ++m) {
          const double lhs = r[n].a() * r[m].b() - r[n].b() * r[m].a();
          CHECK(oracle::rel_err(lhs, p.rho() * (r[m].lambda() - r[n].lambda())) < 1e-5);
        }
      }
    }
  }

  TEST_CASE("property: eigenvalue asymptotics tighten with n") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 3; ++trial) {
      const auto p = oracle::random_trig_problem(rng).build();
      const auto l = find_eigenvalues(p, 41);
      const double omega = asymptotic_omega(p);
      auto dev = [&](std::size_t n) {
        const double m = static_cast<double>(n) - 1.0;
        return std::abs(m * pi * (std::sqrt(l[n]) - m) - omega);
      };
      double early = 0.0, late = 0.0;
      for (std::size_t n = 10; n < 16; ++n) early = std::max(early, dev(n));
      for (std::size_t n = 35; n <= 40; ++n) late = std::max(late, dev(n));
      CHECK(late < early);
    }
  }

  TEST_CASE("property: partial sums of phi_n / (k_n gamma_n) decay") {
    const auto p = oracle::example_problem();
    const auto sol = forward_solve(p, 81);
    auto partial_max = [&](std::size_t count) {
      std::vector<double> acc(p.grid().size(), 0.0);
      for (std::size_t n = 0; n < count; ++n) {
        const auto& r = sol.records()[n];
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += r.phi_samples()[i] / (r.k() * r.gamma());
      }
      double worst = 0.0;
      for (double v : acc) worst = std::max(worst, std::abs(v));
      return worst;
    };
    const double a = partial_max(11), b = partial_max(41), c = partial_max(81);
    CHECK(b < a);
    CHECK(c < b);
  }

  TEST_CASE("forward output is valid spectral data") {
    oracle::Rng rng(24);
    const auto p = oracle::random_trig_problem(rng).build();
    const auto sol = forward_solve(p, 20);
    CHECK(validate_spectral_data(sol.spectral_data()).valid());
  }

  TEST_CASE("deterministic across runs") {
    oracle::Rng rng(25);
    const auto p = oracle::random_trig_problem(rng).build();
    const auto a = forward_solve(p, 10);
    const auto b = forward_solve(p, 10);
    CHECK(a.eigenvalues() == b.eigenvalues());
    CHECK(a.gammas() == b.gammas());
  }
}
