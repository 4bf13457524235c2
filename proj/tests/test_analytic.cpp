#include <catch2/catch_amalgamated.hpp>

#include "khess/analytic.hpp"

using namespace khess;

TEST_CASE("flux form agrees with the eigenvalue form on smooth profiles") {
  // the flux identity is the derived oracle; it must match S_k(u'', u'/r, ...)
  struct Case {
    int n, k;
    std::function<double(double)> f, df;
  };
  const std::vector<Case> cases{
      {3, 1, [](double r) { return 0.5 * r * r; }, [](double r) { return r; }},
      {3, 2, [](double r) { return 0.25 * r * r * r * r + r * r; },
       [](double r) { return r * r * r + 2.0 * r; }},
      {4, 2, [](double r) { return std::cosh(r); }, [](double r) { return std::sinh(r); }},
      {2, 2, [](double r) { return std::exp(r * r); },
       [](double r) { return 2.0 * r * std::exp(r * r); }},
  };
  for (const auto& c : cases) {
    const RadialProfile p = make_radial_profile(c.n, c.k, c.f, c.df, 0.05, 1.0);
    for (std::size_t i = 4; i + 4 < p.r.size(); i += 7)
      CHECK_THAT(radial_fk_flux(p, i),
                 Catch::Matchers::WithinRel(radial_fk(p, i), 1e-8) ||
                     Catch::Matchers::WithinAbs(radial_fk(p, i), 1e-8));
  }
}

TEST_CASE("fundamental solutions annihilate their own operator away from the pole") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {3, 1}, {4, 2}, {2, 1}}) {
    const AnalyticFunction w = make_wk(n, k, Vector(n, 0.0));
    auto f = [&](double r) {
      Vector x(n, 0.0);
      x[0] = r;
      return w(x);
    };
    // central-difference derivative is fine for building the profile; the
    // operator check itself uses the stencil machinery
    auto df = [&](double r) { return (f(r + 1e-6) - f(r - 1e-6)) / 2e-6; };
    const RadialProfile p = make_radial_profile(n, k, f, df, 0.3, 0.8);
    for (std::size_t i = 4; i + 4 < p.r.size(); i += 5)
      CHECK_THAT(radial_fk(p, i), Catch::Matchers::WithinAbs(0.0, 1e-5));
  }
}

TEST_CASE("radial dirichlet solve recovers a quadratic") {
  // n = 3, k = 1, psi = 3: u = r^2/2 with u(1) = 1/2
  const RadialProfile p =
      radial_dirichlet_solve(3, 1, [](double) { return 3.0; }, 0.0, 1.0, 0.5);
  CHECK_THAT(p.value_at(0.5), Catch::Matchers::WithinAbs(0.125, 1e-8));
  CHECK_THAT(p.derivative_at(0.25), Catch::Matchers::WithinAbs(0.25, 1e-8));
  REQUIRE(p.d2u.size() == p.r.size());
  for (std::size_t i = 0; i < p.r.size(); i += 50)
    CHECK_THAT(p.d2u[i], Catch::Matchers::WithinAbs(1.0, 1e-9));
}

TEST_CASE("radial dirichlet solve with a pure atom gives the fundamental solution") {
  // n = 3, k = 1, atom 4 pi: u = -1/r with u(1) = -1
  const RadialProfile p =
      radial_dirichlet_solve(3, 1, [](double) { return 0.0; }, 4.0 * M_PI, 1.0, -1.0);
  CHECK_THAT(p.value_at(0.5), Catch::Matchers::WithinAbs(-2.0, 1e-6));
  CHECK_THAT(p.derivative_at(0.5), Catch::Matchers::WithinAbs(4.0, 1e-8));
  // the ball mass equals the atom at every radius
  CHECK_THAT(radial_measure_mass(p, 0.3), Catch::Matchers::WithinRel(4.0 * M_PI, 1e-6));
  CHECK_THAT(radial_measure_mass(p, 0.9), Catch::Matchers::WithinRel(4.0 * M_PI, 1e-6));
}

TEST_CASE("radial dirichlet solve rejects invalid data") {
  CHECK_THROWS_AS(radial_dirichlet_solve(3, 0, [](double) { return 1.0; }, 0.0, 1.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(radial_dirichlet_solve(3, 1, [](double) { return 1.0; }, -1.0, 1.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(radial_dirichlet_solve(3, 1, [](double) { return -2.0; }, 0.0, 1.0, 0.0),
                  std::domain_error);
}

TEST_CASE("profile interpolation is locally cubic") {
  const RadialProfile p = make_radial_profile(
      3, 1, [](double r) { return r * r * r; }, [](double r) { return 3.0 * r * r; }, 0.05,
      1.0);
  for (double r : {0.11, 0.37, 0.52, 0.93})
    CHECK_THAT(p.value_at(r), Catch::Matchers::WithinAbs(r * r * r, 1e-10));
}

TEST_CASE("family generation accepts convex members and rejects saddles") {
  const int n = 2;
  std::vector<AnalyticFunction> candidates;
  candidates.push_back(make_quadratic(Matrix::identity(n), Vector(n, 0.0), 0.0));
  candidates.push_back(make_quadratic(Matrix::diagonal({1.0, -1.0}), Vector(n, 0.0), 0.0));
  const auto family = family_generate(candidates, 2, Box::cube(n, 1.0));
  REQUIRE(family.size() == 2);
  CHECK(family[0].accepted);
  CHECK_FALSE(family[1].accepted);
  CHECK(family[1].probe.worst_margin < 0.0);
}

TEST_CASE("truncations of the fundamental solution pass a matched probe") {
  // the margin of -1/r is exactly 0, so the probe tolerance has to absorb the
  // stencil truncation error near the kink, which scales like m^5 h^2
  const AnalyticFunction w = make_wk(3, 1, Vector(3, 0.0));
  const int res = 33;
  const double h = 2.0 / (res - 1);
  for (double m : {1.0, 2.0}) {
    const double tol = std::max(1e-9, 3.0 * std::pow(m, 5) * h * h);
    const auto fam =
        family_generate({make_truncation(w, m)}, 1, Box::cube(3, 1.0), res, tol);
    CHECK(fam[0].accepted);
  }
  // at a tight tolerance a sharp truncation is rejected with diagnostics
  const auto rejected =
      family_generate({make_truncation(w, 8.0)}, 1, Box::cube(3, 1.0), res, 1e-6);
  CHECK_FALSE(rejected[0].accepted);
  CHECK(rejected[0].probe.worst_margin < 0.0);
}
