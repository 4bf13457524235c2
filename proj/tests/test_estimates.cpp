#include <catch2/catch_amalgamated.hpp>

#include "khess/estimates.hpp"

using namespace khess;

namespace {

EstimateReport synthetic(Vector ratios) {
  EstimateReport rep;
  rep.ratio = std::move(ratios);
  rep.schedule.resize(rep.ratio.size());
  for (std::size_t i = 0; i < rep.ratio.size(); ++i) rep.schedule[i] = double(i);
  classify(rep);
  return rep;
}

}  // namespace

TEST_CASE("classification of ratio sequences") {
  CHECK(synthetic({1.0, 2.0, 4.0, 8.0}).verdict == EstimateVerdict::Growing);
  CHECK_THAT(synthetic({1.0, 2.0, 4.0, 8.0}).growth_rate,
             Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK(synthetic({0.5, 0.52, 0.51, 0.515}).verdict == EstimateVerdict::Bounded);
  CHECK(synthetic({1.0, 0.5, 0.25, 0.12}).verdict == EstimateVerdict::Bounded);
  // grows at first but stalls: neither verdict applies
  CHECK(synthetic({1.0, 3.0, 9.0, 9.1, 2.0}).verdict == EstimateVerdict::Inconclusive);
}

TEST_CASE("radial integral against closed forms") {
  // volume of the unit ball in R^3 and the mass of 1/r
  CHECK_THAT(radial_integral(3, [](double) { return 1.0; }, 0.0, 1.0),
             Catch::Matchers::WithinRel(4.0 * M_PI / 3.0, 1e-10));
  CHECK_THAT(radial_integral(3, [](double r) { return 1.0 / r; }, 0.0, 1.0),
             Catch::Matchers::WithinRel(2.0 * M_PI, 1e-8));
}

TEST_CASE("fundamental solution table") {
  // k > n/2: positive power; k = n/2: log; k < n/2: negative power
  const RadialFunction high = wk_radial(3, 2);
  CHECK_THAT(high.u(0.5), Catch::Matchers::WithinRel(std::pow(0.5, 0.5), 1e-12));
  const RadialFunction log_case = wk_radial(4, 2);
  CHECK_THAT(log_case.u(0.5), Catch::Matchers::WithinRel(std::log(0.5), 1e-12));
  const RadialFunction low = wk_radial(3, 1);
  CHECK_THAT(low.u(0.5), Catch::Matchers::WithinRel(-2.0, 1e-12));
  // each one is annihilated by its own operator away from the pole
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 1}}) {
    const RadialFunction w = wk_radial(n, k);
    for (double r : {0.3, 0.7, 1.5})
      CHECK_THAT(radial_fl(w, n, k, r), Catch::Matchers::WithinAbs(0.0, 1e-10));
  }
}

TEST_CASE("interpolation estimate is bounded on a smooth field") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = ScalarField::sample(box, {33, 33}, [](const Vector& x) {
    return 0.5 * (x[0] * x[0] + x[1] * x[1]);
  });
  const EstimateReport rep = verify_interpolation(u, 0.5);
  CHECK(rep.id == "interp_2_12");
  CHECK(rep.verdict == EstimateVerdict::Bounded);
}

TEST_CASE("holder estimate dispatches between bounded and sharpness modes") {
  CHECK_THROWS_AS(verify_holder(3, 1), std::domain_error);  // needs k > n/2
  const EstimateReport bounded = verify_holder(3, 2);
  CHECK(bounded.id == "holder_2_13");
  CHECK(bounded.verdict == EstimateVerdict::Bounded);
  const EstimateReport sharp = verify_holder(3, 2, 0.6);
  CHECK(sharp.id == "holder_2_13_sharpness");
  CHECK(sharp.verdict == EstimateVerdict::Growing);
  CHECK(sharp.growth_rate >= 2.0);
}

TEST_CASE("local mass estimate requires nonpositive input") {
  CHECK_THROWS_AS(
      verify_local_mass_grid(make_quadratic(Matrix::identity(2), Vector(2, 0.0), 0.0), 1,
                             Box::cube(2, 1.0), Box::cube(2, 0.5), 33),
      std::domain_error);
  const EstimateReport rep =
      verify_local_mass_grid(make_quadratic(Matrix::identity(2), Vector(2, 0.0), -1.5), 1,
                             Box::cube(2, 1.0), Box::cube(2, 0.5), 33);
  CHECK(rep.verdict == EstimateVerdict::Bounded);
}

TEST_CASE("l1 bound exponent matches the scaling computation") {
  // L1 mass of the capped cone over a ball of diameter d scales like d^3 in R^3
  const EstimateReport rep = verify_l1_bound(3, 1, 4.0 * M_PI);
  CHECK(rep.verdict == EstimateVerdict::Bounded);
  CHECK_THAT(rep.fitted_exponent, Catch::Matchers::WithinAbs(3.0, 0.05));
}

TEST_CASE("pointwise pl convexity margins are reproducible") {
  const EstimateReport a = verify_pl_convexity(3, 2, 1, 5.0, 2000, 42);
  const EstimateReport b = verify_pl_convexity(3, 2, 1, 5.0, 2000, 42);
  CHECK(a.empirical_constant == b.empirical_constant);
  CHECK(a.empirical_constant >= -1e-9);
}
