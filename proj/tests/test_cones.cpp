#include <catch2/catch_amalgamated.hpp>

#include "khess/cones.hpp"

using namespace khess;

TEST_CASE("gamma membership on hand-checked tuples") {
  // S_1 = 1, S_2 = -1 for (1, 1, -1): inside Gamma_1, outside Gamma_2
  const Vector lam{1.0, 1.0, -1.0};
  CHECK(gamma_membership(lam, 1).in_cone);
  CHECK_FALSE(gamma_membership(lam, 2).in_cone);
  CHECK_THAT(gamma_membership(lam, 2).margin, Catch::Matchers::WithinAbs(-1.0, 1e-14));
  CHECK(gamma_membership({1.0, 1.0, 1.0}, 3).in_cone);
  CHECK_THROWS_AS(gamma_membership(lam, 0), std::domain_error);
  CHECK_THROWS_AS(gamma_membership(lam, 4), std::domain_error);
}

TEST_CASE("cone projection lands in the cone and fixes members") {
  Sampler rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 4;
    const int k = 1 + trial % n;
    const Vector lam = rng.gaussian_vector(n);
    const auto [proj, shift] = project_to_cone(lam, k);
    CHECK(shift >= 0.0);
    CHECK(gamma_membership(proj, k, 1e-9).in_cone);
    // projecting again is a no-op
    const auto [again, shift2] = project_to_cone(proj, k);
    CHECK(shift2 <= 1e-9);
    // the projection is a uniform diagonal shift
    for (int i = 0; i < n; ++i)
      CHECK_THAT(proj[i] - lam[i], Catch::Matchers::WithinAbs(shift, 1e-12));
  }
}

TEST_CASE("cones are nested and closed under addition") {
  Sampler rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 3;
    const int k = 2 + trial % (n - 1);
    const Vector a = project_to_cone(rng.gaussian_vector(n), k).first;
    const Vector b = project_to_cone(rng.gaussian_vector(n), k).first;
    CHECK(gamma_membership(a, k - 1, 1e-10).in_cone);
    Vector sum(n);
    const double s = rng.uniform(0.0, 2.0), t = rng.uniform(0.0, 2.0);
    for (int i = 0; i < n; ++i) sum[i] = s * a[i] + t * b[i];
    CHECK(gamma_membership(sum, k, 1e-10).in_cone);
  }
}

TEST_CASE("monotonicity of S_k along nonnegative perturbations") {
  Sampler rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 3;
    const int k = 1 + trial % n;
    const Vector lam = project_to_cone(rng.gaussian_vector(n), k).first;
    Vector eta(n);
    for (int i = 0; i < n; ++i) eta[i] = std::fabs(rng.uniform(0.0, 1.0));
    CHECK(cone_monotonicity_check(lam, eta, k));
  }
}

TEST_CASE("dual cone membership") {
  // the positive orthant pairs nonnegatively with every Gamma_k tuple
  CHECK(dual_membership({1.0, 2.0, 3.0}, 2).in_cone);
  // a strictly negative direction cannot be in the dual cone
  const ConeMembershipReport rep = dual_membership({-1.0, -1.0, -1.0}, 2);
  CHECK_FALSE(rep.in_cone);
  REQUIRE(rep.witness.has_value());
  // the witness certifies the failure: it is in Gamma_k and pairs negatively
  CHECK(gamma_membership(*rep.witness, 2, 1e-9).in_cone);
  double pairing = 0.0;
  for (int i = 0; i < 3; ++i) pairing += (*rep.witness)[i] * -1.0;
  CHECK(pairing < 0.0);
}
