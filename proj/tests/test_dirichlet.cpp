#include <catch2/catch_amalgamated.hpp>

#include "khess/dirichlet.hpp"

using namespace khess;

TEST_CASE("grid solver recovers a quadratic for k = 1") {
  GridDirichletSpec spec;
  spec.box = Box::cube(2, 1.0);
  spec.res = 33;
  spec.k = 1;
  spec.psi = [](const Vector&) { return 2.0; };
  spec.phi = [](const Vector& x) { return 0.5 * (x[0] * x[0] + x[1] * x[1]); };
  spec.tol = 1e-10;
  const GridSolveReport rep = solve_grid(spec);
  REQUIRE(rep.converged);
  double err = 0.0;
  rep.u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = rep.u.coords(idx);
    err = std::max(err, std::fabs(rep.u[f] - 0.5 * (x[0] * x[0] + x[1] * x[1])));
  });
  CHECK(err < 1e-8);
  CHECK(rep.convexity.fraction == 1.0);
}

TEST_CASE("grid solver rejects negative data") {
  GridDirichletSpec spec;
  spec.box = Box::cube(2, 1.0);
  spec.res = 17;
  spec.k = 1;
  spec.psi = [](const Vector&) { return -1.0; };
  spec.phi = [](const Vector&) { return 0.0; };
  CHECK_THROWS_AS(solve_grid(spec), std::domain_error);
}

TEST_CASE("radial solutions respond monotonically to the data") {
  // more mass means a deeper well for the same boundary value
  const RadialSolveReport small =
      solve_radial(3, 1, [](double) { return 1.0; }, 0.0, 1.0, 0.0);
  const RadialSolveReport large =
      solve_radial(3, 1, [](double) { return 4.0; }, 0.0, 1.0, 0.0);
  for (double r : {0.1, 0.3, 0.6, 0.9})
    CHECK(large.profile.value_at(r) <= small.profile.value_at(r) + 1e-12);
  CHECK(small.residual_relative < 1e-8);
  CHECK(large.residual_relative < 1e-8);
}

TEST_CASE("comparison check certifies ordering against a concave barrier") {
  const Box box = Box::cube(2, 1.0);
  ScalarField u(box, {65, 65});
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = u.coords(idx);
    u[f] = 0.5 * (x[0] * x[0] + x[1] * x[1]);
  });
  ScalarField v(box, {65, 65});
  v.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = v.coords(idx);
    v[f] = 0.5 - 0.5 * (x[0] * x[0] + x[1] * x[1]);
  });
  // F_1[v] = -2 <= 0 and u <= v on the ring of the half cube, so u <= v inside
  const ComparisonReport rep = comparison_check(u, v, Box::cube(2, 0.5), 1);
  CHECK(rep.precondition_ok);
  CHECK(rep.ordered_on_boundary);
  CHECK(rep.ordered);
  CHECK(rep.violations.empty());
}

TEST_CASE("comparison check flags a barrier that fails its precondition") {
  const Box box = Box::cube(2, 1.0);
  ScalarField u(box, {33, 33});
  ScalarField v(box, {33, 33});
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = u.coords(idx);
    u[f] = 0.5 * (x[0] * x[0] + x[1] * x[1]);
    v[f] = x[0] * x[0] + x[1] * x[1];  // F_1[v] = 4 > 0: not a valid barrier
  });
  const ComparisonReport rep = comparison_check(u, v, Box::cube(2, 0.5), 1);
  CHECK_FALSE(rep.precondition_ok);
}

TEST_CASE("comparison check reports interior violations") {
  const Box box = Box::cube(2, 1.0);
  ScalarField u(box, {33, 33});
  ScalarField v(box, {33, 33});
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = u.coords(idx);
    u[f] = 0.5 * (x[0] * x[0] + x[1] * x[1]);
    // matches u on the sub-box ring but dips below it at the center
    v[f] = 0.5 * (x[0] * x[0] + x[1] * x[1]) - 0.05 * std::cos(M_PI * x[0]) *
                                                    std::cos(M_PI * x[1]);
  });
  const ComparisonReport rep = comparison_check(u, v, Box::cube(2, 0.5), 1);
  CHECK_FALSE(rep.ordered);
  CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("measure data solves form a cauchy sequence in L1") {
  const RadialMeasureDataReport rep = solve_measure_data_radial(
      3, 1, [](double) { return 1.0; }, 2.0 * M_PI, 1.0, 0.0, 0.12, 3);
  REQUIRE(rep.l1_steps.size() == 2);
  CHECK(rep.cauchy);
  CHECK(rep.l1_steps[1] < rep.l1_steps[0]);
  CHECK(rep.finest.convexity_fraction >= 0.999);
}

TEST_CASE("grid measure data sharpening converges in L1") {
  GridDirichletSpec spec;
  spec.box = Box::cube(2, 1.0);
  spec.res = 65;
  spec.k = 1;
  spec.psi = [](const Vector&) { return 1.0; };
  spec.phi = [](const Vector&) { return 0.0; };
  spec.tol = 1e-9;
  const GridMeasureDataReport rep =
      solve_measure_data_grid(spec, {{Vector{0.0, 0.0}, 2.0}}, 3);
  REQUIRE(rep.sequence.size() == 3);
  CHECK(rep.cauchy);
  for (const auto& s : rep.sequence) CHECK(s.converged);
}
