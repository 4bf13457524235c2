#include <catch2/catch_amalgamated.hpp>

#include "khess/field.hpp"

using namespace khess;

namespace {

ScalarField sample_quadratic(const Box& box, int res, const Vector& diag) {
  const int n = box.dim();
  return ScalarField::sample(box, std::vector<int>(n, res), [&](const Vector& x) {
    double v = 0.0;
    for (int i = 0; i < n; ++i) v += 0.5 * diag[i] * x[i] * x[i];
    return v;
  });
}

}  // namespace

TEST_CASE("stencil derivatives are exact on quadratics") {
  const Box box = Box::cube(3, 1.0);
  const ScalarField u = sample_quadratic(box, 17, {1.0, 2.0, 3.0});
  MultiIndex p{5, 8, 11};
  const StencilDerivatives d = derivatives_at(u, p);
  const Vector x = u.coords(p);
  CHECK_THAT(d.gradient[0], Catch::Matchers::WithinAbs(1.0 * x[0], 1e-11));
  CHECK_THAT(d.gradient[2], Catch::Matchers::WithinAbs(3.0 * x[2], 1e-11));
  CHECK_THAT(d.hessian(0, 0), Catch::Matchers::WithinAbs(1.0, 1e-10));
  CHECK_THAT(d.hessian(1, 1), Catch::Matchers::WithinAbs(2.0, 1e-10));
  CHECK_THAT(d.hessian(0, 1), Catch::Matchers::WithinAbs(0.0, 1e-10));
  CHECK_THROWS_AS(derivatives_at(u, MultiIndex{0, 8, 11}), std::domain_error);
}

TEST_CASE("hessian operator is constant on quadratics") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = sample_quadratic(box, 33, {2.0, 3.0});
  for (int k : {1, 2}) {
    const ScalarField fk = hessian_operator(u, k);
    const double expected = (k == 1) ? 5.0 : 6.0;
    fk.for_each([&](const MultiIndex& idx, std::size_t f) {
      if (!fk.interior(idx)) return;
      CHECK_THAT(fk[f], Catch::Matchers::WithinAbs(expected, 1e-10));
    });
  }
}

TEST_CASE("mollifier kernel integrates to one") {
  for (int n : {1, 2, 3})
    for (double h : {0.05, 0.2, 1.0})
      CHECK_THAT(MollifierKernel(n, h).quadrature_mass(),
                 Catch::Matchers::WithinAbs(1.0, 1e-9));
  CHECK_THROWS_AS(MollifierKernel(2, 0.0), std::domain_error);
}

TEST_CASE("mollification reproduces affine functions away from the boundary") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = ScalarField::sample(
      box, {65, 65}, [](const Vector& x) { return 0.7 + 2.0 * x[0] - x[1]; });
  const ScalarField v = mollify(u, MollifierKernel(2, 0.1));
  v.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = v.coords(idx);
    if (std::fabs(x[0]) > 0.8 || std::fabs(x[1]) > 0.8) return;
    CHECK_THAT(v[f], Catch::Matchers::WithinAbs(0.7 + 2.0 * x[0] - x[1], 1e-6));
  });
}

TEST_CASE("mollification preserves k-convexity of a convex quadratic") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = sample_quadratic(box, 65, {1.0, 4.0});
  REQUIRE(kconvexity_report(u, 2, 1e-8).fraction == 1.0);
  const ScalarField v = mollify(u, MollifierKernel(2, 0.08));
  CHECK(kconvexity_report(v, 2, 1e-8).fraction == 1.0);
}

TEST_CASE("kconvexity report flags a saddle for k = 2") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = sample_quadratic(box, 33, {1.0, -1.0});
  const KConvexityReport rep = kconvexity_report(u, 2, 1e-8);
  CHECK(rep.fraction == 0.0);
  CHECK(rep.worst_margin < -0.9);
  // the trace is exactly 0, so the same field sits on the boundary of Gamma_1
  CHECK_THAT(kconvexity_report(u, 1, 1e-8).worst_margin,
             Catch::Matchers::WithinAbs(0.0, 1e-9));
}

TEST_CASE("sup convolution dominates the function and is monotone in eps") {
  auto u = [](const Vector& x) { return -std::fabs(x[0]); };
  const Box search = Box::cube(1, 2.0);
  for (double x0 : {-0.7, -0.1, 0.0, 0.4}) {
    const Vector x{x0};
    const double small = sup_convolution(u, 0.1, x, search).value;
    const double large = sup_convolution(u, 0.5, x, search).value;
    CHECK(small >= u(x) - 1e-12);
    CHECK(large >= small - 1e-12);
  }
  CHECK_THROWS_AS(sup_convolution(u, -1.0, Vector{0.0}, search), std::domain_error);
}

TEST_CASE("sup convolution of -|x| plus the parabola is midpoint convex") {
  auto u = [](const Vector& x) { return -std::fabs(x[0]); };
  const Box search = Box::cube(1, 4.0);
  const double eps = 0.25;
  auto g = [&](double t) {
    return sup_convolution(u, eps, Vector{t}, search).value + t * t / (2.0 * eps);
  };
  for (double a = -1.0; a <= 1.0; a += 0.125)
    for (double b = a + 0.25; b <= 1.0; b += 0.25)
      CHECK(g(0.5 * (a + b)) <= 0.5 * (g(a) + g(b)) + 1e-9);
}

TEST_CASE("pk hessian reduces to minor sums at p = 2") {
  Sampler rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3;
    Matrix h(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) h(i, j) = h(j, i) = rng.uniform(-1.0, 1.0);
    const Vector g = rng.gaussian_vector(n);
    for (int l : {1, 2, 3})
      CHECK_THAT(pk_hessian_pointwise(g, h, l, 2.0),
                 Catch::Matchers::WithinAbs(minor_sum(h, l), 1e-10));
  }
  CHECK_THROWS_AS(pk_hessian_pointwise({1.0, 0.0, 0.0}, Matrix::identity(3), 1, 1.5),
                  std::domain_error);
}

TEST_CASE("weighted norms of a constant field") {
  const Box box = Box::cube(2, 1.0);
  const ScalarField u = ScalarField::sample(box, {33, 33}, [](const Vector&) { return 2.0; });
  const WeightedNormReport rep = weighted_norms(u, 0.0, 0.5);
  CHECK_THAT(rep.sup_norm, Catch::Matchers::WithinAbs(2.0, 1e-12));
  CHECK_THAT(rep.holder_seminorm, Catch::Matchers::WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(weighted_norms(u, 1.0, 1.5), std::domain_error);
}
