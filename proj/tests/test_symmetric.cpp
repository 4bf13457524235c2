#include <catch2/catch_amalgamated.hpp>

#include "khess/cones.hpp"
#include "khess/symmetric.hpp"

using namespace khess;

namespace {

// independent oracle: S_k by direct subset enumeration
double elem_sym_bruteforce(const Vector& lam, int k) {
  const int n = static_cast<int>(lam.size());
  if (k == 0) return 1.0;
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    double prod = 1.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= lam[i];
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("elementary symmetric functions match frozen values") {
  const Vector lam{1.0, 2.0, 3.0};
  CHECK(elem_sym(lam, 0) == 1.0);
  CHECK(elem_sym(lam, 1) == 6.0);
  CHECK(elem_sym(lam, 2) == 11.0);
  CHECK(elem_sym(lam, 3) == 6.0);
  CHECK_THROWS_AS(elem_sym(lam, 4), std::domain_error);
  CHECK_THROWS_AS(elem_sym(lam, -1), std::domain_error);
}

TEST_CASE("elem_sym agrees with subset enumeration on random inputs") {
  Sampler rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Vector lam = rng.gaussian_vector(n);
    for (int k = 0; k <= n; ++k)
      CHECK_THAT(elem_sym(lam, k),
                 Catch::Matchers::WithinRel(elem_sym_bruteforce(lam, k), 1e-12) ||
                     Catch::Matchers::WithinAbs(elem_sym_bruteforce(lam, k), 1e-12));
  }
}

TEST_CASE("restricted sums obey the contraction identities") {
  Sampler rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const int k = 2 + trial % (n - 1);
    const Vector lam = rng.gaussian_vector(n);
    // (n - k + 1) S_{k-1} = sum_i S_{k-1;i}
    double rsum = 0.0;
    for (int i = 0; i < n; ++i) rsum += elem_sym_restricted(lam, k - 1, {i});
    CHECK_THAT(rsum, Catch::Matchers::WithinAbs((n - k + 1) * elem_sym(lam, k - 1), 1e-10));
    // S_k = S_{k;i} + lambda_i S_{k-1;i}
    if (k < n)
      for (int i = 0; i < n; ++i)
        CHECK_THAT(elem_sym_restricted(lam, k, {i}) + lam[i] * elem_sym_restricted(lam, k - 1, {i}),
                   Catch::Matchers::WithinAbs(elem_sym(lam, k), 1e-10));
  }
}

TEST_CASE("minor sums reduce to elementary symmetric functions on diagonals") {
  const Matrix d = Matrix::diagonal({1.0, 2.0, 3.0, 4.0});
  CHECK_THAT(minor_sum(d, 1), Catch::Matchers::WithinAbs(10.0, 1e-13));
  CHECK_THAT(minor_sum(d, 2), Catch::Matchers::WithinAbs(35.0, 1e-13));
  CHECK_THAT(minor_sum(d, 4), Catch::Matchers::WithinAbs(24.0, 1e-13));
}

TEST_CASE("minor sum derivative satisfies the Euler contraction") {
  Sampler rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    Matrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-2.0, 2.0);
    for (int k = 1; k <= n; ++k) {
      const Matrix dk = minor_sum_derivative(a, k);
      double contracted = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) contracted += dk(i, j) * a(i, j);
      CHECK_THAT(contracted, Catch::Matchers::WithinAbs(k * minor_sum(a, k), 1e-9));
    }
  }
}

TEST_CASE("minor sums are invariant under orthogonal conjugation") {
  Sampler rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    Matrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform(-1.0, 1.0);
    const Matrix q = rng.random_orthogonal(n);
    // b = q a q^T
    Matrix b(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
          for (int r = 0; r < n; ++r) s += q(i, p) * a(p, r) * q(j, r);
        b(i, j) = s;
      }
    for (int k = 1; k <= n; ++k)
      CHECK_THAT(minor_sum(b, k), Catch::Matchers::WithinAbs(minor_sum(a, k), 1e-9));
  }
}

TEST_CASE("newton quotient inequality holds on cone samples") {
  Sampler rng(505);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4;
    const int k = 3, l = 1;
    const Vector lam = project_to_cone(rng.gaussian_vector(n), k).first;
    for (int i = 0; i < n; ++i) {
      try {
        const NewtonSides sides = newton_check(lam, k, l, i);
        CHECK(sides.lhs <= sides.rhs + 1e-10 * (std::fabs(sides.rhs) + 1.0));
      } catch (const std::domain_error&) {
        // degenerate denominator, skip
      }
    }
  }
}
