// Elementary symmetric functions S_k, restricted variants S_{k;i}, principal
// minor sums [A]_k and their entrywise derivatives A_k^{ij}.
#pragma once

#include <bit>
#include <optional>
#include <set>
#include <utility>

#include "khess/core.hpp"

namespace khess {

// All S_0..S_n at once: coefficients of prod_i (1 + t lam_i).
inline Vector elem_sym_all(const Vector& lam) {
  const int n = static_cast<int>(lam.size());
  Vector s(n + 1, 0.0);
  s[0] = 1.0;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k >= 1; --k) s[k] += lam[i] * s[k - 1];
  return s;
}

inline double elem_sym(const Vector& lam, int k) {
  const int n = static_cast<int>(lam.size());
  if (k < 0 || k > n) throw std::domain_error("elem_sym: k out of range");
  return elem_sym_all(lam)[k];
}

// S_k of the sub-tuple with the given indices removed.
inline double elem_sym_restricted(const Vector& lam, int k, const std::vector<int>& excluded) {
  const int n = static_cast<int>(lam.size());
  std::set<int> ex(excluded.begin(), excluded.end());
  if (ex.size() != excluded.size()) throw std::domain_error("elem_sym_restricted: duplicate index");
  for (int i : ex)
    if (i < 0 || i >= n) throw std::domain_error("elem_sym_restricted: index out of range");
  if (k < 0 || k > n - static_cast<int>(ex.size()))
    throw std::domain_error("elem_sym_restricted: k out of range");
  Vector sub;
  sub.reserve(n);
  for (int i = 0; i < n; ++i)
    if (!ex.count(i)) sub.push_back(lam[i]);
  return elem_sym(sub, k);
}

// Sum of all k x k principal minors of A (A need not be symmetric).
inline double minor_sum(const Matrix& a, int k) {
  const int n = a.size();
  if (k < 1 || k > n) throw std::domain_error("minor_sum: k out of range");
  double total = 0.0;
  // iterate k-subsets of {0..n-1} via bitmasks (n <= 8)
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix sub(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = a(idx[i], idx[j]);
    total += determinant(sub);
  }
  return total;
}

// A_k^{ij} = d [A]_k / d a_{ij}. Satisfies sum_ij A_k^{ij} a_ij = k [A]_k.
inline Matrix minor_sum_derivative(const Matrix& a, int k) {
  const int n = a.size();
  if (k < 1 || k > n) throw std::domain_error("minor_sum_derivative: k out of range");
  Matrix d(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    // cofactors of the principal submatrix A_S scatter into d
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        Matrix sub(k - 1);
        int r = 0;
        for (int i = 0; i < k; ++i) {
          if (i == p) continue;
          int c = 0;
          for (int j = 0; j < k; ++j) {
            if (j == q) continue;
            sub(r, c++) = a(idx[i], idx[j]);
          }
          ++r;
        }
        const double cof = (k == 1 ? 1.0 : ((p + q) % 2 == 0 ? 1.0 : -1.0) * determinant(sub));
        d(idx[p], idx[q]) += cof;
      }
  }
  return d;
}

struct NewtonSides {
  double lhs;  // S_{k;i} / S_{k-1;i}
  double rhs;  // [l(n-k)/(k(n-l))] S_{l;i} / S_{l-1;i}
};

// Both sides of the quotient form of Newton's inequality with one index
// removed. Caller asserts lhs <= rhs for eigenvalue tuples in the validity
// domain (the Gamma_k samples used by the verification suite).
inline NewtonSides newton_check(const Vector& lam, int k, int l, int excluded,
                                double denom_tol = 1e-12) {
  const int n = static_cast<int>(lam.size());
  if (!(1 <= l && l < k && k <= n)) throw std::domain_error("newton_check: need 1 <= l < k <= n");
  const double sk = elem_sym_restricted(lam, k, {excluded});
  const double skm = elem_sym_restricted(lam, k - 1, {excluded});
  const double sl = elem_sym_restricted(lam, l, {excluded});
  const double slm = elem_sym_restricted(lam, l - 1, {excluded});
  if (skm <= denom_tol || slm <= denom_tol)
    throw std::domain_error("newton_check: denominator at or below tolerance");
  const double factor = static_cast<double>(l) * (n - k) / (static_cast<double>(k) * (n - l));
  return {sk / skm, factor * sl / slm};
}

}  // namespace khess
