// Membership, margin, projection and duality tests for the symmetric-function
// cones Gamma_k = { S_j(lambda) >= 0, j = 1..k } and their duals.
#pragma once

#include <limits>
#include <optional>

#include "khess/symmetric.hpp"

namespace khess {

enum class ConeStatus { Conclusive, Inconclusive };

struct ConeMembershipReport {
  bool in_cone = false;
  bool boundary = false;  // margin within [-tol, tol]
  double margin = 0.0;    // min_{1<=j<=k} S_j (primal) or estimated min pairing (dual)
  std::optional<Vector> witness;  // for dual failures: the Gamma_k direction pairing negatively
  ConeStatus status = ConeStatus::Conclusive;
};

inline ConeMembershipReport gamma_membership(const Vector& lam, int k, double tol = 0.0) {
  const int n = static_cast<int>(lam.size());
  if (k < 1 || k > n) throw std::domain_error("gamma_membership: k out of range");
  if (tol < 0) throw std::domain_error("gamma_membership: tol must be >= 0");
  const Vector s = elem_sym_all(lam);
  double margin = s[1];
  for (int j = 2; j <= k; ++j) margin = std::min(margin, s[j]);
  ConeMembershipReport rep;
  rep.margin = margin;
  rep.in_cone = margin >= -tol;
  rep.boundary = std::fabs(margin) <= tol;
  return rep;
}

// Property probe for the monotonicity characterization of Gamma_k:
// 0 <= S_k(lam) <= S_k(lam + eta) whenever lam in Gamma_k and eta >= 0.
inline bool cone_monotonicity_check(const Vector& lam, const Vector& eta, int k,
                                    double tol = 1e-10) {
  const double a = elem_sym(lam, k);
  const double b = elem_sym(lam + eta, k);
  return a >= -tol && b >= a - tol;
}

// Minimal diagonal shift t >= 0 with lam + t(1,..,1) in Gamma_k. The feasible
// t-set is an interval [t*, inf) since Gamma_k is convex, so bisection on
// membership suffices.
inline std::pair<Vector, double> project_to_cone(const Vector& lam, int k) {
  const int n = static_cast<int>(lam.size());
  if (k < 1 || k > n) throw std::domain_error("project_to_cone: k out of range");
  auto inside = [&](double t) {
    Vector shifted = lam;
    for (double& x : shifted) x += t;
    return gamma_membership(shifted, k).margin >= 0.0;
  };
  if (inside(0.0)) return {lam, 0.0};
  double lo = 0.0;
  double hi = 1e-12 - *std::min_element(lam.begin(), lam.end());
  hi = std::max(hi, 1e-12);
  while (!inside(hi)) hi *= 2.0;  // safety; (R,..,R) in Gamma_k for large R
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  Vector shifted = lam;
  for (double& x : shifted) x += hi;
  return {shifted, hi};
}

// Numerical dual-cone test: estimate m* = min { <lam, mu> : lam in Gamma_k,
// |lam| = 1 } by multi-start projected local search plus the explicit
// boundary family perm(1,..,1,-(n-k)/k) and the coordinate directions.
inline ConeMembershipReport dual_membership(const Vector& mu, int k, double tol = 1e-8,
                                            std::uint64_t seed = 12345) {
  const int n = static_cast<int>(mu.size());
  if (k < 1 || k > n) throw std::domain_error("dual_membership: k out of range");

  double best = std::numeric_limits<double>::infinity();
  Vector best_lam;
  auto consider = [&](Vector lam) {
    const double nn = norm(lam);
    if (nn < 1e-14) return;
    for (double& x : lam) x /= nn;
    if (gamma_membership(lam, k).margin < -1e-12) return;
    const double p = dot(lam, mu);
    if (p < best) {
      best = p;
      best_lam = lam;
    }
  };

  // explicit candidates
  for (int i = 0; i < n; ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    consider(e);
    Vector ray(n, 1.0);
    ray[i] = -static_cast<double>(n - k) / k;
    consider(project_to_cone(ray, k).first);  // exact boundary ray; projection is a no-op
  }
  consider(Vector(n, 1.0));

  // multi-start projected descent on <lam, mu> over Gamma_k \cap S^{n-1}
  Sampler rng(seed);
  bool converged = true;
  for (int start = 0; start < 64; ++start) {
    Vector lam = project_to_cone(rng.gaussian_vector(n), k).first;
    double nn = norm(lam);
    if (nn < 1e-12) continue;
    for (double& x : lam) x /= nn;
    double val = dot(lam, mu);
    double step = 0.5;
    int it = 0;
    for (; it < 200 && step > 1e-10; ++it) {
      Vector cand = lam;
      for (int i = 0; i < n; ++i) cand[i] -= step * mu[i];
      cand = project_to_cone(cand, k).first;
      nn = norm(cand);
      if (nn < 1e-14) {
        step *= 0.5;
        continue;
      }
      for (double& x : cand) x /= nn;
      const double cv = dot(cand, mu);
      if (cv < val - 1e-14) {
        lam = cand;
        val = cv;
      } else {
        step *= 0.5;
      }
    }
    if (it >= 200) converged = false;
    consider(lam);
  }

  ConeMembershipReport rep;
  rep.margin = best;
  rep.in_cone = best >= -tol;
  rep.boundary = std::fabs(best) <= tol;
  if (!rep.in_cone) rep.witness = best_lam;
  if (!converged && rep.boundary) rep.status = ConeStatus::Inconclusive;
  return rep;
}

}  // namespace khess
