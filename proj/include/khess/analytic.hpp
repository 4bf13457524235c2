// Closed-form test functions with exact k-Hessian behaviour (the radial
// family w_k, quadratics, composites) and the exact radial solver used as
// ground truth throughout the verification suites.
#pragma once

#include <functional>
#include <memory>
#include <string>

#include "khess/field.hpp"

namespace khess {

// The radial fundamental-solution family: |x|^{2-n/k} above the critical
// index, log|x| at it, -|x|^{2-n/k} below; minus infinity at the center for
// k <= n/2 (represented by the clamp).
inline double wk_value(int n, int k, const Vector& x, const Vector& center,
                       double clamp = -1e6) {
  if (k < 1 || k > n) throw std::domain_error("wk_value: k out of range");
  const double r = norm(x - center);
  double v;
  if (2 * k > n) {
    v = std::pow(r, 2.0 - static_cast<double>(n) / k);
  } else if (2 * k == n) {
    v = r > 0 ? std::log(r) : -std::numeric_limits<double>::infinity();
  } else {
    v = r > 0 ? -std::pow(r, 2.0 - static_cast<double>(n) / k)
              : -std::numeric_limits<double>::infinity();
  }
  return std::isfinite(v) ? std::max(v, clamp) : clamp;
}

// derivative d/dr of w_k (away from the center)
inline double wk_radial_derivative(int n, int k, double r) {
  const double e = 2.0 - static_cast<double>(n) / k;
  if (2 * k > n) return e * std::pow(r, e - 1.0);
  if (2 * k == n) return 1.0 / r;
  return -e * std::pow(r, e - 1.0);
}

struct AnalyticFunction {
  std::function<double(const Vector&)> eval;
  std::vector<Vector> singular_points;
  std::string name;
  double clamp = -1e6;

  double operator()(const Vector& x) const {
    const double v = eval(x);
    return std::isfinite(v) ? std::max(v, clamp) : clamp;
  }
};

inline AnalyticFunction make_quadratic(const Matrix& a, const Vector& b, double c) {
  return {[a, b, c](const Vector& x) {
            double v = c + dot(b, x);
            const int n = a.size();
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) v += 0.5 * a(i, j) * x[i] * x[j];
            return v;
          },
          {},
          "quadratic"};
}

inline AnalyticFunction make_wk(int n, int k, const Vector& center, double clamp = -1e6) {
  AnalyticFunction f;
  f.eval = [n, k, center, clamp](const Vector& x) { return wk_value(n, k, x, center, clamp); };
  if (2 * k <= n) f.singular_points = {center};
  f.name = "w_" + std::to_string(k) + " (n=" + std::to_string(n) + ")";
  f.clamp = clamp;
  return f;
}

inline AnalyticFunction make_truncation(const AnalyticFunction& inner, double floor_level) {
  AnalyticFunction f;
  auto base = inner;
  f.eval = [base, floor_level](const Vector& x) { return std::max(base(x), -floor_level); };
  f.name = "max(" + inner.name + ", -" + std::to_string(floor_level) + ")";
  f.clamp = inner.clamp;
  return f;
}

inline AnalyticFunction make_max_composite(std::vector<AnalyticFunction> parts) {
  AnalyticFunction f;
  f.eval = [parts](const Vector& x) {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& p : parts) v = std::max(v, p(x));
    return v;
  };
  for (const auto& p : parts)
    f.singular_points.insert(f.singular_points.end(), p.singular_points.begin(),
                             p.singular_points.end());
  f.name = "max_composite";
  return f;
}

inline AnalyticFunction make_sum_composite(std::vector<AnalyticFunction> parts,
                                           Vector weights = {}) {
  if (weights.empty()) weights.assign(parts.size(), 1.0);
  AnalyticFunction f;
  f.eval = [parts, weights](const Vector& x) {
    double v = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) v += weights[i] * parts[i](x);
    return v;
  };
  for (const auto& p : parts)
    f.singular_points.insert(f.singular_points.end(), p.singular_points.begin(),
                             p.singular_points.end());
  f.name = "sum_composite";
  return f;
}

inline AnalyticFunction make_translate(const AnalyticFunction& inner, const Vector& shift) {
  AnalyticFunction f;
  auto base = inner;
  f.eval = [base, shift](const Vector& x) { return base(x - shift); };
  for (const auto& s : inner.singular_points) f.singular_points.push_back(s + shift);
  f.name = inner.name + " translated";
  f.clamp = inner.clamp;
  return f;
}

// u(r) on an increasing radial mesh: geometric spacing near zero (ratio
// 1.05) with the step capped so the outer region stays resolved.
struct RadialProfile {
  Vector r;    // strictly increasing, positive
  Vector u;
  Vector du;   // first derivative
  Vector d2u;  // second derivative, filled when a pointwise formula is known
  int n = 0;   // ambient dimension
  int k = 0;   // operator index

  double value_at(double rr) const { return interp(u, rr); }
  double derivative_at(double rr) const { return interp(du, rr); }

  // local cubic (4-point Lagrange) interpolation
  double interp(const Vector& f, double rr) const {
    auto it = std::lower_bound(r.begin(), r.end(), rr);
    if (it == r.begin()) return f.front();
    if (it == r.end()) return f.back();
    const std::size_t j = static_cast<std::size_t>(it - r.begin());
    std::size_t lo = (j >= 2) ? j - 2 : 0;
    if (lo + 4 > r.size()) lo = r.size() - 4;
    double acc = 0.0;
    for (std::size_t a = lo; a < lo + 4; ++a) {
      double w = 1.0;
      for (std::size_t b = lo; b < lo + 4; ++b)
        if (b != a) w *= (rr - r[b]) / (r[a] - r[b]);
      acc += w * f[a];
    }
    return acc;
  }
};

inline Vector radial_mesh(double r_min, double r_max, double ratio = 1.05,
                          double max_step_fraction = 1.0 / 400.0) {
  Vector mesh;
  double r = r_min;
  const double cap = r_max * max_step_fraction;
  while (r < r_max) {
    mesh.push_back(r);
    r += std::min(r * (ratio - 1.0), cap);
  }
  mesh.push_back(r_max);
  return mesh;
}

inline RadialProfile make_radial_profile(int n, int k,
                                         const std::function<double(double)>& f,
                                         const std::function<double(double)>& df,
                                         double r_min, double r_max) {
  RadialProfile p;
  p.n = n;
  p.k = k;
  p.r = radial_mesh(r_min, r_max);
  p.u.resize(p.r.size());
  p.du.resize(p.r.size());
  for (std::size_t i = 0; i < p.r.size(); ++i) {
    p.u[i] = f(p.r[i]);
    p.du[i] = df(p.r[i]);
  }
  return p;
}

// Second derivative at x of the polynomial through (xs_j, ys_j).
inline double lagrange_second_derivative(const Vector& xs, const Vector& ys, double x) {
  const std::size_t m = xs.size();
  double d = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double denom = 1.0;
    for (std::size_t l = 0; l < m; ++l)
      if (l != j) denom *= xs[j] - xs[l];
    double sum = 0.0;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == j) continue;
      for (std::size_t s = 0; s < m; ++s) {
        if (s == j || s == q) continue;
        double prod = 1.0;
        for (std::size_t l = 0; l < m; ++l)
          if (l != j && l != q && l != s) prod *= x - xs[l];
        sum += prod;
      }
    }
    d += ys[j] * sum / denom;
  }
  return d;
}

// Derivative at x of the polynomial through (xs_j, ys_j).
inline double lagrange_derivative(const Vector& xs, const Vector& ys, double x);

// Second derivative on a nonuniform mesh (5-point Lagrange stencil). The du
// array is differentiated when present: du comes from pointwise formulas in
// every constructor here, so it is far less noisy than twice-differenced u.
inline double radial_second_derivative(const RadialProfile& p, std::size_t i) {
  const std::size_t m = p.r.size();
  if (i == 0 || i + 1 >= m)
    throw std::domain_error("radial_second_derivative: mesh edge");
  std::size_t lo = (i >= 2) ? i - 2 : 0;
  if (lo + 5 > m) lo = m - 5;
  Vector xs(p.r.begin() + lo, p.r.begin() + lo + 5);
  if (p.du.size() == m) {
    Vector ys(p.du.begin() + lo, p.du.begin() + lo + 5);
    return lagrange_derivative(xs, ys, p.r[i]);
  }
  Vector ys(p.u.begin() + lo, p.u.begin() + lo + 5);
  return lagrange_second_derivative(xs, ys, p.r[i]);
}

// S_k of the radial eigenvalue tuple (u'', u'/r, ..., u'/r).
inline double radial_fk(const RadialProfile& p, std::size_t i) {
  if (i == 0 || i + 1 >= p.r.size()) throw std::domain_error("radial_fk: mesh edge");
  Vector lam(p.n, p.du[i] / p.r[i]);
  lam[0] = radial_second_derivative(p, i);
  return elem_sym(lam, p.k);
}

// Derivative at x of the polynomial through (xs_j, ys_j).
inline double lagrange_derivative(const Vector& xs, const Vector& ys, double x) {
  const std::size_t m = xs.size();
  double d = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double denom = 1.0;
    for (std::size_t l = 0; l < m; ++l)
      if (l != j) denom *= xs[j] - xs[l];
    double sum = 0.0;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == j) continue;
      double prod = 1.0;
      for (std::size_t l = 0; l < m; ++l)
        if (l != j && l != q) prod *= x - xs[l];
      sum += prod;
    }
    d += ys[j] * sum / denom;
  }
  return d;
}

// Divergence (flux) form of the same quantity:
//   F_k = [C(n-1,k-1)/k] r^{1-n} d/dr [ r^{n-k} (u')^k ].
// Independent route used to cross-check radial_fk on smooth profiles. The
// flux derivative uses a 7-point Lagrange stencil: the r^{1-n} factor
// amplifies stencil error near the origin, so second order is not enough.
inline double radial_fk_flux(const RadialProfile& p, std::size_t i) {
  if (i == 0 || i + 1 >= p.r.size()) throw std::domain_error("radial_fk_flux: mesh edge");
  auto g = [&](std::size_t j) {
    return std::pow(p.r[j], p.n - p.k) * std::pow(p.du[j], p.k);
  };
  const std::size_t m = p.r.size();
  std::size_t lo = (i >= 3) ? i - 3 : 0;
  if (lo + 7 > m) lo = m - 7;
  Vector xs(7), ys(7);
  for (std::size_t j = 0; j < 7; ++j) {
    xs[j] = p.r[lo + j];
    ys[j] = g(lo + j);
  }
  const double dg = lagrange_derivative(xs, ys, p.r[i]);
  return binomial(p.n - 1, p.k - 1) / p.k * std::pow(p.r[i], 1.0 - p.n) * dg;
}

// Exact (quadrature-level) radial Dirichlet solve of F_k[u] = psi with an
// optional atom of the k-Hessian measure at the origin:
//   r^{n-k} (u')^k = [k / C(n-1,k-1)] { atom/sigma_{n-1} + int_0^r s^{n-1} psi }.
inline RadialProfile radial_dirichlet_solve(int n, int k,
                                            const std::function<double(double)>& psi,
                                            double atom_mass, double R,
                                            double boundary_value,
                                            double r_min_fraction = 1e-4) {
  if (k < 1 || k > n) throw std::domain_error("radial_dirichlet_solve: k out of range");
  if (atom_mass < 0) throw std::domain_error("radial_dirichlet_solve: atom mass must be >= 0");
  RadialProfile p;
  p.n = n;
  p.k = k;
  p.r = radial_mesh(r_min_fraction * R, R);
  const std::size_t m = p.r.size();
  p.u.resize(m);
  p.du.resize(m);

  const double factor = k / binomial(n - 1, k - 1);
  const double sigma = sphere_area(n);
  // cumulative int_0^r s^{n-1} psi(s) ds at nodes and panel midpoints,
  // per-half-panel Simpson
  Vector cumulative(m), cumulative_mid(m, 0.0);
  auto integrand = [&](double s) { return psi(s) * std::pow(s, n - 1); };
  auto simpson = [&](double a, double b) {
    return (b - a) / 6.0 * (integrand(a) + 4.0 * integrand(0.5 * (a + b)) + integrand(b));
  };
  {
    const double r0 = p.r[0];
    cumulative[0] = simpson(0.0, r0);
    for (std::size_t i = 1; i < m; ++i) {
      const double a = p.r[i - 1], mid = 0.5 * (p.r[i - 1] + p.r[i]);
      cumulative_mid[i] = cumulative[i - 1] + simpson(a, mid);
      cumulative[i] = cumulative_mid[i] + simpson(mid, p.r[i]);
    }
  }
  auto du_of = [&](double r, double cum) {
    const double flux = factor * (atom_mass / sigma + cum);
    if (flux < -1e-12)
      throw std::domain_error("radial_dirichlet_solve: negative flux (non-k-convex data)");
    return std::pow(std::max(flux, 0.0), 1.0 / k) *
           std::pow(r, -static_cast<double>(n - k) / k);
  };
  for (std::size_t i = 0; i < m; ++i) p.du[i] = du_of(p.r[i], cumulative[i]);
  // differentiating the flux relation once more gives the second derivative in
  // closed form, u'' = u' (F'/(kF) - (n-k)/(kr)) with F' = factor r^{n-1} psi
  p.d2u.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double flux = factor * (atom_mass / sigma + cumulative[i]);
    if (flux <= 0.0) {
      p.d2u[i] = 0.0;
      continue;
    }
    const double dflux = factor * std::pow(p.r[i], n - 1) * psi(p.r[i]);
    p.d2u[i] =
        p.du[i] * (dflux / (k * flux) - static_cast<double>(n - k) / (k * p.r[i]));
  }
  // inward Simpson integration from u(R) = boundary_value
  p.u[m - 1] = boundary_value;
  for (std::size_t i = m - 1; i > 0; --i) {
    const double a = p.r[i - 1], b = p.r[i];
    const double du_mid = du_of(0.5 * (a + b), cumulative_mid[i]);
    p.u[i - 1] = p.u[i] - (b - a) / 6.0 * (p.du[i - 1] + 4.0 * du_mid + p.du[i]);
  }
  return p;
}

// Total k-Hessian measure mass of the ball of radius r, from the flux form.
inline double radial_measure_mass(const RadialProfile& p, double r) {
  const double du = p.derivative_at(r);
  return sphere_area(p.n) * binomial(p.n - 1, p.k - 1) / p.k *
         std::pow(r, p.n - p.k) * std::pow(du, p.k);
}

struct FamilyMember {
  AnalyticFunction fn;
  bool accepted = false;
  KConvexityReport probe;
};

// Validates each candidate on a probe grid; members failing the k-convexity
// probe are rejected with diagnostics attached.
inline std::vector<FamilyMember> family_generate(std::vector<AnalyticFunction> candidates,
                                                 int k, const Box& probe_box,
                                                 int probe_res = 17, double tol = 1e-6,
                                                 double exclusion_radius = 0.0) {
  std::vector<FamilyMember> out;
  for (auto& c : candidates) {
    std::vector<int> res(probe_box.dim(), probe_res);
    ScalarField f = ScalarField::sample(probe_box, res,
                                        [&](const Vector& x) { return c(x); });
    const double excl =
        exclusion_radius > 0 ? exclusion_radius : 2.5 * f.max_spacing();
    FamilyMember member;
    member.probe = kconvexity_report(f, k, tol, c.singular_points, excl);
    member.accepted = member.probe.fraction == 1.0;
    member.fn = std::move(c);
    out.push_back(std::move(member));
  }
  return out;
}

}  // namespace khess
