// Finite-difference stencils and pointwise operator evaluation on uniform
// grids: F_k, the p-k-Hessian, mollification, sup-convolution, weighted
// norms and k-convexity reports.
#pragma once

#include <functional>

#include "khess/cones.hpp"
#include "khess/grid.hpp"

namespace khess {

struct StencilDerivatives {
  Vector gradient;
  Matrix hessian;      // symmetrized cross differences
  Vector eigenvalues;  // ascending
};

// Centered second-order stencils at an interior grid point.
inline StencilDerivatives derivatives_at(const ScalarField& u, const MultiIndex& p) {
  const int n = u.dim();
  if (!u.interior(p)) throw std::domain_error("derivatives_at: boundary point");
  const std::size_t f = u.flat(p);
  StencilDerivatives d;
  d.gradient.resize(n);
  d.hessian = Matrix(n);
  for (int a = 0; a < n; ++a) {
    const double ha = u.spacing(a);
    const std::size_t sa = u.stride(a);
    d.gradient[a] = (u[f + sa] - u[f - sa]) / (2.0 * ha);
    d.hessian(a, a) = (u[f + sa] - 2.0 * u[f] + u[f - sa]) / (ha * ha);
    for (int b = a + 1; b < n; ++b) {
      const double hb = u.spacing(b);
      const std::size_t sb = u.stride(b);
      const double cross =
          (u[f + sa + sb] - u[f + sa - sb] - u[f - sa + sb] + u[f - sa - sb]) / (4.0 * ha * hb);
      d.hessian(a, b) = cross;
      d.hessian(b, a) = cross;
    }
  }
  d.eigenvalues = symmetric_eigenvalues(d.hessian);
  return d;
}

// F_k[u] on interior points; the boundary ring carries NaN.
inline ScalarField hessian_operator(const ScalarField& u, int k) {
  const int n = u.dim();
  if (k < 1 || k > n) throw std::domain_error("hessian_operator: k out of range");
  ScalarField out(u.box(), u.resolution());
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    if (!u.interior(idx)) {
      out[f] = std::numeric_limits<double>::quiet_NaN();
      return;
    }
    out[f] = elem_sym(derivatives_at(u, idx).eigenvalues, k);
  });
  return out;
}

// [M]_l with M = |g|^{p-2} (I + (p-2) g g^T / |g|^2) H.
// Returns 0 at |g| = 0 for p > 2 (the |Du|^{l(p-2)} prefactor vanishes there).
inline double pk_hessian_pointwise(const Vector& g, const Matrix& h, int l, double p) {
  const int n = h.size();
  if (p < 2.0) throw std::domain_error("pk_hessian_pointwise: p must be >= 2");
  if (l < 1 || l > n) throw std::domain_error("pk_hessian_pointwise: l out of range");
  if (p == 2.0) return minor_sum(h, l);
  const double gn = norm(g);
  if (gn == 0.0) return 0.0;
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double row = (i == j ? 1.0 : 0.0) + (p - 2.0) * g[i] * g[j] / (gn * gn);
      m(i, j) = row;
    }
  m = m * h;
  const double pref = std::pow(gn, p - 2.0);
  Matrix scaled(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled(i, j) = pref * m(i, j);
  return minor_sum(scaled, l);
}

// Compactly supported spherically symmetric bump, unit integral.
class MollifierKernel {
 public:
  MollifierKernel(int dim, double h) : dim_(dim), h_(h) {
    if (h <= 0) throw std::domain_error("MollifierKernel: h must be positive");
    // normalization by composite Simpson quadrature of the radial profile
    const int m = 4096;
    double integral = 0.0;
    const double dr = 1.0 / m;
    for (int i = 0; i < m; ++i) {
      const double a = i * dr, b = (i + 1) * dr, c = 0.5 * (a + b);
      auto f = [&](double s) { return raw(s) * std::pow(s, dim_ - 1); };
      integral += (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
    }
    norm_const_ = 1.0 / (sphere_area(dim_) * integral);
  }

  int dim() const { return dim_; }
  double radius() const { return h_; }

  static double raw(double s) { return s < 1.0 ? std::exp(-1.0 / (1.0 - s * s)) : 0.0; }

  // rho(x) for |x| = r; integrates to 1 over R^n
  double density(double r) const { return norm_const_ / std::pow(h_, dim_) * raw(r / h_); }

  // numerical check of the unit-integral invariant
  double quadrature_mass(int m = 8192) const {
    double integral = 0.0;
    const double dr = h_ / m;
    for (int i = 0; i < m; ++i) {
      const double a = i * dr, b = (i + 1) * dr, c = 0.5 * (a + b);
      auto f = [&](double s) { return density(s) * std::pow(s, dim_ - 1); };
      integral += (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
    }
    return sphere_area(dim_) * integral;
  }

 private:
  int dim_;
  double h_;
  double norm_const_;
};

// Convolution with the kernel on the h-shrunken box; discrete weights are
// renormalized so constants (and by symmetry, linear functions) are exact.
inline ScalarField mollify(const ScalarField& u, const MollifierKernel& kernel) {
  const int n = u.dim();
  const double h = kernel.radius();
  if (2.0 * h >= u.box().min_width())
    throw std::domain_error("mollify: kernel radius too large for the domain");
  std::vector<int> margin(n);
  for (int a = 0; a < n; ++a) {
    margin[a] = static_cast<int>(std::ceil(h / u.spacing(a)));
    if (2 * margin[a] >= u.resolution()[a] - 4)
      throw std::domain_error("mollify: kernel radius too large for the resolution");
  }

  // offset stencil with weights
  std::vector<std::pair<std::ptrdiff_t, double>> stencil;
  {
    MultiIndex off(n, 0);
    std::vector<int> lo(n), hi(n);
    for (int a = 0; a < n; ++a) {
      lo[a] = -margin[a];
      hi[a] = margin[a];
      off[a] = lo[a];
    }
    double wsum = 0.0;
    while (true) {
      double r2 = 0.0;
      std::ptrdiff_t shift = 0;
      for (int a = 0; a < n; ++a) {
        const double d = off[a] * u.spacing(a);
        r2 += d * d;
        shift += static_cast<std::ptrdiff_t>(off[a]) * static_cast<std::ptrdiff_t>(u.stride(a));
      }
      const double w = MollifierKernel::raw(std::sqrt(r2) / h);
      if (w > 0.0) {
        stencil.emplace_back(shift, w);
        wsum += w;
      }
      int a = n - 1;
      for (; a >= 0; --a) {
        if (++off[a] <= hi[a]) break;
        off[a] = lo[a];
      }
      if (a < 0) break;
    }
    for (auto& [s, w] : stencil) w /= wsum;
  }

  Box shrunk;
  std::vector<int> res(n);
  shrunk.lo.resize(n);
  shrunk.hi.resize(n);
  for (int a = 0; a < n; ++a) {
    shrunk.lo[a] = u.box().lo[a] + margin[a] * u.spacing(a);
    shrunk.hi[a] = u.box().hi[a] - margin[a] * u.spacing(a);
    res[a] = u.resolution()[a] - 2 * margin[a];
  }
  ScalarField out(shrunk, res);
  out.for_each([&](const MultiIndex& idx, std::size_t f) {
    MultiIndex src = idx;
    for (int a = 0; a < n; ++a) src[a] += margin[a];
    const std::size_t base = u.flat(src);
    double acc = 0.0;
    for (const auto& [shift, w] : stencil) acc += w * u[base + shift];
    out[f] = acc;
  });
  return out;
}

struct SupConvolutionResult {
  double value;
  Vector argmax;
  bool boundary_warning;  // maximum attained on the search-box boundary
};

// u_eps^+(x) = sup_y u(y) - |x-y|^2 / (2 eps), grid search plus local zoom.
inline SupConvolutionResult sup_convolution(const std::function<double(const Vector&)>& u,
                                            double eps, const Vector& x, const Box& search) {
  if (eps <= 0) throw std::domain_error("sup_convolution: eps must be positive");
  if (!search.contains(x)) throw std::domain_error("sup_convolution: x outside search box");
  const int n = search.dim();
  auto objective = [&](const Vector& y) {
    double d2 = 0.0;
    for (int a = 0; a < n; ++a) d2 += (x[a] - y[a]) * (x[a] - y[a]);
    return u(y) - d2 / (2.0 * eps);
  };

  Box window = search;
  Vector best_y = x;
  double best = objective(x);
  const int res = 33;
  bool on_outer_boundary = false;
  for (int level = 0; level < 5; ++level) {
    MultiIndex idx(n, 0);
    const std::size_t total = static_cast<std::size_t>(std::pow(res, n));
    for (std::size_t c = 0; c < total; ++c) {
      Vector y(n);
      for (int a = 0; a < n; ++a)
        y[a] = window.lo[a] + idx[a] * window.width(a) / (res - 1);
      const double v = objective(y);
      if (v > best) {
        best = v;
        best_y = y;
        on_outer_boundary = false;
        for (int a = 0; a < n; ++a)
          if (std::fabs(y[a] - search.lo[a]) < 1e-12 || std::fabs(y[a] - search.hi[a]) < 1e-12)
            on_outer_boundary = true;
      }
      for (int a = n - 1; a >= 0; --a) {
        if (++idx[a] < res) break;
        idx[a] = 0;
      }
    }
    // zoom around the best point
    Box next;
    next.lo.resize(n);
    next.hi.resize(n);
    for (int a = 0; a < n; ++a) {
      const double half = window.width(a) / 8.0;
      next.lo[a] = std::max(search.lo[a], best_y[a] - half);
      next.hi[a] = std::min(search.hi[a], best_y[a] + half);
    }
    window = next;
  }
  return {best, best_y, on_outer_boundary};
}

struct WeightedNormReport {
  double sup_norm = 0.0;         // |u|_0^{(sigma)}
  double holder_seminorm = 0.0;  // [u]_{0,alpha}^{(sigma)}
  double sigma = 0.0;
  double alpha = 0.0;
};

// Weighted interior norms on the field's box. The Holder seminorm is a max
// over a deterministic stratified pair sample: 32 dyadic distance bins,
// capped by the pair budget, fixed seed.
inline WeightedNormReport weighted_norms(const ScalarField& u, double sigma, double alpha,
                                         int pair_budget = 1 << 16,
                                         std::uint64_t seed = 9001) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("weighted_norms: alpha in (0,1]");
  if (sigma < 0) throw std::domain_error("weighted_norms: sigma must be >= 0");
  const int n = u.dim();
  const Box& box = u.box();
  WeightedNormReport rep;
  rep.sigma = sigma;
  rep.alpha = alpha;

  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const double v = u[f];
    if (!std::isfinite(v)) return;
    const double d = box.boundary_distance(u.coords(idx));
    rep.sup_norm = std::max(rep.sup_norm, std::pow(d, sigma) * std::fabs(v));
  });

  double diam2 = 0.0;
  for (int a = 0; a < n; ++a) diam2 += box.width(a) * box.width(a);
  const double diam = std::sqrt(diam2);

  Sampler rng(seed);
  const int bins = 32;
  const int per_bin = std::max(1, pair_budget / bins);
  const std::size_t total = u.size();
  for (int b = 0; b < bins; ++b) {
    const double dmax = diam * std::pow(2.0, -b);
    for (int t = 0; t < per_bin; ++t) {
      const std::size_t fi =
          static_cast<std::size_t>(rng.uniform(0.0, 1.0) * total) % total;
      MultiIndex pi = u.unflatten(fi);
      MultiIndex pj = pi;
      bool ok = true;
      for (int a = 0; a < n; ++a) {
        const int span = std::max(1, static_cast<int>(dmax / u.spacing(a)));
        pj[a] += static_cast<int>(rng.uniform(-double(span), double(span) + 1.0));
        if (pj[a] < 0 || pj[a] >= u.resolution()[a]) ok = false;
      }
      if (!ok || pj == pi) continue;
      const double ui = u.at(pi), uj = u.at(pj);
      if (!std::isfinite(ui) || !std::isfinite(uj)) continue;
      const Vector xi = u.coords(pi), xj = u.coords(pj);
      const double dist = norm(xi - xj);
      if (dist <= 0 || dist > dmax) continue;
      const double dxy = std::min(box.boundary_distance(xi), box.boundary_distance(xj));
      const double q =
          std::pow(dxy, sigma + alpha) * std::fabs(ui - uj) / std::pow(dist, alpha);
      rep.holder_seminorm = std::max(rep.holder_seminorm, q);
    }
  }
  return rep;
}

struct KConvexityReport {
  double fraction = 0.0;     // interior points with lambda(D^2 u) in Gamma_k at tol
  double worst_margin = 0.0;
  std::size_t checked = 0;
};

inline KConvexityReport kconvexity_report(const ScalarField& u, int k, double tol = 1e-8,
                                          const std::vector<Vector>& exclusions = {},
                                          double exclusion_radius = 0.0) {
  const int n = u.dim();
  if (k < 1 || k > n) throw std::domain_error("kconvexity_report: k out of range");
  KConvexityReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  std::size_t good = 0;
  u.for_each([&](const MultiIndex& idx, std::size_t) {
    if (!u.interior(idx)) return;
    const Vector x = u.coords(idx);
    for (const Vector& c : exclusions)
      if (norm(x - c) <= exclusion_radius) return;
    const auto d = derivatives_at(u, idx);
    const double margin = gamma_membership(d.eigenvalues, k).margin;
    ++rep.checked;
    rep.worst_margin = std::min(rep.worst_margin, margin);
    if (margin >= -tol) ++good;
  });
  rep.fraction = rep.checked ? static_cast<double>(good) / rep.checked : 0.0;
  if (rep.checked == 0) rep.worst_margin = 0.0;
  return rep;
}

// Quadrature of int u * (a^{ij} D_ij eta) over the grid; for k-convex u and
// lambda(A) in the dual cone this is >= -tolerance (distributional test).
inline double dual_operator_test(const ScalarField& u, const Matrix& a, const ScalarField& eta) {
  const int n = u.dim();
  if (eta.size() != u.size()) throw std::domain_error("dual_operator_test: grid mismatch");
  // eta must vanish on the two outermost rings
  bool support_ok = true;
  eta.for_each([&](const MultiIndex& idx, std::size_t f) {
    if (!eta.interior(idx, 2) && eta[f] != 0.0) support_ok = false;
  });
  if (!support_ok) throw std::domain_error("dual_operator_test: eta support touches boundary");
  double total = 0.0;
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    if (!u.interior(idx)) return;
    const auto d = derivatives_at(eta, idx);
    double lv = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lv += a(i, j) * d.hessian(i, j);
    if (lv != 0.0 && std::isfinite(u[f])) total += u[f] * lv;
  });
  return total * u.cell_volume();
}

}  // namespace khess
