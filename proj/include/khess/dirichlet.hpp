// Dirichlet solvers for F_k[u] = psi: the exact radial path (any n <= 8) and
// a pseudo-time grid path for n = 2, k in {1, 2}, plus measure-data solves by
// atom mollification and the comparison-principle checker.
#pragma once

#include "khess/measures.hpp"

namespace khess {

struct RadialSolveReport {
  RadialProfile profile;
  double residual = 0.0;           // sup |F_k - psi| over the interior mesh
  double residual_relative = 0.0;  // same, scaled by the local operator magnitude
  double convexity_fraction = 0.0;
  double worst_margin = 0.0;
};

// Relative-margin k-convexity over the radial eigenvalue tuple.
inline void radial_convexity(const RadialProfile& p, double tol, double& fraction,
                             double& worst) {
  std::size_t good = 0, checked = 0;
  worst = std::numeric_limits<double>::infinity();
  const bool exact = p.d2u.size() == p.r.size();
  for (std::size_t i = 2; i + 2 < p.r.size(); ++i) {
    Vector lam(p.n, p.du[i] / p.r[i]);
    lam[0] = exact ? p.d2u[i] : radial_second_derivative(p, i);
    double scale = 1.0;
    for (double l : lam) scale = std::max(scale, std::fabs(l));
    const double margin = gamma_membership(lam, p.k).margin / scale;
    worst = std::min(worst, margin);
    ++checked;
    if (margin >= -tol) ++good;
  }
  fraction = checked ? static_cast<double>(good) / checked : 0.0;
}

inline RadialSolveReport solve_radial(int n, int k, const std::function<double(double)>& psi,
                                      double atom_mass, double R, double boundary_value) {
  RadialSolveReport rep;
  rep.profile = radial_dirichlet_solve(n, k, psi, atom_mass, R, boundary_value);
  const RadialProfile& p = rep.profile;
  for (std::size_t i = 2; i + 2 < p.r.size(); ++i) {
    if (p.r[i] < 0.02 * R) continue;  // FD of singular profiles is meaningless near 0
    const double err = std::fabs(radial_fk(p, i) - psi(p.r[i]));
    rep.residual = std::max(rep.residual, err);
    const double lam = std::max(std::fabs(radial_second_derivative(p, i)),
                                std::fabs(p.du[i] / p.r[i]));
    const double scale = binomial(n, k) * std::pow(std::max(lam, 1.0), k);
    rep.residual_relative = std::max(rep.residual_relative, err / scale);
  }
  radial_convexity(p, 1e-6, rep.convexity_fraction, rep.worst_margin);
  return rep;
}

struct GridDirichletSpec {
  Box box;
  int res = 65;
  int k = 1;
  std::function<double(const Vector&)> psi;  // >= 0
  std::function<double(const Vector&)> phi;  // boundary data
  double tol = 1e-10;                        // target sup residual
  long max_iters = 400000;                   // per refinement level
};

struct GridSolveReport {
  ScalarField u;
  double residual = 0.0;
  long iterations = 0;
  bool converged = false;
  KConvexityReport convexity;
  Vector residual_history;  // sampled every 100 iterations at the finest level
};

namespace detail {

// S_k^{1/k} after the minimal diagonal shift into Gamma_k, n = 2 closed form.
inline double projected_root_2d(double a, double b, double c, int k) {
  const double mean = 0.5 * (a + b);
  const double dev = std::sqrt(0.25 * (a - b) * (a - b) + c * c);
  if (k == 1) {
    const double s = 2.0 * mean;
    return s > 0.0 ? s : 0.0;
  }
  const double l1 = mean - dev;
  if (l1 <= 0.0) return 0.0;
  return std::sqrt(l1 * (mean + dev));
}

inline double bilinear(const ScalarField& f, const Vector& x) {
  const int n = f.dim();
  MultiIndex base(n);
  Vector t(n);
  for (int a = 0; a < n; ++a) {
    double s = (x[a] - f.box().lo[a]) / f.spacing(a);
    s = std::clamp(s, 0.0, static_cast<double>(f.resolution()[a] - 1));
    base[a] = std::min(static_cast<int>(s), f.resolution()[a] - 2);
    t[a] = s - base[a];
  }
  double acc = 0.0;
  for (int corner = 0; corner < (1 << n); ++corner) {
    MultiIndex idx = base;
    double w = 1.0;
    for (int a = 0; a < n; ++a) {
      if (corner & (1 << a)) {
        idx[a] += 1;
        w *= t[a];
      } else {
        w *= 1.0 - t[a];
      }
    }
    acc += w * f.at(idx);
  }
  return acc;
}

// One pseudo-time level: u <- u + tau (S_k^{1/k}(lambda_Gamma(D^2 u)) - psi^{1/k}),
// boundary pinned, Jacobi-style update with a step-halving safeguard.
inline void pseudo_time_level(ScalarField& u, const ScalarField& psi_root, int k, double tol,
                              long max_iters, long& iterations, double& residual,
                              Vector* history) {
  const int nx = u.resolution()[0], ny = u.resolution()[1];
  const double dx = u.spacing(0), dy = u.spacing(1);
  const std::size_t sx = u.stride(0), sy = u.stride(1);
  Vector next = u.values();
  Vector best = u.values();
  double best_res = std::numeric_limits<double>::infinity();
  double c = 0.2;
  for (long it = 0; it < max_iters; ++it) {
    const double tau = c * std::min(dx, dy) * std::min(dx, dy);
    double sup = 0.0;
    for (int i = 1; i + 1 < nx; ++i)
      for (int j = 1; j + 1 < ny; ++j) {
        const std::size_t f = i * sx + j * sy;
        const double a = (u[f + sx] - 2.0 * u[f] + u[f - sx]) / (dx * dx);
        const double b = (u[f + sy] - 2.0 * u[f] + u[f - sy]) / (dy * dy);
        const double cc = (u[f + sx + sy] - u[f + sx - sy] - u[f - sx + sy] +
                           u[f - sx - sy]) /
                          (4.0 * dx * dy);
        const double root = projected_root_2d(a, b, cc, k);
        const double pr = psi_root[f];
        next[f] = u[f] + tau * (root - pr);
        double sk = root;
        if (k == 2) sk *= sk;
        double target = pr;
        if (k == 2) target *= target;
        sup = std::max(sup, std::fabs(sk - target));
      }
    ++iterations;
    residual = sup;
    if (history && it % 100 == 0) history->push_back(sup);
    if (sup < best_res) {
      if (sup < 0.5 * best_res || it % 200 == 0) best = u.values();
      best_res = sup;
    } else if (sup > 10.0 * best_res + 1e-14) {
      // diverging step size: restore the best iterate and shrink
      u.values() = best;
      next = best;
      c *= 0.5;
      if (c < 1e-4) break;
      continue;
    }
    std::swap(u.values(), next);
    if (sup < tol) break;
  }
}

}  // namespace detail

// Cascadic pseudo-time solve on [box]^2 grids: coarse-to-fine initialization,
// bilinear prolongation, boundary values pinned from phi.
inline GridSolveReport solve_grid(const GridDirichletSpec& spec) {
  if (spec.box.dim() != 2) throw std::domain_error("solve_grid: grid path is n = 2 only");
  if (spec.k != 1 && spec.k != 2) throw std::domain_error("solve_grid: k must be 1 or 2");

  std::vector<int> levels{spec.res};
  while ((levels.back() - 1) % 2 == 0 && (levels.back() - 1) / 2 + 1 >= 17)
    levels.push_back((levels.back() - 1) / 2 + 1);
  std::reverse(levels.begin(), levels.end());

  GridSolveReport rep;
  ScalarField u;
  for (std::size_t lv = 0; lv < levels.size(); ++lv) {
    const int r = levels[lv];
    ScalarField fine(spec.box, {r, r});
    if (lv == 0) {
      fine.for_each([&](const MultiIndex& idx, std::size_t f) {
        fine[f] = fine.interior(idx) ? 0.0 : spec.phi(fine.coords(idx));
      });
    } else {
      fine.for_each([&](const MultiIndex& idx, std::size_t f) {
        fine[f] = fine.interior(idx) ? detail::bilinear(u, fine.coords(idx))
                                     : spec.phi(fine.coords(idx));
      });
    }
    ScalarField psi_root(spec.box, {r, r});
    psi_root.for_each([&](const MultiIndex& idx, std::size_t f) {
      const double v = spec.psi(psi_root.coords(idx));
      if (v < 0) throw std::domain_error("solve_grid: psi must be >= 0");
      psi_root[f] = spec.k == 2 ? std::sqrt(v) : v;
    });
    const bool finest = lv + 1 == levels.size();
    detail::pseudo_time_level(fine, psi_root, spec.k, spec.tol, spec.max_iters,
                              rep.iterations, rep.residual,
                              finest ? &rep.residual_history : nullptr);
    u = std::move(fine);
  }
  rep.converged = rep.residual < spec.tol;
  rep.convexity = kconvexity_report(u, spec.k, 1e-6);
  rep.u = std::move(u);
  return rep;
}

// Measure-data solve, radial path: the atom is replaced by mollified bumps of
// equal mass at shrinking radii h_m = h0 2^{-m}; reports the L^1-Cauchy
// behaviour of the solution sequence and returns the finest member.
struct RadialMeasureDataReport {
  std::vector<RadialProfile> sequence;
  Vector h_schedule;
  Vector l1_steps;  // integral |u_m - u_{m+1}| over the ball
  bool cauchy = false;
  RadialSolveReport finest;
};

inline double radial_l1_distance(const RadialProfile& a, const RadialProfile& b) {
  const double sigma = sphere_area(a.n);
  double total = 0.0;
  for (std::size_t i = 1; i < a.r.size(); ++i) {
    const double fa = std::fabs(a.u[i - 1] - b.value_at(a.r[i - 1]));
    const double fb = std::fabs(a.u[i] - b.value_at(a.r[i]));
    total += 0.5 * (a.r[i] - a.r[i - 1]) *
             (fa * std::pow(a.r[i - 1], a.n - 1) + fb * std::pow(a.r[i], a.n - 1));
  }
  return sigma * total;
}

inline RadialMeasureDataReport solve_measure_data_radial(
    int n, int k, const std::function<double(double)>& psi, double atom, double R,
    double boundary_value, double h0 = 0.0, int steps = 4) {
  if (h0 <= 0.0) h0 = 0.12 * R;
  RadialMeasureDataReport rep;
  for (int m = 0; m < steps; ++m) {
    const double h = h0 * std::pow(2.0, -m);
    rep.h_schedule.push_back(h);
    MollifierKernel kernel(n, h);
    auto psi_m = [&psi, atom, kernel](double r) {
      return psi(r) + atom * kernel.density(r);
    };
    rep.sequence.push_back(radial_dirichlet_solve(n, k, psi_m, 0.0, R, boundary_value));
  }
  for (std::size_t m = 0; m + 1 < rep.sequence.size(); ++m)
    rep.l1_steps.push_back(radial_l1_distance(rep.sequence[m], rep.sequence[m + 1]));
  rep.cauchy = true;
  for (std::size_t m = 1; m < rep.l1_steps.size(); ++m)
    if (rep.l1_steps[m] > rep.l1_steps[m - 1] * (1.0 + 1e-9)) rep.cauchy = false;
  rep.finest.profile = rep.sequence.back();
  radial_convexity(rep.finest.profile, 1e-6, rep.finest.convexity_fraction,
                   rep.finest.worst_margin);
  return rep;
}

// Measure-data solve, grid path (n = 2): atoms become mollifier-profile bumps
// added to psi, sharpened over the same geometric schedule.
struct GridMeasureDataReport {
  std::vector<GridSolveReport> sequence;
  Vector h_schedule;
  Vector l1_steps;
  bool cauchy = false;
};

inline GridMeasureDataReport solve_measure_data_grid(
    GridDirichletSpec spec, const std::vector<std::pair<Vector, double>>& atoms,
    int steps = 4) {
  GridMeasureDataReport rep;
  const double spacing = spec.box.min_width() / (spec.res - 1);
  const auto base_psi = spec.psi;
  for (int m = 0; m < steps; ++m) {
    const double h = 16.0 * spacing * std::pow(2.0, -m);
    rep.h_schedule.push_back(h);
    MollifierKernel kernel(2, h);
    spec.psi = [base_psi, atoms, kernel](const Vector& x) {
      double v = base_psi(x);
      for (const auto& [c, mass] : atoms) v += mass * kernel.density(norm(x - c));
      return v;
    };
    rep.sequence.push_back(solve_grid(spec));
  }
  for (std::size_t m = 0; m + 1 < rep.sequence.size(); ++m) {
    const ScalarField& a = rep.sequence[m].u;
    const ScalarField& b = rep.sequence[m + 1].u;
    double l1 = 0.0;
    a.for_each([&](const MultiIndex&, std::size_t f) { l1 += std::fabs(a[f] - b[f]); });
    rep.l1_steps.push_back(l1 * a.cell_volume());
  }
  rep.cauchy = true;
  for (std::size_t m = 1; m < rep.l1_steps.size(); ++m)
    if (rep.l1_steps[m] > rep.l1_steps[m - 1] * (1.0 + 1e-9)) rep.cauchy = false;
  return rep;
}

// Comparison-principle check on a sub-box of a shared grid: v must satisfy
// F_k[v] <= tol there; if u <= v + tol on the sub-box boundary ring then u <=
// v + tol inside, else the violating cells are returned.
struct ComparisonReport {
  bool precondition_ok = false;
  bool ordered_on_boundary = false;
  bool ordered = false;
  std::vector<MultiIndex> violations;
};

inline ComparisonReport comparison_check(const ScalarField& u, const ScalarField& v,
                                         const Box& sub, int k, double tol = 1e-8) {
  if (u.resolution() != v.resolution()) throw std::domain_error("comparison_check: grid mismatch");
  const int n = u.dim();
  MultiIndex lo(n), hi(n);
  for (int a = 0; a < n; ++a) {
    lo[a] = std::max(1, static_cast<int>(std::ceil((sub.lo[a] - u.box().lo[a]) / u.spacing(a) - 1e-9)));
    hi[a] = std::min(u.resolution()[a] - 2,
                     static_cast<int>(std::floor((sub.hi[a] - u.box().lo[a]) / u.spacing(a) + 1e-9)));
    if (lo[a] >= hi[a]) throw std::domain_error("comparison_check: empty sub-box");
  }
  ComparisonReport rep;
  rep.precondition_ok = true;
  rep.ordered_on_boundary = true;
  rep.ordered = true;
  MultiIndex idx = lo;
  while (true) {
    bool on_edge = false;
    for (int a = 0; a < n; ++a)
      if (idx[a] == lo[a] || idx[a] == hi[a]) on_edge = true;
    if (on_edge) {
      if (u.at(idx) > v.at(idx) + tol) rep.ordered_on_boundary = false;
    } else {
      if (elem_sym(derivatives_at(v, idx).eigenvalues, k) > tol) rep.precondition_ok = false;
      if (u.at(idx) > v.at(idx) + tol) {
        rep.ordered = false;
        rep.violations.push_back(idx);
      }
    }
    int a = n - 1;
    for (; a >= 0; --a) {
      if (++idx[a] <= hi[a]) break;
      idx[a] = lo[a];
    }
    if (a < 0) break;
  }
  return rep;
}

}  // namespace khess
