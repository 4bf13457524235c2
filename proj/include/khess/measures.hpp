// Discrete approximation of the k-Hessian measure of a function: mollify,
// apply the operator, weight by cell volume. Includes test-function pairing,
// atom-mass extraction with Richardson extrapolation, and the weak-continuity
// experiment harness.
#pragma once

#include "khess/analytic.hpp"

namespace khess {

// Cell masses F_k[u_h](p) * cell volume on the mollified grid; the boundary
// ring carries zero mass.
struct DiscreteMeasure {
  ScalarField cell_mass;
  int k = 0;
  double h = 0.0;
  double total = 0.0;
  double min_cell = 0.0;

  double ball_mass(const Vector& center, double radius) const {
    double m = 0.0;
    cell_mass.for_each([&](const MultiIndex& idx, std::size_t f) {
      if (norm(cell_mass.coords(idx) - center) <= radius) m += cell_mass[f];
    });
    return m;
  }
};

// h must stay below the support margin of every test function paired with
// the result; tol_scale relaxes the nonnegativity integrity check for
// deliberately singular inputs.
inline DiscreteMeasure measure_approx(const ScalarField& u, int k, double h,
                                      double tol_scale = 1e-8) {
  MollifierKernel kernel(u.dim(), h);
  ScalarField smooth = mollify(u, kernel);
  ScalarField fk = hessian_operator(smooth, k);
  DiscreteMeasure mu;
  mu.k = k;
  mu.h = h;
  mu.cell_mass = ScalarField(fk.box(), fk.resolution());
  const double vol = fk.cell_volume();
  mu.min_cell = 0.0;
  fk.for_each([&](const MultiIndex& idx, std::size_t f) {
    const double v = fk.interior(idx) && std::isfinite(fk[f]) ? fk[f] * vol : 0.0;
    mu.cell_mass[f] = v;
    mu.total += v;
    mu.min_cell = std::min(mu.min_cell, v);
  });
  if (mu.min_cell < -tol_scale * (std::fabs(mu.total) + 1.0))
    throw std::runtime_error(
        "measure_approx: negative cell mass (non-k-convex input or too-coarse grid)");
  return mu;
}

inline DiscreteMeasure measure_approx(const AnalyticFunction& fn, const Box& box,
                                      const std::vector<int>& res, int k, double h,
                                      double tol_scale = 1e-8) {
  ScalarField u = ScalarField::sample(box, res, [&](const Vector& x) { return fn(x); });
  return measure_approx(u, k, h, tol_scale);
}

// Continuous test function, compactly supported strictly inside the domain.
struct TestFunction {
  std::function<double(const Vector&)> eval;
  std::string name;
};

// Radial cos^2 bump: 1 at the center, 0 outside |x - center| = radius, C^1.
inline TestFunction bump_test_function(const Vector& center, double radius) {
  TestFunction eta;
  eta.eval = [center, radius](const Vector& x) {
    const double r = norm(x - center) / radius;
    if (r >= 1.0) return 0.0;
    const double c = std::cos(0.5 * M_PI * r);
    return c * c;
  };
  eta.name = "bump(r=" + std::to_string(radius) + ")";
  return eta;
}

// Product of one-dimensional cos^2 windows supported on the given box.
inline TestFunction cosine_window(const Box& support) {
  TestFunction eta;
  eta.eval = [support](const Vector& x) {
    double v = 1.0;
    for (int a = 0; a < support.dim(); ++a) {
      const double c = 0.5 * (support.lo[a] + support.hi[a]);
      const double t = 2.0 * (x[a] - c) / support.width(a);
      if (std::fabs(t) >= 1.0) return 0.0;
      const double w = std::cos(0.5 * M_PI * t);
      v *= w * w;
    }
    return v;
  };
  eta.name = "cosine_window";
  return eta;
}

// Sum of eta(cell center) * cell mass; eta must vanish on the boundary ring.
inline double weak_pairing(const DiscreteMeasure& mu, const TestFunction& eta) {
  double total = 0.0;
  bool support_ok = true;
  mu.cell_mass.for_each([&](const MultiIndex& idx, std::size_t f) {
    const double e = eta.eval(mu.cell_mass.coords(idx));
    if (!mu.cell_mass.interior(idx) && e != 0.0) support_ok = false;
    total += e * mu.cell_mass[f];
  });
  if (!support_ok)
    throw std::domain_error("weak_pairing: test function support touches the boundary");
  return total;
}

struct AtomMassReport {
  Vector h_schedule;
  Vector masses;      // ball totals per h
  double extrapolated = 0.0;
  double fitted_order = 0.0;
  bool conclusive = true;  // false on a non-monotone mass sequence
};

namespace detail {
// Odd number of cells keeps the singular point halfway between nodes.
inline ScalarField staggered_sample(const AnalyticFunction& fn, int n, const Vector& center,
                                    double half, double spacing) {
  const int cells = 2 * static_cast<int>(std::ceil(half / spacing)) + 1;
  Box box;
  box.lo.resize(n);
  box.hi.resize(n);
  for (int a = 0; a < n; ++a) {
    box.lo[a] = center[a] - 0.5 * cells * spacing;
    box.hi[a] = center[a] + 0.5 * cells * spacing;
  }
  std::vector<int> res(n, cells + 1);
  return ScalarField::sample(box, res, [&](const Vector& x) { return fn(x); });
}
}  // namespace detail

// Mass of the measure atom at `center`: ball totals of measure_approx over a
// geometric h schedule, Richardson-extrapolated with the convergence order
// fitted from the data. The grid is staggered so the singular point falls
// halfway between nodes. tie = 0 runs every h on one grid of the given
// spacing (right when the h-error dominates, e.g. k = 1 where ball totals
// telescope); tie > 0 rebuilds the grid with spacing = h/tie per step (right
// when the discretization error at scale spacing/h dominates).
inline AtomMassReport atom_mass(const AnalyticFunction& fn, int n, int k,
                                const Vector& center, double ball_radius,
                                double spacing, Vector h_schedule = {}, double tie = 0.0) {
  if (h_schedule.empty()) {
    if (tie > 0.0)
      h_schedule = {8 * spacing, 4 * spacing, 2 * spacing};
    else
      h_schedule = {8 * spacing, 4 * spacing, 2 * spacing, 1 * spacing, 0.5 * spacing};
  }
  const double hmax = *std::max_element(h_schedule.begin(), h_schedule.end());

  AtomMassReport rep;
  rep.h_schedule = h_schedule;
  const double inf = std::numeric_limits<double>::infinity();
  if (tie > 0.0) {
    for (double h : h_schedule) {
      const double dx = h / tie;
      ScalarField u = detail::staggered_sample(fn, n, center, ball_radius + h + 4 * dx, dx);
      rep.masses.push_back(measure_approx(u, k, h, inf).ball_mass(center, ball_radius));
    }
  } else {
    ScalarField u =
        detail::staggered_sample(fn, n, center, ball_radius + hmax + 4 * spacing, spacing);
    for (double h : h_schedule)
      rep.masses.push_back(measure_approx(u, k, h, inf).ball_mass(center, ball_radius));
  }

  const std::size_t m = rep.masses.size();
  if (m < 3) {
    rep.extrapolated = rep.masses.back();
    return rep;
  }
  const double d1 = rep.masses[m - 2] - rep.masses[m - 3];
  const double d2 = rep.masses[m - 1] - rep.masses[m - 2];
  const double scale = std::fabs(rep.masses.back()) + 1.0;
  if (std::fabs(d2) < 1e-10 * scale) {
    rep.extrapolated = rep.masses.back();
    rep.fitted_order = 0.0;
    return rep;
  }
  if (d1 * d2 < 0.0 || std::fabs(d2) > std::fabs(d1)) {
    // differences not settling geometrically; report the finest value as-is
    rep.conclusive = std::fabs(d2) < 1e-3 * scale;
    rep.extrapolated = rep.masses.back();
    rep.fitted_order = 0.0;
    return rep;
  }
  const double ratio = h_schedule[m - 1] / h_schedule[m - 2];
  rep.fitted_order = std::log(std::fabs(d2) / std::fabs(d1)) / std::log(ratio);
  const double q = std::pow(ratio, rep.fitted_order);
  rep.extrapolated = rep.masses[m - 1] + d2 * q / (1.0 - q);
  return rep;
}

// Pairing of a radial measure with a radial test function via its mass
// function M(r) (Stieltjes sum over the mesh), plus the atom at the origin.
inline double radial_stieltjes_pairing(const RadialProfile& p,
                                       const std::function<double(double)>& eta,
                                       double r_max) {
  double total = eta(0.0) * radial_measure_mass(p, p.r.front());
  double prev = radial_measure_mass(p, p.r.front());
  for (std::size_t i = 1; i < p.r.size() && p.r[i] <= r_max; ++i) {
    const double cur = radial_measure_mass(p, p.r[i]);
    total += eta(0.5 * (p.r[i - 1] + p.r[i])) * (cur - prev);
    prev = cur;
  }
  return total;
}

enum class ConvergenceVerdict { Converged, Diverged, Inconclusive };

struct ConvergenceReport {
  Vector schedule;                        // sequence index or h per step
  std::vector<Vector> pairings;           // [test function][step]
  std::vector<Vector> discrepancies;      // [test function][step], vs the limit
  Vector limit_pairings;                  // per test function
  Vector l1_distances;                    // per step
  double trend = 0.0;                     // fitted geometric rate of the discrepancy
  ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;

  // monotone decrease check with a bounded number of inversions
  int inversions(std::size_t which) const {
    int inv = 0;
    const Vector& d = discrepancies[which];
    for (std::size_t i = 1; i < d.size(); ++i)
      if (d[i] > d[i - 1] * (1.0 + 1e-12)) ++inv;
    return inv;
  }
};

// Weak-continuity experiment on a grid: pair the measures of a sequence
// converging to u in L^1 against test functions and track the discrepancies.
inline ConvergenceReport weak_continuity_experiment(
    const std::vector<AnalyticFunction>& sequence, const AnalyticFunction& limit, int k,
    const Box& box, const std::vector<int>& res, const std::vector<TestFunction>& etas,
    double h, double rel_tol = 1e-2) {
  ScalarField u = ScalarField::sample(box, res, [&](const Vector& x) { return limit(x); });
  const double inf = std::numeric_limits<double>::infinity();
  DiscreteMeasure mu = measure_approx(u, k, h, inf);

  ConvergenceReport rep;
  rep.pairings.assign(etas.size(), {});
  rep.discrepancies.assign(etas.size(), {});
  for (const auto& eta : etas) rep.limit_pairings.push_back(weak_pairing(mu, eta));

  for (std::size_t m = 0; m < sequence.size(); ++m) {
    rep.schedule.push_back(static_cast<double>(m));
    ScalarField um =
        ScalarField::sample(box, res, [&](const Vector& x) { return sequence[m](x); });
    double l1 = 0.0;
    um.for_each([&](const MultiIndex&, std::size_t f) { l1 += std::fabs(um[f] - u[f]); });
    rep.l1_distances.push_back(l1 * um.cell_volume());
    DiscreteMeasure mum = measure_approx(um, k, h, inf);
    for (std::size_t e = 0; e < etas.size(); ++e) {
      const double p = weak_pairing(mum, etas[e]);
      rep.pairings[e].push_back(p);
      rep.discrepancies[e].push_back(std::fabs(p - rep.limit_pairings[e]));
    }
  }

  if (rep.l1_distances.size() >= 2 &&
      rep.l1_distances.back() > rep.l1_distances.front() * (1.0 + 1e-9))
    throw std::runtime_error("weak_continuity_experiment: inputs do not converge in L^1");

  // verdict over all test functions: final relative discrepancy under tol
  bool ok = true;
  double worst_rate = 0.0;
  for (std::size_t e = 0; e < etas.size(); ++e) {
    const Vector& d = rep.discrepancies[e];
    const double scale = std::fabs(rep.limit_pairings[e]) + 1e-300;
    if (d.back() / scale >= rel_tol) ok = false;
    if (d.size() >= 2 && d.front() > 0)
      worst_rate = std::max(worst_rate, d.back() / d.front());
  }
  rep.trend = worst_rate;
  rep.verdict = ok ? ConvergenceVerdict::Converged : ConvergenceVerdict::Inconclusive;
  return rep;
}

}  // namespace khess
