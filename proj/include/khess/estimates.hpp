// Verification harness for the quantitative estimates: both sides of each
// inequality evaluated over declared function families and refinement
// schedules, with boundedness/growth verdicts on the ratios.
#pragma once

#include <string>

#include "khess/dirichlet.hpp"

namespace khess {

enum class EstimateVerdict { Bounded, Growing, Inconclusive };

struct EstimateReport {
  std::string id;
  Vector schedule;  // refinement parameter per step
  Vector lhs, rhs, ratio;
  double empirical_constant = 0.0;  // max ratio over the schedule
  double growth_rate = 0.0;         // geometric mean factor when growing
  double fitted_exponent = 0.0;     // for fitted-exponent cases
  EstimateVerdict verdict = EstimateVerdict::Inconclusive;
  std::string note;
};

// Bounded: the last three ratios form a stable plateau (variation < 2x) or
// decay below the schedule's earlier maximum. Growing: every successive
// factor >= 1.5; the geometric mean factor is reported.
inline void classify(EstimateReport& rep) {
  const Vector& q = rep.ratio;
  rep.empirical_constant = *std::max_element(q.begin(), q.end());
  if (q.size() < 3) {
    rep.verdict = EstimateVerdict::Inconclusive;
    return;
  }
  bool growing = true;
  double logsum = 0.0;
  for (std::size_t i = 1; i < q.size(); ++i) {
    const double f = q[i] / std::max(q[i - 1], 1e-300);
    if (f < 1.5) growing = false;
    logsum += std::log(std::max(f, 1e-300));
  }
  if (growing) {
    rep.growth_rate = std::exp(logsum / (q.size() - 1));
    rep.verdict = EstimateVerdict::Growing;
    return;
  }
  const double last_max = *std::max_element(q.end() - 3, q.end());
  const double last_min = *std::min_element(q.end() - 3, q.end());
  const double head_max = *std::max_element(q.begin(), q.end() - 2);
  if (last_max <= 2.0 * last_min + 1e-12 || last_max < head_max)
    rep.verdict = EstimateVerdict::Bounded;
  else
    rep.verdict = EstimateVerdict::Inconclusive;
}

// sigma_{n-1} int_a^b r^{n-1} f(r) dr, composite Simpson on log-spaced panels.
inline double radial_integral(int n, const std::function<double(double)>& f, double a,
                              double b, int panels = 4096) {
  if (a <= 0.0) a = 1e-10 * b;
  const double step = std::log(b / a) / panels;
  double total = 0.0;
  auto g = [&](double r) { return f(r) * std::pow(r, n - 1); };
  for (int i = 0; i < panels; ++i) {
    const double lo = a * std::exp(i * step), hi = a * std::exp((i + 1) * step);
    total += (hi - lo) / 6.0 * (g(lo) + 4.0 * g(0.5 * (lo + hi)) + g(hi));
  }
  return sphere_area(n) * total;
}

// Analytic radial function bundle: value, first and second derivative.
struct RadialFunction {
  std::function<double(double)> u, du, d2u;
};

inline RadialFunction wk_radial(int n, int k) {
  if (2 * k == n)
    return {[](double r) { return std::log(r); },
            [](double r) { return 1.0 / r; },
            [](double r) { return -1.0 / (r * r); }};
  const double e = 2.0 - static_cast<double>(n) / k;
  const double sign = 2 * k > n ? 1.0 : -1.0;
  return {[e, sign](double r) { return sign * std::pow(r, e); },
          [e, sign](double r) { return sign * e * std::pow(r, e - 1.0); },
          [e, sign](double r) { return sign * e * (e - 1.0) * std::pow(r, e - 2.0); }};
}

// F_l of the radial eigenvalue tuple (u'', u'/r, ..., u'/r); F_0 = 1.
inline double radial_fl(const RadialFunction& f, int n, int l, double r) {
  if (l == 0) return 1.0;
  Vector lam(n, f.du(r) / r);
  lam[0] = f.d2u(r);
  return elem_sym(lam, l);
}

// Interpolation inequality for weighted norms: the minimal constant C(eps)
// with sup-norm <= eps^alpha seminorm + C eps^{-n} integral stays bounded
// over the eps schedule.
inline EstimateReport verify_interpolation(const ScalarField& u, double alpha,
                                           Vector eps_schedule = {0.4, 0.2, 0.1, 0.05,
                                                                  0.025}) {
  const int n = u.dim();
  const WeightedNormReport norms = weighted_norms(u, static_cast<double>(n), alpha);
  const double l1 = u.integrate_abs();
  EstimateReport rep;
  rep.id = "interp_2_12";
  for (double eps : eps_schedule) {
    const double lhs = norms.sup_norm;
    const double rhs = std::pow(eps, alpha) * norms.holder_seminorm;
    rep.schedule.push_back(eps);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs + std::pow(eps, -n) * l1);
    rep.ratio.push_back(std::max(0.0, lhs - rhs) * std::pow(eps, n) / l1);
  }
  classify(rep);
  return rep;
}

// Interior Holder bound: weighted alpha-norm of w_k against its L^1 mass,
// under grid refinement. beta > alpha switches to the sharpness probe: the
// pair quotient at exponent beta under a shrinking pair-distance floor.
inline EstimateReport verify_holder(int n, int k, double beta = 0.0,
                                    std::vector<int> res_schedule = {17, 25, 35, 49},
                                    Vector delta_schedule = {1e-1, 1e-5, 1e-9, 1e-13}) {
  if (2 * k <= n) throw std::domain_error("verify_holder: requires k > n/2");
  const double alpha = 2.0 - static_cast<double>(n) / k;
  EstimateReport rep;
  if (beta <= alpha) {
    rep.id = "holder_2_13";
    const Box box = Box::cube(n, 1.0);
    for (int r : res_schedule) {
      ScalarField u = ScalarField::sample(box, std::vector<int>(n, r), [&](const Vector& x) {
        return wk_value(n, k, x, Vector(n, 0.0));
      });
      const auto norms = weighted_norms(u, static_cast<double>(n), alpha);
      rep.schedule.push_back(r);
      rep.lhs.push_back(norms.sup_norm + norms.holder_seminorm);
      rep.rhs.push_back(u.integrate_abs());
      rep.ratio.push_back(rep.lhs.back() / rep.rhs.back());
    }
  } else {
    rep.id = "holder_2_13_sharpness";
    rep.note = "pair quotient of w_k at exponent beta > alpha under distance refinement";
    const RadialFunction w = wk_radial(n, k);
    for (double delta : delta_schedule) {
      // max over pair distances >= delta of |u(d e1) - u(0)| / d^beta
      double best = 0.0;
      for (double d = delta; d <= 1.0; d *= 4.0)
        best = std::max(best, std::fabs(w.u(d)) / std::pow(d, beta));
      rep.schedule.push_back(delta);
      rep.lhs.push_back(best);
      rep.rhs.push_back(1.0);
      rep.ratio.push_back(best);
    }
  }
  classify(rep);
  return rep;
}

// Local mass bound, grid route: total measure over the inner box vs the k-th
// power of the L^1 norm of the nonpositive input, over an h schedule.
inline EstimateReport verify_local_mass_grid(const AnalyticFunction& fn, int k,
                                             const Box& outer, const Box& inner, int res,
                                             Vector h_schedule = {0.2, 0.1, 0.05}) {
  const int n = outer.dim();
  ScalarField u = ScalarField::sample(outer, std::vector<int>(n, res),
                                      [&](const Vector& x) { return fn(x); });
  double sup = -std::numeric_limits<double>::infinity();
  u.for_each([&](const MultiIndex&, std::size_t f) { sup = std::max(sup, u[f]); });
  if (sup > 1e-12)
    throw std::domain_error("verify_local_mass_grid: input must be <= 0 (shift it first)");
  const double rhs = std::pow(u.integrate_abs(), k);
  EstimateReport rep;
  rep.id = "mass_3_1";
  for (double h : h_schedule) {
    DiscreteMeasure mu = measure_approx(u, k, h);
    double lhs = 0.0;
    mu.cell_mass.for_each([&](const MultiIndex& idx, std::size_t f) {
      if (inner.contains(mu.cell_mass.coords(idx))) lhs += mu.cell_mass[f];
    });
    rep.schedule.push_back(h);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.ratio.push_back(lhs / rhs);
  }
  classify(rep);
  return rep;
}

// Local mass bound, radial truncation family: atom-scale mass inside a fixed
// ball vs the k-th power of the L^1 norm, uniformly over truncation levels.
inline EstimateReport verify_local_mass_radial(int n, int k, double inner_radius = 0.5,
                                               Vector levels = {2, 4, 8, 16}) {
  if (2 * k > n)
    throw std::domain_error("verify_local_mass_radial: needs the nonpositive branch (k <= n/2)");
  const RadialFunction w = wk_radial(n, k);
  EstimateReport rep;
  rep.id = "mass_3_1";
  rep.note = "truncation family max(w_k, -m)";
  for (double m : levels) {
    // truncation radius: |w(r_m)| = m
    const double r_m = 2 * k == n ? std::exp(-m)
                                  : std::pow(m, 1.0 / (2.0 - static_cast<double>(n) / k));
    auto f = [&](double r) { return std::max(w.u(r), -m); };
    auto df = [&](double r) { return r < r_m ? 0.0 : w.du(r); };
    RadialProfile p = make_radial_profile(n, k, f, df, 1e-6, 1.0);
    const double lhs = radial_measure_mass(p, inner_radius);
    const double rhs = std::pow(radial_integral(n, [&](double r) { return -f(r); }, 0, 1.0), k);
    rep.schedule.push_back(m);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.ratio.push_back(lhs / rhs);
  }
  classify(rep);
  return rep;
}

// Interior gradient bound |Du(y)| <= C/R osc_B u on solutions of F_k = const,
// evaluated at an off-center point over a scaling family of ball radii.
inline EstimateReport verify_gradient_bound(int n, int k, double psi0 = 1.0,
                                            double offset_fraction = 0.3,
                                            Vector radii = {0.25, 0.5, 1.0, 2.0}) {
  EstimateReport rep;
  rep.id = "gradbound_3_4";
  for (double R : radii) {
    RadialSolveReport sol = solve_radial(n, k, [psi0](double) { return psi0; }, 0.0, R, 0.0);
    if (sol.residual_relative > 1e-6)
      throw std::runtime_error("verify_gradient_bound: solver residual too large");
    const RadialProfile& p = sol.profile;
    const double y = offset_fraction * R;
    const double ball = R - y;  // B(y, ball) stays inside B_R
    const double grad = p.derivative_at(y);
    const double osc = p.value_at(y + ball) - p.value_at(std::max(p.r.front(), y - ball));
    rep.schedule.push_back(R);
    rep.lhs.push_back(grad);
    rep.rhs.push_back(osc / ball);
    rep.ratio.push_back(grad * ball / osc);
  }
  classify(rep);
  return rep;
}

// Gradient integral bound: int |Du|^q F_l over the half ball against
// (int |u|)^{q+l}, under an inner-cutoff schedule; q above the critical
// exponent n(k-l)/(n-k) must produce the growing verdict.
inline EstimateReport verify_gradient_integral(int n, int k, int l, double q,
                                               double cutoff0 = 0.25,
                                               double cutoff_ratio = 0.01, int steps = 4) {
  if (l < 0 || l > k - 1) throw std::domain_error("verify_gradient_integral: need 0 <= l < k");
  const RadialFunction w = wk_radial(n, k);
  if (w.u(0.5) > 0)
    throw std::domain_error("verify_gradient_integral: w_k not nonpositive for this (n,k)");
  const double rhs =
      std::pow(radial_integral(n, [&](double r) { return std::fabs(w.u(r)); }, 0, 1.0), q + l);
  EstimateReport rep;
  rep.id = "gradint_4_1";
  double cutoff = cutoff0;
  for (int j = 0; j < steps; ++j, cutoff *= cutoff_ratio) {
    const double lhs = radial_integral(
        n,
        [&](double r) { return std::pow(std::fabs(w.du(r)), q) * radial_fl(w, n, l, r); },
        cutoff, 0.5);
    rep.schedule.push_back(cutoff);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.ratio.push_back(lhs / rhs);
  }
  classify(rep);
  return rep;
}

// |u|^q F_l integral bound (k <= n/2 branch), same cutoff machinery.
inline EstimateReport verify_uq_integral(int n, int k, int l, double q,
                                         double cutoff0 = 0.25, double cutoff_ratio = 0.01,
                                         int steps = 4) {
  if (2 * k > n) throw std::domain_error("verify_uq_integral: requires k <= n/2");
  if (l < 0 || l > k - 1) throw std::domain_error("verify_uq_integral: need 0 <= l < k");
  const RadialFunction w = wk_radial(n, k);
  const double rhs =
      std::pow(radial_integral(n, [&](double r) { return std::fabs(w.u(r)); }, 0, 1.0), q + l);
  EstimateReport rep;
  rep.id = "uq_4_3";
  double cutoff = cutoff0;
  for (int j = 0; j < steps; ++j, cutoff *= cutoff_ratio) {
    const double lhs = radial_integral(
        n,
        [&](double r) { return std::pow(std::fabs(w.u(r)), q) * radial_fl(w, n, l, r); },
        cutoff, 0.5);
    rep.schedule.push_back(cutoff);
    rep.lhs.push_back(lhs);
    rep.rhs.push_back(rhs);
    rep.ratio.push_back(lhs / rhs);
  }
  classify(rep);
  return rep;
}

// Pointwise p-l-convexity: sampled (g, H) with lambda(H) in Gamma_k must give
// a nonnegative p-Hessian minor sum at admissible (l, p); ratios carry the
// worst normalized margin per batch.
inline EstimateReport verify_pl_convexity(int n, int k, int l, double p, int samples = 10000,
                                          std::uint64_t seed = 4242) {
  EstimateReport rep;
  rep.id = "plconvex_4_2";
  Sampler rng(seed);
  const int batches = 10;
  double worst = std::numeric_limits<double>::infinity();
  for (int b = 0; b < batches; ++b) {
    double batch_worst = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples / batches; ++s) {
      Vector lam = project_to_cone(rng.gaussian_vector(n), k).first;
      const Matrix qm = rng.random_orthogonal(n);
      Matrix h(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = 0.0;
          for (int t = 0; t < n; ++t) acc += qm(i, t) * lam[t] * qm(j, t);
          h(i, j) = acc;
        }
      const Vector g = rng.gaussian_vector(n);
      const double value = pk_hessian_pointwise(g, h, l, p);
      double hn = 0.0;
      for (double v : lam) hn = std::max(hn, std::fabs(v));
      const double scale =
          std::pow(norm(g), l * (p - 2.0)) * std::pow(1.0 + hn, static_cast<double>(l));
      batch_worst = std::min(batch_worst, value / scale);
    }
    rep.schedule.push_back(b);
    rep.lhs.push_back(batch_worst);
    rep.rhs.push_back(0.0);
    rep.ratio.push_back(1.0);  // boundedness is trivial; the margin is the content
    worst = std::min(worst, batch_worst);
  }
  rep.empirical_constant = worst;
  rep.verdict = worst >= -1e-9 ? EstimateVerdict::Bounded : EstimateVerdict::Inconclusive;
  rep.note = "worst normalized pointwise margin";
  return rep;
}

// Frobenius-vs-trace bound on 2-convex samples: |H|_F <= tr H.
inline EstimateReport verify_frobenius_trace(int n, int samples = 10000,
                                             std::uint64_t seed = 777) {
  EstimateReport rep;
  rep.id = "plconvex_4_2_frobenius";
  Sampler rng(seed);
  const int batches = 10;
  for (int b = 0; b < batches; ++b) {
    double worst = 0.0;
    for (int s = 0; s < samples / batches; ++s) {
      Vector lam = project_to_cone(rng.gaussian_vector(n), 2).first;
      double frob2 = 0.0, tr = 0.0;
      for (double v : lam) {
        frob2 += v * v;
        tr += v;
      }
      if (tr < 1e-12) continue;
      worst = std::max(worst, std::sqrt(frob2) / tr);
    }
    rep.schedule.push_back(b);
    rep.lhs.push_back(worst);
    rep.rhs.push_back(1.0);
    rep.ratio.push_back(worst);
  }
  classify(rep);
  if (rep.empirical_constant > 1.0 + 1e-10) rep.verdict = EstimateVerdict::Inconclusive;
  return rep;
}

// A priori L^1 bound for measure-data solutions over a domain-scaling family:
// int |u| <= C d^m { max|phi| + d^{2-n/k} nu^{1/k} } with the exponent m
// fitted by log-log regression.
inline EstimateReport verify_l1_bound(int n, int k, double atom, double phi_max = 0.0,
                                      Vector diameters = {0.5, 1.0, 2.0}) {
  EstimateReport rep;
  rep.id = "l1bound_6_3";
  Vector logs_d, logs_v;
  Vector l1s, brackets;
  for (double d : diameters) {
    RadialSolveReport sol =
        solve_radial(n, k, [](double) { return 0.0; }, atom, d, phi_max);
    const RadialProfile& p = sol.profile;
    double l1 = 0.0;
    for (std::size_t i = 1; i < p.r.size(); ++i)
      l1 += 0.5 * (p.r[i] - p.r[i - 1]) *
            (std::fabs(p.u[i - 1]) * std::pow(p.r[i - 1], n - 1) +
             std::fabs(p.u[i]) * std::pow(p.r[i], n - 1));
    l1 *= sphere_area(n);
    const double bracket =
        std::fabs(phi_max) + std::pow(d, 2.0 - static_cast<double>(n) / k) *
                                 std::pow(std::max(atom, 0.0), 1.0 / k);
    l1s.push_back(l1);
    brackets.push_back(bracket);
    logs_d.push_back(std::log(d));
    logs_v.push_back(std::log(std::max(l1 / bracket, 1e-300)));
  }
  // least-squares slope: fitted exponent m
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < logs_d.size(); ++i) {
    mx += logs_d[i];
    my += logs_v[i];
  }
  mx /= logs_d.size();
  my /= logs_d.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < logs_d.size(); ++i) {
    num += (logs_d[i] - mx) * (logs_v[i] - my);
    den += (logs_d[i] - mx) * (logs_d[i] - mx);
  }
  rep.fitted_exponent = num / den;
  for (std::size_t i = 0; i < diameters.size(); ++i) {
    rep.schedule.push_back(diameters[i]);
    rep.lhs.push_back(l1s[i]);
    rep.rhs.push_back(std::pow(diameters[i], rep.fitted_exponent) * brackets[i]);
    rep.ratio.push_back(rep.lhs.back() / rep.rhs.back());
  }
  classify(rep);
  rep.note = "exponent fitted from the domain-scaling family";
  return rep;
}

}  // namespace khess
