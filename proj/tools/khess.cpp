// Experiment runner: dispatches a JSON config to the library modules, writes
// report.json (with the config hash that produced it) plus CSV side files.
//
// Exit codes: 0 success, 1 artifact/config error, 2 verdict failure (the
// numerics contradict the expected verdict).

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "khess/experiments.hpp"
#include "khess/io.hpp"

namespace fs = std::filesystem;
using khess::json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- config access with pointer-anchored error messages ----------------------

const json& need(const json& cfg, const std::string& key, const std::string& where) {
  auto it = cfg.find(key);
  if (it == cfg.end())
    throw ConfigError("config error at " + where + ": missing required key '" + key + "'");
  return *it;
}

long need_int(const json& cfg, const std::string& key, long lo, long hi,
              const std::string& where) {
  const json& v = need(cfg, key, where);
  if (!v.is_number_integer())
    throw ConfigError("config error at " + where + "/" + key + ": expected an integer");
  const long x = v.get<long>();
  if (x < lo || x > hi)
    throw ConfigError("config error at " + where + "/" + key + ": value " +
                      std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return x;
}

long opt_int(const json& cfg, const std::string& key, long def, long lo, long hi,
             const std::string& where) {
  if (!cfg.contains(key)) return def;
  return need_int(cfg, key, lo, hi, where);
}

double need_num(const json& cfg, const std::string& key, const std::string& where) {
  const json& v = need(cfg, key, where);
  if (!v.is_number())
    throw ConfigError("config error at " + where + "/" + key + ": expected a number");
  return v.get<double>();
}

double opt_num(const json& cfg, const std::string& key, double def,
               const std::string& where) {
  if (!cfg.contains(key)) return def;
  return need_num(cfg, key, where);
}

std::string opt_str(const json& cfg, const std::string& key, const std::string& def) {
  if (!cfg.contains(key)) return def;
  return cfg.at(key).get<std::string>();
}

khess::Vector opt_vec(const json& cfg, const std::string& key, khess::Vector def,
                      const std::string& where) {
  if (!cfg.contains(key)) return def;
  const json& v = cfg.at(key);
  if (!v.is_array())
    throw ConfigError("config error at " + where + "/" + key + ": expected an array");
  return v.get<khess::Vector>();
}

// --- run metadata -------------------------------------------------------------

std::string config_hash(const std::string& text) {
  // FNV-1a, 64-bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string timestamp_utc() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_record(const fs::path& out, const std::string& command,
                  const std::string& hash, const json& payload) {
  fs::create_directories(out);
  const json record{{"tool", "khess"},
                    {"format_version", 1},
                    {"command", command},
                    {"config_hash", hash},
                    {"timestamp", timestamp_utc()},
                    {"payload", payload}};
  std::ofstream os(out / "report.json");
  if (!os) throw std::runtime_error("cannot write " + (out / "report.json").string());
  os << record.dump(2) << "\n";
}

void write_text(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  body(os);
}

// --- shared builders ----------------------------------------------------------

khess::AnalyticFunction build_function(const json& p, int n, int k,
                                       const std::string& where) {
  using namespace khess;
  const json& f = need(p, "function", where);
  const std::string type = opt_str(f, "type", "wk");
  const std::string sub = where + "/function";
  if (type == "wk") {
    Vector center = opt_vec(f, "center", Vector(n, 0.0), sub);
    if (static_cast<int>(center.size()) != n)
      throw ConfigError("config error at " + sub + "/center: expected " +
                        std::to_string(n) + " entries");
    return make_wk(n, k, center);
  }
  if (type == "quadratic") {
    Vector diag = opt_vec(f, "diag", Vector(n, 1.0), sub);
    if (static_cast<int>(diag.size()) != n)
      throw ConfigError("config error at " + sub + "/diag: expected " +
                        std::to_string(n) + " entries");
    return make_quadratic(Matrix::diagonal(diag), Vector(n, 0.0),
                          opt_num(f, "shift", 0.0, sub));
  }
  throw ConfigError("config error at " + sub + "/type: unknown function '" + type + "'");
}

// --- commands -----------------------------------------------------------------

json run_symfunc(const json& p, std::uint64_t seed, int& exit_code) {
  using namespace khess;
  json out;
  if (p.contains("lambda")) {
    const Vector lam = opt_vec(p, "lambda", {}, "symfunc");
    out["elementary_symmetric"] = elem_sym_all(lam);
  }
  const long samples = opt_int(p, "samples", 10000, 1, 10000000, "symfunc");
  const int n_fixed = static_cast<int>(opt_int(p, "n", 0, 0, 8, "symfunc"));
  Sampler rng(seed);
  double worst = 0.0;
  for (long s = 0; s < samples; ++s) {
    const int n = n_fixed ? n_fixed : 2 + static_cast<int>(rng.uniform(0.0, 3.999));
    const int k = 2 + static_cast<int>(rng.uniform(0.0, n - 1 - 1e-9));
    const Vector lam = rng.gaussian_vector(n);
    double scale = 1.0;
    for (double l : lam) scale = std::max(scale, std::fabs(l));
    scale = std::pow(scale, k) * binomial(n, std::min(k, n - k));
    // sum rule: (n - k + 1) S_{k-1} = sum_i S_{k-1;i}
    double rsum = 0.0;
    for (int i = 0; i < n; ++i) rsum += elem_sym_restricted(lam, k - 1, {i});
    worst = std::max(worst,
                     std::fabs((n - k + 1) * elem_sym(lam, k - 1) - rsum) / scale);
    // expansion: S_k = S_{k;i} + lambda_i S_{k-1;i} (S_{k;i} needs k <= n-1)
    if (k < n) {
      const int i = static_cast<int>(rng.uniform(0.0, n - 1e-9));
      worst = std::max(worst, std::fabs(elem_sym(lam, k) - elem_sym_restricted(lam, k, {i}) -
                                        lam[i] * elem_sym_restricted(lam, k - 1, {i})) /
                                  scale);
    }
    // contraction on a full symmetric matrix: sum_ij A_k^{ij} a_ij = k [A]_k
    Matrix a(n);
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) a(r, c) = a(c, r) = rng.uniform(-1.0, 1.0);
    const Matrix dk = minor_sum_derivative(a, k);
    double contracted = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) contracted += dk(r, c) * a(r, c);
    worst = std::max(worst, std::fabs(contracted - k * minor_sum(a, k)) / scale);
  }
  out["samples"] = samples;
  out["worst_relative_error"] = worst;
  out["pass"] = worst < 1e-10;
  if (!out["pass"].get<bool>()) exit_code = 2;
  return out;
}

json run_cone(const json& p, std::uint64_t seed, int& exit_code) {
  using namespace khess;
  const int n = static_cast<int>(need_int(p, "n", 2, 8, "cone"));
  const int k = static_cast<int>(need_int(p, "k", 1, n, "cone"));
  json out;
  if (p.contains("lambda")) {
    const Vector lam = opt_vec(p, "lambda", {}, "cone");
    const ConeMembershipReport rep = gamma_membership(lam, k);
    out["membership"] = {{"in_cone", rep.in_cone}, {"margin", rep.margin}};
    const auto [proj, dist] = project_to_cone(lam, k);
    out["projection"] = {{"lambda", proj}, {"shift", dist}};
  }
  const long samples = opt_int(p, "samples", 10000, 1, 10000000, "cone");
  Sampler rng(seed);
  double worst = 0.0;
  for (long s = 0; s < samples; ++s) {
    const Vector a = project_to_cone(rng.gaussian_vector(n), k).first;
    const Vector b = project_to_cone(rng.gaussian_vector(n), k).first;
    // nesting Gamma_k within Gamma_{k-1}, and midpoint convexity of the cone
    if (k > 1) worst = std::min(worst, gamma_membership(a, k - 1).margin);
    Vector mid(n);
    for (int i = 0; i < n; ++i) mid[i] = 0.5 * (a[i] + b[i]);
    worst = std::min(worst, gamma_membership(mid, k).margin);
    // midpoint concavity of S_k^{1/k} on the cone, relative scale
    const double fa = std::pow(std::max(elem_sym(a, k), 0.0), 1.0 / k);
    const double fb = std::pow(std::max(elem_sym(b, k), 0.0), 1.0 / k);
    const double fm = std::pow(std::max(elem_sym(mid, k), 0.0), 1.0 / k);
    worst = std::min(worst, (fm - 0.5 * (fa + fb)) / std::max(fm, 1e-12));
  }
  out["samples"] = samples;
  out["worst_margin"] = worst;
  out["pass"] = worst >= -1e-12;
  if (!out["pass"].get<bool>()) exit_code = 2;
  return out;
}

json run_fieldop(const json& p, const fs::path& out_dir, int&) {
  using namespace khess;
  const int n = static_cast<int>(need_int(p, "n", 1, 4, "fieldop"));
  const int k = static_cast<int>(need_int(p, "k", 1, n, "fieldop"));
  const int res = static_cast<int>(opt_int(p, "resolution", 33, 5, 513, "fieldop"));
  const double half = opt_num(p, "half_width", 1.0, "fieldop");
  const AnalyticFunction fn = build_function(p, n, k, "fieldop");
  const Box box = Box::cube(n, half);
  const ScalarField u = ScalarField::sample(box, std::vector<int>(n, res),
                                            [&](const Vector& x) { return fn(x); });
  fs::create_directories(out_dir);
  write_field_file((out_dir / "input.field").string(), u);

  const std::string op = opt_str(p, "operation", "fk");
  json out{{"operation", op}, {"function", fn.name}};
  if (op == "fk" || op == "mollify") {
    ScalarField r = u;
    if (op == "mollify") {
      const double h = need_num(p, "h", "fieldop");
      if (h <= 0) throw ConfigError("config error at fieldop/h: must be positive");
      r = mollify(u, MollifierKernel(n, h));
    } else {
      r = hessian_operator(u, k);
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    r.for_each([&](const MultiIndex&, std::size_t f) {
      if (!std::isfinite(r[f])) return;
      lo = std::min(lo, r[f]);
      hi = std::max(hi, r[f]);
    });
    write_field_file((out_dir / "result.field").string(), r);
    write_text(out_dir / "result.csv", [&](std::ostream& os) { write_field_csv(os, r); });
    out["min"] = lo;
    out["max"] = hi;
  } else if (op == "kconvexity") {
    const KConvexityReport rep = kconvexity_report(u, k, opt_num(p, "tol", 1e-8, "fieldop"));
    out["fraction"] = rep.fraction;
    out["worst_margin"] = rep.worst_margin;
    out["checked"] = rep.checked;
  } else {
    throw ConfigError("config error at fieldop/operation: unknown operation '" + op + "'");
  }
  out["pass"] = true;
  return out;
}

json run_measure(const json& p, const fs::path& out_dir, int& exit_code) {
  using namespace khess;
  const int n = static_cast<int>(need_int(p, "n", 2, 4, "measure"));
  const int k = static_cast<int>(need_int(p, "k", 1, n, "measure"));
  const double spacing = need_num(p, "spacing", "measure");
  if (spacing <= 0) throw ConfigError("config error at measure/spacing: must be positive");
  const double ball = opt_num(p, "ball_radius", 0.25, "measure");
  const double tie = opt_num(p, "tie", 0.0, "measure");
  Vector center = opt_vec(p, "center", Vector(n, 0.0), "measure");
  const AnalyticFunction fn = build_function(p, n, k, "measure");
  const AtomMassReport rep =
      atom_mass(fn, n, k, center, ball, spacing,
                opt_vec(p, "h_schedule", {}, "measure"), tie);
  fs::create_directories(out_dir);
  write_text(out_dir / "atom_mass.csv", [&](std::ostream& os) {
    os << "h,mass\n";
    for (std::size_t i = 0; i < rep.masses.size(); ++i)
      os << format_double(rep.h_schedule[i]) << "," << format_double(rep.masses[i]) << "\n";
  });
  json out = to_json(rep);
  out["function"] = fn.name;
  out["pass"] = rep.conclusive;
  if (p.contains("expect_mass")) {
    const double expect = need_num(p, "expect_mass", "measure");
    const double rel_tol = opt_num(p, "rel_tol", 0.02, "measure");
    const bool hit = std::fabs(rep.extrapolated - expect) <= rel_tol * std::fabs(expect);
    out["expect_mass"] = expect;
    out["within_tolerance"] = hit;
    out["pass"] = out["pass"].get<bool>() && hit;
  }
  if (!out["pass"].get<bool>()) exit_code = 2;
  return out;
}

json run_estimate(const json& p, std::uint64_t seed, const fs::path& out_dir,
                  int& exit_code) {
  using namespace khess;
  const std::string id = need(p, "estimate", "estimate").get<std::string>();
  const int n = static_cast<int>(opt_int(p, "n", 3, 2, 6, "estimate"));
  const int k = static_cast<int>(opt_int(p, "k", 2, 1, n, "estimate"));
  EstimateReport rep;
  if (id == "interp_2_12") {
    const int res = static_cast<int>(opt_int(p, "resolution", 33, 9, 129, "estimate"));
    if (2 * k <= n)
      throw ConfigError("config error at estimate: interp_2_12 needs k > n/2");
    const ScalarField u =
        ScalarField::sample(Box::cube(n, 1.0), std::vector<int>(n, res),
                            [&](const Vector& x) { return wk_value(n, k, x, Vector(n, 0.0)); });
    rep = verify_interpolation(u, opt_num(p, "alpha", 2.0 - double(n) / k, "estimate"));
  } else if (id == "holder_2_13") {
    rep = verify_holder(n, k, opt_num(p, "beta", 0.0, "estimate"));
  } else if (id == "mass_3_1") {
    if (opt_str(p, "mode", 2 * k > n ? "grid" : "radial") == "grid") {
      const int res = static_cast<int>(opt_int(p, "resolution", 81, 17, 257, "estimate"));
      rep = verify_local_mass_grid(
          make_quadratic(Matrix::identity(n), Vector(n, 0.0),
                         opt_num(p, "shift", -1.5, "estimate")),
          k, Box::cube(n, 1.0), Box::cube(n, 0.5), res);
    } else {
      rep = verify_local_mass_radial(n, k);
    }
  } else if (id == "gradbound_3_4") {
    rep = verify_gradient_bound(n, k, opt_num(p, "psi", 1.0, "estimate"));
  } else if (id == "gradint_4_1") {
    rep = verify_gradient_integral(n, k, static_cast<int>(opt_int(p, "l", 0, 0, n, "estimate")),
                                   opt_num(p, "q", 1.0, "estimate"));
  } else if (id == "uq_4_3") {
    rep = verify_uq_integral(n, k, static_cast<int>(opt_int(p, "l", 0, 0, n, "estimate")),
                             opt_num(p, "q", 1.0, "estimate"));
  } else if (id == "plconvex_4_2") {
    const int l = static_cast<int>(opt_int(p, "l", 1, 1, k, "estimate"));
    const double pc = 1.0 + double(k) * (n - l) / (double(l) * (n - k));
    rep = verify_pl_convexity(n, k, l, opt_num(p, "p", pc, "estimate"),
                              static_cast<int>(opt_int(p, "samples", 10000, 1, 1000000,
                                                       "estimate")),
                              seed);
  } else if (id == "frobenius") {
    rep = verify_frobenius_trace(
        n, static_cast<int>(opt_int(p, "samples", 10000, 1, 1000000, "estimate")), seed);
  } else if (id == "l1bound_6_3") {
    rep = verify_l1_bound(n, k, opt_num(p, "atom", 4 * M_PI, "estimate"));
  } else {
    throw ConfigError("config error at estimate/estimate: unknown id '" + id + "'");
  }
  fs::create_directories(out_dir);
  write_text(out_dir / "estimate.csv",
             [&](std::ostream& os) { write_estimate_csv(os, rep); });
  json out = to_json(rep);
  const std::string expect = opt_str(p, "expect", "bounded");
  out["expected_verdict"] = expect;
  out["pass"] = verdict_name(rep.verdict) == expect;
  if (!out["pass"].get<bool>()) exit_code = 2;
  return out;
}

json run_dirichlet(const json& p, const fs::path& out_dir, int& exit_code) {
  using namespace khess;
  const std::string path = opt_str(p, "path", "radial");
  fs::create_directories(out_dir);
  json out{{"path", path}};
  if (path == "grid") {
    GridDirichletSpec spec;
    const int res = static_cast<int>(opt_int(p, "resolution", 65, 9, 513, "dirichlet"));
    spec.box = Box::cube(2, opt_num(p, "half_width", 1.0, "dirichlet"));
    spec.res = res;
    spec.k = static_cast<int>(need_int(p, "k", 1, 2, "dirichlet"));
    const double psi0 = opt_num(p, "psi", 1.0, "dirichlet");
    if (psi0 < 0) throw ConfigError("config error at dirichlet/psi: must be >= 0");
    spec.psi = [psi0](const Vector&) { return psi0; };
    const double bv = opt_num(p, "boundary_value", 0.0, "dirichlet");
    spec.phi = [bv](const Vector&) { return bv; };
    spec.tol = opt_num(p, "tol", spec.k == 2 ? 1e-6 : 1e-10, "dirichlet");
    const GridSolveReport rep = solve_grid(spec);
    write_field_file((out_dir / "solution.field").string(), rep.u);
    write_text(out_dir / "residual_history.csv", [&](std::ostream& os) {
      os << "sample,residual\n";
      for (std::size_t i = 0; i < rep.residual_history.size(); ++i)
        os << i << "," << format_double(rep.residual_history[i]) << "\n";
    });
    out["report"] = to_json(rep);
    out["pass"] = rep.converged && rep.convexity.fraction >= 0.999;
  } else if (path == "radial" || path == "measure_radial") {
    const int n = static_cast<int>(need_int(p, "n", 2, 6, "dirichlet"));
    const int k = static_cast<int>(need_int(p, "k", 1, n, "dirichlet"));
    const double psi0 = opt_num(p, "psi", 0.0, "dirichlet");
    if (psi0 < 0) throw ConfigError("config error at dirichlet/psi: must be >= 0");
    const double atom = opt_num(p, "atom", 0.0, "dirichlet");
    if (atom < 0) throw ConfigError("config error at dirichlet/atom: must be >= 0");
    const double R = opt_num(p, "radius", 1.0, "dirichlet");
    const double bv = opt_num(p, "boundary_value", 0.0, "dirichlet");
    auto psi = [psi0](double) { return psi0; };
    const RadialProfile* profile = nullptr;
    RadialSolveReport rep;
    RadialMeasureDataReport mrep;
    if (path == "radial") {
      rep = solve_radial(n, k, psi, atom, R, bv);
      out["report"] = to_json(rep);
      profile = &rep.profile;
      out["pass"] = rep.convexity_fraction >= 0.999 && rep.residual_relative < 1e-4;
    } else {
      mrep = solve_measure_data_radial(n, k, psi, atom, R, bv);
      out["report"] = {{"h_schedule", mrep.h_schedule},
                       {"l1_steps", mrep.l1_steps},
                       {"cauchy", mrep.cauchy},
                       {"finest", to_json(mrep.finest)}};
      profile = &mrep.finest.profile;
      out["pass"] = mrep.cauchy && mrep.finest.convexity_fraction >= 0.999;
    }
    write_text(out_dir / "profile.csv", [&](std::ostream& os) {
      os << "r,u,du\n";
      for (std::size_t i = 0; i < profile->r.size(); ++i)
        os << format_double(profile->r[i]) << "," << format_double(profile->u[i]) << ","
           << format_double(profile->du[i]) << "\n";
    });
  } else {
    throw ConfigError("config error at dirichlet/path: unknown path '" + path + "'");
  }
  if (!out["pass"].get<bool>()) exit_code = 2;
  return out;
}

json run_suite(const json& p, std::uint64_t seed, int jobs, const fs::path& out_dir,
               int& exit_code) {
  using namespace khess;
  const auto& catalog = experiment_catalog();
  std::vector<const ExperimentEntry*> selected;
  if (p.contains("cases")) {
    for (const auto& c : p.at("cases")) {
      const std::string id = c.get<std::string>();
      const ExperimentEntry* hit = nullptr;
      for (const auto& e : catalog)
        if (e.id == id) hit = &e;
      if (!hit)
        throw ConfigError("config error at suite/cases: unknown case '" + id + "'");
      selected.push_back(hit);
    }
  } else {
    for (const auto& e : catalog) selected.push_back(&e);
  }

  std::vector<json> results(selected.size());
  std::vector<double> seconds(selected.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const auto t0 = std::chrono::steady_clock::now();
      results[i] = selected[i]->run(seed);
      seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                       .count();
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(selected.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool all_pass = true;
  json entries = json::array();
  std::cout << std::left << std::setw(24) << "case" << std::setw(8) << "status"
            << "seconds\n";
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const bool pass = results[i].value("pass", false);
    all_pass = all_pass && pass;
    std::cout << std::left << std::setw(24) << selected[i]->id << std::setw(8)
              << (pass ? "pass" : "FAIL") << std::fixed << std::setprecision(1)
              << seconds[i] << "\n";
    entries.push_back(json{{"id", selected[i]->id},
                           {"anchor", selected[i]->anchor},
                           {"seconds", seconds[i]},
                           {"result", results[i]}});
  }
  fs::create_directories(out_dir);
  write_text(out_dir / "suite.csv", [&](std::ostream& os) {
    os << "id,pass,seconds\n";
    for (std::size_t i = 0; i < selected.size(); ++i)
      os << selected[i]->id << "," << results[i].value("pass", false) << ","
         << format_double(seconds[i]) << "\n";
  });
  if (!all_pass) exit_code = 2;
  return json{{"entries", entries}, {"pass", all_pass}};
}

void print_catalog() {
  for (const auto& e : khess::experiment_catalog()) {
    std::cout << e.id << " -> " << e.anchor << "\n";
    for (const auto& c : e.cases) std::cout << "    " << c << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Hessian experiment runner"};
  std::string config_path;
  std::string out_override;
  std::int64_t seed_override = -1;
  int jobs = 1;
  bool list = false;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_override, "output directory (overrides config)");
  app.add_option("--seed", seed_override, "RNG seed (overrides config)");
  app.add_option("--jobs", jobs, "worker threads for the suite command")
      ->check(CLI::Range(1, 64));
  app.add_flag("--list", list, "print the experiment catalog and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    print_catalog();
    return 0;
  }
  if (config_path.empty()) {
    std::cerr << "error: --config is required (or use --list)\n";
    return 1;
  }

  try {
    std::ifstream is(config_path);
    if (!is) throw ConfigError("cannot open config file " + config_path);
    std::stringstream ss;
    ss << is.rdbuf();
    const std::string text = ss.str();
    json cfg;
    try {
      cfg = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError("config parse error in " + config_path + ": " + e.what());
    }
    const std::string command = need(cfg, "command", "/").get<std::string>();
    const std::uint64_t seed =
        seed_override >= 0 ? static_cast<std::uint64_t>(seed_override)
                           : static_cast<std::uint64_t>(opt_int(cfg, "seed", 20260823, 0,
                                                                std::numeric_limits<long>::max(),
                                                                "/"));
    const fs::path out_dir =
        !out_override.empty() ? fs::path(out_override)
                              : fs::path(opt_str(cfg, "output_dir", "out"));

    int exit_code = 0;
    json payload;
    if (command == "symfunc")
      payload = run_symfunc(cfg, seed, exit_code);
    else if (command == "cone")
      payload = run_cone(cfg, seed, exit_code);
    else if (command == "fieldop")
      payload = run_fieldop(cfg, out_dir, exit_code);
    else if (command == "measure")
      payload = run_measure(cfg, out_dir, exit_code);
    else if (command == "estimate")
      payload = run_estimate(cfg, seed, out_dir, exit_code);
    else if (command == "dirichlet")
      payload = run_dirichlet(cfg, out_dir, exit_code);
    else if (command == "suite")
      payload = run_suite(cfg, seed, jobs, out_dir, exit_code);
    else
      throw ConfigError("config error at /command: unknown command '" + command + "'");

    write_record(out_dir, command, config_hash(text), payload);
    if (exit_code == 2)
      std::cerr << "verdict failure: see " << (out_dir / "report.json").string() << "\n";
    return exit_code;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
