// Serialization: the textual grid-field format, CSV export, and JSON
// conversions for the report types (17 significant digits throughout).
#pragma once

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "khess/estimates.hpp"

namespace khess {

using nlohmann::json;

inline std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Field format:
//   khessfield 1
//   dim <n>
//   box <lo...> <hi...>
//   resolution <r...>
//   values
//   <one value per line, row-major>
inline void write_field(std::ostream& os, const ScalarField& u) {
  os << "khessfield 1\n";
  os << "dim " << u.dim() << "\n";
  os << "box";
  for (int a = 0; a < u.dim(); ++a) os << " " << format_double(u.box().lo[a]);
  for (int a = 0; a < u.dim(); ++a) os << " " << format_double(u.box().hi[a]);
  os << "\nresolution";
  for (int a = 0; a < u.dim(); ++a) os << " " << u.resolution()[a];
  os << "\nvalues\n";
  for (std::size_t f = 0; f < u.size(); ++f) os << format_double(u[f]) << "\n";
}

inline ScalarField read_field(std::istream& is) {
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "khessfield" || version != 1)
    throw std::runtime_error("read_field: not a khessfield version 1 stream");
  int n = 0;
  is >> tag >> n;
  if (tag != "dim" || n < 1 || n > 8) throw std::runtime_error("read_field: bad dim line");
  Box box;
  box.lo.resize(n);
  box.hi.resize(n);
  is >> tag;
  if (tag != "box") throw std::runtime_error("read_field: bad box line");
  for (int a = 0; a < n; ++a) is >> box.lo[a];
  for (int a = 0; a < n; ++a) is >> box.hi[a];
  std::vector<int> res(n);
  is >> tag;
  if (tag != "resolution") throw std::runtime_error("read_field: bad resolution line");
  for (int a = 0; a < n; ++a) is >> res[a];
  is >> tag;
  if (tag != "values") throw std::runtime_error("read_field: bad values line");
  ScalarField u(box, res);
  for (std::size_t f = 0; f < u.size(); ++f)
    if (!(is >> u[f])) throw std::runtime_error("read_field: truncated values");
  return u;
}

inline void write_field_file(const std::string& path, const ScalarField& u) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field_file: cannot open " + path);
  write_field(os, u);
}

inline ScalarField read_field_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_field_file: cannot open " + path);
  return read_field(is);
}

// CSV export: one row per node, coordinates then value.
inline void write_field_csv(std::ostream& os, const ScalarField& u) {
  for (int a = 0; a < u.dim(); ++a) os << "x" << a << ",";
  os << "value\n";
  u.for_each([&](const MultiIndex& idx, std::size_t f) {
    const Vector x = u.coords(idx);
    for (int a = 0; a < u.dim(); ++a) os << format_double(x[a]) << ",";
    os << format_double(u[f]) << "\n";
  });
}

inline const char* verdict_name(EstimateVerdict v) {
  switch (v) {
    case EstimateVerdict::Bounded: return "bounded";
    case EstimateVerdict::Growing: return "growing";
    default: return "inconclusive";
  }
}

inline const char* verdict_name(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::Converged: return "converged";
    case ConvergenceVerdict::Diverged: return "diverged";
    default: return "inconclusive";
  }
}

inline json to_json(const EstimateReport& r) {
  return json{{"id", r.id},
              {"schedule", r.schedule},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"ratio", r.ratio},
              {"empirical_constant", r.empirical_constant},
              {"growth_rate", r.growth_rate},
              {"fitted_exponent", r.fitted_exponent},
              {"verdict", verdict_name(r.verdict)},
              {"note", r.note}};
}

inline json to_json(const ConvergenceReport& r) {
  return json{{"schedule", r.schedule},
              {"pairings", r.pairings},
              {"discrepancies", r.discrepancies},
              {"limit_pairings", r.limit_pairings},
              {"l1_distances", r.l1_distances},
              {"trend", r.trend},
              {"verdict", verdict_name(r.verdict)}};
}

inline json to_json(const AtomMassReport& r) {
  return json{{"h_schedule", r.h_schedule},
              {"masses", r.masses},
              {"extrapolated", r.extrapolated},
              {"fitted_order", r.fitted_order},
              {"conclusive", r.conclusive}};
}

inline json to_json(const RadialSolveReport& r) {
  return json{{"residual", r.residual},
              {"residual_relative", r.residual_relative},
              {"convexity_fraction", r.convexity_fraction},
              {"worst_margin", r.worst_margin},
              {"mesh_size", r.profile.r.size()}};
}

inline json to_json(const GridSolveReport& r) {
  return json{{"residual", r.residual},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"convexity_fraction", r.convexity.fraction},
              {"worst_margin", r.convexity.worst_margin},
              {"residual_history", r.residual_history}};
}

// Long-format CSV of a ConvergenceReport: one row per (step, test function).
inline void write_convergence_csv(std::ostream& os, const ConvergenceReport& r) {
  os << "step,test_function,pairing,discrepancy,l1_distance\n";
  for (std::size_t e = 0; e < r.pairings.size(); ++e)
    for (std::size_t m = 0; m < r.pairings[e].size(); ++m) {
      os << format_double(r.schedule[m]) << "," << e << ","
         << format_double(r.pairings[e][m]) << "," << format_double(r.discrepancies[e][m])
         << "," << (m < r.l1_distances.size() ? format_double(r.l1_distances[m]) : "")
         << "\n";
    }
}

inline void write_estimate_csv(std::ostream& os, const EstimateReport& r) {
  os << "schedule,lhs,rhs,ratio\n";
  for (std::size_t i = 0; i < r.schedule.size(); ++i)
    os << format_double(r.schedule[i]) << "," << format_double(r.lhs[i]) << ","
       << format_double(r.rhs[i]) << "," << format_double(r.ratio[i]) << "\n";
}

}  // namespace khess
