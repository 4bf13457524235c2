#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "khess/io.hpp"

using namespace khess;

TEST_CASE("field serialization round-trips exactly") {
  Sampler rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    Box box;
    box.lo.resize(n);
    box.hi.resize(n);
    std::vector<int> res(n);
    for (int a = 0; a < n; ++a) {
      box.lo[a] = rng.uniform(-2.0, 0.0);
      box.hi[a] = box.lo[a] + rng.uniform(0.5, 3.0);
      res[a] = 5 + static_cast<int>(rng.uniform(0.0, 8.0));
    }
    ScalarField u(box, res);
    for (std::size_t f = 0; f < u.size(); ++f) u[f] = rng.uniform(-1e6, 1e6);
    std::stringstream ss;
    write_field(ss, u);
    const ScalarField v = read_field(ss);
    REQUIRE(v.size() == u.size());
    REQUIRE(v.resolution() == u.resolution());
    for (std::size_t f = 0; f < u.size(); ++f) REQUIRE(v[f] == u[f]);
    for (int a = 0; a < n; ++a) {
      REQUIRE(v.box().lo[a] == u.box().lo[a]);
      REQUIRE(v.box().hi[a] == u.box().hi[a]);
    }
  }
}

TEST_CASE("field reader rejects malformed streams") {
  {
    std::stringstream ss("notafield 1\n");
    CHECK_THROWS_AS(read_field(ss), std::runtime_error);
  }
  {
    std::stringstream ss("khessfield 2\n");
    CHECK_THROWS_AS(read_field(ss), std::runtime_error);
  }
  {
    // truncated value list
    std::stringstream ss("khessfield 1\ndim 1\nbox 0 1\nresolution 5\nvalues\n1\n2\n");
    CHECK_THROWS_AS(read_field(ss), std::runtime_error);
  }
}

TEST_CASE("doubles are printed with full round-trip precision") {
  Sampler rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-30.0, 30.0));
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("estimate csv layout") {
  EstimateReport rep;
  rep.id = "demo";
  rep.schedule = {0.1, 0.05};
  rep.lhs = {1.0, 2.0};
  rep.rhs = {3.0, 4.0};
  rep.ratio = {1.0 / 3.0, 0.5};
  std::stringstream ss;
  write_estimate_csv(ss, rep);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "schedule,lhs,rhs,ratio");
  int rows = 0;
  while (std::getline(ss, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("json conversion carries the verdict names") {
  EstimateReport rep;
  rep.id = "demo";
  rep.verdict = EstimateVerdict::Growing;
  const json j = to_json(rep);
  CHECK(j.at("verdict") == "growing");
  CHECK(j.at("id") == "demo");
}
