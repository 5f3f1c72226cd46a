#include <doctest.h>

#include <cmath>
#include <random>

#include "drac/bell.hpp"
#include "drac/lp.hpp"

using namespace drac;

TEST_CASE("box maximum") {
  // max x1 + x2 s.t. x1 <= 1, x2 <= 1
  LpProblem p(2);
  p.objective = {1.0, 1.0};
  p.add_leq({1.0, 0.0}, 1.0);
  p.add_leq({0.0, 1.0}, 1.0);
  const LpSolution s = lp_maximize(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("infeasible equalities") {
  LpProblem p(1);
  p.objective = {1.0};
  p.add_equality({1.0}, 1.0);
  p.add_equality({1.0}, 2.0);
  CHECK(lp_maximize(p).status == LpStatus::infeasible);
}

TEST_CASE("unbounded ray") {
  LpProblem p(2);
  p.objective = {1.0, 0.0};
  p.add_equality({0.0, 1.0}, 1.0);
  CHECK(lp_maximize(p).status == LpStatus::unbounded);
}

TEST_CASE("CHSH win probability over the NS polytope reaches the PR box value") {
  // variables p(a,b|z1,z2), maximize (1/4) sum of winning entries
  LpProblem lp(16);
  auto idx = [](int a, int b, int z1, int z2) { return ((a * 2 + b) * 2 + z1) * 2 + z2; };
  for (int z1 = 0; z1 < 2; ++z1)
    for (int z2 = 0; z2 < 2; ++z2) {
      std::vector<double> row(16, 0.0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) row[idx(a, b, z1, z2)] = 1.0;
      lp.add_equality(std::move(row), 1.0);
    }
  for (int b = 0; b < 2; ++b)
    for (int z2 = 0; z2 < 2; ++z2) {
      std::vector<double> row(16, 0.0);
      for (int a = 0; a < 2; ++a) {
        row[idx(a, b, 0, z2)] += 1.0;
        row[idx(a, b, 1, z2)] -= 1.0;
      }
      lp.add_equality(std::move(row), 0.0);
    }
  for (int a = 0; a < 2; ++a)
    for (int z1 = 0; z1 < 2; ++z1) {
      std::vector<double> row(16, 0.0);
      for (int b = 0; b < 2; ++b) {
        row[idx(a, b, z1, 0)] += 1.0;
        row[idx(a, b, z1, 1)] -= 1.0;
      }
      lp.add_equality(std::move(row), 0.0);
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int z1 = 0; z1 < 2; ++z1)
        for (int z2 = 0; z2 < 2; ++z2)
          if ((a ^ b) == (z1 & z2)) lp.objective[idx(a, b, z1, z2)] = 0.25;

  const LpSolution s = lp_maximize(lp);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == doctest::Approx(1.0).epsilon(1e-9));

  // cross-check against the 24 known extremal points
  double best_vertex = 0.0;
  for (const auto& v : ns22_vertices()) {
    double val = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int z1 = 0; z1 < 2; ++z1)
          for (int z2 = 0; z2 < 2; ++z2)
            if ((a ^ b) == (z1 & z2)) val += 0.25 * v[idx(a, b, z1, z2)];
    best_vertex = std::max(best_vertex, val);
  }
  CHECK(best_vertex == doctest::Approx(s.value).epsilon(1e-10));
}

TEST_CASE("primal-dual agreement on 100 random feasible problems") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::uniform_int_distribution<int> dim(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = dim(rng), m = dim(rng) % n + 1;
    // random A, feasible by construction: b = A x0 with x0 > 0
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> x0(n), b(m, 0.0);
    for (int j = 0; j < n; ++j) x0[j] = u(rng);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = u(rng) - 1.0;
        b[i] += a[i][j] * x0[j];
      }
    LpProblem p(n);
    for (int j = 0; j < n; ++j) p.objective[j] = -u(rng);  // bounded: maximize negative costs
    for (int i = 0; i < m; ++i) p.add_equality(a[i], b[i]);
    const LpSolution primal = lp_maximize(p);
    REQUIRE(primal.status == LpStatus::optimal);

    // dual: min b.y s.t. A^T y >= c, y free -> maximize -b.(y+ - y-) with surplus
    LpProblem d(2 * m + n);
    for (int i = 0; i < m; ++i) {
      d.objective[i] = -b[i];
      d.objective[m + i] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(2 * m + n, 0.0);
      for (int i = 0; i < m; ++i) {
        row[i] = a[i][j];
        row[m + i] = -a[i][j];
      }
      row[2 * m + j] = -1.0;
      d.add_equality(std::move(row), p.objective[j]);
    }
    // dual.value = max(-b.y) = -(min b.y) = -primal.value by strong duality
    const LpSolution dual = lp_maximize(d);
    REQUIRE(dual.status == LpStatus::optimal);
    CHECK(std::abs(primal.value + dual.value) < 1e-6);
  }
}
