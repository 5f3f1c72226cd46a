#include <doctest.h>

#include <random>

#include "drac/classical.hpp"
#include "drac/errors.hpp"
#include "drac/reference.hpp"
#include "drac/task.hpp"

using namespace drac;

TEST_CASE("truth table round trip through 24-bit form") {
  for (int i = 1; i <= 8; ++i) {
    const TaskSpec t = table1_task(i);
    const TaskSpec back = TaskSpec::from_bits(t.label(), t.truth_bits());
    CHECK(back == t);
  }
}

TEST_CASE("y weights") {
  TaskSpec t = table1_task(1);
  auto w = t.y_weights();
  CHECK(w[0] == doctest::Approx(1.0 / 3));
  t.set_bias(TaskBias{0, 0.1});
  w = t.y_weights();
  CHECK(w[0] == doctest::Approx(1.0 / 3 + 0.1));
  CHECK(w[1] == doctest::Approx(1.0 / 3 + 0.1));
  CHECK(w[2] == doctest::Approx(1.0 / 3 - 0.2));
  t.set_bias(TaskBias{1, 0.1});
  w = t.y_weights();
  CHECK(w[1] == doctest::Approx(1.0 / 3 - 0.2));
  CHECK(w[2] == doctest::Approx(1.0 / 3 + 0.1));
  CHECK(w[0] + w[1] + w[2] == doctest::Approx(1.0));
  CHECK_THROWS_AS(t.set_bias(TaskBias{0, 0.3}), QOutOfRange);
}

TEST_CASE("average_success basics") {
  const TaskSpec t = table1_task(1);
  CHECK(average_success(t, [](int, int, int, int) { return 1.0; }) == doctest::Approx(1.0));
  CHECK(average_success(t, [](int, int, int, int) { return 0.5; }) == doctest::Approx(0.5));
  CHECK_THROWS_AS(average_success(t, [](int, int, int, int) { return 1.5; }),
                  ProbabilityOutOfRange);
}

TEST_CASE("pairwise independence holds for all eight benchmark tasks") {
  for (int i = 1; i <= 8; ++i) CHECK(table1_task(i).outputs_pairwise_independent());
  // a correlated counterexample: f(x,0) = f(x,1) = x0
  const TaskSpec bad("bad", [](int x0, int, int x2, int y) { return y == 2 ? x2 : x0; });
  CHECK_FALSE(bad.outputs_pairwise_independent());
}

TEST_CASE("classical optimum invariant under y relabeling and decoder-side XOR") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> perm(0, 5);
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 1; i <= 8; ++i) {
    const TaskSpec t = table1_task(i);
    const long long base = classical_optimum(t).num;
    for (int trial = 0; trial < 8; ++trial) {
      const int* pp = perms[perm(rng)];
      const int g[3] = {bit(rng), bit(rng), bit(rng)};  // XOR by a function of y
      const TaskSpec relabeled("relabeled", [&](int x0, int x1, int x2, int y) {
        return t.f(x0, x1, x2, pp[y]) ^ g[y];
      });
      CHECK(classical_optimum(relabeled).num == base);
    }
  }
}
