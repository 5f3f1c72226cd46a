#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "drac/earac.hpp"
#include "drac/qrac.hpp"
#include "drac/reference.hpp"

using namespace drac;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ghz decomposition residual vanishes") {
  const double theta0 = std::acos(std::sqrt((std::sqrt(3.0) + 1.0) / (2.0 * std::sqrt(3.0))));
  CHECK(ghz_decomposition_check(kPi / 4.0, theta0) <= 1e-9);
  CHECK(ghz_decomposition_check(0.0, 0.0) <= 1e-9);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 100; ++trial)
    REQUIRE(ghz_decomposition_check(u(rng), u(rng)) <= 1e-9);
}

TEST_CASE("rows 1-4 evaluate to P^Q exactly") {
  for (int row = 1; row <= 4; ++row) {
    const EaracStrategy s = table1_earac_strategy(row);
    const TaskSpec task = table1_task(row);
    CHECK(eval_earac(s, task) == doctest::Approx(kPQ).epsilon(1e-11));
    // uniform per-question success
    for (int x0 = 0; x0 < 2; ++x0)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
          for (int y = 0; y < 3; ++y)
            REQUIRE(earac_success_probability(s, x0, x1, x2, y, task.f(x0, x1, x2, y)) ==
                    doctest::Approx(kPQ).epsilon(1e-9));
  }
}

TEST_CASE("derived tasks match the printed rows 1-4") {
  for (int row = 1; row <= 4; ++row) {
    const EaracStrategy ref = table1_earac_strategy(row);
    const auto [task, strat] = build_earac_task(Reflection::XY, ref.phi_prime);
    CHECK(task.truth_bits() == table1_task(row).truth_bits());
  }
}

TEST_CASE("inverted decoder lands on the complement value") {
  EaracStrategy s = table1_earac_strategy(1);
  s.decoder_flip = 1;
  CHECK(eval_earac(s, table1_task(1)) == doctest::Approx(1.0 - kPQ).epsilon(1e-11));
}

TEST_CASE("XZ and YZ families pin the same optimum") {
  const double phis[4] = {0.0, kPi, kPi / 2.0, 3.0 * kPi / 2.0};
  for (const Reflection family : {Reflection::XZ, Reflection::YZ}) {
    for (const double pp : phis) {
      const auto [task, strat] = build_earac_task(family, pp);
      REQUIRE(eval_earac(strat, task) == doctest::Approx(kPQ).epsilon(1e-11));
    }
  }
}

TEST_CASE("behavior is normalized, no-signaling, with unbiased single-party marginals") {
  const EaracStrategy s = table1_earac_strategy(1);
  const Behavior p = earac_behavior(s);
  CHECK(p.normalization_residual() <= 1e-9);
  CHECK(p.no_signaling_residual() <= 1e-9);
  for (int z1 = 0; z1 < 2; ++z1) {
    double marg = 0.0;
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) marg += p.at(0, b, c, z1, 0, 0);
    CHECK(marg == doctest::Approx(0.5).epsilon(1e-11));
  }
}

TEST_CASE("behavior route reproduces the sequential evaluation") {
  // exact for every phi' = 0 family member, and for the gauge reduction the
  // success event depends on (z1, z2, y) only
  for (const Reflection family : {Reflection::XY, Reflection::XZ, Reflection::YZ}) {
    const auto [task, s] = build_earac_task(family, 0.0);
    const Behavior p = earac_behavior(s);
    for (int x0 = 0; x0 < 2; ++x0)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
          for (int y = 0; y < 3; ++y) {
            const int f = task.f(x0, x1, x2, y);
            const double seq = earac_success_probability(s, x0, x1, x2, y, f);
            const double via = earac_success_via_behavior(s, p, x0, x1, x2, y, f);
            REQUIRE(std::abs(seq - via) < 1e-12);
          }
  }
}

TEST_CASE("x0 gauge flip leaves the success probability unchanged") {
  // row 1: the success event in behavior variables is x0-free, so evaluating
  // the protocol at (x0, x1, x2) and (x0^1, x1^1, x2) with equal (z1, z2)
  // cells gives identical probabilities
  const EaracStrategy s = table1_earac_strategy(1);
  const TaskSpec task = table1_task(1);
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y) {
          const double a = earac_success_probability(s, x0, x1, x2, y, task.f(x0, x1, x2, y));
          const double b = earac_success_probability(s, x0 ^ 1, x1 ^ 1, x2, y,
                                                     task.f(x0 ^ 1, x1 ^ 1, x2, y));
          REQUIRE(std::abs(a - b) < 1e-12);
        }
}

TEST_CASE("every family member stays strictly below P^Q on the QRAC rows") {
  const double phis[4] = {0.0, kPi, kPi / 2.0, 3.0 * kPi / 2.0};
  for (int row = 5; row <= 8; ++row) {
    const TaskSpec task = table1_task(row);
    for (const Reflection family : {Reflection::XY, Reflection::XZ, Reflection::YZ})
      for (const double pp : phis) {
        const auto [own_task, strat] = build_earac_task(family, pp);
        const double v = eval_earac(strat, task);
        REQUIRE(v < kPQ - 1e-3);
      }
  }
}
