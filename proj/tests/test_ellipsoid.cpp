#include <doctest.h>

#include <cmath>
#include <random>

#include "drac/cube.hpp"
#include "drac/ellipsoid.hpp"
#include "drac/errors.hpp"
#include "drac/qrac.hpp"
#include "drac/seesaw.hpp"

using namespace drac;

TEST_CASE("identity and depolarizing ellipsoids") {
  const EllipsoidParams id = ellipsoid_params(choi_identity());
  for (int k = 0; k < 3; ++k) {
    CHECK(id.lambda[k] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(id.t[k]) < 1e-10);
  }
  CHECK_FALSE(id.improper);
  CHECK(cp_necessary_condition(id));  // holds with equality

  const EllipsoidParams dep = ellipsoid_params(choi_depolarizing());
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(dep.lambda[k]) < 1e-10);
    CHECK(std::abs(dep.t[k]) < 1e-10);
  }
  CHECK(cp_necessary_condition(dep));
}

TEST_CASE("amplitude-damping style parameters recovered") {
  // lambda = (sqrt(1-g), sqrt(1-g), 1-g), t = (0,0,g) with g = 0.5
  BlochAffine a;
  const double g = 0.5;
  a.l[0][0] = a.l[1][1] = std::sqrt(1.0 - g);
  a.l[2][2] = 1.0 - g;
  a.t[2] = g;
  const ChoiMatrix j = choi_of_bloch_affine(a);
  REQUIRE(validate_choi(j).cp);
  REQUIRE(validate_choi(j).tp);
  const EllipsoidParams e = ellipsoid_params(j);
  CHECK(e.lambda[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(e.lambda[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-8));
  CHECK(e.lambda[2] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(std::abs(e.t[2]) == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(cp_necessary_condition(e));
}

TEST_CASE("cp necessary condition examples") {
  EllipsoidParams unitary_case;
  unitary_case.lambda[0] = unitary_case.lambda[1] = unitary_case.lambda[2] = 1.0;
  CHECK(cp_necessary_condition(unitary_case));

  // the reflection geometry: equatorial axes sqrt(2/3), offset 1/sqrt(3);
  // lambda_3 = 0.5 < sqrt(3) - 1 violates the bound
  EllipsoidParams refl;
  refl.lambda[0] = refl.lambda[1] = std::sqrt(2.0 / 3.0);
  refl.lambda[2] = 0.5;
  refl.t[2] = 1.0 / std::sqrt(3.0);
  CHECK_FALSE(cp_necessary_condition(refl));

  EllipsoidParams zero;
  CHECK(cp_necessary_condition(zero));
}

TEST_CASE("every valid channel satisfies the necessary condition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const EllipsoidParams e = ellipsoid_params(random_kraus_pair_channel(rng));
    REQUIRE(cp_necessary_condition(e));
    for (int k = 0; k < 3; ++k) REQUIRE(std::abs(e.lambda[k]) <= 1.0 + 1e-9);
  }
}

TEST_CASE("reflection targets are infeasible with the printed certificate bounds") {
  const double s = 1.0 / std::sqrt(3.0);
  // face with z = +: sources; R_XY reflection: targets with z flipped
  std::array<BlochVector, 4> sources, targets;
  const auto face = top_face_assignment();
  for (int k = 0; k < 4; ++k) {
    sources[k] = vertex_bloch(face[k]);
    targets[k] = {sources[k].x, sources[k].y, -sources[k].z};
  }
  const FeasibilityResult r = reflection_feasibility(targets, sources);
  CHECK_FALSE(r.feasible);
  CHECK(r.lambda3_required == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-6));
  CHECK(r.lambda3_allowed == doctest::Approx(1.0 - s).epsilon(1e-6));

  // R_XZ and R_YZ analogues: sources on one side of the reflection plane
  for (int axis = 0; axis < 2; ++axis) {
    std::array<BlochVector, 4> src, tgt;
    int k = 0;
    for (int sx = -1; sx <= 1; sx += 2)
      for (int sz = -1; sz <= 1; sz += 2) {
        if (axis == 0) {
          src[k] = {sx * s, s, sz * s};
          tgt[k] = {sx * s, -s, sz * s};
        } else {  // R_YZ flips x
          src[k] = {s, sx * s, sz * s};
          tgt[k] = {-s, sx * s, sz * s};
        }
        ++k;
      }
    const FeasibilityResult rr = reflection_feasibility(tgt, src);
    CHECK_FALSE(rr.feasible);
    CHECK(rr.lambda3_required == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-6));
    CHECK(rr.lambda3_allowed == doctest::Approx(1.0 - s).epsilon(1e-6));
  }
}

TEST_CASE("all 15 admissible rotations are feasible with a unitary certificate") {
  for (const auto& rot : enumerate_cube_rotations()) {
    if (!rot.admissible) continue;
    const auto subsets = admissible_subsets(rot);
    REQUIRE(!subsets.empty());
    std::array<BlochVector, 4> sources, targets;
    for (int k = 0; k < 4; ++k) {
      sources[k] = vertex_bloch(subsets[0][k]);
      targets[k] = rot.apply(sources[k]);
    }
    const FeasibilityResult r = reflection_feasibility(targets, sources);
    CHECK(r.feasible);
    REQUIRE(r.unitary_certificate.has_value());
    // the certificate channel really maps source states to target states
    for (int k = 0; k < 4; ++k) {
      const ComplexMatrix out =
          apply_channel(*r.unitary_certificate, bloch_to_state(sources[k], true));
      CHECK(distance(state_to_bloch(out), targets[k]) < 1e-8);
    }
  }
}

TEST_CASE("identity targets are feasible") {
  std::array<BlochVector, 4> pts;
  const auto face = top_face_assignment();
  for (int k = 0; k < 4; ++k) pts[k] = vertex_bloch(face[k]);
  const FeasibilityResult r = reflection_feasibility(pts, pts);
  CHECK(r.feasible);
}
