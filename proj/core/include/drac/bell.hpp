#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "drac/behavior.hpp"
#include "drac/lp.hpp"

namespace drac {

// B(t,q) = (1/4) sum_{z1,z2} [ w0 P(a^b^c=0|z1,z2,0) + w1 P(a^b^c=z1|z1,z2,1)
//          + w2 P(b^c=z2|z1,z2,2) ],  w = (1/3+q, 1/3+(-2)^t q, 1/3+(-2)^(t^1) q)
struct BellFunctional {
  int t = 0;
  double q = 0.0;

  std::array<double, 3> weights() const;
  double coeff(int a, int b, int c, int z1, int z2, int y) const;
};

double bell_value(const BellFunctional& f, const Behavior& p);

struct LocalStrategy {
  std::array<std::uint8_t, 2> alice{};    // a = alice[z1]
  std::array<std::uint8_t, 2> bob{};      // b = bob[z2]
  std::array<std::uint8_t, 3> charlie{};  // c = charlie[y]
};

Behavior behavior_of_local(const LocalStrategy& s);

struct LocalMaxResult {
  double value = 0.0;
  LocalStrategy witness;
};

// Exact maximum over the 4 x 4 x 8 = 128 deterministic strategies.
LocalMaxResult local_max(const BellFunctional& f);

enum class Partition { AB_C, AC_B, BC_A };

struct NsblResult {
  double value = 0.0;
  Behavior witness;
};

// Maximum of B over no-signaling-bilocal correlations: the lone party is
// enumerated over its deterministic strategies, the pair over its NS polytope
// by LP. Throws Error on LP failure.
NsblResult nsbl_max(const BellFunctional& f, Partition part);

struct GmnWitness {
  int t_choice = 0;               // t certifying the hardest bipartition
  double quantum_value = 0.0;     // (1+sqrt3)/(2 sqrt3)
  double best_bipartition_bound = 0.0;  // max over bipartitions of min over t
  bool certified = false;
};

// Genuine multipartite nonlocality of the EARAC value at bias q; certified
// strictly above the threshold q* = (2 - sqrt3)/3. Throws QOutOfRange.
GmnWitness gmn_witness(double q);

// The 24 vertices of the 2-input/2-output bipartite NS polytope (16 local
// deterministic points and 8 PR-box variants), P(a,b|z1,z2) flattened with
// index ((a*2+b)*2+z1)*2+z2.
std::vector<std::array<double, 16>> ns22_vertices();

}  // namespace drac
