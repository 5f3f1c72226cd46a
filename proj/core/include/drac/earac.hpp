#pragma once
#include <utility>

#include "drac/behavior.hpp"
#include "drac/bloch.hpp"
#include "drac/task.hpp"

namespace drac {

enum class Reflection { XY, XZ, YZ };

// GHZ protocol: Alice measures by x0^x1 and sends m1 = a^x0; Bob measures by
// m1^x2 (with the phi'-dependent phase when x2 = 1) and sends m2 = m1^b;
// Charlie measures sigma_Y/sigma_X/sigma_Z by y and guesses z = m2^c.
// The XZ and YZ families conjugate Alice's and Bob's bases by R_X(pi) and
// R_Y(pi) respectively.
struct EaracStrategy {
  Reflection family = Reflection::XY;
  double phi_prime = 0.0;
  int decoder_flip = 0;  // z = m2 ^ c ^ decoder_flip

  double alice_phi(int x0_xor_x1) const;  // pi/4 (1 + 2 s)
  double bob_theta(int m1_xor_x2) const;  // acos sqrt((sqrt3 + (-1)^s)/(2 sqrt3))

  Ket alice_vector(int a, int x0_xor_x1) const;
  Ket bob_vector(int b, int m1_xor_x2, int x2) const;
  Ket charlie_vector(int c, int y) const;  // outcome 0 = +eigenstate
};

Ket ghz_state();  // (|000> + |111>)/sqrt(2)

// Reconstructs the GHZ product decomposition at angles (phi, theta) and
// returns the max-norm deviation from the GHZ state (identically ~0).
double ghz_decomposition_check(double phi, double theta);

void validate_earac(const EaracStrategy& s);  // throws InvalidStrategy

// Exact success probability by summing Born-rule joint outcomes with the
// message logic applied.
double earac_success_probability(const EaracStrategy& s, int x0, int x1, int x2, int y,
                                 int target_bit);
double eval_earac(const EaracStrategy& s, const TaskSpec& task);

// The task this family member is optimal for: each (x,y) success term equals
// (1+sqrt3)/(2 sqrt3) exactly. For the XY family and phi' in
// {0, pi, pi/2, 3pi/2} these are the first four rows of the eight-task table.
std::pair<TaskSpec, EaracStrategy> build_earac_task(Reflection refl, double phi_prime);

// P(a,b,c|z1,z2,y) with Alice's setting z1 = x0^x1 and Bob's z2 = x0^a^x2
// (the change of variables that removes the classical feed-forward).
Behavior earac_behavior(const EaracStrategy& s);

// Success probability recomputed through the behavior table; agrees with
// earac_success_probability for every input.
double earac_success_via_behavior(const EaracStrategy& s, const Behavior& p, int x0, int x1,
                                  int x2, int y, int target_bit);

}  // namespace drac
