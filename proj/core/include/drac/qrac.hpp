#pragma once
#include <array>
#include <utility>

#include "drac/channel.hpp"
#include "drac/cube.hpp"
#include "drac/task.hpp"

namespace drac {

inline constexpr double kPQ = 0.7886751345948128822;  // (1+sqrt(3))/(2 sqrt(3))

struct Measurement {
  ComplexMatrix e0{2, 2};  // effect for outcome z = 0
  ComplexMatrix e1{2, 2};
};

// prepare (x0,x1) -> channel by x2 -> binary measurement by y
struct QracStrategy {
  std::array<Ket, 4> states;           // index 2*x0 + x1, pure
  std::array<ChoiMatrix, 2> channels;  // index x2
  std::array<Measurement, 3> meas;     // index y
};

// Eq.-family encoding state for input bits (x0,x1,x2); its Bloch vector is the
// cube vertex ((-1)^x1, (-1)^x0, (-1)^x2)/sqrt(3).
Ket encoding_ket(int x0, int x1, int x2);
ComplexMatrix encoding_state(int x0, int x1, int x2);

// Binary measurement along a Bloch axis; outcome 0 is the +axis effect.
Measurement axis_measurement(const BlochVector& axis);
// sigma_Y, sigma_X, sigma_Z for y = 0, 1, 2
std::array<Measurement, 3> mub_measurements();

void validate_strategy(const QracStrategy& s);  // throws InvalidStrategy

// Exact Born-rule average success probability.
double eval_qrac_strategy(const QracStrategy& s, const TaskSpec& task);
double qrac_success_probability(const QracStrategy& s, int x0, int x1, int x2, int y, int z);

// Assignment of preparation vertices: (x0,x1) -> vertex used when x2 = 0.
using VertexAssignment = std::array<CubeVertex, 4>;  // index 2*x0 + x1

// Canonical assignments reproducing the QRAC rows of the eight-task table:
// R_X(pi) pairs with the top face, the other three rows with the mixed set
// whose z-sign follows x0.
VertexAssignment top_face_assignment();
VertexAssignment z_follows_x0_assignment();

// Derive the task realized by preparing `assignment`, applying `rotation` when
// x2 = 1, and measuring in the MUBs; the strategy achieves success (1+sqrt3)/
// (2 sqrt3) on every (x,y) term. Throws InadmissibleRotation when the rotation
// does not map the assignment's vertex set onto its complement.
std::pair<TaskSpec, QracStrategy> build_qrac_task(const CubeRotation& rotation,
                                                  const VertexAssignment& assignment);

}  // namespace drac
