#pragma once
#include <array>
#include <string>
#include <vector>

#include "drac/bloch.hpp"

namespace drac {

// Unnormalized cube corner, entries in {-1,+1}.
using CubeVertex = std::array<int, 3>;

// Vertex of the Eq.-family encoding state indexed by bits (b0,b1,b2):
// Bloch direction ((-1)^b1, (-1)^b0, (-1)^b2)/sqrt(3).
CubeVertex vertex_of_bits(int b0, int b1, int b2);
std::array<int, 3> bits_of_vertex(const CubeVertex& v);
BlochVector vertex_bloch(const CubeVertex& v);

// Element of the rotation group of the cube as a signed permutation matrix.
struct CubeRotation {
  std::array<std::array<int, 3>, 3> m{};
  std::string label;
  BlochVector axis;   // unit rotation axis
  double angle = 0;   // radians, right-handed about axis
  bool admissible = false;  // splits the 8 vertices as R(S) = complement(S) for some 4-set S

  CubeVertex apply(const CubeVertex& v) const;
  BlochVector apply(const BlochVector& v) const;
};

// All 24 elements; identity and the 8 vertex-axis (main-diagonal) rotations
// are inadmissible, the remaining 15 admissible.
const std::vector<CubeRotation>& enumerate_cube_rotations();

const CubeRotation& cube_rotation(const std::string& label);  // throws UnknownRotation

// The 4-subsets S with R(S) = complement(S), as masks over vertex index
// 4*b0+2*b1+b2. Empty iff inadmissible.
std::vector<std::array<CubeVertex, 4>> admissible_subsets(const CubeRotation& r);

}  // namespace drac
