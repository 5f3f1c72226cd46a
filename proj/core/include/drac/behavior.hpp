#pragma once
#include <array>

namespace drac {

// Tripartite conditional probability table P(a,b,c | z1,z2,y) for the Bell
// scenario with binary z1, z2 and ternary y.
class Behavior {
 public:
  double& at(int a, int b, int c, int z1, int z2, int y) { return p_[index(a, b, c, z1, z2, y)]; }
  double at(int a, int b, int c, int z1, int z2, int y) const { return p_[index(a, b, c, z1, z2, y)]; }

  double normalization_residual() const;  // max over input triples
  double no_signaling_residual() const;   // max over the three marginal conditions

  static constexpr int index(int a, int b, int c, int z1, int z2, int y) {
    return ((((a * 2 + b) * 2 + c) * 2 + z1) * 2 + z2) * 3 + y;
  }

 private:
  std::array<double, 144> p_{};
};

Behavior uniform_behavior();  // all P = 1/8

}  // namespace drac
