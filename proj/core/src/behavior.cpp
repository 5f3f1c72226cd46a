#include "drac/behavior.hpp"

#include <cmath>

namespace drac {

double Behavior::normalization_residual() const {
  double worst = 0.0;
  for (int z1 = 0; z1 < 2; ++z1)
    for (int z2 = 0; z2 < 2; ++z2)
      for (int y = 0; y < 3; ++y) {
        double s = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) s += at(a, b, c, z1, z2, y);
        worst = std::max(worst, std::abs(s - 1.0));
      }
  return worst;
}

double Behavior::no_signaling_residual() const {
  double worst = 0.0;
  // Alice's marginal independent of z1
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int z2 = 0; z2 < 2; ++z2)
        for (int y = 0; y < 3; ++y) {
          double m[2] = {0, 0};
          for (int z1 = 0; z1 < 2; ++z1)
            for (int a = 0; a < 2; ++a) m[z1] += at(a, b, c, z1, z2, y);
          worst = std::max(worst, std::abs(m[0] - m[1]));
        }
  // Bob's marginal independent of z2
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int z1 = 0; z1 < 2; ++z1)
        for (int y = 0; y < 3; ++y) {
          double m[2] = {0, 0};
          for (int z2 = 0; z2 < 2; ++z2)
            for (int b = 0; b < 2; ++b) m[z2] += at(a, b, c, z1, z2, y);
          worst = std::max(worst, std::abs(m[0] - m[1]));
        }
  // Charlie's marginal independent of y
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int z1 = 0; z1 < 2; ++z1)
        for (int z2 = 0; z2 < 2; ++z2) {
          double m[3] = {0, 0, 0};
          for (int y = 0; y < 3; ++y)
            for (int c = 0; c < 2; ++c) m[y] += at(a, b, c, z1, z2, y);
          worst = std::max(worst, std::max(std::abs(m[0] - m[1]), std::abs(m[1] - m[2])));
        }
  return worst;
}

Behavior uniform_behavior() {
  Behavior p;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int z1 = 0; z1 < 2; ++z1)
          for (int z2 = 0; z2 < 2; ++z2)
            for (int y = 0; y < 3; ++y) p.at(a, b, c, z1, z2, y) = 0.125;
  return p;
}

}  // namespace drac
