#include "drac/reference.hpp"

#include <numbers>

#include "drac/cube.hpp"
#include "drac/errors.hpp"

namespace drac {

namespace {

constexpr double kPi = std::numbers::pi;

int task_fn(int index, int x0, int x1, int x2, int y) {
  const int s = x0 ^ x1;
  switch (index) {
    case 1: return y == 0 ? x0 : (y == 1 ? x1 : x2);
    case 2: return y == 0 ? (x0 ^ x2) : (y == 1 ? (x1 ^ x2) : x2);
    case 3: return y == 0 ? (x0 ^ (x2 & s)) : (y == 1 ? (x1 ^ (x2 & (s ^ 1))) : x2);
    case 4: return y == 0 ? (x0 ^ (x2 & (s ^ 1))) : (y == 1 ? (x1 ^ (x2 & s)) : x2);
    case 5: return y == 0 ? (x0 ^ x2) : (y == 1 ? x1 : x2);
    case 6: return y == 0 ? x0 : (y == 1 ? x1 : (x2 ^ x0));
    case 7: return y == 0 ? (x0 ^ x2) : (y == 1 ? x1 : x0);
    case 8: return y == 0 ? (x0 ^ x2) : (y == 1 ? (x1 ^ x2) : x0);
    default: throw UnknownTask("table1_task: index must be 1..8");
  }
}

const char* task_label(int index) {
  switch (index) {
    case 1: return "x0, x1, x2";
    case 2: return "x0^x2, x1^x2, x2";
    case 3: return "x0^x2(x0^x1), x1^x2(!(x0^x1)), x2";
    case 4: return "x0^x2(!(x0^x1)), x1^x2(x0^x1), x2";
    case 5: return "x0^x2, x1, x2";
    case 6: return "x0, x1, x2^x0";
    case 7: return "x0^x2, x1, x0";
    case 8: return "x0^x2, x1^x2, x0";
    default: throw UnknownTask("table1_task: index must be 1..8");
  }
}

const char* transformation_label(int index) {
  switch (index) {
    case 1: return "R_XY";
    case 2: return "R_XY R_Z(pi)";
    case 3: return "R_XY R_Z(pi/2)";
    case 4: return "R_XY R_Z(3pi/2)";
    case 5: return "R_X(pi)";
    case 6: return "R_X(3pi/2)";
    case 7: return "R_X(pi/2)";
    case 8: return "R_Z(pi)";
    default: return "";
  }
}

}  // namespace

TaskSpec table1_task(int index) {
  if (index < 1 || index > 8) throw UnknownTask("table1_task: index must be 1..8");
  return TaskSpec(task_label(index),
                  [index](int x0, int x1, int x2, int y) { return task_fn(index, x0, x1, x2, y); });
}

const std::array<Table1Row, 8>& table1_reference() {
  static const std::array<Table1Row, 8> rows = [] {
    std::array<Table1Row, 8> r{};
    for (int i = 1; i <= 8; ++i) {
      Table1Row& row = r[i - 1];
      row.index = i;
      row.task_label = task_label(i);
      row.transformation = transformation_label(i);
      if (i <= 4) {
        row.earac_value = kPQ;
        row.earac_provenance = "exact";
        row.qrac_value = (i == 1) ? kSw1 : (i == 2 ? kSw2 : kSw3);
        row.qrac_provenance = "SW reference";
      } else {
        row.earac_value = (i == 5) ? kAq5 : kAq678;
        row.earac_provenance = "AQ reference (not recomputed)";
        row.qrac_value = kPQ;
        row.qrac_provenance = "exact";
      }
    }
    return r;
  }();
  return rows;
}

EaracStrategy table1_earac_strategy(int index) {
  if (index < 1 || index > 4) throw UnknownTask("table1_earac_strategy: rows 1-4 only");
  const double phip[4] = {0.0, kPi, kPi / 2.0, 3.0 * kPi / 2.0};
  EaracStrategy s;
  s.family = Reflection::XY;
  s.phi_prime = phip[index - 1];
  return s;
}

std::pair<std::string, VertexAssignment> table1_qrac_recipe(int index) {
  switch (index) {
    case 5: return {"R_X(pi)", top_face_assignment()};
    case 6: return {"R_X(3pi/2)", z_follows_x0_assignment()};
    case 7: return {"R_X(pi/2)", z_follows_x0_assignment()};
    case 8: return {"R_Z(pi)", z_follows_x0_assignment()};
    default: throw UnknownTask("table1_qrac_recipe: rows 5-8 only");
  }
}

QracStrategy table1_qrac_strategy(int index) {
  const auto [label, assignment] = table1_qrac_recipe(index);
  return build_qrac_task(cube_rotation(label), assignment).second;
}

}  // namespace drac
