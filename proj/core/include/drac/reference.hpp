#pragma once
#include <array>
#include <string>

#include "drac/earac.hpp"
#include "drac/qrac.hpp"
#include "drac/task.hpp"

namespace drac {

// The eight benchmark tasks: EARAC-optimal rows 1-4, QRAC-optimal rows 5-8.
// Reference constants from external solvers ([SW] see-saw, [AQ] almost
// quantum) are shipped as constants and never recomputed here.
struct Table1Row {
  int index = 0;
  std::string task_label;
  std::string transformation;
  double earac_value = 0.0;
  std::string earac_provenance;  // "exact" or "AQ reference (not recomputed)"
  double qrac_value = 0.0;
  std::string qrac_provenance;  // "exact" or "SW reference"
};

inline constexpr double kSw1 = 0.75;
inline constexpr double kSw2 = 0.76967233145831580;  // (7+sqrt5)/12
inline constexpr double kSw3 = 0.75458753860865778;  // (9+sqrt21)/18
inline constexpr double kAq5 = 0.7442;               // printed to 4 digits
inline constexpr double kAq678 = 0.7697;

TaskSpec table1_task(int index);  // 1..8, throws UnknownTask
const std::array<Table1Row, 8>& table1_reference();

// The optimal construction behind each row.
EaracStrategy table1_earac_strategy(int index);                    // rows 1-4
std::pair<std::string, VertexAssignment> table1_qrac_recipe(int index);  // rows 5-8
QracStrategy table1_qrac_strategy(int index);                      // rows 5-8

}  // namespace drac
