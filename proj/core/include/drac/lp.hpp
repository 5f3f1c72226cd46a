#pragma once
#include <cstddef>
#include <vector>

namespace drac {

// maximize c.x  subject to  A x = b,  x >= 0
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;

  explicit LpProblem(std::size_t n = 0) : num_vars(n), objective(n, 0.0) {}

  std::size_t add_variable(double obj_coeff = 0.0);
  void add_equality(std::vector<double> row, double rhs);
  // row.x <= rhs, realized by an added slack variable
  void add_leq(std::vector<double> row, double rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double value = 0.0;
  std::vector<double> x;
};

// Dense two-phase simplex with Bland's anti-cycling rule, pivot tolerance 1e-9.
LpSolution lp_maximize(const LpProblem& p);

}  // namespace drac
