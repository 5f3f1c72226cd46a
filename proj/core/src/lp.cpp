#include "drac/lp.hpp"

#include <cmath>
#include <limits>

#include "drac/errors.hpp"

namespace drac {

namespace {
constexpr double kPivotTol = 1e-9;
}

std::size_t LpProblem::add_variable(double obj_coeff) {
  objective.push_back(obj_coeff);
  for (auto& row : eq_rows) row.push_back(0.0);
  return num_vars++;
}

void LpProblem::add_equality(std::vector<double> row, double rhs) {
  if (row.size() > num_vars) throw Error("LpProblem: row longer than num_vars");
  row.resize(num_vars, 0.0);  // columns added later (slacks) default to zero
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

void LpProblem::add_leq(std::vector<double> row, double rhs) {
  if (row.size() > num_vars) throw Error("LpProblem: row longer than num_vars");
  const std::size_t slack = add_variable(0.0);
  row.resize(num_vars, 0.0);
  row[slack] = 1.0;
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(rhs);
}

namespace {

// Tableau rows: m constraint rows [coeffs | rhs], last row = objective (to be
// maximized) stored negated in reduced-cost form.
struct Tableau {
  std::size_t m, n;  // constraints, structural+artificial columns
  std::size_t n_enter;  // columns eligible to enter the basis
  std::vector<std::vector<double>> t;
  std::vector<std::size_t> basis;

  void pivot(std::size_t row, std::size_t col) {
    const double piv = t[row][col];
    for (double& v : t[row]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == row) continue;
      const double f = t[r][col];
      if (std::abs(f) < 1e-300) continue;
      for (std::size_t c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
    }
    basis[row] = col;
  }

  // Bland: entering = lowest-index column with positive reduced profit;
  // leaving = min ratio, ties by lowest basis variable index.
  // Returns false when optimal; throws on unbounded.
  bool step() {
    std::size_t col = n;
    for (std::size_t c = 0; c < n_enter; ++c) {
      if (t[m][c] > kPivotTol) { col = c; break; }
    }
    if (col == n) return false;
    std::size_t row = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][col] > kPivotTol) {
        const double ratio = t[r][n] / t[r][col];
        if (ratio < best - 1e-12 || (std::abs(ratio - best) <= 1e-12 && (row == m || basis[r] < basis[row]))) {
          best = ratio;
          row = r;
        }
      }
    }
    if (row == m) throw Error("unbounded");
    pivot(row, col);
    return true;
  }
};

}  // namespace

LpSolution lp_maximize(const LpProblem& p) {
  const std::size_t n0 = p.num_vars;
  const std::size_t m = p.eq_rows.size();

  Tableau tb;
  tb.m = m;
  tb.n = n0 + m;  // structural + artificial
  tb.n_enter = n0;  // artificial columns never enter the basis
  tb.t.assign(m + 1, std::vector<double>(tb.n + 1, 0.0));
  tb.basis.assign(m, 0);

  for (std::size_t r = 0; r < m; ++r) {
    const double sign = (p.eq_rhs[r] < 0) ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n0; ++c) tb.t[r][c] = sign * p.eq_rows[r][c];
    tb.t[r][tb.n] = sign * p.eq_rhs[r];
    tb.t[r][n0 + r] = 1.0;
    tb.basis[r] = n0 + r;
  }

  // Phase 1: maximize -(sum of artificials).
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] += tb.t[r][c];
  for (std::size_t r = 0; r < m; ++r) tb.t[m][n0 + r] = 0.0;

  LpSolution sol;
  try {
    while (tb.step()) {}
  } catch (const Error&) {
    throw Error("lp_maximize: phase 1 unbounded (internal)");
  }
  if (tb.t[m][tb.n] > 1e-8) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  // Drive remaining artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tb.basis[r] >= n0) {
      for (std::size_t c = 0; c < n0; ++c) {
        if (std::abs(tb.t[r][c]) > kPivotTol) { tb.pivot(r, c); break; }
      }
    }
  }

  // Phase 2 objective row: reduced costs of the true objective.
  for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] = 0.0;
  for (std::size_t c = 0; c < n0; ++c) tb.t[m][c] = p.objective[c];
  for (std::size_t r = 0; r < m; ++r) {
    if (tb.basis[r] < n0) {
      const double f = tb.t[m][tb.basis[r]];
      if (std::abs(f) < 1e-300) continue;
      for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] -= f * tb.t[r][c];
    }
  }
  try {
    while (tb.step()) {}
  } catch (const Error&) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x.assign(n0, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (tb.basis[r] < n0) sol.x[tb.basis[r]] = tb.t[r][tb.n];
  sol.value = 0.0;
  for (std::size_t c = 0; c < n0; ++c) sol.value += p.objective[c] * sol.x[c];
  return sol;
}

}  // namespace drac
