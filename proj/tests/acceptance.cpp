// Acceptance suite: one line per criterion, exact tolerances, nonzero exit on
// any failure. Criteria 2 and 3 carry expectations that the enumeration and
// optimizer provably exceed (see the comparison notes printed below them).
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "drac/bell.hpp"
#include "drac/classical.hpp"
#include "drac/earac.hpp"
#include "drac/eig.hpp"
#include "drac/ellipsoid.hpp"
#include "drac/json_io.hpp"
#include "drac/lp.hpp"
#include "drac/optics.hpp"
#include "drac/reference.hpp"
#include "drac/seesaw.hpp"

using namespace drac;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  const char* name;
  clock_type::time_point start = clock_type::now();
  bool ok = true;
  std::vector<std::string> notes;

  explicit Criterion(const char* n) : name(n) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }

  void finish(double budget_seconds = 0.0) {
    const double dt = std::chrono::duration<double>(clock_type::now() - start).count();
    if (budget_seconds > 0.0 && dt >= budget_seconds) {
      ok = false;
      notes.push_back("runtime " + std::to_string(dt) + " s exceeds budget");
    }
    std::printf("[%s] %s (%.2f s)\n", ok ? "PASS" : "FAIL", name, dt);
    for (const auto& n : notes) std::printf("        %s\n", n.c_str());
    if (!ok) ++g_failures;
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

void criterion1_eight_task_reproduction() {
  Criterion c("criterion 1: eight-task reproduction at (1+sqrt3)/(2 sqrt3)");
  for (int row = 1; row <= 4; ++row) {
    const double v = eval_earac(table1_earac_strategy(row), table1_task(row));
    c.require(std::abs(v - kPQ) <= 1e-9, "EARAC row " + std::to_string(row) + " = " + fmt(v));
  }
  for (int row = 5; row <= 8; ++row) {
    const double v = eval_qrac_strategy(table1_qrac_strategy(row), table1_task(row));
    c.require(std::abs(v - kPQ) <= 1e-9, "QRAC row " + std::to_string(row) + " = " + fmt(v));
  }
  c.finish(1.0);
}

void criterion2_classical_bounds() {
  Criterion c("criterion 2: classical bounds by exhaustive enumeration");
  for (int row = 1; row <= 8; ++row) {
    const ClassicalOptimum opt = classical_optimum(table1_task(row));
    c.require(opt.num == 16 && opt.den == 24,
              "row " + std::to_string(row) + " chain optimum " + std::to_string(opt.num) +
                  "/24, expected 16/24");
  }
  const StandardRacOptimum std_rac = standard_rac_classical_optimum();
  c.require(std_rac.num == 18 && std_rac.den == 24,
            "standard RAC " + std::to_string(std_rac.num) + "/24, expected 18/24");
  if (!c.ok) {
    c.note("the unrestricted chain provably exceeds 2/3 on rows 1-5 (AND-encoder");
    c.note("strategies); the message-parity protocol class matches the 2/3");
    std::string parities = "reference value: parity-protocol optima =";
    for (int row = 1; row <= 8; ++row)
      parities += " " + std::to_string(parity_protocol_optimum(table1_task(row)).num) + "/24";
    c.note(parities);
  }
  c.finish(1.0);
}

void criterion3_seesaw_values() {
  Criterion c("criterion 3: see-saw values, 50 restarts, fixed seed");
  const double targets[8] = {kSw1, kSw2, kSw3, kSw3, kPQ, kPQ, kPQ, kPQ};
  for (int row = 1; row <= 8; ++row) {
    SeesawOptions opt;
    opt.restarts = 50;
    opt.seed = 0;
    const SeesawResult r = run_seesaw(table1_task(row), opt);
    const double tol = (row <= 4) ? 1e-4 : 1e-6;
    c.require(std::abs(r.value - targets[row - 1]) <= tol,
              "row " + std::to_string(row) + " = " + fmt(r.value) + ", expected " +
                  fmt(targets[row - 1]));
    if (row <= 4)
      c.require(r.value < kPQ - 1e-3,
                "row " + std::to_string(row) + " breached the reflection no-go ceiling");
  }
  if (!c.ok) {
    c.note("row 1 converges to (7+sqrt5)/12 = " + fmt(kSw2) + " > 0.75: composing the");
    c.note("row-2 strategy's x2=1 channel with R_Y(pi) is a valid row-1 strategy at");
    c.note("that value, so 0.75 is not the row-1 optimum");
  }
  c.finish(60.0);
}

void criterion4_reference_validation() {
  Criterion c("criterion 4: reference strategies validate and reproduce their values");
  const double stated[3] = {0.75, kSw2, kSw3};
  for (int idx = 1; idx <= 3; ++idx) {
    const QracStrategy s = reference_strategy(idx);
    for (int x2 = 0; x2 < 2; ++x2) {
      const ChoiValidation v = validate_choi(s.channels[x2]);
      c.require(v.min_eigenvalue >= -1e-8,
                "strategy " + std::to_string(idx) + " channel min eig " + fmt(v.min_eigenvalue));
      c.require(v.tp_residual <= 1e-8,
                "strategy " + std::to_string(idx) + " channel TP residual " + fmt(v.tp_residual));
    }
    const double v = eval_qrac_strategy(s, table1_task(idx));
    c.require(std::abs(v - stated[idx - 1]) <= 1e-9,
              "strategy " + std::to_string(idx) + " value " + fmt(v));
  }
  const double direct = eval_qrac_strategy(reference_task1_strategy(false), table1_task(1));
  const double swapped = eval_qrac_strategy(reference_task1_strategy(true), table1_task(1));
  c.note("task-1 sign ambiguity: literal (-1)^{x2} substitution gives " + fmt(direct) +
         ", swapped signs give " + fmt(swapped) + "; the literal reading achieves 0.75");
  c.finish();
}

void criterion5_nogo() {
  Criterion c("criterion 5: reflection no-go with certificate bounds");
  const double s = 1.0 / std::sqrt(3.0);
  const char* names[3] = {"R_XY", "R_XZ", "R_YZ"};
  for (int refl = 0; refl < 3; ++refl) {
    std::array<BlochVector, 4> sources, targets;
    int k = 0;
    for (int u = -1; u <= 1; u += 2)
      for (int v = -1; v <= 1; v += 2) {
        switch (refl) {
          case 0: sources[k] = {u * s, v * s, s}; targets[k] = {u * s, v * s, -s}; break;
          case 1: sources[k] = {u * s, s, v * s}; targets[k] = {u * s, -s, v * s}; break;
          default: sources[k] = {s, u * s, v * s}; targets[k] = {-s, u * s, v * s}; break;
        }
        ++k;
      }
    const FeasibilityResult r = reflection_feasibility(targets, sources);
    c.require(!r.feasible, std::string(names[refl]) + " unexpectedly feasible");
    c.require(std::abs(r.lambda3_required - (std::sqrt(3.0) - 1.0)) <= 1e-6,
              std::string(names[refl]) + " required bound " + fmt(r.lambda3_required));
    c.require(std::abs(r.lambda3_allowed - (1.0 - s)) <= 1e-6,
              std::string(names[refl]) + " allowed bound " + fmt(r.lambda3_allowed));
  }
  int feasible_rotations = 0;
  for (const auto& rot : enumerate_cube_rotations()) {
    if (!rot.admissible) continue;
    const auto subsets = admissible_subsets(rot);
    std::array<BlochVector, 4> sources, targets;
    for (int k = 0; k < 4; ++k) {
      sources[k] = vertex_bloch(subsets[0][k]);
      targets[k] = rot.apply(sources[k]);
    }
    if (reflection_feasibility(targets, sources).feasible) ++feasible_rotations;
  }
  c.require(feasible_rotations == 15,
            "feasible rotations " + std::to_string(feasible_rotations) + ", expected 15");
  c.finish(1.0);
}

void criterion6_bell_bounds() {
  Criterion c("criterion 6: Bell bounds and the genuine-nonlocality threshold");
  const Behavior earac = earac_behavior(table1_earac_strategy(1));
  for (int t = 0; t < 2; ++t)
    for (int step = 0; step <= 8; ++step) {
      const double q = 0.02 * step;
      const BellFunctional f{t, q};
      const double lm = local_max(f).value;
      c.require(std::abs(lm - (2.0 / 3.0 + q / 2.0)) <= 1e-8,
                "local max t=" + std::to_string(t) + " q=" + fmt(q) + " = " + fmt(lm));
      const double ab = nsbl_max(f, Partition::AB_C).value;
      c.require(std::abs(ab - (2.0 / 3.0 + q / 2.0)) <= 1e-6,
                "NSBL_AB t=" + std::to_string(t) + " q=" + fmt(q) + " = " + fmt(ab));
      const double hard = (t == 0) ? nsbl_max(f, Partition::BC_A).value
                                   : nsbl_max(f, Partition::AC_B).value;
      c.require(std::abs(hard - (5.0 / 6.0 - q / 2.0)) <= 1e-6,
                "NSBL hard partition t=" + std::to_string(t) + " q=" + fmt(q) + " = " + fmt(hard));
      const double bv = bell_value(f, earac);
      c.require(std::abs(bv - kPQ) <= 1e-9,
                "B(t,q) on the EARAC behavior t=" + std::to_string(t) + " q=" + fmt(q) + " = " +
                    fmt(bv));
    }
  double lo = 0.0, hi = 1.0 / 6.0;
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    (gmn_witness(mid).certified ? hi : lo) = mid;
  }
  const double qstar = (2.0 - std::sqrt(3.0)) / 3.0;
  c.require(std::abs(hi - qstar) <= 1e-6, "threshold " + fmt(hi) + " vs " + fmt(qstar));
  c.finish(30.0);
}

void criterion7_ghz_decomposition() {
  Criterion c("criterion 7: GHZ decomposition residual for 100 random angles");
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::acos(-1.0));
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial)
    worst = std::max(worst, ghz_decomposition_check(u(rng), u(rng)));
  c.require(worst <= 1e-9, "worst residual " + fmt(worst));
  c.finish();
}

void criterion8_optics() {
  Criterion c("criterion 8: design-table verification and measured-average deviations");
  for (const DesignTableRow& row : design_table_rows()) {
    const double fid = verify_preparation(row);
    c.require(fid >= 1.0 - 1e-4, "preparation task " + std::to_string(row.task) + " psi" +
                                     std::to_string(row.x0) + std::to_string(row.x1) + " fidelity " +
                                     fmt(fid));
    const double dist = verify_unitary(row.unitary_label, row.theta3, row.gamma, row.theta4);
    c.require(dist <= 1e-6, "unitary " + row.unitary_label + " distance " + fmt(dist));
  }
  // measured averages against the ideal value
  const std::string path = std::string(DRAC_DATA_DIR) + "/measured_averages.csv";
  std::ifstream in(path);
  c.require(static_cast<bool>(in), "cannot open " + path);
  std::string line;
  int rows_checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("task", 0) == 0) continue;
    int task;
    double p, sigma;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf", &task, &p, &sigma) == 3) {
      const double dev = (p - kPQ) / sigma;
      c.require(std::abs(dev) <= 1.1,
                "task " + std::to_string(task) + " average deviates " + fmt(dev) + " sigma");
      ++rows_checked;
    }
  }
  c.require(rows_checked == 4, "expected 4 average rows");
  c.finish();
}

void criterion9_property_suites() {
  Criterion c("criterion 9: randomized property suites");
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  double worst_eig = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) {
      m(i, i) = g(rng);
      for (int j = i + 1; j < 4; ++j) {
        m(i, j) = cx(g(rng), g(rng));
        m(j, i) = std::conj(m(i, j));
      }
    }
    const EigResult e = herm_eig(m);
    ComplexMatrix rec(4, 4);
    for (std::size_t k = 0; k < 4; ++k) rec += projector(eig_column(e, k)) * cx(e.values[k]);
    worst_eig = std::max(worst_eig, rec.max_abs_diff(m));
  }
  c.require(worst_eig <= 1e-8, "eigen reconstruction worst " + fmt(worst_eig));

  double worst_bloch = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    BlochVector v{u(rng), u(rng), u(rng)};
    if (v.norm() > 1.0) {
      const double s = 0.99 / v.norm();
      v = {v.x * s, v.y * s, v.z * s};
    }
    worst_bloch = std::max(worst_bloch, distance(v, state_to_bloch(bloch_to_state(v))));
  }
  c.require(worst_bloch <= 1e-9, "bloch round trip worst " + fmt(worst_bloch));

  double worst_trace = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ChoiMatrix j = random_kraus_pair_channel(rng);
    const double w = 0.5 * (u(rng) + 1.0);
    const ComplexMatrix rho = projector(random_pure_state(rng)) * cx(w) +
                              projector(random_pure_state(rng)) * cx(1.0 - w);
    worst_trace = std::max(worst_trace, std::abs((apply_channel(j, rho).trace() - cx(1.0)).real()));
  }
  c.require(worst_trace <= 1e-9, "channel trace preservation worst " + fmt(worst_trace));

  int duals_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4, m = 1 + trial % n;
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m, 0.0), feas(n);
    for (int j = 0; j < n; ++j) feas[j] = u(rng) * 0.5 + 1.0;  // strictly positive point
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = u(rng);
        b[i] += a[i][j] * feas[j];
      }
    LpProblem p(n);
    for (int j = 0; j < n; ++j) p.objective[j] = -std::abs(u(rng)) - 0.1;
    for (int i = 0; i < m; ++i) p.add_equality(a[i], b[i]);
    const LpSolution primal = lp_maximize(p);
    if (primal.status != LpStatus::optimal) continue;
    LpProblem d(2 * m + n);
    for (int i = 0; i < m; ++i) {
      d.objective[i] = -b[i];
      d.objective[m + i] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(2 * m + n, 0.0);
      for (int i = 0; i < m; ++i) {
        row[i] = a[i][j];
        row[m + i] = -a[i][j];
      }
      row[2 * m + j] = -1.0;
      d.add_equality(row, p.objective[j]);
    }
    const LpSolution dual = lp_maximize(d);
    if (dual.status == LpStatus::optimal && std::abs(primal.value + dual.value) <= 1e-6) ++duals_ok;
  }
  c.require(duals_ok == 100, "primal-dual agreement on " + std::to_string(duals_ok) + "/100");

  SeesawOptions opt;
  opt.restarts = 3;
  opt.seed = 1;
  const SeesawResult r = run_seesaw(table1_task(5), opt);
  bool monotone = true;
  for (std::size_t k = 1; k < r.objective_trace.size(); ++k)
    if (r.objective_trace[k] < r.objective_trace[k - 1] - 1e-12) monotone = false;
  c.require(monotone, "see-saw objective trace not monotone");
  c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance suite\n================\n");
  criterion1_eight_task_reproduction();
  criterion2_classical_bounds();
  criterion3_seesaw_values();
  criterion4_reference_validation();
  criterion5_nogo();
  criterion6_bell_bounds();
  criterion7_ghz_decomposition();
  criterion8_optics();
  criterion9_property_suites();
  std::printf("================\n%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
