#include "drac/seesaw.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "drac/eig.hpp"
#include "drac/errors.hpp"

namespace drac {

namespace {

// weight of the (x,y) cell in the objective
double cell_weight(const TaskSpec& task, int y) { return task.y_weights()[y] / 8.0; }

double objective(const QracStrategy& s, const TaskSpec& task) {
  double total = 0.0;
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2) {
        const ComplexMatrix rho = apply_channel(s.channels[x2], projector(s.states[2 * x0 + x1]));
        for (int y = 0; y < 3; ++y) {
          const ComplexMatrix& e = task.f(x0, x1, x2, y) ? s.meas[y].e1 : s.meas[y].e0;
          total += cell_weight(task, y) * (e * rho).trace().real();
        }
      }
  return total;
}

ComplexMatrix positive_part_projector(const ComplexMatrix& d) {
  // Optimal effect for max Tr[E d] over 0 <= E <= I: the projector onto the
  // positive eigenspace. A vanishing difference leaves every effect optimal;
  // the tie goes to I/2.
  if (d.max_abs() <= 1e-12) return ComplexMatrix::identity(2) * cx(0.5);
  const EigResult e = herm_eig(d);
  ComplexMatrix p(2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    if (e.values[k] > 1e-12) p += projector(eig_column(e, k));
  return p;
}

}  // namespace

void opt_measurements(QracStrategy& s, const TaskSpec& task) {
  for (int y = 0; y < 3; ++y) {
    ComplexMatrix d(2, 2);
    for (int x0 = 0; x0 < 2; ++x0)
      for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2) {
          const ComplexMatrix rho = apply_channel(s.channels[x2], projector(s.states[2 * x0 + x1]));
          const double sign = task.f(x0, x1, x2, y) ? -1.0 : 1.0;
          d += rho * cx(sign * cell_weight(task, y));
        }
    s.meas[y].e0 = positive_part_projector(d);
    s.meas[y].e1 = ComplexMatrix::identity(2) - s.meas[y].e0;
  }
}

void opt_states(QracStrategy& s, const TaskSpec& task) {
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1) {
      ComplexMatrix score(2, 2);
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y) {
          const ComplexMatrix& e = task.f(x0, x1, x2, y) ? s.meas[y].e1 : s.meas[y].e0;
          score += channel_adjoint(s.channels[x2], e) * cx(cell_weight(task, y));
        }
      if (score.max_abs() < 1e-14) continue;  // unscored input: leave unchanged
      const EigResult eig = herm_eig(score);
      s.states[2 * x0 + x1] = eig_column(eig, 0);
    }
}

ChoiMatrix project_to_cptp(const ComplexMatrix& j) { return project_to_cptp(j, 2e-10, 120); }

ChoiMatrix project_to_cptp(const ComplexMatrix& j, double tol, int max_rounds) {
  // Dykstra alternating projections between the PSD cone and the TP affine
  // subspace; both projections are closed-form for 4x4. One Hermitian
  // eigendecomposition per round; the PSD residual of the returned matrix is
  // the defect the final correction introduced, tracked without a second
  // decomposition.
  ComplexMatrix x = (j + j.dagger()) * cx(0.5);
  ComplexMatrix increment(4, 4);  // Dykstra correction for the cone
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  for (int it = 0; it < max_rounds; ++it) {
    const ComplexMatrix y = x + increment;
    const EigResult e = herm_eig(y);
    ComplexMatrix psd(4, 4);
    double clipped = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (e.values[k] > 0.0) psd += projector(eig_column(e, k)) * cx(e.values[k]);
      else clipped = std::max(clipped, -e.values[k]);
    }
    increment = y - psd;
    const ComplexMatrix defect = id2 - ptrace_first(psd);
    ComplexMatrix tp = psd;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j2 = 0; j2 < 2; ++j2) tp(2 * k + i, 2 * k + j2) += 0.5 * defect(i, j2);
    x = tp;
    // the TP correction perturbs eigenvalues by at most its own norm
    if (clipped <= tol && defect.max_abs() <= tol) break;
  }
  ChoiMatrix out;
  out.j = x;
  return out;
}

void opt_channels(QracStrategy& s, const TaskSpec& task) {
  for (int x2 = 0; x2 < 2; ++x2) {
    // W such that the branch objective is Tr[J W]
    ComplexMatrix w(4, 4);
    for (int x0 = 0; x0 < 2; ++x0)
      for (int x1 = 0; x1 < 2; ++x1) {
        const ComplexMatrix rho_t = projector(s.states[2 * x0 + x1]).transpose();
        for (int y = 0; y < 3; ++y) {
          const ComplexMatrix& e = task.f(x0, x1, x2, y) ? s.meas[y].e1 : s.meas[y].e0;
          w += kron(e, rho_t) * cx(cell_weight(task, y));
        }
      }
    auto branch_obj = [&](const ChoiMatrix& J) { return (J.j * w).trace().real(); };

    const double incoming_val = branch_obj(s.channels[x2]);
    ChoiMatrix cur = s.channels[x2];
    double cur_val = incoming_val;
    double eta = 0.25;
    int halvings = 0;
    // loose projections during the ascent, one tight pass at the end
    for (int it = 0; it < 28 && halvings < 8; ++it) {
      const ChoiMatrix trial = project_to_cptp(cur.j + w * cx(eta), 5e-8, 30);
      const double val = branch_obj(trial);
      if (val > cur_val + 1e-13) {
        cur = trial;
        cur_val = val;
        eta = std::min(eta * 1.6, 1.5);
      } else {
        eta *= 0.5;
        ++halvings;
      }
    }
    const ChoiMatrix tight = project_to_cptp(cur.j);
    // keep monotonicity exactly: fall back if the tight pass costs value
    if (branch_obj(tight) >= incoming_val) s.channels[x2] = tight;
  }
}

namespace {

struct RestartOutcome {
  double value = -1.0;
  QracStrategy strategy;
  int cycles = 0;
  std::vector<double> trace;
};

RestartOutcome one_restart(const TaskSpec& task, const SeesawOptions& opt, int r) {
  std::mt19937_64 rng(opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r + 1));
  QracStrategy s;
  for (auto& psi : s.states) psi = random_pure_state(rng);
  for (auto& ch : s.channels) ch = choi_of_unitary(random_unitary(rng));
  s.meas = mub_measurements();

  RestartOutcome out;
  double val = objective(s, task);
  out.trace.push_back(val);
  int cycles = 0;
  for (; cycles < opt.max_cycles; ++cycles) {
    opt_measurements(s, task);
    opt_states(s, task);
    opt_channels(s, task);
    const double next = objective(s, task);
    out.trace.push_back(next);
    if (next - val < opt.cycle_tol) { val = next; break; }
    val = next;
  }
  out.value = val;
  out.strategy = s;
  out.cycles = cycles + 1;
  return out;
}

}  // namespace

SeesawResult run_seesaw(const TaskSpec& task, const SeesawOptions& opt) {
  if (opt.restarts < 1) throw Error("run_seesaw: restarts must be >= 1");
  // Restarts are independent; run them on a small pool and reduce by index so
  // the result does not depend on the schedule.
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opt.restarts));
  const unsigned pool = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                           static_cast<unsigned>(opt.restarts));
  std::atomic<int> next_index{0};
  std::vector<std::thread> workers;
  workers.reserve(pool);
  for (unsigned w = 0; w < pool; ++w)
    workers.emplace_back([&] {
      for (int r; (r = next_index.fetch_add(1)) < opt.restarts;)
        outcomes[static_cast<std::size_t>(r)] = one_restart(task, opt, r);
    });
  for (auto& w : workers) w.join();

  SeesawResult best;
  best.value = -1.0;
  for (int r = 0; r < opt.restarts; ++r) {
    const RestartOutcome& o = outcomes[static_cast<std::size_t>(r)];
    if (o.value > best.value + 1e-12) {
      best.value = o.value;
      best.strategy = o.strategy;
      best.best_restart = r;
      best.cycles = o.cycles;
      best.objective_trace = o.trace;
    }
  }
  return best;
}

namespace {

Ket ket0() { return {1.0, 0.0}; }
Ket ket1() { return {0.0, 1.0}; }
Ket ket_plus() { return {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}; }
Ket ket_minus() { return {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}; }
Ket ket_right() { return {1.0 / std::sqrt(2.0), cx(0.0, -1.0 / std::sqrt(2.0))}; }  // -Y
Ket ket_left() { return {1.0 / std::sqrt(2.0), cx(0.0, 1.0 / std::sqrt(2.0))}; }    // +Y

Measurement basis_measurement(const Ket& v0, const Ket& v1) {
  Measurement m;
  m.e0 = projector(v0);
  m.e1 = projector(v1);
  return m;
}

// Task-1 reference channel with (-1)^{x2} substituted as `sign`.
ComplexMatrix task1_choi_entries(double sign) {
  const cx i4(0.0, 0.25 * sign);
  return ComplexMatrix::from_rows({
      {0.75, 0.25, cx(0.25) + i4, -0.5},
      {0.25, 0.25, 0.0, cx(-0.25) + i4},
      {cx(0.25) - i4, 0.0, 0.25, -0.25},
      {-0.5, cx(-0.25) - i4, -0.25, 0.75},
  });
}

}  // namespace

QracStrategy reference_task1_strategy(bool swap_channel_signs) {
  QracStrategy s;
  s.states = {ket0(), ket_plus(), ket_minus(), ket1()};
  const double sign0 = swap_channel_signs ? -1.0 : 1.0;
  s.channels[0].j = task1_choi_entries(sign0);
  s.channels[1].j = task1_choi_entries(-sign0);
  s.meas = {basis_measurement(ket0(), ket1()), basis_measurement(ket_plus(), ket_minus()),
            basis_measurement(ket_right(), ket_left())};
  return s;
}

QracStrategy reference_strategy(int task_index) {
  if (task_index == 1) return reference_task1_strategy(false);
  if (task_index == 2) {
    QracStrategy s;
    const double r5 = std::sqrt(5.0);
    const Ket psi_mid = {std::sqrt((5.0 + r5) / 10.0), std::sqrt(2.0 / (5.0 + r5))};
    s.states = {ket0(), psi_mid, psi_mid, Ket{1.0 / r5, 2.0 / r5}};
    const double a1 = 0.5 + 1.0 / r5;
    const double a2 = 0.5 - 1.0 / r5;
    const double s1 = std::sqrt(a1 * (1.0 - a1));
    const double s2 = std::sqrt(a2 * (1.0 - a2));
    const cx i(0.0, 1.0);
    s.channels[0].j = ComplexMatrix::from_rows({
        {a1, -s1, s1 * i, a1 * i},
        {-s1, 1 - a1, -(1 - a1) * i, -s1 * i},
        {-s1 * i, (1 - a1) * i, 1 - a1, s1},
        {-a1 * i, s1 * i, s1, a1},
    });
    s.channels[1].j = ComplexMatrix::from_rows({
        {a2, s2, -s2 * i, a2 * i},
        {s2, 1 - a2, -(1 - a2) * i, s2 * i},
        {s2 * i, (1 - a2) * i, 1 - a2, -s2},
        {-a2 * i, -s2 * i, -s2, a2},
    });
    s.meas = {basis_measurement(ket0(), ket1()), basis_measurement(ket0(), ket1()),
              basis_measurement(ket_right(), ket_left())};
    return s;
  }
  if (task_index == 3) {
    QracStrategy s;
    const double r34 = std::sqrt(34.0);
    // The printed |psi01> coefficient parses as a sum under the radical; that
    // reading is exactly normalized and reproduces the printed optimum.
    const Ket psi01 = {std::sqrt(25.0 / 63.0 + 4.0 * r34 / 63.0),
                       std::sqrt((38.0 - 4.0 * r34) / 63.0)};
    const Ket psi10 = {-std::sqrt(2.0 / 3.0), 1.0 / std::sqrt(3.0)};
    const Ket psi11 = {2.0 / std::sqrt(21.0), std::sqrt(17.0 / 21.0)};
    s.states = {ket0(), psi01, psi10, psi11};
    const double a1 = 0.5 + std::sqrt((937.0 + 160.0 * r34) / 357.0) / 6.0;
    const double a2 = (357.0 + 51.0 * std::sqrt(21.0) - 4.0 * std::sqrt(714.0)) / 714.0;
    const double s1 = std::sqrt(a1 * (1.0 - a1));
    const double s2 = std::sqrt(a2 * (1.0 - a2));
    s.channels[0].j = ComplexMatrix::from_rows({
        {a1, s1, s1, -a1},
        {s1, 1 - a1, 1 - a1, -s1},
        {s1, 1 - a1, 1 - a1, -s1},
        {-a1, -s1, -s1, a1},
    });
    s.channels[1].j = ComplexMatrix::from_rows({
        {a2, -s2, -s2, -a2},
        {-s2, 1 - a2, 1 - a2, s2},
        {-s2, 1 - a2, 1 - a2, s2},
        {-a2, s2, s2, a2},
    });
    const double c17 = 2.0 * std::sqrt(2.0 / 17.0);
    const double s17 = 3.0 / std::sqrt(17.0);
    const double cm2 = std::sqrt(0.5 + std::sqrt(2.0 / 17.0));
    const double sm2 = 3.0 / std::sqrt(34.0 + 4.0 * r34);
    s.meas = {basis_measurement(ket0(), ket1()),
              basis_measurement(Ket{c17, s17}, Ket{-s17, c17}),
              basis_measurement(Ket{cm2, sm2}, Ket{-sm2, cm2})};
    return s;
  }
  throw Error("reference_strategy: task index must be 1, 2 or 3");
}

Ket random_pure_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Ket v = {cx(g(rng), g(rng)), cx(g(rng), g(rng))};
  const double n = norm(v);
  for (auto& c : v) c /= n;
  return v;
}

ComplexMatrix random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Ket c0 = {cx(g(rng), g(rng)), cx(g(rng), g(rng))};
  Ket c1 = {cx(g(rng), g(rng)), cx(g(rng), g(rng))};
  const double n0 = norm(c0);
  for (auto& c : c0) c /= n0;
  const cx ov = inner(c0, c1);
  for (int i = 0; i < 2; ++i) c1[i] -= ov * c0[i];
  const double n1 = norm(c1);
  for (auto& c : c1) c /= n1;
  ComplexMatrix u(2, 2);
  u(0, 0) = c0[0]; u(1, 0) = c0[1];
  u(0, 1) = c1[0]; u(1, 1) = c1[1];
  return u;
}

}  // namespace drac
