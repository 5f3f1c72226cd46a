#include "drac/qrac.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "drac/errors.hpp"

namespace drac {

namespace {
constexpr double kPi = std::numbers::pi;
}

Ket encoding_ket(int x0, int x1, int x2) {
  const double theta = std::acos(std::sqrt((std::sqrt(3.0) + (x2 ? -1.0 : 1.0)) / (2.0 * std::sqrt(3.0))));
  const double phi = kPi / 4.0 * (1.0 + 4.0 * x0 + 2.0 * (x0 ^ x1));
  return ket_theta_phi(theta, phi);
}

ComplexMatrix encoding_state(int x0, int x1, int x2) { return projector(encoding_ket(x0, x1, x2)); }

Measurement axis_measurement(const BlochVector& axis) {
  const BlochVector n = axis.normalized();
  ComplexMatrix ns(2, 2);
  ns(0, 0) = n.z;
  ns(1, 1) = -n.z;
  ns(0, 1) = cx(n.x, -n.y);
  ns(1, 0) = cx(n.x, n.y);
  Measurement m;
  m.e0 = (ComplexMatrix::identity(2) + ns) * cx(0.5);
  m.e1 = (ComplexMatrix::identity(2) - ns) * cx(0.5);
  return m;
}

std::array<Measurement, 3> mub_measurements() {
  return {axis_measurement({0, 1, 0}), axis_measurement({1, 0, 0}), axis_measurement({0, 0, 1})};
}

void validate_strategy(const QracStrategy& s) {
  for (const Ket& psi : s.states)
    if (psi.size() != 2 || std::abs(norm(psi) - 1.0) > 1e-9)
      throw InvalidStrategy("QracStrategy: state not a normalized qubit ket");
  for (const ChoiMatrix& J : s.channels) {
    const ChoiValidation v = validate_choi(J);
    if (!v.cp || !v.tp) throw InvalidStrategy("QracStrategy: channel fails CP or TP");
  }
  for (const Measurement& m : s.meas) {
    if (!m.e0.is_hermitian(1e-9) || !m.e1.is_hermitian(1e-9))
      throw InvalidStrategy("QracStrategy: effects not Hermitian");
    if ((m.e0 + m.e1).max_abs_diff(ComplexMatrix::identity(2)) > 1e-9)
      throw InvalidStrategy("QracStrategy: effects do not sum to identity");
  }
}

double qrac_success_probability(const QracStrategy& s, int x0, int x1, int x2, int y, int z) {
  const ComplexMatrix rho = apply_channel(s.channels[x2], projector(s.states[2 * x0 + x1]));
  const ComplexMatrix& e = z ? s.meas[y].e1 : s.meas[y].e0;
  return (e * rho).trace().real();
}

double eval_qrac_strategy(const QracStrategy& s, const TaskSpec& task) {
  validate_strategy(s);
  return average_success(task, [&](int x0, int x1, int x2, int y) {
    return qrac_success_probability(s, x0, x1, x2, y, task.f(x0, x1, x2, y));
  });
}

VertexAssignment top_face_assignment() {
  return {vertex_of_bits(0, 0, 0), vertex_of_bits(0, 1, 0), vertex_of_bits(1, 0, 0),
          vertex_of_bits(1, 1, 0)};
}

VertexAssignment z_follows_x0_assignment() {
  return {vertex_of_bits(0, 0, 0), vertex_of_bits(0, 1, 0), vertex_of_bits(1, 0, 1),
          vertex_of_bits(1, 1, 1)};
}

std::pair<TaskSpec, QracStrategy> build_qrac_task(const CubeRotation& rotation,
                                                  const VertexAssignment& assignment) {
  std::set<CubeVertex> s(assignment.begin(), assignment.end());
  if (s.size() != 4) throw InadmissibleRotation("build_qrac_task: assignment not injective");
  std::set<CubeVertex> img;
  for (const auto& v : assignment) img.insert(rotation.apply(v));
  for (const auto& v : img)
    if (s.count(v))
      throw InadmissibleRotation("build_qrac_task: rotation does not map the vertex set onto its complement");

  // Read the truth table off the realized vertex signs: y/x/z-axis signs give
  // f(x,0), f(x,1), f(x,2).
  std::array<std::uint8_t, 24> table{};
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2) {
        CubeVertex v = assignment[2 * x0 + x1];
        if (x2) v = rotation.apply(v);
        const auto bits = bits_of_vertex(v);
        for (int y = 0; y < 3; ++y)
          table[TaskSpec::index(x0, x1, x2, y)] = static_cast<std::uint8_t>(bits[y]);
      }
  std::uint32_t bits = 0;
  for (int k = 0; k < 24; ++k) bits |= static_cast<std::uint32_t>(table[k]) << k;

  std::ostringstream label;
  label << "qrac[" << rotation.label << "]";
  TaskSpec task = TaskSpec::from_bits(label.str(), bits);

  QracStrategy strat;
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1) {
      const auto b = bits_of_vertex(assignment[2 * x0 + x1]);
      strat.states[2 * x0 + x1] = encoding_ket(b[0], b[1], b[2]);
    }
  strat.channels[0] = choi_identity();
  strat.channels[1] = choi_of_unitary(rotation_unitary(rotation.axis, rotation.angle));
  strat.meas = mub_measurements();
  return {std::move(task), std::move(strat)};
}

}  // namespace drac
