#include "drac/optics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "drac/errors.hpp"
#include "drac/qrac.hpp"
#include "drac/reference.hpp"

namespace drac {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
}  // namespace

ComplexMatrix waveplate_unitary(const WavePlate& p) {
  const double delta = (p.kind == PlateKind::half) ? kPi : kPi / 2.0;
  const double th = p.angle_deg * kDeg;
  const double c = std::cos(th), s = std::sin(th);
  const cx e = std::exp(cx(0.0, -delta));
  ComplexMatrix m(2, 2);
  m(0, 0) = c * c + e * s * s;
  m(0, 1) = (cx(1.0) - e) * s * c;
  m(1, 0) = m(0, 1);
  m(1, 1) = s * s + e * c * c;
  return m;
}

ComplexMatrix hwp(double a) { return waveplate_unitary({PlateKind::half, a}); }
ComplexMatrix qwp(double a) { return waveplate_unitary({PlateKind::quarter, a}); }

double phase_insensitive_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  return 1.0 - std::abs((u.dagger() * v).trace()) / 2.0;
}

const std::vector<DesignTableRow>& design_table_rows() {
  static const std::vector<DesignTableRow> rows = [] {
    std::vector<DesignTableRow> r;
    struct Block {
      int task;
      const char* label;
      double t3, g, t4;
      double alpha[4];  // psi00, psi01, psi11, psi10
    };
    const double top = 13.6839, bot = 31.3161;
    const Block blocks[4] = {
        {5, "R_X(pi)", 90, 45, 90, {top, top, top, top}},
        {6, "R_X(3pi/2)", 90, 67.5, 90, {top, top, bot, bot}},
        {7, "R_X(pi/2)", 90, 22.5, 90, {top, top, bot, bot}},
        {8, "R_Z(pi)", 45, -90, 45, {top, top, bot, bot}},
    };
    const int states[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};  // printed order
    const double betas[4] = {-56.25, -78.75, -101.25, -123.75};
    for (const Block& b : blocks)
      for (int k = 0; k < 4; ++k) {
        DesignTableRow row;
        row.task = b.task;
        row.x0 = states[k][0];
        row.x1 = states[k][1];
        row.alpha = b.alpha[k];
        row.theta1 = 45;
        row.beta = betas[k];
        row.theta2 = 45;
        row.unitary_label = b.label;
        row.theta3 = b.t3;
        row.gamma = b.g;
        row.theta4 = b.t4;
        r.push_back(row);
      }
    return r;
  }();
  return rows;
}

double verify_preparation(const DesignTableRow& row) {
  if (row.task < 5 || row.task > 8) throw UnknownTask("verify_preparation: task must be 5..8");
  const auto [rot_label, assignment] = table1_qrac_recipe(row.task);
  const auto bits = bits_of_vertex(assignment[2 * row.x0 + row.x1]);
  const Ket intended = encoding_ket(bits[0], bits[1], bits[2]);
  Ket psi = {1.0, 0.0};
  psi = hwp(row.alpha) * psi;
  psi = qwp(row.theta1) * psi;
  psi = hwp(row.beta) * psi;
  psi = qwp(row.theta2) * psi;
  return std::norm(inner(intended, psi));
}

double verify_unitary(const std::string& label, double theta3, double gamma, double theta4) {
  ComplexMatrix target(2, 2);
  if (label == "I" || label == "identity") {
    target = ComplexMatrix::identity(2);
  } else if (label == "R_X(pi)") {
    target = rotation_unitary({1, 0, 0}, -kPi);
  } else if (label == "R_X(3pi/2)") {
    target = rotation_unitary({1, 0, 0}, -3.0 * kPi / 2.0);
  } else if (label == "R_X(pi/2)") {
    target = rotation_unitary({1, 0, 0}, -kPi / 2.0);
  } else if (label == "R_Z(pi)") {
    target = rotation_unitary({0, 0, 1}, -kPi);
  } else {
    throw UnknownRotation("verify_unitary: unknown label " + label);
  }
  const ComplexMatrix stack = qwp(theta4) * hwp(gamma) * qwp(theta3);
  return phase_insensitive_distance(stack, target);
}

std::pair<Ket, Ket> measurement_stack_basis(double hwp_deg, double qwp_deg) {
  const ComplexMatrix u = qwp(qwp_deg) * hwp(hwp_deg);
  const ComplexMatrix ud = u.dagger();
  return {ud * Ket{1.0, 0.0}, ud * Ket{0.0, 1.0}};
}

MeasuredTable ingest_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("ingest_results: cannot open " + path);
  MeasuredTable table;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!header_seen) {
      if (fields.size() != 6 || fields[0] != "task")
        throw ParseError("ingest_results: bad header at line " + std::to_string(lineno));
      header_seen = true;
      continue;
    }
    if (fields.size() != 6)
      throw ParseError("ingest_results: expected 6 fields at line " + std::to_string(lineno));
    MeasuredRow row;
    try {
      row.task = std::stoi(fields[0]);
      row.state = fields[1];
      row.unitary = fields[2];
      row.basis = fields[3];
      row.p = std::stod(fields[4]);
      row.sigma = std::stod(fields[5]);
    } catch (const std::exception&) {
      throw ParseError("ingest_results: malformed value at line " + std::to_string(lineno));
    }
    if (row.p < 0.0 || row.p > 1.0)
      throw RangeError("ingest_results: p outside [0,1] at line " + std::to_string(lineno));
    if (row.sigma < 0.0)
      throw RangeError("ingest_results: sigma < 0 at line " + std::to_string(lineno));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

int state_bits(const std::string& s) {
  if (s == "psi00") return 0;
  if (s == "psi01") return 1;
  if (s == "psi10") return 2;
  if (s == "psi11") return 3;
  return -1;
}

int basis_index(const std::string& b) {
  if (b == "sigmaY") return 0;
  if (b == "sigmaX") return 1;
  if (b == "sigmaZ") return 2;
  return -1;
}

const char* expected_rotation(int task) {
  switch (task) {
    case 5: return "RX_PI";
    case 6: return "RX_3PI_2";
    case 7: return "RX_PI_2";
    case 8: return "RZ_PI";
    default: return nullptr;
  }
}

}  // namespace

CompareReport compare_report(const MeasuredTable& m) {
  CompareReport report;
  std::vector<double> sigmas;
  for (const MeasuredRow& row : m.rows)
    if (row.sigma > 0) sigmas.push_back(row.sigma);
  std::sort(sigmas.begin(), sigmas.end());
  const double median_sigma = sigmas.empty() ? 0.0 : sigmas[sigmas.size() / 2];

  double sum = 0.0;
  for (const MeasuredRow& row : m.rows) {
    const int sb = state_bits(row.state);
    const int y = basis_index(row.basis);
    const char* rot = expected_rotation(row.task);
    if (sb < 0 || y < 0 || rot == nullptr)
      throw LabelMismatch("compare_report: unresolvable labels in row for task " +
                          std::to_string(row.task));
    int x2;
    if (row.unitary == "I") x2 = 0;
    else if (row.unitary == rot) x2 = 1;
    else throw LabelMismatch("compare_report: unitary " + row.unitary + " does not belong to task " +
                             std::to_string(row.task));
    const int x0 = sb >> 1, x1 = sb & 1;
    const TaskSpec task = table1_task(row.task);
    const QracStrategy strat = table1_qrac_strategy(row.task);
    CompareRow out;
    out.measured = row;
    out.ideal = qrac_success_probability(strat, x0, x1, x2, y, task.f(x0, x1, x2, y));
    out.deviation_sigma = (row.sigma > 0) ? (row.p - out.ideal) / row.sigma : 0.0;
    out.suspect_sigma = row.sigma > 0 && median_sigma > 0 && row.sigma < 0.2 * median_sigma;
    sum += out.deviation_sigma;
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(out.deviation_sigma));
    report.rows.push_back(std::move(out));
  }
  report.mean_deviation = report.rows.empty() ? 0.0 : sum / static_cast<double>(report.rows.size());
  return report;
}

}  // namespace drac
