#pragma once
#include <string>
#include <vector>

#include "drac/matrix.hpp"

namespace drac {

enum class PlateKind { half, quarter };

struct WavePlate {
  PlateKind kind = PlateKind::half;
  double angle_deg = 0.0;  // fast-axis angle
};

// Jones matrix R(th) diag(1, e^{-i delta}) R(th)^T with delta = pi (half) or
// pi/2 (quarter). The retardance sign is the one under which the design-table
// preparation rows reproduce the intended encoding states; frozen by a
// regression test together with the identity stack QWP(45),HWP(-45),QWP(45).
ComplexMatrix waveplate_unitary(const WavePlate& p);

ComplexMatrix hwp(double angle_deg);
ComplexMatrix qwp(double angle_deg);

// 1 - |Tr(U^dag V)|/2, zero iff equal up to global phase.
double phase_insensitive_distance(const ComplexMatrix& u, const ComplexMatrix& v);

// One line of the waveplate design table: Alice's four plates and Bob's
// rotation stack for a QRAC task row (5..8).
struct DesignTableRow {
  int task = 0;             // 5..8
  int x0 = 0, x1 = 0;       // state label psi_{x0 x1}
  double alpha = 0, theta1 = 0, beta = 0, theta2 = 0;   // preparation
  std::string unitary_label;                            // Bob's rotation for x2 = 1
  double theta3 = 0, gamma = 0, theta4 = 0;             // rotation stack
};

const std::vector<DesignTableRow>& design_table_rows();

// Squared overlap of the preparation stack output with the task's intended
// encoding state. Throws UnknownTask.
double verify_preparation(const DesignTableRow& row);

// Distance of the rotation stack QWP(theta3),HWP(gamma),QWP(theta4) from the
// labeled rotation. Plate stacks realize rotation labels in the mirror spinor
// sense exp(+i angle (n.sigma)/2); that sense is pinned by the same data that
// pins the retardance sign. Throws UnknownRotation.
double verify_unitary(const std::string& label, double theta3, double gamma, double theta4);

// Charlie's analysis plates; returns the basis the HWP/QWP pair maps onto the
// PBS ports, as the pair of back-rotated port states.
std::pair<Ket, Ket> measurement_stack_basis(double hwp_deg, double qwp_deg);

struct MeasuredRow {
  int task = 0;
  std::string state;    // psi00 | psi01 | psi11 | psi10
  std::string unitary;  // I | RX_PI | RX_3PI_2 | RX_PI_2 | RZ_PI
  std::string basis;    // sigmaY | sigmaX | sigmaZ
  double p = 0.0;
  double sigma = 0.0;
};

struct MeasuredTable {
  std::vector<MeasuredRow> rows;
};

// CSV with header task,state,unitary,basis,p,sigma. Throws ParseError with the
// line number, RangeError for p outside [0,1] or sigma < 0.
MeasuredTable ingest_results(const std::string& path);

struct CompareRow {
  MeasuredRow measured;
  double ideal = 0.0;
  double deviation_sigma = 0.0;  // (measured - ideal)/sigma
  bool suspect_sigma = false;    // printed sigma an order off its siblings
};

struct CompareReport {
  std::vector<CompareRow> rows;
  double mean_deviation = 0.0;
  double max_abs_deviation = 0.0;
};

// Ideal per-row probabilities from the exact strategy evaluation.
CompareReport compare_report(const MeasuredTable& m);

}  // namespace drac
