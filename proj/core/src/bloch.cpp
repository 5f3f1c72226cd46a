#include "drac/bloch.hpp"

#include <cmath>

#include "drac/errors.hpp"

namespace drac {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::normalized() const {
  const double n = norm();
  return {x / n, y / n, z / n};
}

BlochVector operator-(const BlochVector& a, const BlochVector& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

double dot(const BlochVector& a, const BlochVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

double distance(const BlochVector& a, const BlochVector& b) { return (a - b).norm(); }

ComplexMatrix bloch_to_state(const BlochVector& v, bool pure) {
  const double n = v.norm();
  if (n > 1.0 + 1e-9) throw NormViolation("bloch_to_state: ||v|| > 1");
  if (pure && std::abs(n - 1.0) > 1e-9) throw NormViolation("bloch_to_state: pure state needs unit norm");
  ComplexMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + v.z);
  rho(1, 1) = 0.5 * (1.0 - v.z);
  rho(0, 1) = 0.5 * cx(v.x, -v.y);
  rho(1, 0) = 0.5 * cx(v.x, v.y);
  return rho;
}

BlochVector state_to_bloch(const ComplexMatrix& rho) {
  BlochVector v;
  v.x = 2.0 * rho(1, 0).real();
  v.y = 2.0 * rho(1, 0).imag();
  v.z = (rho(0, 0) - rho(1, 1)).real();
  return v;
}

ComplexMatrix rotation_unitary(const BlochVector& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) throw NormViolation("rotation_unitary: axis not unit");
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  ComplexMatrix u(2, 2);
  u(0, 0) = cx(c, -s * axis.z);
  u(0, 1) = cx(-s * axis.y, -s * axis.x);
  u(1, 0) = cx(s * axis.y, -s * axis.x);
  u(1, 1) = cx(c, s * axis.z);
  return u;
}

Ket ket_theta_phi(double theta, double phi) {
  return {cx(std::cos(theta), 0.0), std::exp(cx(0.0, phi)) * std::sin(theta)};
}

}  // namespace drac
