#pragma once
#include "drac/matrix.hpp"

namespace drac {

struct BlochVector {
  double x = 0, y = 0, z = 0;
  double norm() const;
  BlochVector normalized() const;
};

BlochVector operator-(const BlochVector& a, const BlochVector& b);
double dot(const BlochVector& a, const BlochVector& b);
double distance(const BlochVector& a, const BlochVector& b);

// rho = (I + x sx + y sy + z sz)/2. Throws NormViolation if ||v|| > 1 + 1e-9,
// or if pure is requested and ||v|| differs from 1 by more than 1e-9.
ComplexMatrix bloch_to_state(const BlochVector& v, bool pure = false);
BlochVector state_to_bloch(const ComplexMatrix& rho);

// exp(-i angle (n.sigma)/2); n must be unit within 1e-9. Its adjoint action on
// Bloch vectors is the right-handed rotation by `angle` about `axis`.
ComplexMatrix rotation_unitary(const BlochVector& axis, double angle);

// cos(theta)|0> + e^{i phi} sin(theta)|1>
Ket ket_theta_phi(double theta, double phi);

}  // namespace drac
