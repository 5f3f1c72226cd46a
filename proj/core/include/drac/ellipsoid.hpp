#pragma once
#include <array>
#include <optional>

#include "drac/bloch.hpp"
#include "drac/channel.hpp"

namespace drac {

// Canonical Bloch-ellipsoid data of a channel: semi-axes lambda_i (signed,
// proper rotations factored out of the 3x3 block) and the image of the
// maximally mixed state expressed in the canonical output frame.
struct EllipsoidParams {
  double lambda[3] = {0, 0, 0};  // |lambda_0| >= |lambda_1| >= |lambda_2|
  double t[3] = {0, 0, 0};
  bool improper = false;  // det of the Bloch 3x3 block < 0
};

EllipsoidParams ellipsoid_params(const ChoiMatrix& J);  // throws InvalidChannel

// (lambda_1 + lambda_2)^2 <= (1 + lambda_3)^2 - t_3^2, with the third axis in
// the role of lambda_3. Necessary for complete positivity.
bool cp_necessary_condition(const EllipsoidParams& e);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<ChoiMatrix> unitary_certificate;  // set when a rotation works
  // Infeasibility certificate: lambda_3 >= required (CP bound) vs
  // lambda_3 <= allowed (Bloch-ball containment).
  double lambda3_required = 0.0;
  double lambda3_allowed = 0.0;
};

// Can any CPTP map send source_i -> target_i (as Bloch points)? Decides the
// proper-rotation case exactly; otherwise applies the ellipsoid certificate
// for a coplanar, cocircular target set.
FeasibilityResult reflection_feasibility(const std::array<BlochVector, 4>& targets,
                                         const std::array<BlochVector, 4>& sources);

}  // namespace drac
