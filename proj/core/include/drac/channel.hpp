#pragma once
#include <cstdint>
#include <random>

#include "drac/matrix.hpp"

namespace drac {

// Subsystem order of the 4x4 Choi block structure. output_first means
// J = sum_ij Phi(|i><j|) (x) |i><j|, so TP <=> ptrace over the first factor
// equals I. The bundled reference channels satisfy TP only under
// output_first; that resolution is frozen here and regression-tested.
enum class ChoiConvention { output_first, input_first };

inline constexpr ChoiConvention kResolvedChoiConvention = ChoiConvention::output_first;

struct ChoiMatrix {
  ComplexMatrix j{4, 4};
  ChoiConvention convention = kResolvedChoiConvention;
};

struct ChoiValidation {
  bool cp = false;
  bool tp = false;
  double min_eigenvalue = 0.0;
  double tp_residual = 0.0;
};

// Throws NotHermitian when the 4x4 fails the 1e-9 symmetry tolerance.
ChoiValidation validate_choi(const ChoiMatrix& J);

// Throws InvalidChannel / InvalidState on invalid inputs.
ComplexMatrix apply_channel(const ChoiMatrix& J, const ComplexMatrix& rho);

// Heisenberg-picture action on effects: Tr[E Phi(rho)] = Tr[Phi_adj(E) rho].
ComplexMatrix channel_adjoint(const ChoiMatrix& J, const ComplexMatrix& effect);

ChoiMatrix choi_of_unitary(const ComplexMatrix& u);
ChoiMatrix choi_identity();
ChoiMatrix choi_depolarizing();  // rho -> I/2

// Bloch-affine action v -> L v + t of a channel.
struct BlochAffine {
  double l[3][3] = {};
  double t[3] = {};
};

BlochAffine bloch_affine_of_choi(const ChoiMatrix& J);
ChoiMatrix choi_of_bloch_affine(const BlochAffine& a);  // not necessarily CP

// Random CPTP channel from a pair of Kraus operators (isometry completion).
ChoiMatrix random_kraus_pair_channel(std::mt19937_64& rng);

}  // namespace drac
