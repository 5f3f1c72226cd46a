#include "drac/channel.hpp"

#include <cmath>

#include "drac/eig.hpp"
#include "drac/errors.hpp"

namespace drac {

namespace {

// Element J[(out k, in i), (out l, in j)] under the matrix's own convention.
inline std::size_t row_of(ChoiConvention c, std::size_t out, std::size_t in) {
  return c == ChoiConvention::output_first ? 2 * out + in : 2 * in + out;
}

}  // namespace

ChoiValidation validate_choi(const ChoiMatrix& J) {
  if (J.j.rows() != 4 || J.j.cols() != 4) throw NotHermitian("validate_choi: expected 4x4");
  if (!J.j.is_hermitian(1e-9)) throw NotHermitian("validate_choi: not Hermitian within 1e-9");
  ChoiValidation v;
  const auto eig = herm_eig(J.j);
  v.min_eigenvalue = eig.values.back();
  v.cp = v.min_eigenvalue >= -1e-8;
  const ComplexMatrix marginal = (J.convention == ChoiConvention::output_first)
                                     ? ptrace_first(J.j)
                                     : ptrace_second(J.j);
  v.tp_residual = marginal.max_abs_diff(ComplexMatrix::identity(2));
  v.tp = v.tp_residual <= 1e-8;
  return v;
}

ComplexMatrix apply_channel(const ChoiMatrix& J, const ComplexMatrix& rho) {
  const ChoiValidation v = validate_choi(J);
  if (!v.cp || !v.tp) throw InvalidChannel("apply_channel: Choi fails CP or TP");
  if (rho.rows() != 2 || rho.cols() != 2) throw InvalidState("apply_channel: state must be 2x2");
  if (!rho.is_hermitian(1e-9) || std::abs(rho.trace() - cx(1.0)) > 1e-9)
    throw InvalidState("apply_channel: state not a unit-trace Hermitian");
  ComplexMatrix out(2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) {
      cx s = 0.0;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          s += J.j(row_of(J.convention, k, i), row_of(J.convention, l, j)) * rho(i, j);
      out(k, l) = s;
    }
  return out;
}

ComplexMatrix channel_adjoint(const ChoiMatrix& J, const ComplexMatrix& effect) {
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      cx s = 0.0;
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          s += effect(l, k) * J.j(row_of(J.convention, k, i), row_of(J.convention, l, j));
      out(j, i) = s;
    }
  return out;
}

ChoiMatrix choi_of_unitary(const ComplexMatrix& u) {
  ChoiMatrix J;
  Ket w(4);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i) w[row_of(J.convention, k, i)] = u(k, i);
  J.j = outer(w, w);
  return J;
}

ChoiMatrix choi_identity() { return choi_of_unitary(ComplexMatrix::identity(2)); }

ChoiMatrix choi_depolarizing() {
  ChoiMatrix J;
  J.j = ComplexMatrix::identity(4) * cx(0.5);
  return J;
}

BlochAffine bloch_affine_of_choi(const ChoiMatrix& J) {
  const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
  // Raw Choi action without the validity gate (used on intermediate iterates).
  auto act = [&](const ComplexMatrix& rho) {
    ComplexMatrix out(2, 2);
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) {
        cx s = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            s += J.j(row_of(J.convention, k, i), row_of(J.convention, l, j)) * rho(i, j);
        out(k, l) = s;
      }
    return out;
  };
  BlochAffine a;
  const ComplexMatrix phi_id = act(ComplexMatrix::identity(2));
  for (int m = 0; m < 3; ++m) a.t[m] = 0.5 * (sig[m] * phi_id).trace().real();
  for (int n = 0; n < 3; ++n) {
    const ComplexMatrix phi_sn = act(sig[n]);
    for (int m = 0; m < 3; ++m) a.l[m][n] = 0.5 * (sig[m] * phi_sn).trace().real();
  }
  return a;
}

ChoiMatrix choi_of_bloch_affine(const BlochAffine& a) {
  const ComplexMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
  const ComplexMatrix id = ComplexMatrix::identity(2);
  // Phi(I) = I + t.sigma, Phi(sigma_n) = sum_m L[m][n] sigma_m
  ComplexMatrix phi_id = id;
  for (int m = 0; m < 3; ++m) phi_id += sig[m] * cx(a.t[m]);
  ComplexMatrix phi_sig[3];
  for (int n = 0; n < 3; ++n) {
    phi_sig[n] = ComplexMatrix(2, 2);
    for (int m = 0; m < 3; ++m) phi_sig[n] += sig[m] * cx(a.l[m][n]);
  }
  auto phi_of = [&](const ComplexMatrix& e) {
    // e = c0 I + c.sigma with c0 = tr(e)/2, c_m = tr(sigma_m e)/2
    ComplexMatrix out = phi_id * (e.trace() * cx(0.5));
    for (int m = 0; m < 3; ++m) out += phi_sig[m] * ((sig[m] * e).trace() * cx(0.5));
    return out;
  };
  ChoiMatrix J;
  J.j = ComplexMatrix(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ComplexMatrix eij(2, 2);
      eij(i, j) = 1.0;
      const ComplexMatrix phi = phi_of(eij);
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          J.j(row_of(J.convention, k, i), row_of(J.convention, l, j)) = phi(k, l);
    }
  return J;
}

ChoiMatrix random_kraus_pair_channel(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  // Haar 4x2 isometry by Gram-Schmidt on two Gaussian columns.
  Ket c0(4), c1(4);
  for (int i = 0; i < 4; ++i) c0[i] = cx(g(rng), g(rng));
  for (int i = 0; i < 4; ++i) c1[i] = cx(g(rng), g(rng));
  const double n0 = norm(c0);
  for (auto& v : c0) v /= n0;
  const cx ov = inner(c0, c1);
  for (int i = 0; i < 4; ++i) c1[i] -= ov * c0[i];
  const double n1 = norm(c1);
  for (auto& v : c1) v /= n1;

  ComplexMatrix k1(2, 2), k2(2, 2);
  for (int r = 0; r < 2; ++r) {
    k1(r, 0) = c0[r]; k1(r, 1) = c1[r];
    k2(r, 0) = c0[r + 2]; k2(r, 1) = c1[r + 2];
  }
  ChoiMatrix J;
  J.j = ComplexMatrix(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ComplexMatrix eij(2, 2);
      eij(i, j) = 1.0;
      const ComplexMatrix phi = k1 * eij * k1.dagger() + k2 * eij * k2.dagger();
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          J.j(row_of(J.convention, k, i), row_of(J.convention, l, j)) = phi(k, l);
    }
  return J;
}

}  // namespace drac
