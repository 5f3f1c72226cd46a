#include "drac/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "drac/errors.hpp"

namespace drac {

namespace {

double off_diag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult herm_eig(const ComplexMatrix& m, double herm_tol, int max_sweeps) {
  if (m.rows() != m.cols()) throw NotHermitian("herm_eig: matrix not square");
  if (!m.is_finite()) throw NotHermitian("herm_eig: non-finite entries");
  if (!m.is_hermitian(herm_tol)) throw NotHermitian("herm_eig: symmetry tolerance violated");

  const std::size_t n = m.rows();
  // Work on the Hermitian average so tiny asymmetries within tolerance cancel.
  ComplexMatrix a = (m + m.dagger()) * cx(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.max_abs(), 1e-300);
  const double stop = 1e-14 * scale * static_cast<double>(n);

  int sweep = 0;
  while (off_diag_norm(a) > stop) {
    if (++sweep > max_sweeps) throw NoConvergence("herm_eig: no convergence");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Phase factor making a(p,q) real, then a real Jacobi rotation.
        const cx w = std::conj(apq) / r;  // w * apq = r
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Combined unitary V on the (p,q) plane: V e_p = c e_p - s w e_q,
        // V e_q = s e_p + c w e_q; apply A <- V^dag A V.
        for (std::size_t i = 0; i < n; ++i) {
          const cx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * w * aiq;
          a(i, q) = s * aip + c * w * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * std::conj(w) * aqj;
          a(q, j) = s * apj + c * std::conj(w) * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * w * viq;
          v(i, q) = s * vip + c * w * viq;
        }
        a(p, q) = std::conj(a(q, p));  // keep exact Hermitian symmetry
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return diag[i] > diag[j]; });

  EigResult res;
  res.values.resize(n);
  res.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.values[k] = diag[order[k]];
    // Fix the global phase: largest-magnitude component real nonnegative.
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double av = std::abs(v(i, order[k]));
      if (av > best) { best = av; imax = i; }
    }
    cx ph = v(imax, order[k]);
    ph = (std::abs(ph) > 0) ? std::conj(ph) / std::abs(ph) : cx(1.0);
    for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]) * ph;
  }
  return res;
}

Ket eig_column(const EigResult& e, std::size_t k) {
  Ket v(e.vectors.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = e.vectors(i, k);
  return v;
}

}  // namespace drac
