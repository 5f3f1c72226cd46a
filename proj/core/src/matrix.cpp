#include "drac/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "drac/errors.hpp"

namespace drac {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("from_rows: ragged row");
    std::size_t j = 0;
    for (const cx& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  ComplexMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cx aik = (*this)(i, k);
      if (aik == cx(0.0)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += aik * o(k, j);
    }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(cx s) const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
  return m;
}

cx ComplexMatrix::trace() const {
  cx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  double m = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - o.a_[k]));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const cx& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return m;
}

ComplexMatrix ptrace_first(const ComplexMatrix& m) {
  ComplexMatrix r(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r(i, j) += m(2 * k + i, 2 * k + j);
  return r;
}

ComplexMatrix ptrace_second(const ComplexMatrix& m) {
  ComplexMatrix r(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) r(i, j) += m(2 * i + k, 2 * j + k);
  return r;
}

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0, 1}, {1, 0}}); }
ComplexMatrix pauli_y() { return ComplexMatrix::from_rows({{0, cx(0, -1)}, {cx(0, 1), 0}}); }
ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1, 0}, {0, -1}}); }

cx inner(const Ket& a, const Ket& b) {
  cx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Ket& a) { return std::sqrt(std::abs(inner(a, a))); }

Ket kron(const Ket& a, const Ket& b) {
  Ket r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

ComplexMatrix outer(const Ket& a, const Ket& b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

ComplexMatrix projector(const Ket& a) { return outer(a, a); }

Ket operator*(const ComplexMatrix& m, const Ket& v) {
  Ket r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cx s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

}  // namespace drac
