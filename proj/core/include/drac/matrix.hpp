#pragma once
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace drac {

using cx = std::complex<double>;

// Dense complex matrix, row-major. Sizes in this project are 2, 3, 4 or 8.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator*(cx s) const;
  ComplexMatrix& operator+=(const ComplexMatrix& o);

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  cx trace() const;

  double max_abs() const;                       // max-norm over entries
  double max_abs_diff(const ComplexMatrix& o) const;
  bool is_finite() const;
  bool is_hermitian(double tol = 1e-9) const;   // ||M - M^dag||_max <= tol

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cx> a_;
};

inline ComplexMatrix operator*(cx s, const ComplexMatrix& m) { return m * s; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial traces of a 4x4 operator on C^2 (x) C^2, index (i,j) -> 2i+j.
ComplexMatrix ptrace_first(const ComplexMatrix& m);   // trace out first factor
ComplexMatrix ptrace_second(const ComplexMatrix& m);  // trace out second factor

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Kets as flat complex vectors.
using Ket = std::vector<cx>;

cx inner(const Ket& a, const Ket& b);  // <a|b>
double norm(const Ket& a);
Ket kron(const Ket& a, const Ket& b);
ComplexMatrix outer(const Ket& a, const Ket& b);  // |a><b|
ComplexMatrix projector(const Ket& a);            // |a><a|
Ket operator*(const ComplexMatrix& m, const Ket& v);

}  // namespace drac
