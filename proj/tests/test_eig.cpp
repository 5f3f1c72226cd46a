#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "drac/eig.hpp"
#include "drac/errors.hpp"
#include "drac/seesaw.hpp"

using namespace drac;

namespace {

// Independent oracle: characteristic polynomial via Newton's identities,
// roots by Durand-Kerner. Shares nothing with the Jacobi path.
std::vector<double> charpoly_eigenvalues(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<cx> p(n + 1);  // power sums p[k] = tr(A^k)
  ComplexMatrix pw = ComplexMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    pw = pw * a;
    p[k] = pw.trace();
  }
  std::vector<cx> e(n + 1);  // elementary symmetric polynomials
  e[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cx s = 0.0;
    for (std::size_t i = 1; i <= k; ++i) s += (i % 2 ? 1.0 : -1.0) * e[k - i] * p[i];
    e[k] = s / static_cast<double>(k);
  }
  // monic coefficients: lambda^n - e1 lambda^{n-1} + e2 ... ; c[j] multiplies lambda^j
  std::vector<cx> c(n + 1);
  c[n] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) c[n - k] = (k % 2 ? -1.0 : 1.0) * e[k];

  std::vector<cx> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::pow(cx(0.4, 0.9), static_cast<double>(i + 1));
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cx num = 0.0;
      for (std::size_t j = n + 1; j-- > 0;) num = num * r[i] + c[j];
      cx den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (r[i] - r[j]);
      const cx delta = num / den;
      r[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = r[i].real();
  std::sort(out.rbegin(), out.rend());
  return out;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cx(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("pauli spectra") {
  const EigResult z = herm_eig(pauli_z());
  CHECK(z.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(z.vectors(0, 0)) == doctest::Approx(1.0));  // |0> for +1
  CHECK(std::abs(z.vectors(1, 1)) == doctest::Approx(1.0));  // |1> for -1
  const EigResult x = herm_eig(pauli_x());
  CHECK(x.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("reference channel spectrum vs characteristic-polynomial oracle") {
  // alpha_1 = 0.5 + 1/sqrt(5) channel of the second explicit strategy
  const ComplexMatrix j2 = reference_strategy(2).channels[0].j;
  const auto oracle = charpoly_eigenvalues(j2);
  const EigResult eig = herm_eig(j2);
  for (int k = 0; k < 4; ++k) CHECK(eig.values[k] == doctest::Approx(oracle[k]).epsilon(1e-9));
  // frozen: a rank-one Choi of trace two
  CHECK(oracle[0] == doctest::Approx(2.0).epsilon(1e-10));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(oracle[k]) < 1e-9);

  const ComplexMatrix j1 = reference_strategy(1).channels[1].j;
  const auto oracle1 = charpoly_eigenvalues(j1);
  CHECK(oracle1[0] == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(oracle1[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(oracle1[2]) < 1e-9);
  CHECK(std::abs(oracle1[3]) < 1e-9);
  const EigResult eig1 = herm_eig(j1);
  for (int k = 0; k < 4; ++k) CHECK(eig1.values[k] == doctest::Approx(oracle1[k]).epsilon(1e-9));
}

TEST_CASE("reconstruction round trip on 1000 random hermitian 4x4") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 4);
    const EigResult e = herm_eig(m);
    ComplexMatrix rec(4, 4);
    for (std::size_t k = 0; k < 4; ++k) rec += projector(eig_column(e, k)) * cx(e.values[k]);
    REQUIRE(rec.max_abs_diff(m) < 1e-8);
    // orthonormality
    const ComplexMatrix vv = e.vectors.dagger() * e.vectors;
    REQUIRE(vv.max_abs_diff(ComplexMatrix::identity(4)) < 1e-8);
    // descending order
    for (int k = 0; k + 1 < 4; ++k) REQUIRE(e.values[k] >= e.values[k + 1] - 1e-12);
  }
}

TEST_CASE("not hermitian rejected") {
  ComplexMatrix m(2, 2);
  m(0, 1) = cx(1.0, 0.0);
  m(1, 0) = cx(0.5, 0.0);
  CHECK_THROWS_AS(herm_eig(m), NotHermitian);
}
