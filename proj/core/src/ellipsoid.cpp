#include "drac/ellipsoid.hpp"

#include <algorithm>
#include <cmath>

#include "drac/eig.hpp"
#include "drac/errors.hpp"

namespace drac {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Eigen-decomposition of a real symmetric 3x3 through the complex Jacobi path.
void sym_eig3(const Mat3& s, double evals[3], Mat3& evecs) {
  ComplexMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = s[i][j];
  const EigResult e = herm_eig(m);
  for (int k = 0; k < 3; ++k) {
    evals[k] = e.values[k];
    for (int i = 0; i < 3; ++i) evecs[i][k] = e.vectors(i, k).real();
  }
}

struct Svd3 {
  Mat3 u{}, v{};      // proper rotations
  double sigma[3]{};  // sigma[0] >= sigma[1] >= |sigma[2]|, sigma[2] signed
};

Svd3 signed_svd3(const Mat3& l) {
  Mat3 ltl{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) ltl[i][j] += l[k][i] * l[k][j];
  double ev[3];
  Svd3 r;
  sym_eig3(ltl, ev, r.v);
  for (int k = 0; k < 3; ++k) r.sigma[k] = std::sqrt(std::max(ev[k], 0.0));
  // u_k = L v_k / sigma_k; complete orthonormally where sigma vanishes.
  for (int k = 0; k < 3; ++k) {
    double col[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) col[i] += l[i][j] * r.v[j][k];
    double n = std::sqrt(col[0] * col[0] + col[1] * col[1] + col[2] * col[2]);
    if (n > 1e-12) {
      for (int i = 0; i < 3; ++i) r.u[i][k] = col[i] / n;
    } else {
      // any unit vector orthogonal to previous columns
      for (int trial = 0; trial < 3; ++trial) {
        double cand[3] = {trial == 0 ? 1.0 : 0.0, trial == 1 ? 1.0 : 0.0, trial == 2 ? 1.0 : 0.0};
        for (int p = 0; p < k; ++p) {
          double d = 0;
          for (int i = 0; i < 3; ++i) d += cand[i] * r.u[i][p];
          for (int i = 0; i < 3; ++i) cand[i] -= d * r.u[i][p];
        }
        const double cn = std::sqrt(cand[0] * cand[0] + cand[1] * cand[1] + cand[2] * cand[2]);
        if (cn > 0.5) {
          for (int i = 0; i < 3; ++i) r.u[i][k] = cand[i] / cn;
          break;
        }
      }
    }
  }
  if (det3(r.v) < 0) {
    for (int i = 0; i < 3; ++i) r.v[i][2] = -r.v[i][2];
    r.sigma[2] = -r.sigma[2];
  }
  if (det3(r.u) < 0) {
    for (int i = 0; i < 3; ++i) r.u[i][2] = -r.u[i][2];
    r.sigma[2] = -r.sigma[2];
  }
  return r;
}

}  // namespace

EllipsoidParams ellipsoid_params(const ChoiMatrix& J) {
  const ChoiValidation v = validate_choi(J);
  if (!v.cp || !v.tp) throw InvalidChannel("ellipsoid_params: Choi fails CP or TP");
  const BlochAffine a = bloch_affine_of_choi(J);
  Mat3 l{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) l[i][j] = a.l[i][j];
  const Svd3 s = signed_svd3(l);
  EllipsoidParams e;
  for (int k = 0; k < 3; ++k) e.lambda[k] = s.sigma[k];
  for (int k = 0; k < 3; ++k)
    e.t[k] = s.u[0][k] * a.t[0] + s.u[1][k] * a.t[1] + s.u[2][k] * a.t[2];
  e.improper = det3(l) < -1e-12;
  return e;
}

bool cp_necessary_condition(const EllipsoidParams& e) {
  const double lhs = (e.lambda[0] + e.lambda[1]) * (e.lambda[0] + e.lambda[1]);
  const double rhs = (1.0 + e.lambda[2]) * (1.0 + e.lambda[2]) - e.t[2] * e.t[2];
  return lhs <= rhs + 1e-9;
}

namespace {

bool extract_rotation(const std::array<BlochVector, 4>& sources,
                      const std::array<BlochVector, 4>& targets, Mat3& r_out) {
  Mat3 ms{}, c{};
  for (int k = 0; k < 4; ++k) {
    const double s[3] = {sources[k].x, sources[k].y, sources[k].z};
    const double t[3] = {targets[k].x, targets[k].y, targets[k].z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ms[i][j] += s[i] * s[j];
        c[i][j] += t[i] * s[j];
      }
  }
  double ev[3];
  Mat3 vec;
  sym_eig3(ms, ev, vec);
  // pseudo-inverse solve R = C Ms^+; rank deficit handled by the span solution
  Mat3 pinv{};
  int rank = 0;
  for (int k = 0; k < 3; ++k) {
    if (ev[k] > 1e-10) {
      ++rank;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pinv[i][j] += vec[i][k] * vec[j][k] / ev[k];
    }
  }
  Mat3 r = matmul(c, pinv);
  if (rank == 2) {
    // complete along the source null direction: map it to +/- the target null
    double ns[3] = {vec[0][2], vec[1][2], vec[2][2]};
    Mat3 mt{};
    for (int k = 0; k < 4; ++k) {
      const double t[3] = {targets[k].x, targets[k].y, targets[k].z};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mt[i][j] += t[i] * t[j];
    }
    double evt[3];
    Mat3 vect;
    sym_eig3(mt, evt, vect);
    if (evt[2] > 1e-10) return false;  // target set spans 3d but source does not
    double nt[3] = {vect[0][2], vect[1][2], vect[2][2]};
    for (int sign : {+1, -1}) {
      Mat3 cand = r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cand[i][j] += sign * nt[i] * ns[j];
      if (det3(cand) > 0) { r = cand; break; }
    }
  } else if (rank < 2) {
    return false;
  }
  // orthogonality + proper + exact mapping
  Mat3 rtr{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) rtr[i][j] += r[k][i] * r[k][j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(rtr[i][j] - (i == j ? 1.0 : 0.0)) > 1e-8) return false;
  if (det3(r) < 0) return false;
  for (int k = 0; k < 4; ++k) {
    const double s[3] = {sources[k].x, sources[k].y, sources[k].z};
    const double t[3] = {targets[k].x, targets[k].y, targets[k].z};
    for (int i = 0; i < 3; ++i) {
      double v = 0;
      for (int j = 0; j < 3; ++j) v += r[i][j] * s[j];
      if (std::abs(v - t[i]) > 1e-8) return false;
    }
  }
  r_out = r;
  return true;
}

ComplexMatrix unitary_of_rotation(const Mat3& r) {
  const double tr = r[0][0] + r[1][1] + r[2][2];
  const double cang = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  const double angle = std::acos(cang);
  BlochVector axis{0, 0, 1};
  if (angle > 1e-9 && angle < std::acos(-1.0) - 1e-9) {
    const double s = 2.0 * std::sin(angle);
    axis = {(r[2][1] - r[1][2]) / s, (r[0][2] - r[2][0]) / s, (r[1][0] - r[0][1]) / s};
    axis = axis.normalized();
  } else if (angle >= std::acos(-1.0) - 1e-9) {
    // angle pi: (R+I)/2 = n n^T
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (r[i][i] > r[best][best]) best = i;
    double n[3];
    n[best] = std::sqrt(std::max((r[best][best] + 1.0) / 2.0, 0.0));
    for (int i = 0; i < 3; ++i)
      if (i != best) n[i] = (r[i][best] + r[best][i]) / (4.0 * n[best]);
    axis = BlochVector{n[0], n[1], n[2]}.normalized();
  }
  return rotation_unitary(axis, angle);
}

}  // namespace

FeasibilityResult reflection_feasibility(const std::array<BlochVector, 4>& targets,
                                         const std::array<BlochVector, 4>& sources) {
  FeasibilityResult res;
  Mat3 r;
  if (extract_rotation(sources, targets, r)) {
    res.feasible = true;
    res.unitary_certificate = choi_of_unitary(unitary_of_rotation(r));
    return res;
  }
  // Certificate branch: the image ellipsoid must pass through the four target
  // points; for a coplanar, cocircular set centered on its plane axis the CP
  // bound forces lambda_3 >= sqrt(4 r^2 + d^2) - 1 while containment in the
  // Bloch ball allows at most 1 - d.
  BlochVector c{0, 0, 0};
  for (const auto& t : targets) { c.x += t.x / 4; c.y += t.y / 4; c.z += t.z / 4; }
  const BlochVector d0 = targets[0] - c, d1 = targets[1] - c;
  BlochVector n{d0.y * d1.z - d0.z * d1.y, d0.z * d1.x - d0.x * d1.z, d0.x * d1.y - d0.y * d1.x};
  if (n.norm() < 1e-9) throw Error("reflection_feasibility: degenerate target configuration");
  n = n.normalized();
  double radius = 0.0;
  for (const auto& t : targets) {
    const BlochVector d = t - c;
    if (std::abs(dot(d, n)) > 1e-8) throw Error("reflection_feasibility: targets not coplanar");
    radius = std::max(radius, d.norm());
  }
  for (const auto& t : targets)
    if (std::abs((t - c).norm() - radius) > 1e-8)
      throw Error("reflection_feasibility: targets not cocircular");
  const double offset = std::abs(dot(c, n));
  if (std::abs(c.norm() - offset) > 1e-8)
    throw Error("reflection_feasibility: target center off the plane axis");
  res.lambda3_required = std::sqrt(4.0 * radius * radius + offset * offset) - 1.0;
  res.lambda3_allowed = 1.0 - offset;
  res.feasible = res.lambda3_required <= res.lambda3_allowed + 1e-9;
  if (res.feasible)
    throw Error("reflection_feasibility: certificate inconclusive for this configuration");
  return res;
}

}  // namespace drac
