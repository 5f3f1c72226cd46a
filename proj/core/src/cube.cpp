#include "drac/cube.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "drac/errors.hpp"

namespace drac {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<std::array<int, 3>, 3> axis_angle_int_matrix(const BlochVector& n, double ang) {
  const double c = std::cos(ang), s = std::sin(ang);
  const double nn[3] = {n.x, n.y, n.z};
  std::array<std::array<int, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double v = (i == j ? c : 0.0) + (1 - c) * nn[i] * nn[j];
      const int k = 3 - i - j;  // Levi-Civita shortcut for i != j
      if (i != j) {
        const double sign = ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) ? -1.0 : 1.0;
        v += sign * s * nn[k];
      }
      m[i][j] = static_cast<int>(std::lround(v));
    }
  return m;
}

std::vector<CubeVertex> all_vertices() {
  std::vector<CubeVertex> vs;
  for (int b0 = 0; b0 < 2; ++b0)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) vs.push_back(vertex_of_bits(b0, b1, b2));
  return vs;
}

bool is_admissible(const CubeRotation& r) {
  const auto vs = all_vertices();
  std::set<CubeVertex> universe(vs.begin(), vs.end());
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::set<CubeVertex> s, img;
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) { s.insert(vs[i]); img.insert(r.apply(vs[i])); }
    std::set<CubeVertex> comp;
    for (const auto& v : universe)
      if (!s.count(v)) comp.insert(v);
    if (img == comp) return true;
  }
  return false;
}

std::vector<CubeRotation> build_group() {
  std::vector<CubeRotation> rots;
  auto add = [&](const std::string& label, const BlochVector& axis, double ang) {
    CubeRotation r;
    r.label = label;
    r.axis = axis.normalized();
    r.angle = ang;
    r.m = axis_angle_int_matrix(r.axis, ang);
    rots.push_back(std::move(r));
  };
  add("identity", {0, 0, 1}, 0.0);
  const struct { const char* n; BlochVector a; } face[] = {
      {"X", {1, 0, 0}}, {"Y", {0, 1, 0}}, {"Z", {0, 0, 1}}};
  const struct { const char* n; double a; } angs[] = {
      {"pi/2", kPi / 2}, {"pi", kPi}, {"3pi/2", 3 * kPi / 2}};
  for (const auto& f : face)
    for (const auto& g : angs) add(std::string("R_") + f.n + "(" + g.n + ")", f.a, g.a);
  const struct { const char* n; BlochVector a; } edge[] = {
      {"X+Y", {1, 1, 0}},  {"X-Y", {1, -1, 0}}, {"Y+Z", {0, 1, 1}},
      {"Y-Z", {0, 1, -1}}, {"Z+X", {1, 0, 1}},  {"Z-X", {-1, 0, 1}}};
  for (const auto& e : edge) add(std::string("R_{") + e.n + "}(pi)", e.a, kPi);
  const struct { const char* n; BlochVector a; } diag[] = {
      {"+++", {1, 1, 1}}, {"++-", {1, 1, -1}}, {"+-+", {1, -1, 1}}, {"+--", {1, -1, -1}}};
  const struct { const char* n; double a; } dangs[] = {{"2pi/3", 2 * kPi / 3}, {"4pi/3", 4 * kPi / 3}};
  for (const auto& d : diag)
    for (const auto& g : dangs) add(std::string("R_{") + d.n + "}(" + g.n + ")", d.a, g.a);

  for (auto& r : rots) r.admissible = is_admissible(r);
  return rots;
}

}  // namespace

CubeVertex vertex_of_bits(int b0, int b1, int b2) {
  return {b1 ? -1 : 1, b0 ? -1 : 1, b2 ? -1 : 1};
}

std::array<int, 3> bits_of_vertex(const CubeVertex& v) {
  return {v[1] < 0 ? 1 : 0, v[0] < 0 ? 1 : 0, v[2] < 0 ? 1 : 0};
}

BlochVector vertex_bloch(const CubeVertex& v) {
  const double s = 1.0 / std::sqrt(3.0);
  return {v[0] * s, v[1] * s, v[2] * s};
}

CubeVertex CubeRotation::apply(const CubeVertex& v) const {
  CubeVertex r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
  return r;
}

BlochVector CubeRotation::apply(const BlochVector& v) const {
  const double in[3] = {v.x, v.y, v.z};
  double out[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += m[i][j] * in[j];
  return {out[0], out[1], out[2]};
}

const std::vector<CubeRotation>& enumerate_cube_rotations() {
  static const std::vector<CubeRotation> group = build_group();
  return group;
}

const CubeRotation& cube_rotation(const std::string& label) {
  for (const auto& r : enumerate_cube_rotations())
    if (r.label == label) return r;
  throw UnknownRotation("cube_rotation: unknown label " + label);
}

std::vector<std::array<CubeVertex, 4>> admissible_subsets(const CubeRotation& r) {
  std::vector<CubeVertex> vs;
  for (int b0 = 0; b0 < 2; ++b0)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int b2 = 0; b2 < 2; ++b2) vs.push_back(vertex_of_bits(b0, b1, b2));
  std::set<CubeVertex> universe(vs.begin(), vs.end());
  std::vector<std::array<CubeVertex, 4>> out;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::set<CubeVertex> s, img;
    std::array<CubeVertex, 4> arr{};
    int k = 0;
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) { s.insert(vs[i]); img.insert(r.apply(vs[i])); arr[k++] = vs[i]; }
    std::set<CubeVertex> comp;
    for (const auto& v : universe)
      if (!s.count(v)) comp.insert(v);
    if (img == comp) out.push_back(arr);
  }
  return out;
}

}  // namespace drac
