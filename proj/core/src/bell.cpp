#include "drac/bell.hpp"

#include <cmath>

#include "drac/errors.hpp"
#include "drac/qrac.hpp"

namespace drac {

std::array<double, 3> BellFunctional::weights() const {
  const double w1 = (t == 0) ? q : -2.0 * q;
  const double w2 = (t == 0) ? -2.0 * q : q;
  return {1.0 / 3.0 + q, 1.0 / 3.0 + w1, 1.0 / 3.0 + w2};
}

double BellFunctional::coeff(int a, int b, int c, int z1, int z2, int y) const {
  const auto w = weights();
  bool hit = false;
  if (y == 0) hit = ((a ^ b ^ c) == 0);
  else if (y == 1) hit = ((a ^ b ^ c) == z1);
  else hit = ((b ^ c) == z2);
  return hit ? w[y] / 4.0 : 0.0;
}

double bell_value(const BellFunctional& f, const Behavior& p) {
  double total = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int z1 = 0; z1 < 2; ++z1)
          for (int z2 = 0; z2 < 2; ++z2)
            for (int y = 0; y < 3; ++y)
              total += f.coeff(a, b, c, z1, z2, y) * p.at(a, b, c, z1, z2, y);
  return total;
}

Behavior behavior_of_local(const LocalStrategy& s) {
  Behavior p;
  for (int z1 = 0; z1 < 2; ++z1)
    for (int z2 = 0; z2 < 2; ++z2)
      for (int y = 0; y < 3; ++y) p.at(s.alice[z1], s.bob[z2], s.charlie[y], z1, z2, y) = 1.0;
  return p;
}

LocalMaxResult local_max(const BellFunctional& f) {
  LocalMaxResult best;
  best.value = -1.0;
  for (int am = 0; am < 4; ++am)
    for (int bm = 0; bm < 4; ++bm)
      for (int cm = 0; cm < 8; ++cm) {
        LocalStrategy s;
        for (int i = 0; i < 2; ++i) s.alice[i] = (am >> i) & 1;
        for (int i = 0; i < 2; ++i) s.bob[i] = (bm >> i) & 1;
        for (int i = 0; i < 3; ++i) s.charlie[i] = (cm >> i) & 1;
        double v = 0.0;
        for (int z1 = 0; z1 < 2; ++z1)
          for (int z2 = 0; z2 < 2; ++z2)
            for (int y = 0; y < 3; ++y)
              v += f.coeff(s.alice[z1], s.bob[z2], s.charlie[y], z1, z2, y);
        if (v > best.value + 1e-15) {
          best.value = v;
          best.witness = s;
        }
      }
  return best;
}

namespace {

// The pair's NS polytope: p(u,v | i,j) over the pair's inputs i in {0,1} and
// j in {0..nj-1}, nonnegative, normalized, with both marginals setting-
// independent. Variables indexed ((u*2+v)*2 + i)*nj + j.
LpProblem ns_pair_polytope(int nj) {
  const int nv = 2 * 2 * 2 * nj;
  LpProblem lp(static_cast<std::size_t>(nv));
  auto idx = [nj](int u, int v, int i, int j) { return ((u * 2 + v) * 2 + i) * nj + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < nj; ++j) {
      std::vector<double> row(nv, 0.0);
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) row[idx(u, v, i, j)] = 1.0;
      lp.add_equality(std::move(row), 1.0);
    }
  // marginal of v independent of i
  for (int v = 0; v < 2; ++v)
    for (int j = 0; j < nj; ++j) {
      std::vector<double> row(nv, 0.0);
      for (int u = 0; u < 2; ++u) {
        row[idx(u, v, 0, j)] += 1.0;
        row[idx(u, v, 1, j)] -= 1.0;
      }
      lp.add_equality(std::move(row), 0.0);
    }
  // marginal of u independent of j
  for (int u = 0; u < 2; ++u)
    for (int i = 0; i < 2; ++i)
      for (int j = 1; j < nj; ++j) {
        std::vector<double> row(nv, 0.0);
        for (int v = 0; v < 2; ++v) {
          row[idx(u, v, i, 0)] += 1.0;
          row[idx(u, v, i, j)] -= 1.0;
        }
        lp.add_equality(std::move(row), 0.0);
      }
  return lp;
}

}  // namespace

NsblResult nsbl_max(const BellFunctional& f, Partition part) {
  NsblResult best;
  best.value = -1.0;

  const int lone_count = (part == Partition::AB_C) ? 8 : 4;
  for (int lone = 0; lone < lone_count; ++lone) {
    // pair inputs: AB|C -> (z1, z2); AC|B -> (z1, y); BC|A -> (z2, y)
    const int nj = (part == Partition::AB_C) ? 2 : 3;
    LpProblem lp = ns_pair_polytope(nj);
    auto idx = [nj](int u, int v, int i, int j) {
      return static_cast<std::size_t>(((u * 2 + v) * 2 + i) * nj + j);
    };
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int z1 = 0; z1 < 2; ++z1)
            for (int z2 = 0; z2 < 2; ++z2)
              for (int y = 0; y < 3; ++y) {
                const double coef = f.coeff(a, b, c, z1, z2, y);
                if (coef == 0.0) continue;
                switch (part) {
                  case Partition::AB_C:
                    if (((lone >> y) & 1) == c) lp.objective[idx(a, b, z1, z2)] += coef;
                    break;
                  case Partition::AC_B:
                    if (((lone >> z2) & 1) == b) lp.objective[idx(a, c, z1, y)] += coef;
                    break;
                  case Partition::BC_A:
                    if (((lone >> z1) & 1) == a) lp.objective[idx(b, c, z2, y)] += coef;
                    break;
                }
              }
    const LpSolution sol = lp_maximize(lp);
    if (sol.status != LpStatus::optimal) throw Error("nsbl_max: LP did not reach an optimum");
    if (sol.value > best.value + 1e-12) {
      best.value = sol.value;
      Behavior w;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int z1 = 0; z1 < 2; ++z1)
              for (int z2 = 0; z2 < 2; ++z2)
                for (int y = 0; y < 3; ++y) {
                  double v = 0.0;
                  switch (part) {
                    case Partition::AB_C:
                      v = (((lone >> y) & 1) == c) ? sol.x[idx(a, b, z1, z2)] : 0.0;
                      break;
                    case Partition::AC_B:
                      v = (((lone >> z2) & 1) == b) ? sol.x[idx(a, c, z1, y)] : 0.0;
                      break;
                    case Partition::BC_A:
                      v = (((lone >> z1) & 1) == a) ? sol.x[idx(b, c, z2, y)] : 0.0;
                      break;
                  }
                  w.at(a, b, c, z1, z2, y) = v;
                }
      best.witness = w;
    }
  }
  return best;
}

GmnWitness gmn_witness(double q) {
  if (q < -1e-12 || q > 1.0 / 6.0 + 1e-12) throw QOutOfRange("gmn_witness: q outside [0, 1/6]");
  GmnWitness w;
  w.quantum_value = kPQ;
  const Partition parts[3] = {Partition::AB_C, Partition::AC_B, Partition::BC_A};
  w.best_bipartition_bound = -1.0;
  bool all_beaten = true;
  for (const Partition part : parts) {
    double bound = 1e30;
    int t_best = 0;
    for (int t = 0; t < 2; ++t) {
      const double v = nsbl_max({t, q}, part).value;
      if (v < bound) { bound = v; t_best = t; }
    }
    if (bound > w.best_bipartition_bound) {
      w.best_bipartition_bound = bound;
      w.t_choice = t_best;
    }
    if (!(w.quantum_value > bound + 1e-9)) all_beaten = false;
  }
  w.certified = all_beaten;
  return w;
}

std::vector<std::array<double, 16>> ns22_vertices() {
  std::vector<std::array<double, 16>> vs;
  auto idx = [](int a, int b, int z1, int z2) { return ((a * 2 + b) * 2 + z1) * 2 + z2; };
  for (int am = 0; am < 4; ++am)
    for (int bm = 0; bm < 4; ++bm) {
      std::array<double, 16> p{};
      for (int z1 = 0; z1 < 2; ++z1)
        for (int z2 = 0; z2 < 2; ++z2) p[idx((am >> z1) & 1, (bm >> z2) & 1, z1, z2)] = 1.0;
      vs.push_back(p);
    }
  // PR boxes: a^b = z1 z2 ^ alpha z1 ^ beta z2 ^ gamma
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta)
      for (int gamma = 0; gamma < 2; ++gamma) {
        std::array<double, 16> p{};
        for (int z1 = 0; z1 < 2; ++z1)
          for (int z2 = 0; z2 < 2; ++z2)
            for (int a = 0; a < 2; ++a)
              for (int b = 0; b < 2; ++b)
                if ((a ^ b) == ((z1 & z2) ^ (alpha & z1) ^ (beta & z2) ^ gamma))
                  p[idx(a, b, z1, z2)] = 0.5;
        vs.push_back(p);
      }
  return vs;
}

}  // namespace drac
