#include "drac/earac.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "drac/errors.hpp"
#include "drac/qrac.hpp"

namespace drac {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix family_unitary(Reflection f) {
  switch (f) {
    case Reflection::XY: return ComplexMatrix::identity(2);
    case Reflection::XZ: return rotation_unitary({1, 0, 0}, kPi);
    case Reflection::YZ: return rotation_unitary({0, 1, 0}, kPi);
  }
  throw Error("family_unitary: bad reflection");
}

const char* family_name(Reflection f) {
  switch (f) {
    case Reflection::XY: return "R_XY";
    case Reflection::XZ: return "R_XZ";
    case Reflection::YZ: return "R_YZ";
  }
  return "?";
}

}  // namespace

double EaracStrategy::alice_phi(int s) const { return kPi / 4.0 * (1.0 + 2.0 * s); }

double EaracStrategy::bob_theta(int s) const {
  return std::acos(std::sqrt((std::sqrt(3.0) + (s ? -1.0 : 1.0)) / (2.0 * std::sqrt(3.0))));
}

Ket EaracStrategy::alice_vector(int a, int s) const {
  const double phi = alice_phi(s);
  const cx e = std::exp(cx(0.0, -phi));
  Ket v = {cx(1.0 / std::sqrt(2.0)), (a ? -e : e) / std::sqrt(2.0)};
  return family_unitary(family) * v;
}

Ket EaracStrategy::bob_vector(int b, int s, int x2) const {
  const double th = bob_theta(s);
  const cx e = std::exp(cx(0.0, -phi_prime * x2));
  Ket v = b == 0 ? Ket{cx(std::cos(th)), e * std::sin(th)}
                 : Ket{cx(std::sin(th)), -e * std::cos(th)};
  return family_unitary(family) * v;
}

Ket EaracStrategy::charlie_vector(int c, int y) const {
  const double r = 1.0 / std::sqrt(2.0);
  switch (y) {
    case 0: return c == 0 ? Ket{r, cx(0, r)} : Ket{r, cx(0, -r)};
    case 1: return c == 0 ? Ket{r, r} : Ket{r, -r};
    default: return c == 0 ? Ket{1.0, 0.0} : Ket{0.0, 1.0};
  }
}

Ket ghz_state() {
  Ket g(8, 0.0);
  g[0] = 1.0 / std::sqrt(2.0);
  g[7] = 1.0 / std::sqrt(2.0);
  return g;
}

double ghz_decomposition_check(double phi, double theta) {
  Ket rhs(8, 0.0);
  for (int a = 0; a < 2; ++a) {
    const cx em = std::exp(cx(0.0, -phi));
    const cx ep = std::exp(cx(0.0, phi));
    const double sgn = a ? -1.0 : 1.0;
    const Ket alice = {cx(1.0 / std::sqrt(2.0)), sgn * em / std::sqrt(2.0)};
    const Ket b0 = {std::cos(theta), std::sin(theta)};
    const Ket c0 = {cx(std::cos(theta)), sgn * ep * std::sin(theta)};
    const Ket b1 = {std::sin(theta), -std::cos(theta)};
    const Ket c1 = {cx(std::sin(theta)), -sgn * ep * std::cos(theta)};
    Ket bc = kron(b0, c0);
    const Ket bc1 = kron(b1, c1);
    for (int i = 0; i < 4; ++i) bc[i] += bc1[i];
    const Ket term = kron(alice, bc);
    for (int i = 0; i < 8; ++i) rhs[i] += 0.5 * term[i];
  }
  const Ket g = ghz_state();
  double worst = 0.0;
  for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(rhs[i] - g[i]));
  return worst;
}

void validate_earac(const EaracStrategy& s) {
  if (s.decoder_flip != 0 && s.decoder_flip != 1)
    throw InvalidStrategy("EaracStrategy: decoder_flip must be a bit");
  // Charlie's bases pairwise mutually unbiased
  for (int y = 0; y < 3; ++y)
    for (int yy = y + 1; yy < 3; ++yy)
      for (int c = 0; c < 2; ++c)
        for (int cc = 0; cc < 2; ++cc) {
          const double ov = std::norm(inner(s.charlie_vector(c, y), s.charlie_vector(cc, yy)));
          if (std::abs(ov - 0.5) > 1e-9)
            throw InvalidStrategy("EaracStrategy: Charlie bases not mutually unbiased");
        }
  // Alice/Bob bases orthonormal for every setting
  for (int v = 0; v < 2; ++v) {
    if (std::abs(std::abs(inner(s.alice_vector(0, v), s.alice_vector(1, v)))) > 1e-9)
      throw InvalidStrategy("EaracStrategy: Alice basis not orthogonal");
    for (int x2 = 0; x2 < 2; ++x2)
      if (std::abs(std::abs(inner(s.bob_vector(0, v, x2), s.bob_vector(1, v, x2)))) > 1e-9)
        throw InvalidStrategy("EaracStrategy: Bob basis not orthogonal");
  }
}

double earac_success_probability(const EaracStrategy& s, int x0, int x1, int x2, int y,
                                 int target_bit) {
  const Ket ghz = ghz_state();
  double p = 0.0;
  for (int a = 0; a < 2; ++a) {
    const int m1 = a ^ x0;
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int z = m1 ^ b ^ c ^ s.decoder_flip;
        if (z != target_bit) continue;
        const Ket v = kron(kron(s.alice_vector(a, x0 ^ x1), s.bob_vector(b, m1 ^ x2, x2)),
                           s.charlie_vector(c, y));
        p += std::norm(inner(v, ghz));
      }
  }
  return p;
}

double eval_earac(const EaracStrategy& s, const TaskSpec& task) {
  validate_earac(s);
  return average_success(task, [&](int x0, int x1, int x2, int y) {
    return earac_success_probability(s, x0, x1, x2, y, task.f(x0, x1, x2, y));
  });
}

std::pair<TaskSpec, EaracStrategy> build_earac_task(Reflection refl, double phi_prime) {
  EaracStrategy s;
  s.family = refl;
  s.phi_prime = phi_prime;
  std::array<std::uint8_t, 24> table{};
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y) {
          const double p0 = earac_success_probability(s, x0, x1, x2, y, 0);
          int bit;
          if (std::abs(p0 - kPQ) <= 1e-9) bit = 0;
          else if (std::abs(p0 - (1.0 - kPQ)) <= 1e-9) bit = 1;
          else throw InvalidStrategy("build_earac_task: term not at the optimal value");
          table[TaskSpec::index(x0, x1, x2, y)] = static_cast<std::uint8_t>(bit);
        }
  std::uint32_t bits = 0;
  for (int k = 0; k < 24; ++k) bits |= static_cast<std::uint32_t>(table[k]) << k;
  std::ostringstream label;
  label << "earac[" << family_name(refl) << ", phi'=" << phi_prime << "]";
  return {TaskSpec::from_bits(label.str(), bits), s};
}

Behavior earac_behavior(const EaracStrategy& s) {
  // Exact for phi' = 0 members; for phi' != 0 the x2-conditioned phase is
  // carried by Bob's setting z2 instead (the only choice available to a
  // setting-local party).
  const Ket ghz = ghz_state();
  Behavior p;
  for (int z1 = 0; z1 < 2; ++z1)
    for (int z2 = 0; z2 < 2; ++z2)
      for (int y = 0; y < 3; ++y)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
              const Ket v = kron(kron(s.alice_vector(a, z1), s.bob_vector(b, z2, z2)),
                                 s.charlie_vector(c, y));
              p.at(a, b, c, z1, z2, y) = std::norm(inner(v, ghz));
            }
  return p;
}

double earac_success_via_behavior(const EaracStrategy& s, const Behavior& p, int x0, int x1,
                                  int x2, int y, int target_bit) {
  const int z1 = x0 ^ x1;
  double total = 0.0;
  for (int a = 0; a < 2; ++a) {
    const int z2 = x0 ^ a ^ x2;
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (((a ^ x0 ^ b ^ c) ^ s.decoder_flip) == target_bit)
          total += p.at(a, b, c, z1, z2, y);
  }
  return total;
}

}  // namespace drac
