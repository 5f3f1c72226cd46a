#pragma once
#include <array>
#include <cstdint>

#include "drac/task.hpp"

namespace drac {

// Deterministic strategy for the distributed scenario: a one-bit message
// between each pair of consecutive devices. Shared randomness cannot beat the
// best deterministic triple (the figure of merit is linear in the strategy),
// so the exhaustive maximum below is the classical bound.
struct ClassicalStrategy {
  std::array<std::uint8_t, 4> encoder{};  // m1 = encoder[2*x0 + x1]
  std::array<std::uint8_t, 4> relay{};    // m2 = relay[2*m1 + x2]
  std::array<std::uint8_t, 6> decoder{};  // z  = decoder[3*m2 + y]
};

struct ClassicalOptimum {
  long long num = 0;  // success count; value = num / den exactly (unbiased tasks)
  long long den = 24;
  double value = 0.0;
  ClassicalStrategy witness;  // lexicographically smallest maximizer
};

// Exact maximum of the average success over all 2^4 x 2^4 x 2^6 = 16384
// deterministic strategies.
ClassicalOptimum classical_optimum(const TaskSpec& task);

// Non-distributed 3->1 RAC: encoder sees all of (x0,x1,x2).
struct StandardRacStrategy {
  std::array<std::uint8_t, 8> encoder{};  // m = encoder[4*x0 + 2*x1 + x2]
  std::array<std::uint8_t, 6> decoder{};  // z = decoder[3*m + y]
};

struct StandardRacOptimum {
  long long num = 0;
  long long den = 24;
  double value = 0.0;
  StandardRacStrategy witness;
};

StandardRacOptimum standard_rac_classical_optimum(const TaskSpec& task);
StandardRacOptimum standard_rac_classical_optimum();  // for f(x,y) = x_y

// Classical strategies with the message structure of the entanglement
// protocol: a = A(x0^x1), m1 = a^x0, b = B(m1^x2), m2 = m1^b, z = m2^C(y).
// Its maximum is the reference classical value 2/3 on all eight benchmark
// tasks; the unrestricted chain above exceeds it on some of them (an
// AND-encoder reaches 17/24, and 18/24 on the second task).
struct ParityProtocolOptimum {
  long long num = 0;
  long long den = 24;
  double value = 0.0;
  std::array<std::uint8_t, 2> alice{};    // a = alice[x0^x1]
  std::array<std::uint8_t, 2> bob{};      // b = bob[m1^x2]
  std::array<std::uint8_t, 3> charlie{};  // z = m2 ^ charlie[y]
};

ParityProtocolOptimum parity_protocol_optimum(const TaskSpec& task);

}  // namespace drac
