#include "drac/task.hpp"

#include <cmath>

#include "drac/errors.hpp"

namespace drac {

TaskSpec::TaskSpec(std::string label, std::function<int(int, int, int, int)> f,
                   std::optional<TaskBias> bias)
    : label_(std::move(label)) {
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y)
          table_[index(x0, x1, x2, y)] = static_cast<std::uint8_t>(f(x0, x1, x2, y) & 1);
  set_bias(bias);
}

TaskSpec TaskSpec::from_bits(std::string label, std::uint32_t bits, std::optional<TaskBias> bias) {
  TaskSpec t;
  t.label_ = std::move(label);
  for (int k = 0; k < 24; ++k) t.table_[k] = (bits >> k) & 1u;
  t.set_bias(bias);
  return t;
}

std::uint32_t TaskSpec::truth_bits() const {
  std::uint32_t bits = 0;
  for (int k = 0; k < 24; ++k) bits |= static_cast<std::uint32_t>(table_[k]) << k;
  return bits;
}

void TaskSpec::set_bias(std::optional<TaskBias> b) {
  if (b) {
    if (b->t != 0 && b->t != 1) throw Error("TaskSpec: bias t must be 0 or 1");
    if (b->q < 0.0 || b->q > 1.0 / 6.0 + 1e-12) throw QOutOfRange("TaskSpec: q outside [0, 1/6]");
  }
  bias_ = b;
}

std::array<double, 3> TaskSpec::y_weights() const {
  if (!bias_) return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  const double q = bias_->q;
  const double w1 = (bias_->t == 0) ? q : -2.0 * q;       // (-2)^t q
  const double w2 = (bias_->t == 0) ? -2.0 * q : q;       // (-2)^(t^1) q
  return {1.0 / 3.0 + q, 1.0 / 3.0 + w1, 1.0 / 3.0 + w2};
}

bool TaskSpec::outputs_pairwise_independent() const {
  for (int ya = 0; ya < 3; ++ya) {
    for (int yb = ya + 1; yb < 3; ++yb) {
      int joint[2][2] = {{0, 0}, {0, 0}};
      for (int x = 0; x < 8; ++x) {
        const int x0 = (x >> 2) & 1, x1 = (x >> 1) & 1, x2 = x & 1;
        joint[f(x0, x1, x2, ya)][f(x0, x1, x2, yb)]++;
      }
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          const int ma = joint[u][0] + joint[u][1];
          const int mb = joint[0][v] + joint[1][v];
          if (8 * joint[u][v] != ma * mb) return false;
        }
    }
  }
  return true;
}

double average_success(const TaskSpec& task,
                       const std::function<double(int, int, int, int)>& success) {
  const auto wy = task.y_weights();
  double total = 0.0;
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        for (int y = 0; y < 3; ++y) {
          const double p = success(x0, x1, x2, y);
          if (p < -1e-9 || p > 1.0 + 1e-9)
            throw ProbabilityOutOfRange("average_success: probability outside [0,1]");
          total += wy[y] / 8.0 * p;
        }
  return total;
}

}  // namespace drac
