#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace drac {

struct TaskBias {
  int t = 0;     // 0 or 1
  double q = 0;  // in [0, 1/6]
};

// A distributed 3->1 RAC task: the guessing functions f(x,0), f(x,1), f(x,2)
// as a truth table over x = (x0,x1,x2), plus an optional input bias on y.
class TaskSpec {
 public:
  TaskSpec() = default;
  TaskSpec(std::string label, std::function<int(int, int, int, int)> f,
           std::optional<TaskBias> bias = std::nullopt);

  static TaskSpec from_bits(std::string label, std::uint32_t bits,
                            std::optional<TaskBias> bias = std::nullopt);

  int f(int x0, int x1, int x2, int y) const { return table_[index(x0, x1, x2, y)]; }
  std::uint32_t truth_bits() const;  // bit k = table entry k, x-major y-minor

  const std::string& label() const { return label_; }
  const std::optional<TaskBias>& bias() const { return bias_; }
  void set_bias(std::optional<TaskBias> b);

  // y-input distribution: uniform, or (1/3+q, 1/3+(-2)^t q, 1/3+(-2)^(t^1) q).
  std::array<double, 3> y_weights() const;

  // f(x,0), f(x,1), f(x,2) pairwise independent as binary random variables
  // over uniform x (the premise behind the classical 2/3 bound).
  bool outputs_pairwise_independent() const;

  bool operator==(const TaskSpec& o) const { return table_ == o.table_; }

  static constexpr int index(int x0, int x1, int x2, int y) {
    return ((x0 * 2 + x1) * 2 + x2) * 3 + y;
  }

 private:
  std::array<std::uint8_t, 24> table_{};
  std::string label_;
  std::optional<TaskBias> bias_;
};

// Eq.-style average over 24 (x,y) pairs (bias-weighted in y when present).
// success(x0,x1,x2,y) must be the probability that z = f(x,y).
double average_success(const TaskSpec& task,
                       const std::function<double(int, int, int, int)>& success);

}  // namespace drac
