#pragma once
#include <string>

#include "drac/channel.hpp"
#include "drac/qrac.hpp"
#include "drac/task.hpp"

namespace drac {

// Task file: { "label": string, "truth_table": [24 bits, x-major y-minor],
//              "bias": {"t": 0|1, "q": real} (optional) }
std::string task_to_json(const TaskSpec& task);
TaskSpec task_from_json(const std::string& text);  // throws ParseError
TaskSpec load_task(const std::string& path);
void save_task(const TaskSpec& task, const std::string& path);

// Choi: { "matrix": 4x4 of [re, im], "convention": "output_first"|"input_first" }
std::string choi_to_json(const ChoiMatrix& J);
ChoiMatrix choi_from_json(const std::string& text);

// Strategy: states as Bloch vectors, channels as Choi JSON, measurements as
// effect pairs.
std::string strategy_to_json(const QracStrategy& s);
QracStrategy strategy_from_json(const std::string& text);
void save_strategy(const QracStrategy& s, const std::string& path);

}  // namespace drac
