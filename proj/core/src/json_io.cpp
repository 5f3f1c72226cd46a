#include "drac/json_io.hpp"

#include <fstream>

#include <json.hpp>

#include "drac/bloch.hpp"
#include "drac/errors.hpp"

namespace drac {

using nlohmann::json;

namespace {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = cx(rows[i][j][0].get<double>(), rows[i][j][1].get<double>());
  return m;
}

}  // namespace

std::string task_to_json(const TaskSpec& task) {
  json j;
  j["label"] = task.label();
  json bits = json::array();
  for (int k = 0; k < 24; ++k) bits.push_back((task.truth_bits() >> k) & 1u);
  j["truth_table"] = bits;
  if (task.bias()) j["bias"] = {{"t", task.bias()->t}, {"q", task.bias()->q}};
  return j.dump(2);
}

TaskSpec task_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("task_from_json: ") + e.what());
  }
  if (!j.contains("truth_table") || j["truth_table"].size() != 24)
    throw ParseError("task_from_json: truth_table must have 24 bits");
  std::uint32_t bits = 0;
  for (int k = 0; k < 24; ++k) {
    const int b = j["truth_table"][k].get<int>();
    if (b != 0 && b != 1) throw ParseError("task_from_json: truth_table entries must be bits");
    bits |= static_cast<std::uint32_t>(b) << k;
  }
  std::optional<TaskBias> bias;
  if (j.contains("bias")) bias = TaskBias{j["bias"]["t"].get<int>(), j["bias"]["q"].get<double>()};
  return TaskSpec::from_bits(j.value("label", ""), bits, bias);
}

TaskSpec load_task(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_task: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return task_from_json(text);
}

void save_task(const TaskSpec& task, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_task: cannot open " + path);
  out << task_to_json(task) << "\n";
}

std::string choi_to_json(const ChoiMatrix& J) {
  json j;
  j["matrix"] = matrix_to_json(J.j);
  j["convention"] = (J.convention == ChoiConvention::output_first) ? "output_first" : "input_first";
  return j.dump(2);
}

ChoiMatrix choi_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("choi_from_json: ") + e.what());
  }
  ChoiMatrix J;
  J.j = matrix_from_json(j.at("matrix"));
  const std::string conv = j.value("convention", "output_first");
  if (conv == "output_first") J.convention = ChoiConvention::output_first;
  else if (conv == "input_first") J.convention = ChoiConvention::input_first;
  else throw ParseError("choi_from_json: unknown convention " + conv);
  return J;
}

std::string strategy_to_json(const QracStrategy& s) {
  json j;
  json states = json::array();
  for (const Ket& psi : s.states) {
    const BlochVector v = state_to_bloch(projector(psi));
    states.push_back({{"bloch", {v.x, v.y, v.z}},
                      {"ket", {{psi[0].real(), psi[0].imag()}, {psi[1].real(), psi[1].imag()}}}});
  }
  j["states"] = states;
  json channels = json::array();
  for (const ChoiMatrix& ch : s.channels)
    channels.push_back(json::parse(choi_to_json(ch)));
  j["channels"] = channels;
  json meas = json::array();
  for (const Measurement& m : s.meas)
    meas.push_back({{"e0", matrix_to_json(m.e0)}, {"e1", matrix_to_json(m.e1)}});
  j["measurements"] = meas;
  return j.dump(2);
}

QracStrategy strategy_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("strategy_from_json: ") + e.what());
  }
  QracStrategy s;
  for (int k = 0; k < 4; ++k) {
    const auto& ket = j.at("states")[k].at("ket");
    s.states[k] = {cx(ket[0][0].get<double>(), ket[0][1].get<double>()),
                   cx(ket[1][0].get<double>(), ket[1][1].get<double>())};
  }
  for (int k = 0; k < 2; ++k) s.channels[k] = choi_from_json(j.at("channels")[k].dump());
  for (int k = 0; k < 3; ++k) {
    s.meas[k].e0 = matrix_from_json(j.at("measurements")[k].at("e0"));
    s.meas[k].e1 = matrix_from_json(j.at("measurements")[k].at("e1"));
  }
  return s;
}

void save_strategy(const QracStrategy& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_strategy: cannot open " + path);
  out << strategy_to_json(s) << "\n";
}

}  // namespace drac
