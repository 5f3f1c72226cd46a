// drac: distributed random access code toolbox.
//
// Subcommands: tasks list|show, classical, qrac eval, earac eval,
// bell scan, nogo check, seesaw run, optics verify|compare, report table1.
// Exit codes: 0 success, 2 usage/validation error, 1 internal error.
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "drac/bell.hpp"
#include "drac/classical.hpp"
#include "drac/earac.hpp"
#include "drac/ellipsoid.hpp"
#include "drac/errors.hpp"
#include "drac/json_io.hpp"
#include "drac/optics.hpp"
#include "drac/reference.hpp"
#include "drac/seesaw.hpp"

using namespace drac;
using nlohmann::json;

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("DRAC_DATA_DIR")) return env;
  return DRAC_DATA_DIR;
}

struct Output {
  std::string format = "text";  // text | csv | json
  std::string path;             // empty = stdout

  void write(const std::string& text_form, const std::string& csv_form, const json& json_form) const {
    std::string body;
    if (format == "text") body = text_form;
    else if (format == "csv") body = csv_form;
    else body = json_form.dump(2) + "\n";
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw Error("cannot open output file " + path);
      out << body;
    }
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format: text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", out.path, "Output file (default stdout)");
}

TaskSpec resolve_task(int index, const std::string& path) {
  if (!path.empty()) return load_task(path);
  return table1_task(index);
}

char bit_char(int b) { return b ? '1' : '0'; }

std::string truth_table_string(const TaskSpec& t) {
  std::ostringstream os;
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2) {
        os << "  x=" << x0 << x1 << x2 << " -> ";
        for (int y = 0; y < 3; ++y) os << bit_char(t.f(x0, x1, x2, y));
        os << "\n";
      }
  return os.str();
}

int cmd_tasks_list(const Output& out) {
  std::ostringstream text, csv;
  json arr = json::array();
  text << "built-in tasks (benchmark rows 1-8)\n";
  csv << "index,label,transformation,earac,qrac\n";
  for (const Table1Row& row : table1_reference()) {
    text << "  " << row.index << ": " << row.task_label << "   [" << row.transformation << "]\n";
    csv << row.index << "," << row.task_label << "," << row.transformation << ","
        << row.earac_value << "," << row.qrac_value << "\n";
    arr.push_back({{"index", row.index},
                   {"label", row.task_label},
                   {"transformation", row.transformation}});
  }
  out.write(text.str(), csv.str(), arr);
  return 0;
}

int cmd_tasks_show(int index, const std::string& path, const Output& out) {
  const TaskSpec t = resolve_task(index, path);
  std::ostringstream text;
  text << "task: " << t.label() << "\n" << truth_table_string(t);
  out.write(text.str(), task_to_json(t) + "\n", json::parse(task_to_json(t)));
  return 0;
}

int cmd_classical(int index, const std::string& path, const Output& out) {
  const TaskSpec t = resolve_task(index, path);
  const ClassicalOptimum chain = classical_optimum(t);
  const ParityProtocolOptimum parity = parity_protocol_optimum(t);
  const StandardRacOptimum std_rac = standard_rac_classical_optimum(t);
  std::ostringstream text, csv;
  text << "task: " << t.label() << "\n"
       << "  distributed chain optimum:   " << chain.num << "/24 = " << chain.value << "\n"
       << "  parity-protocol optimum:     " << parity.num << "/24 = " << parity.value
       << "  (the reference classical value)\n"
       << "  standard (undistributed):    " << std_rac.num << "/24 = " << std_rac.value << "\n";
  csv << "model,num,den,value\nchain," << chain.num << ",24," << chain.value << "\nparity,"
      << parity.num << ",24," << parity.value << "\nstandard," << std_rac.num << ",24,"
      << std_rac.value << "\n";
  out.write(text.str(), csv.str(),
            json{{"task", t.label()},
                 {"chain", {{"num", chain.num}, {"den", 24}, {"value", chain.value}}},
                 {"parity_protocol", {{"num", parity.num}, {"den", 24}, {"value", parity.value}}},
                 {"standard", {{"num", std_rac.num}, {"den", 24}, {"value", std_rac.value}}}});
  return 0;
}

int cmd_qrac_eval(int index, const std::string& strategy_path, const Output& out) {
  const TaskSpec t = table1_task(index);
  QracStrategy s;
  std::string source;
  if (!strategy_path.empty()) {
    std::ifstream in(strategy_path);
    if (!in) throw Error("cannot open " + strategy_path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    s = strategy_from_json(body);
    source = strategy_path;
  } else if (index >= 5) {
    s = table1_qrac_strategy(index);
    source = "built-in construction";
  } else {
    s = reference_strategy(std::min(index, 3));
    source = "printed strategy";
  }
  const double v = eval_qrac_strategy(s, t);
  std::ostringstream text, csv;
  text << "task " << index << " (" << t.label() << ")\n  qrac value: " << std::setprecision(12) << v
       << "   [" << source << "]\n";
  csv << "task,value,source\n" << index << "," << v << "," << source << "\n";
  out.write(text.str(), csv.str(), json{{"task", index}, {"value", v}, {"source", source}});
  return 0;
}

int cmd_earac_eval(int index, const Output& out) {
  const TaskSpec t = table1_task(index);
  double v;
  std::string note;
  if (index <= 4) {
    v = eval_earac(table1_earac_strategy(index), t);
    note = "optimal family member";
  } else {
    // best family member against a QRAC-optimal task
    v = 0.0;
    for (const Reflection family : {Reflection::XY, Reflection::XZ, Reflection::YZ})
      for (const double pp : {0.0, M_PI, M_PI / 2.0, 3.0 * M_PI / 2.0})
        v = std::max(v, eval_earac(build_earac_task(family, pp).second, t));
    note = "best of the 12 family members (upper bounds live in reference constants)";
  }
  std::ostringstream text, csv;
  text << "task " << index << " (" << t.label() << ")\n  earac value: " << std::setprecision(12)
       << v << "   [" << note << "]\n";
  csv << "task,value,note\n" << index << "," << v << "," << note << "\n";
  out.write(text.str(), csv.str(), json{{"task", index}, {"value", v}, {"note", note}});
  return 0;
}

int cmd_bell_scan(int t_bit, double qmin, double qmax, int steps, const Output& out) {
  if (steps < 1) throw Error("steps must be >= 1");
  const Behavior earac = earac_behavior(table1_earac_strategy(1));
  std::ostringstream text, csv;
  json arr = json::array();
  csv << "t,q,local,nsbl_AB,nsbl_AC,nsbl_BC,quantum\n";
  text << "  t        q     local   nsbl_AB   nsbl_AC   nsbl_BC   quantum\n";
  for (int k = 0; k <= steps; ++k) {
    const double q = qmin + (qmax - qmin) * k / steps;
    const BellFunctional f{t_bit, q};
    const double lm = local_max(f).value;
    const double ab = nsbl_max(f, Partition::AB_C).value;
    const double ac = nsbl_max(f, Partition::AC_B).value;
    const double bc = nsbl_max(f, Partition::BC_A).value;
    const double qv = bell_value(f, earac);
    char line[160];
    std::snprintf(line, sizeof line, "  %d %8.4f  %8.6f %9.6f %9.6f %9.6f %9.6f\n", t_bit, q, lm,
                  ab, ac, bc, qv);
    text << line;
    csv << t_bit << "," << q << "," << lm << "," << ab << "," << ac << "," << bc << "," << qv
        << "\n";
    arr.push_back({{"t", t_bit}, {"q", q}, {"local", lm}, {"nsbl_AB", ab}, {"nsbl_AC", ac},
                   {"nsbl_BC", bc}, {"quantum", qv}});
  }
  out.write(text.str(), csv.str(), arr);
  return 0;
}

int cmd_nogo_check(const std::string& reflection, const Output& out) {
  const double s = 1.0 / std::sqrt(3.0);
  std::array<BlochVector, 4> sources, targets;
  int k = 0;
  for (int u = -1; u <= 1; u += 2)
    for (int v = -1; v <= 1; v += 2) {
      if (reflection == "XY") {
        sources[k] = {u * s, v * s, s};
        targets[k] = {u * s, v * s, -s};
      } else if (reflection == "XZ") {
        sources[k] = {u * s, s, v * s};
        targets[k] = {u * s, -s, v * s};
      } else if (reflection == "YZ") {
        sources[k] = {s, u * s, v * s};
        targets[k] = {-s, u * s, v * s};
      } else {
        throw Error("reflection must be XY, XZ or YZ");
      }
      ++k;
    }
  const FeasibilityResult r = reflection_feasibility(targets, sources);
  std::ostringstream text, csv;
  if (r.feasible) {
    text << "feasible\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof line,
                  "infeasible: lambda3 in [%.3f, inf) required, <= %.3f allowed\n",
                  r.lambda3_required, r.lambda3_allowed);
    text << line;
  }
  csv << "reflection,feasible,lambda3_required,lambda3_allowed\nR_" << reflection << ","
      << (r.feasible ? 1 : 0) << "," << r.lambda3_required << "," << r.lambda3_allowed << "\n";
  out.write(text.str(), csv.str(),
            json{{"reflection", "R_" + reflection},
                 {"feasible", r.feasible},
                 {"lambda3_required", r.lambda3_required},
                 {"lambda3_allowed", r.lambda3_allowed}});
  return 0;
}

int cmd_seesaw_run(int index, const std::string& path, int restarts, std::uint64_t seed,
                   const std::string& dump, const Output& out) {
  const TaskSpec t = resolve_task(index, path);
  SeesawOptions opt;
  opt.restarts = restarts;
  opt.seed = seed;
  const SeesawResult r = run_seesaw(t, opt);
  if (!dump.empty()) save_strategy(r.strategy, dump);
  std::ostringstream text, csv;
  text << "task: " << t.label() << "\n  seesaw best: " << std::setprecision(12) << r.value
       << "  (restart " << r.best_restart << ", " << r.cycles << " cycles, " << restarts
       << " restarts, seed " << seed << ")\n";
  csv << "task,value,best_restart,cycles,restarts,seed\n" << t.label() << "," << r.value << ","
      << r.best_restart << "," << r.cycles << "," << restarts << "," << seed << "\n";
  out.write(text.str(), csv.str(),
            json{{"task", t.label()}, {"value", r.value}, {"best_restart", r.best_restart},
                 {"cycles", r.cycles}, {"restarts", restarts}, {"seed", seed}});
  return 0;
}

int cmd_optics_verify(const Output& out) {
  std::ostringstream text, csv;
  json arr = json::array();
  csv << "task,state,prep_fidelity,unitary,unitary_distance\n";
  text << "  task state  prep fidelity     unitary      distance\n";
  bool all_ok = true;
  for (const DesignTableRow& row : design_table_rows()) {
    const double fid = verify_preparation(row);
    const double dist = verify_unitary(row.unitary_label, row.theta3, row.gamma, row.theta4);
    all_ok = all_ok && fid >= 1.0 - 1e-4 && dist <= 1e-6;
    char line[160];
    std::snprintf(line, sizeof line, "   %d   psi%d%d  %.10f  %-11s  %.2e\n", row.task, row.x0,
                  row.x1, fid, row.unitary_label.c_str(), dist);
    text << line;
    csv << row.task << ",psi" << row.x0 << row.x1 << "," << fid << "," << row.unitary_label << ","
        << dist << "\n";
    arr.push_back({{"task", row.task},
                   {"state", "psi" + std::to_string(row.x0) + std::to_string(row.x1)},
                   {"prep_fidelity", fid},
                   {"unitary", row.unitary_label},
                   {"unitary_distance", dist}});
  }
  text << (all_ok ? "all rows verify\n" : "SOME ROWS FAIL\n");
  out.write(text.str(), csv.str(), arr);
  return all_ok ? 0 : 1;
}

int cmd_optics_compare(const std::string& results_path, const Output& out) {
  const std::string path =
      results_path.empty() ? data_dir() + "/measured_probabilities.csv" : results_path;
  const CompareReport r = compare_report(ingest_results(path));
  std::ostringstream text, csv;
  json arr = json::array();
  csv << "task,state,unitary,basis,measured,sigma,ideal,deviation_sigma,suspect_sigma\n";
  for (const CompareRow& row : r.rows) {
    csv << row.measured.task << "," << row.measured.state << "," << row.measured.unitary << ","
        << row.measured.basis << "," << row.measured.p << "," << row.measured.sigma << ","
        << row.ideal << "," << row.deviation_sigma << "," << (row.suspect_sigma ? 1 : 0) << "\n";
    arr.push_back({{"task", row.measured.task},
                   {"state", row.measured.state},
                   {"unitary", row.measured.unitary},
                   {"basis", row.measured.basis},
                   {"measured", row.measured.p},
                   {"sigma", row.measured.sigma},
                   {"ideal", row.ideal},
                   {"deviation_sigma", row.deviation_sigma},
                   {"suspect_sigma", row.suspect_sigma}});
  }
  char head[160];
  std::snprintf(head, sizeof head,
                "%zu rows, mean deviation %+.3f sigma, worst |deviation| %.3f sigma\n",
                r.rows.size(), r.mean_deviation, r.max_abs_deviation);
  text << head;
  for (const CompareRow& row : r.rows)
    if (row.suspect_sigma)
      text << "  note: task " << row.measured.task << " " << row.measured.state << " "
           << row.measured.basis
           << " prints a sigma an order below its siblings (kept verbatim, flagged)\n";
  out.write(text.str(), csv.str(), arr);
  return 0;
}

int cmd_report_table1(int restarts, std::uint64_t seed, const Output& out) {
  std::ostringstream text, csv;
  json arr = json::array();
  csv << "row,task,transformation,classical_chain,classical_parity,earac,earac_source,qrac,"
         "qrac_source,seesaw\n";
  text << "row  task                                transformation    chain  parity   earac"
          "                 qrac                  seesaw\n";
  for (const Table1Row& ref : table1_reference()) {
    const TaskSpec t = table1_task(ref.index);
    const ClassicalOptimum chain = classical_optimum(t);
    const ParityProtocolOptimum parity = parity_protocol_optimum(t);
    const double earac_val = ref.index <= 4 ? eval_earac(table1_earac_strategy(ref.index), t)
                                            : ref.earac_value;
    const double qrac_val =
        ref.index >= 5 ? eval_qrac_strategy(table1_qrac_strategy(ref.index), t) : ref.qrac_value;
    SeesawOptions opt;
    opt.restarts = restarts;
    opt.seed = seed;
    const double sw = run_seesaw(t, opt).value;
    char line[240];
    std::snprintf(line, sizeof line,
                  "%2d   %-35s %-16s %2lld/24  %2lld/24   %.6f (%s)  %.6f (%s)  %.6f\n", ref.index,
                  ref.task_label.c_str(), ref.transformation.c_str(), chain.num, parity.num,
                  earac_val, ref.earac_provenance.c_str(), qrac_val, ref.qrac_provenance.c_str(),
                  sw);
    text << line;
    csv << ref.index << "," << ref.task_label << "," << ref.transformation << "," << chain.value
        << "," << parity.value << "," << earac_val << "," << ref.earac_provenance << ","
        << qrac_val << "," << ref.qrac_provenance << "," << sw << "\n";
    arr.push_back({{"row", ref.index},
                   {"task", ref.task_label},
                   {"transformation", ref.transformation},
                   {"classical_chain", chain.value},
                   {"classical_parity", parity.value},
                   {"earac", earac_val},
                   {"earac_source", ref.earac_provenance},
                   {"qrac", qrac_val},
                   {"qrac_source", ref.qrac_provenance},
                   {"seesaw", sw}});
  }
  text << "\nAQ entries are reference constants, not recomputed. The chain column is the\n"
          "unrestricted two-message classical optimum; the parity column restricts to the\n"
          "message-parity protocol class (the reference classical value).\n";
  out.write(text.str(), csv.str(), arr);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributed 3->1 random access code toolbox"};
  app.require_subcommand(1);

  Output out;
  int index = 1;
  std::string task_path, strategy_path, results_path, dump_path, reflection = "XY";
  int t_bit = 0, steps = 8, restarts = 50;
  double qmin = 0.0, qmax = 1.0 / 6.0;
  std::uint64_t seed = 0;

  auto* tasks = app.add_subcommand("tasks", "List or show tasks");
  auto* tasks_list = tasks->add_subcommand("list", "List the built-in tasks");
  add_output_flags(tasks_list, out);
  auto* tasks_show = tasks->add_subcommand("show", "Show a task's truth table");
  tasks_show->add_option("--task", index, "Built-in task index 1-8")->check(CLI::Range(1, 8));
  tasks_show->add_option("--file", task_path, "Task JSON file");
  add_output_flags(tasks_show, out);

  auto* classical = app.add_subcommand("classical", "Exact classical optima");
  classical->add_option("--task", index, "Built-in task index 1-8")->check(CLI::Range(1, 8));
  classical->add_option("--file", task_path, "Task JSON file");
  add_output_flags(classical, out);

  auto* qrac = app.add_subcommand("qrac", "QRAC evaluation");
  auto* qrac_eval = qrac->add_subcommand("eval", "Evaluate a QRAC strategy on a task");
  qrac_eval->add_option("--task", index, "Built-in task index 1-8")->check(CLI::Range(1, 8));
  qrac_eval->add_option("--strategy", strategy_path, "Strategy JSON file");
  add_output_flags(qrac_eval, out);

  auto* earac = app.add_subcommand("earac", "EARAC evaluation");
  auto* earac_eval = earac->add_subcommand("eval", "Evaluate the EARAC on a task");
  earac_eval->add_option("--task", index, "Built-in task index 1-8")->check(CLI::Range(1, 8));
  add_output_flags(earac_eval, out);

  auto* bell = app.add_subcommand("bell", "Bell bounds");
  auto* bell_scan = bell->add_subcommand("scan", "Scan local/NSBL bounds over q");
  bell_scan->add_option("--t", t_bit, "Bias branch t")->check(CLI::Range(0, 1));
  bell_scan->add_option("--qmin", qmin, "Lower q");
  bell_scan->add_option("--qmax", qmax, "Upper q");
  bell_scan->add_option("--steps", steps, "Number of grid steps")->check(CLI::Range(1, 1000));
  add_output_flags(bell_scan, out);

  auto* nogo = app.add_subcommand("nogo", "Reflection no-go");
  auto* nogo_check = nogo->add_subcommand("check", "Check a reflection's feasibility");
  nogo_check->add_option("--reflection", reflection, "XY, XZ or YZ")
      ->check(CLI::IsMember({"XY", "XZ", "YZ"}));
  add_output_flags(nogo_check, out);

  auto* seesaw = app.add_subcommand("seesaw", "Alternating optimization");
  auto* seesaw_run = seesaw->add_subcommand("run", "Run the see-saw on a task");
  seesaw_run->add_option("--task", index, "Built-in task index 1-8")->check(CLI::Range(1, 8));
  seesaw_run->add_option("--file", task_path, "Task JSON file");
  seesaw_run->add_option("--restarts", restarts, "Random restarts")->check(CLI::Range(1, 10000));
  seesaw_run->add_option("--seed", seed, "RNG seed");
  seesaw_run->add_option("--dump", dump_path, "Write the best strategy JSON here");
  add_output_flags(seesaw_run, out);

  auto* optics = app.add_subcommand("optics", "Waveplate design verification");
  auto* optics_verify = optics->add_subcommand("verify", "Verify the design table");
  add_output_flags(optics_verify, out);
  auto* optics_compare = optics->add_subcommand("compare", "Compare measured data to ideal");
  optics_compare->add_option("--results", results_path, "Measured-probabilities CSV");
  add_output_flags(optics_compare, out);

  auto* report = app.add_subcommand("report", "Summary reports");
  auto* report_table1 = report->add_subcommand("table1", "Reproduce the eight-task table");
  report_table1->add_option("--restarts", restarts, "See-saw restarts")->check(CLI::Range(1, 10000));
  report_table1->add_option("--seed", seed, "See-saw seed");
  add_output_flags(report_table1, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (tasks_list->parsed()) return cmd_tasks_list(out);
    if (tasks_show->parsed()) return cmd_tasks_show(index, task_path, out);
    if (classical->parsed()) return cmd_classical(index, task_path, out);
    if (qrac_eval->parsed()) return cmd_qrac_eval(index, strategy_path, out);
    if (earac_eval->parsed()) return cmd_earac_eval(index, out);
    if (bell_scan->parsed()) return cmd_bell_scan(t_bit, qmin, qmax, steps, out);
    if (nogo_check->parsed()) return cmd_nogo_check(reflection, out);
    if (seesaw_run->parsed()) return cmd_seesaw_run(index, task_path, restarts, seed, dump_path, out);
    if (optics_verify->parsed()) return cmd_optics_verify(out);
    if (optics_compare->parsed()) return cmd_optics_compare(results_path, out);
    if (report_table1->parsed()) return cmd_report_table1(restarts, seed, out);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const QOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
