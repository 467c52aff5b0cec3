// snc: normal cones of sublevel sets of supremum functions, checked exactly.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "snc/report.hpp"
#include "snc/suite.hpp"

using namespace snc;

namespace {

struct Common {
  std::string epsilon;
  std::string s_grid;
  std::string mode;
  std::string format = "human";
  std::string out;
  bool inject_fault = false;
};

void add_common(CLI::App* cmd, Common& c, bool formula_flags) {
  cmd->add_option("--format", c.format, "human, machine or csv")->check(CLI::IsMember({"human", "machine", "csv"}));
  cmd->add_option("--out", c.out, "write the report to this file instead of stdout");
  if (!formula_flags) return;
  cmd->add_option("--epsilon", c.epsilon, "comma-separated epsilon list, e.g. 1,1/2");
  cmd->add_option("--s-grid", c.s_grid, "scaling grid, e.g. 2^-10..2^10 or 1/2,1,2;notail");
  cmd->add_option("--mode", c.mode, "exact-affine or sampled");
  cmd->add_flag("--inject-fault", c.inject_fault, "reflect every formula generator (harness self-test)");
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    Rational r;
    try {
      r = parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    } catch (const InputError& e) {
      throw InputError(std::string("--epsilon: ") + e.what());
    }
    if (sgn(r) <= 0) throw InputError("--epsilon: epsilon must be positive");
    out.push_back(r);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw InputError("--out: cannot write " + out);
  f << text;
}

int emit_report(const ReportFile& report, const Common& c) {
  emit(render_records(report, parse_format(c.format)), c.out);
  for (const auto& r : report.records) {
    if (r.contains("detail") && r.value("inconclusive", false)) std::cerr << "snc: " << r["detail"].get<std::string>() << "\n";
  }
  return report.exit_code();
}

FormulaOptions formula_options(const Common& c) {
  FormulaOptions o;
  o.inject_fault = c.inject_fault;
  return o;
}

int run_file(const std::string& command, const std::string& path, const Common& c) {
  InstanceFile f = parse_instance_file(path);
  if (f.command != command) throw InputError("$.command: file is for \"" + f.command + "\", not \"" + command + "\"");
  RunOptions o;
  if (!c.epsilon.empty()) o.epsilon = parse_list(c.epsilon);
  if (!c.s_grid.empty()) {
    try {
      o.s_grid = SGrid::parse(c.s_grid).to_string();
    } catch (const InputError& e) {
      throw InputError(std::string("--s-grid: ") + e.what());
    }
  }
  if (!c.mode.empty()) o.mode = parse_mode(c.mode);
  o.formula = formula_options(c);
  return emit_report(run_instance(f, o), c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normal cones of sublevel sets of supremum functions"};
  app.require_subcommand(1);

  Common common;
  std::string file;
  const std::vector<std::pair<std::string, std::string>> file_commands = {
      {"normal-cone", "normal cone of [sup f_t <= 0] at x, formula against oracle"},
      {"dom-cone", "normal cone of the domain of sup f_t at x"},
      {"qc", "normal cone of a quasi-convex sublevel set"},
      {"check-optimal", "optimality of x for min f0 over [sup f_t <= 0]"},
      {"check-sip", "optimality in a linear semi-infinite program"},
  };
  std::vector<CLI::App*> file_apps;
  for (const auto& [name, help] : file_commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "instance file (JSON)")->required();
    add_common(cmd, common, true);
    file_apps.push_back(cmd);
  }

  std::string selector;
  SuiteOptions suite;
  bool serial = false;
  CLI::App* suite_cmd = app.add_subcommand("suite", "curated or seeded random verification suite");
  suite_cmd->add_option("selector", selector, "curated or random")->required()->check(CLI::IsMember({"curated", "random"}));
  suite_cmd->add_option("--seed", suite.seed, "random seed");
  suite_cmd->add_option("--count", suite.count, "number of random instances")->check(CLI::Range(1, 100000));
  suite_cmd->add_option("--dim", suite.dim, "dimension of random instances (0: mixed)")->check(CLI::Range(0, 6));
  suite_cmd->add_flag("--serial", serial, "verify on one thread");
  add_common(suite_cmd, common, false);
  suite_cmd->add_flag("--inject-fault", common.inject_fault, "reflect every formula generator (harness self-test)");

  std::uint64_t gen_seed = 1;
  std::size_t gen_dim = 0, gen_members = 0;
  std::string gen_kind = "affine";
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a random instance file with a feasible query point");
  gen_cmd->add_option("--seed", gen_seed, "random seed");
  gen_cmd->add_option("--dim", gen_dim, "dimension (0: drawn)")->check(CLI::Range(0, 6));
  gen_cmd->add_option("--members", gen_members, "member count (0: drawn)")->check(CLI::Range(0, 16));
  gen_cmd->add_option("--kind", gen_kind, "affine, max-affine, dom, qc or program")
      ->check(CLI::IsMember({"affine", "max-affine", "dom", "qc", "program"}));
  gen_cmd->add_option("--out", common.out, "write the instance to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    for (std::size_t i = 0; i < file_apps.size(); ++i) {
      if (file_apps[i]->parsed()) return run_file(file_commands[i].first, file, common);
    }
    if (suite_cmd->parsed()) {
      suite.parallel = !serial;
      suite.formula = formula_options(common);
      return emit_report(selector == "curated" ? run_curated_suite(suite) : run_random_suite(suite), common);
    }
    if (gen_cmd->parsed()) {
      Rng rng(gen_seed);
      const std::string id = "gen-" + std::to_string(gen_seed);
      InstanceFile f;
      if (gen_kind == "program") {
        if (gen_members) throw InputError("--members: not supported for programs");
        ProgramCase pc = gen_program(rng, id, gen_dim);
        f = instance_from(pc.program, pc.mode);
      } else if (gen_kind == "dom") {
        if (gen_members) throw InputError("--members: not supported for dom instances");
        f = instance_from(gen_dom_instance(rng, id, gen_dim));
      } else if (gen_kind == "affine") {
        f = instance_from(gen_affine_instance(rng, id, gen_dim, gen_members));
      } else if (gen_kind == "max-affine") {
        f = instance_from(gen_max_affine_instance(rng, id, gen_dim, gen_members));
      } else {
        f = instance_from(gen_qc_instance(rng, id, gen_dim, gen_members));
      }
      emit(print_instance(f), common.out);
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "snc: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "snc: precondition failed: " << e.what() << "\n";
    return kExitInput;
  } catch (const RefusedError& e) {
    std::cerr << "snc: refused: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const SizingError& e) {
    std::cerr << "snc: size limit: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitInput;
}
