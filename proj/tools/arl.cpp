#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli_common.hpp"
#include "revspec/revspec.hpp"

using namespace revspec;

namespace {

std::vector<Value> parse_args(const std::string& text) {
  const Value v = cli::parse_argument(text, "--input");
  if (!v.is_list()) throw Error(ErrorKind::Usage, "--input must be a list with one value per input variable");
  return v.elements();
}

arl::Program load(const std::string& path) { return arl::parse_program(cli::read_input(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run, invert, specialize and compare reversible flowchart programs", "arl"};
  app.require_subcommand(1);

  std::string file, file2, input;
  bool backward = false, trace = false, full_store = false, rename_vars = false;
  std::vector<std::string> statics, dynamics;

  auto* run = app.add_subcommand("run", "Run a program on an input tuple");
  run->add_option("file", file, "Program file, or - for stdin")->required();
  run->add_option("--input", input, "Input values as one s-expression list, e.g. '(a (b c))'")->required();
  run->add_flag("--backward", backward, "Run the inverse program; --input then lists output values");
  run->add_flag("--trace", trace, "Print visited block labels to stderr");
  run->add_flag("--full-store", full_store, "Also print the final store");

  auto* inv = app.add_subcommand("invert", "Print the inverse program");
  inv->add_option("file", file, "Program file, or - for stdin")->required();

  auto* pe = app.add_subcommand("pe", "Specialize a program to some of its inputs");
  pe->add_option("file", file, "Program file, or - for stdin")->required();
  pe->add_option("--static", statics, "NAME=SEXPR for each static input");
  pe->add_option("--dynamic", dynamics, "Names of the dynamic inputs");

  auto* eq = app.add_subcommand("equiv", "Compare two programs up to block relabeling");
  eq->add_option("file1", file, "First program")->required();
  eq->add_option("file2", file2, "Second program")->required();
  eq->add_flag("--rename-vars", rename_vars, "Also rename variables canonically");

  auto* chk = app.add_subcommand("check", "Report well-formedness diagnostics");
  chk->add_option("file", file, "Program file, or - for stdin")->required();

  return cli::main_wrapper(app, argc, argv, [&]() -> int {
    if (*run) {
      const arl::Program p = load(file);
      arl::RunOptions opts;
      opts.step_limit = cli::step_limit("ARL_STEP_LIMIT", opts.step_limit);
      opts.record_trace = trace;
      const arl::RunResult r = arl::run_full(backward ? arl::invert_program(p) : p, parse_args(input), opts);
      if (trace)
        for (const auto& e : r.trace.entries) std::cerr << e.label << "\n";
      std::cout << to_sexpr(Value::list(r.outputs)) << "\n";
      if (full_store)
        for (const auto& [k, v] : r.final_store.values()) std::cout << k << " = " << to_sexpr(v) << "\n";
      return cli::kOk;
    }
    if (*inv) {
      std::cout << arl::pretty_print(arl::invert_program(load(file)));
      return cli::kOk;
    }
    if (*pe) {
      const arl::Program p = load(file);
      std::map<std::string, Value> given;
      for (const auto& s : statics) {
        const auto eqpos = s.find('=');
        if (eqpos == std::string::npos) throw Error(ErrorKind::Usage, "--static expects NAME=SEXPR, got " + s);
        given[s.substr(0, eqpos)] = cli::parse_argument(s.substr(eqpos + 1), "--static " + s.substr(0, eqpos));
      }
      const pe::SpecResult r = partial_evaluate(p, given, dynamics);
      std::cout << "// division: " << pe::to_string(r.division) << "\n";
      std::cout << "// spec points: " << r.spec_points << "\n";
      std::cout << "// static outputs:";
      for (const auto& [k, v] : r.static_outputs) std::cout << " " << k << "=" << to_sexpr(v);
      std::cout << "\n" << arl::pretty_print(r.residual);
      return cli::kOk;
    }
    if (*eq) {
      const equiv::Verdict v = equiv::textually_equivalent(load(file), load(file2), {rename_vars});
      if (v.dropped) std::cerr << "warning: dropped " << v.dropped << " unreachable block(s)\n";
      if (v.equivalent) {
        std::cout << "EQUIVALENT (" << v.left_blocks << " blocks)\n";
        return cli::kOk;
      }
      std::cout << "NOT EQUIVALENT (" << v.left_blocks << " vs " << v.right_blocks << " blocks)\n";
      if (v.witness) {
        std::cout << (v.witness->block ? "first difference at block b" + std::to_string(*v.witness->block)
                                       : std::string("declarations differ"))
                  << "\n--- " << file << "\n" << v.witness->left << "+++ " << file2 << "\n" << v.witness->right;
      }
      return cli::kNotEquivalent;
    }
    const auto diags = arl::check_wellformed(load(file));
    for (const auto& d : diags) std::cout << arl::to_string(d) << "\n";
    if (!diags.empty()) return cli::kRuntime;
    std::cout << "ok\n";
    return cli::kOk;
  });
}
