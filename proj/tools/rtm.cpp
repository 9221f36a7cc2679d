#include <iostream>
#include <string>

#include "cli_common.hpp"
#include "revspec/revspec.hpp"

using namespace revspec;

namespace {

rtm::Machine load(const std::string& path) { return rtm::parse_machine(cli::read_input(path)); }

rtm::Machine load_checked(const std::string& path) {
  rtm::Machine m = load(path);
  const auto diags = rtm::check_machine(m);
  if (!diags.empty()) throw Error(ErrorKind::Usage, path + " is not a reversible machine: " + diags.front());
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate, invert and compile reversible Turing machines", "rtm"};
  app.require_subcommand(1);

  std::string file, tape = "()";

  auto* run = app.add_subcommand("run", "Simulate a machine on a tape");
  run->add_option("file", file, "Machine file, or - for stdin")->required();
  run->add_option("tape", tape, "Input tape as a list, e.g. '(1 1 0 1)'")->required();

  auto* inv = app.add_subcommand("invert", "Print the inverse machine");
  inv->add_option("file", file, "Machine file, or - for stdin")->required();

  auto* chk = app.add_subcommand("check", "Report determinism and structure diagnostics");
  chk->add_option("file", file, "Machine file, or - for stdin")->required();

  auto* comp = app.add_subcommand("compile", "Specialize the interpreter to a machine");
  comp->add_option("file", file, "Machine file, or - for stdin")->required();

  auto* icomp = app.add_subcommand("invert-compile", "Specialize the inverse interpreter to a machine");
  icomp->add_option("file", file, "Machine file, or - for stdin")->required();

  auto* enc = app.add_subcommand("encode", "Print the interpreter input tuple for a machine and tape");
  enc->add_option("file", file, "Machine file, or - for stdin")->required();
  enc->add_option("tape", tape, "Input tape as a list");

  auto* interp = app.add_subcommand("interpreter", "Print the bundled interpreter source");

  return cli::main_wrapper(app, argc, argv, [&]() -> int {
    if (*run) {
      const rtm::Machine m = load_checked(file);
      const auto limit = cli::step_limit("RTM_STEP_LIMIT", 1'000'000);
      std::cout << to_sexpr(encode_tape(rtm::simulate(m, decode_tape(cli::parse_argument(tape, "tape")), limit))) << "\n";
      return cli::kOk;
    }
    if (*inv) {
      std::cout << rtm::format_machine(rtm::invert_machine(load_checked(file)));
      return cli::kOk;
    }
    if (*chk) {
      const auto diags = rtm::check_machine(load(file));
      for (const auto& d : diags) std::cout << d << "\n";
      if (!diags.empty()) return cli::kRuntime;
      std::cout << "ok\n";
      return cli::kOk;
    }
    if (*comp) {
      std::cout << arl::pretty_print(compile_machine(load_checked(file)).residual);
      return cli::kOk;
    }
    if (*icomp) {
      std::cout << arl::pretty_print(invert_compile_machine(load_checked(file)).residual);
      return cli::kOk;
    }
    if (*enc) {
      std::cout << to_sexpr(Value::list(interpreter_inputs(load(file), decode_tape(cli::parse_argument(tape, "tape"))))) << "\n";
      return cli::kOk;
    }
    (void)interp;
    std::cout << interpreter_source();
    return cli::kOk;
  });
}
