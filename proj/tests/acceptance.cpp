// Standalone acceptance run: one PASS/FAIL line per criterion.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace revspec;
using testing_support::machine;

namespace {

// Throws with a message on the first violated expectation.
struct Check {
  void operator()(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
  }
};

std::string show(const rtm::Symbols& t) { return to_sexpr(encode_tape(t)); }

rtm::Symbols via_interpreter(const rtm::Machine& m, const rtm::Symbols& t) {
  return decode_tape(arl::run(interpreter_program(), interpreter_inputs(m, t))[3]);
}

void fidelity(Check& check) {
  const rtm::Machine inc = machine("inc");
  for (const auto& [in, out] : {std::pair<const char*, const char*>{"(1 1 0 1)", "(0 0 1 1)"}, {"(1 1 1 1)", "(0 0 0 0)"}}) {
    const rtm::Symbols t = decode_tape(parse_sexpr(in));
    check(show(rtm::simulate(inc, t)) == out, std::string("simulate inc ") + in);
    check(show(via_interpreter(inc, t)) == out, std::string("interpreter inc ") + in);
  }
}

void inversion_golden(Check& check) {
  const char* listing =
      "(6 1\n"
      "((6 . ((BLANK . BLANK) . 5))\n"
      " (4 . ((0     . 0    ) . 5))\n"
      " (5 . (RIGHT           . 4))\n"
      " (4 . ((BLANK . BLANK) . 3))\n"
      " (2 . ((0     . 1    ) . 3))\n"
      " (4 . ((1     . 0    ) . 3))\n"
      " (3 . (LEFT            . 2))\n"
      " (2 . ((BLANK . BLANK) . 1))))\n";
  const rtm::Machine inv = rtm::invert_machine(machine("inc"));
  check(inv.start == "6" && inv.final == "1", "start/final of the inverse");
  check(rtm::format_machine(inv) == listing, "inverse listing:\n" + rtm::format_machine(inv));
}

void commuting(Check& check) {
  int others = 0;
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    const ExperimentReport r = commute(m);
    check(r.verdict.equivalent, "commute " + name);
    if (name != "inc" && name != "inc_inv") ++others;
  }
  check(commute(machine("inc")).verdict.equivalent, "commute inc");
  check(others >= 3, "fewer than three further machines");
}

void neutralization(Check& check) {
  for (const auto& [name, m] : testing_support::corpus_machines())
    check(neutralize(m).verdict.equivalent, "neutralize " + name);
}

void overhead(Check& check) {
  const rtm::Machine inc = machine("inc");
  const std::set<std::string> tape_vars{"S", "S_left", "S_right"};
  for (const auto& [label, r] : {std::pair<std::string, pe::SpecResult>{"pe(interp, inc^-1)", compile_machine(rtm::invert_machine(inc))},
                                 {"pe(invert(interp), inc)", invert_compile_machine(inc)}}) {
    const arl::Program& p = r.residual;
    std::set<std::string> seen(p.locals.begin(), p.locals.end());
    seen.insert(p.inputs.begin(), p.inputs.end());
    seen.insert(p.outputs.begin(), p.outputs.end());
    for (const auto& b : p.blocks) {
      if (b.come_from.kind == arl::ComeFromKind::FiFrom) b.come_from.pred.collect_vars(seen);
      if (b.jump.kind == arl::JumpKind::IfGoto) b.jump.pred.collect_vars(seen);
      for (const auto& s : b.body) {
        const auto vs = s.vars();
        seen.insert(vs.begin(), vs.end());
      }
    }
    for (const auto& v : seen) check(tape_vars.count(v) == 1, label + " mentions " + v);
    const std::string text = arl::pretty_print(p);
    for (const char* v : {"Q", "Rules", "RulesRev", "Rule", "Q1", "Q2", "R", "S1", "S2", "Start", "Final"}) {
      std::istringstream words(text);
      for (std::string w; words >> w;) check(w != v, label + " text contains " + v);
    }
    check(p.blocks.size() <= 4 * inc.rules.size() + 8,
          label + " has " + std::to_string(p.blocks.size()) + " blocks");
  }
}

void mix_equation(Check& check) {
  std::mt19937 rng(20261016);
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    const arl::Program res = compile_machine(m).residual;
    const auto symbols = testing_support::alphabet(m);
    for (int i = 0; i < 50; ++i) {
      const rtm::Symbols t = testing_support::random_tape(rng, symbols, 8);
      std::optional<rtm::Symbols> want, got;
      try {
        want = rtm::simulate(m, t);
      } catch (const Error&) {
      }
      try {
        got = decode_tape(arl::run(res, {encode_tape(t)})[0]);
      } catch (const Error&) {
      }
      check(want == got, name + " on " + show(t));
    }
  }
}

void inverter(Check& check) {
  std::mt19937 rng(7);
  for (const auto& [name, p] : testing_support::corpus_programs()) {
    const arl::Program inv = arl::invert_program(p);
    check(arl::invert_program(inv) == p, "invert(invert(" + name + ")) differs");
    for (int i = 0; i < 100; ++i) {
      const auto x = testing_support::corpus_input(name, rng);
      check(arl::run(inv, arl::run(p, x)) == x, name + " round trip");
    }
  }
}

ErrorKind failure_of(const char* text, const std::vector<Value>& inputs) {
  try {
    arl::run(arl::parse_program(text), inputs);
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::runtime_error(std::string("no error from\n") + text);
}

void runtime_checks(Check& check) {
  const char* come_from = R"(
(x) -> (x)
a:
  entry
  if x = nil goto b else c
b:
  from a
  x ^= 'z
  goto d
c:
  from a
  goto d
d:
  fi x = nil from b else c
  exit
)";
  check(failure_of(come_from, {Value::nil()}) == ErrorKind::ComeFrom, "come-from violation");
  check(failure_of("(x) -> (x)\nl:\n entry\n x ^= 'a\n exit\n", {Value::atom("b")}) == ErrorKind::XorClash,
        "xor clash");
  check(failure_of("(x) -> (x) with (t)\nl:\n entry\n t ^= 'a\n exit\n", {Value::nil()}) == ErrorKind::NonNilAtExit,
        "non-nil local at exit");
}

void oracle(Check& check) {
  for (const char* name : {"inc", "inc_inv"}) {
    const rtm::Machine m = machine(name);
    std::size_t compared = 0;
    for (const auto& t : testing_support::all_tapes({"0", "1"}, 6)) {
      std::optional<rtm::Symbols> want, got;
      try {
        want = rtm::simulate(m, t);
      } catch (const Error&) {
      }
      try {
        got = via_interpreter(m, t);
      } catch (const Error&) {
      }
      check(want == got, std::string(name) + " on " + show(t));
      compared += want.has_value();
    }
    check(compared > 0, std::string(name) + " halted on no tape");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"increment/decrement fidelity", fidelity},
      {"machine inversion golden listing", inversion_golden},
      {"commuting diagram", commuting},
      {"neutralization", neutralization},
      {"overhead elimination", overhead},
      {"mix equation", mix_equation},
      {"inverter correctness", inverter},
      {"reversibility runtime checks", runtime_checks},
      {"simulator/interpreter oracle agreement", oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string detail;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::cout << (detail.empty() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    failed += !detail.empty();
  }
  return failed == 0 ? 0 : 1;
}
