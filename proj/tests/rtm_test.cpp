#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace revspec;
using namespace revspec::rtm;
using testing_support::machine;

namespace {

const char* kFig3b =
    "((6 . ((BLANK . BLANK) . 5))\n"
    " (4 . ((0     . 0    ) . 5))\n"
    " (5 . (RIGHT           . 4))\n"
    " (4 . ((BLANK . BLANK) . 3))\n"
    " (2 . ((0     . 1    ) . 3))\n"
    " (4 . ((1     . 0    ) . 3))\n"
    " (3 . (LEFT            . 2))\n"
    " (2 . ((BLANK . BLANK) . 1)))";

Symbols tape(const char* s) { return decode_tape(parse_sexpr(s)); }

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
  for (const auto& d : diags)
    if (d.find(needle) != std::string::npos) return true;
  return false;
}

ErrorKind simulate_error(const Machine& m, const Symbols& in, std::uint64_t limit = 1'000'000) {
  try {
    simulate(m, in, limit);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

}  // namespace

TEST(ParseMachine, Increment) {
  const Machine m = machine("inc");
  EXPECT_EQ(m.start, "1");
  EXPECT_EQ(m.final, "6");
  ASSERT_EQ(m.rules.size(), 8u);
  EXPECT_EQ(m.rules[0], Rule::symbol("1", "BLANK", "BLANK", "2"));
  EXPECT_EQ(m.rules[1], Rule::shift("2", Direction::Right, "3"));
}

TEST(ParseMachine, Decrement) {
  const Machine m = machine("inc_inv");
  EXPECT_EQ(m.start, "6");
  EXPECT_EQ(m.final, "1");
  EXPECT_EQ(m.rules.size(), 8u);
}

TEST(ParseMachine, AcceptsOneLineFormat) {
  const Machine m = parse_machine("(1 6 ((1 . ((BLANK . BLANK) . 2)) (2 . (RIGHT . 3))))");
  EXPECT_EQ(m.rules.size(), 2u);
  EXPECT_EQ(m.rules[1].dir, Direction::Right);
}

TEST(ParseMachine, RejectsMalformed) {
  for (const char* bad : {"(1 6)", "(1 6 ((1 . (UP . 2))))", "((a) 6 ())", "(1 6 ((1 . ((a . (b)) . 2))))"})
    EXPECT_THROW(parse_machine(bad), Error) << bad;
}

TEST(ParseMachine, FormatRoundTripOnCorpus) {
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    EXPECT_EQ(parse_machine(format_machine(m)), m) << name;
    EXPECT_EQ(format_machine(m), testing_support::slurp(testing_support::corpus_dir() / "machines" / (name + ".rtm")))
        << name;
  }
}

TEST(CheckMachine, CorpusIsReversible) {
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    EXPECT_TRUE(check_machine(m).empty()) << name;
    EXPECT_TRUE(check_machine(invert_machine(m)).empty()) << name;
  }
}

TEST(CheckMachine, StateFourOfIncrement) {
  const Machine m = machine("inc");
  std::size_t shifts_out = 0;
  std::set<std::string> written_in;
  std::size_t symbols_in = 0;
  for (const auto& r : m.rules) {
    if (r.from == "4" && !r.is_symbol()) ++shifts_out;
    if (r.to == "4" && r.is_symbol()) {
      ++symbols_in;
      written_in.insert(r.write);
    }
  }
  EXPECT_EQ(shifts_out, 1u);
  EXPECT_EQ(symbols_in, 3u);
  EXPECT_EQ(written_in, (std::set<std::string>{"0", "1", "BLANK"}));
}

TEST(CheckMachine, ForwardNondeterminism) {
  Machine m = machine("inc");
  m.rules.push_back(Rule::symbol("3", "0", "0", "2"));
  EXPECT_TRUE(mentions(check_machine(m), "state 3: forward nondeterministic"));
}

TEST(CheckMachine, BackwardNondeterminism) {
  Machine m = machine("inc");
  m.rules.push_back(Rule::symbol("5", "1", "0", "4"));
  EXPECT_TRUE(mentions(check_machine(m), "state 4: backward nondeterministic"));
}

TEST(CheckMachine, StructuralConditions) {
  Machine m = machine("inc");
  m.rules.push_back(Rule::symbol("5", "1", "1", "1"));
  EXPECT_TRUE(mentions(check_machine(m), "enters the start state"));
  Machine n = machine("inc");
  n.rules.push_back(Rule::shift("6", Direction::Left, "7"));
  EXPECT_TRUE(mentions(check_machine(n), "leaves the final state"));
  Machine s = machine("inc");
  s.rules.push_back(Rule::shift("2", Direction::Left, "7"));
  EXPECT_TRUE(mentions(check_machine(s), "state 2: forward nondeterministic, shift rule"));
}

TEST(Simulate, IncrementExamples) {
  const Machine m = machine("inc");
  EXPECT_EQ(simulate(m, tape("(1 1 0 1)")), tape("(0 0 1 1)"));
  EXPECT_EQ(simulate(m, tape("(1 1 1 1)")), tape("(0 0 0 0)"));
}

TEST(Simulate, IncrementOnEmptyTape) {
  // 1 -(b,b)-> 2 -R-> 3 -(b,b)-> 4 -L-> 5 -(b,b)-> 6: five steps.
  const SimulationResult r = simulate_full(machine("inc"), {});
  EXPECT_EQ(r.output, Symbols{});
  EXPECT_EQ(r.steps, 5u);
}

TEST(Simulate, Decrement) {
  EXPECT_EQ(simulate(machine("inc_inv"), tape("(0 0 1 1)")), tape("(1 1 0 1)"));
}

TEST(Simulate, OtherCorpusMachines) {
  EXPECT_EQ(simulate(machine("bitflip"), tape("(1 0 0 1 1)")), tape("(0 1 1 0 0)"));
  EXPECT_EQ(simulate(machine("unary_succ"), tape("(1 1)")), tape("(1 1 1)"));
  EXPECT_EQ(simulate(machine("symbol_swap"), tape("(a c b)")), tape("(b c a)"));
  EXPECT_EQ(simulate(machine("flip_first"), tape("(0 0)")), tape("(1 0)"));
}

TEST(Simulate, Errors) {
  EXPECT_EQ(simulate_error(machine("unary_succ"), tape("(0)")), ErrorKind::MachineStuck);
  EXPECT_EQ(simulate_error(machine("inc"), tape("(1 1 1)"), 4), ErrorKind::StepLimit);
  Machine off = parse_machine("(1 2 ((1 . (RIGHT . 2))))");
  EXPECT_EQ(simulate_error(off, tape("(a)")), ErrorKind::NotStandardPosition);
  Machine nd = machine("inc");
  nd.rules.push_back(Rule::symbol("3", "0", "0", "2"));
  EXPECT_EQ(simulate_error(nd, tape("(0)")), ErrorKind::Nondeterministic);
  EXPECT_THROW(simulate(machine("inc"), {"1", "BLANK"}), Error);
}

TEST(Tape, BlankNormalization) {
  Tape t = Tape::standard({});
  t.move(Direction::Left);
  EXPECT_EQ(t, Tape::standard({}));
  t.move(Direction::Right);
  EXPECT_EQ(t, Tape::standard({}));
  Tape u = Tape::standard({"a"});
  u.move(Direction::Right);
  EXPECT_EQ(u.head, "a");
  EXPECT_TRUE(u.left.empty());
  u.move(Direction::Left);
  EXPECT_EQ(u, Tape::standard({"a"}));
}

TEST(InvertMachine, GoldenDecrementListing) {
  const Machine inv = invert_machine(machine("inc"));
  EXPECT_EQ(inv.start, "6");
  EXPECT_EQ(inv.final, "1");
  EXPECT_EQ(format_rules(inv.rules), kFig3b);
  EXPECT_EQ(inv.rules.front(), Rule::symbol("6", "BLANK", "BLANK", "5"));
  EXPECT_EQ(inv.rules.back(), Rule::symbol("2", "BLANK", "BLANK", "1"));
}

TEST(InvertMachine, IsAnInvolution) {
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    EXPECT_EQ(invert_machine(invert_machine(m)), m) << name;
    EXPECT_EQ(invert_machine(m).rules.size(), m.rules.size()) << name;
  }
}

TEST(RtmProperty, InverseMachineUndoesSimulation) {
  std::mt19937 rng(23);
  for (const auto& [name, m] : testing_support::corpus_machines()) {
    const Machine inv = invert_machine(m);
    const auto symbols = testing_support::alphabet(m);
    for (int i = 0; i < 100; ++i) {
      const Symbols t = testing_support::random_tape(rng, symbols, 10);
      Symbols out;
      try {
        out = simulate(m, t);
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(simulate(inv, out), t) << name;
    }
  }
}
