#ifndef REVSPEC_RTM_SIMULATE_HPP
#define REVSPEC_RTM_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "revspec/error.hpp"
#include "revspec/rtm/machine.hpp"

namespace revspec::rtm {

using Symbols = std::vector<std::string>;

/// Two-list tape around the head cell. `left` and `right` keep the cell
/// nearest the head at back(); neither ever ends (outermost) in a blank.
struct Tape {
  Symbols left;
  std::string head{kBlank};
  Symbols right;

  /// Standard position: head on the blank just left of the input.
  static Tape standard(const Symbols& input) {
    Tape t;
    t.right.assign(input.rbegin(), input.rend());
    return t;
  }

  bool in_standard_position() const { return head == kBlank && left.empty(); }

  /// Cells right of the head, nearest first.
  Symbols right_string() const { return Symbols(right.rbegin(), right.rend()); }

  void move(Direction d) {
    Symbols& behind = d == Direction::Left ? right : left;
    Symbols& ahead = d == Direction::Left ? left : right;
    if (!(head == kBlank && behind.empty())) behind.push_back(head);
    if (ahead.empty()) {
      head = kBlank;
    } else {
      head = std::move(ahead.back());
      ahead.pop_back();
    }
  }

  friend bool operator==(const Tape&, const Tape&) = default;
};

inline void check_tape(const Symbols& input) {
  for (const auto& s : input) {
    if (s == kBlank) throw Error(ErrorKind::BadTape, "input tape contains BLANK");
    if (!is_atom_name(s)) throw Error(ErrorKind::BadTape, "tape symbol '" + s + "' is not an atom");
  }
}

struct SimulationResult {
  Symbols output;
  std::uint64_t steps = 0;
};

/// Runs `m` from standard position on `input` until the final state. Throws
/// when no rule applies, when two rules apply, on exceeding `step_limit`, or
/// when the machine halts off standard position.
inline SimulationResult simulate_full(const Machine& m, const Symbols& input, std::uint64_t step_limit = 1'000'000) {
  check_tape(input);
  Tape tape = Tape::standard(input);
  std::string q = m.start;
  SimulationResult res;
  while (q != m.final) {
    if (++res.steps > step_limit)
      throw Error(ErrorKind::StepLimit, "more than " + std::to_string(step_limit) + " machine steps");
    const Rule* chosen = nullptr;
    for (const auto& r : m.rules) {
      if (r.from != q || (r.is_symbol() && r.read != tape.head)) continue;
      if (chosen) throw Error(ErrorKind::Nondeterministic, "two rules apply in state " + q + " on " + tape.head);
      chosen = &r;
    }
    if (!chosen) throw Error(ErrorKind::MachineStuck, "no rule applies in state " + q + " reading " + tape.head);
    if (chosen->is_symbol()) tape.head = chosen->write;
    else tape.move(chosen->dir);
    q = chosen->to;
  }
  if (!tape.in_standard_position())
    throw Error(ErrorKind::NotStandardPosition, "machine halted with head on " + tape.head);
  res.output = tape.right_string();
  return res;
}

inline Symbols simulate(const Machine& m, const Symbols& input, std::uint64_t step_limit = 1'000'000) {
  return simulate_full(m, input, step_limit).output;
}

}  // namespace revspec::rtm

#endif
