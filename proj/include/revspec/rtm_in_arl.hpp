#ifndef REVSPEC_RTM_IN_ARL_HPP
#define REVSPEC_RTM_IN_ARL_HPP

#include <string_view>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/parser.hpp"
#include "revspec/error.hpp"
#include "revspec/rtm/machine.hpp"
#include "revspec/rtm/simulate.hpp"
#include "revspec/rtm_interpreter_source.hpp"  // generated from assets/rtm_interpreter.arl
#include "revspec/value.hpp"

namespace revspec {

/// Text of the bundled RTM interpreter.
inline std::string_view interpreter_source() { return kRtmInterpreterSource; }

/// The bundled RTM interpreter: (Start Final Rules S_right) -> (Start Final
/// Rules S_right). Parsed once.
inline const arl::Program& interpreter_program() {
  static const arl::Program p = arl::parse_program(kRtmInterpreterSource);
  return p;
}

struct EncodedMachine {
  Value start;
  Value final;
  Value rules;

  friend bool operator==(const EncodedMachine&, const EncodedMachine&) = default;
};

inline EncodedMachine encode_machine(const rtm::Machine& m) {
  std::vector<Value> rules;
  rules.reserve(m.rules.size());
  for (const auto& r : m.rules) rules.push_back(rtm::rule_to_value(r));
  return {Value::atom(m.start), Value::atom(m.final), Value::list(rules)};
}

inline rtm::Machine decode_machine(const EncodedMachine& e) {
  rtm::Machine m;
  m.start = rtm::detail::atom_of(e.start, "start state");
  m.final = rtm::detail::atom_of(e.final, "final state");
  for (const auto& r : e.rules.elements()) m.rules.push_back(rtm::rule_from_value(r));
  return m;
}

inline Value encode_tape(const rtm::Symbols& symbols) {
  rtm::check_tape(symbols);
  std::vector<Value> cells;
  cells.reserve(symbols.size());
  for (const auto& s : symbols) cells.push_back(Value::atom(s));
  return Value::list(cells);
}

inline rtm::Symbols decode_tape(const Value& v) {
  if (!v.is_list()) throw Error(ErrorKind::BadTape, "tape must be a proper list");
  rtm::Symbols out;
  for (const auto& cell : v.elements()) {
    if (!cell.is_atom() || cell.is_nil()) throw Error(ErrorKind::BadTape, "tape cell is not a symbol");
    out.emplace_back(cell.name());
  }
  return out;
}

/// Interpreter input tuple (Start Final Rules S_right).
inline std::vector<Value> interpreter_inputs(const rtm::Machine& m, const rtm::Symbols& tape) {
  const EncodedMachine e = encode_machine(m);
  return {e.start, e.final, e.rules, encode_tape(tape)};
}

}  // namespace revspec

#endif
