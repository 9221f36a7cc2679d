#ifndef REVSPEC_RTM_MACHINE_HPP
#define REVSPEC_RTM_MACHINE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revspec/error.hpp"
#include "revspec/sexpr.hpp"
#include "revspec/value.hpp"

namespace revspec::rtm {

inline constexpr std::string_view kBlank = "BLANK";
inline constexpr std::string_view kLeft = "LEFT";
inline constexpr std::string_view kRight = "RIGHT";

enum class Direction { Left, Right };

inline Direction opposite(Direction d) { return d == Direction::Left ? Direction::Right : Direction::Left; }
inline std::string_view to_string(Direction d) { return d == Direction::Left ? kLeft : kRight; }

/// Triple-format transition: a symbol rule (from, (read, write), to) or a
/// shift rule (from, LEFT|RIGHT, to).
struct Rule {
  enum class Kind { Symbol, Shift };

  Kind kind = Kind::Symbol;
  std::string from;
  std::string read;
  std::string write;
  Direction dir = Direction::Right;
  std::string to;

  static Rule symbol(std::string q1, std::string s1, std::string s2, std::string q2) {
    return {Kind::Symbol, std::move(q1), std::move(s1), std::move(s2), Direction::Right, std::move(q2)};
  }
  static Rule shift(std::string q1, Direction d, std::string q2) {
    return {Kind::Shift, std::move(q1), {}, {}, d, std::move(q2)};
  }

  bool is_symbol() const { return kind == Kind::Symbol; }

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Machine {
  std::string start;
  std::string final;
  std::vector<Rule> rules;

  friend bool operator==(const Machine&, const Machine&) = default;
};

namespace detail {

inline std::string atom_of(const Value& v, const char* what) {
  if (!v.is_atom() || v.is_nil()) throw Error(ErrorKind::Syntax, std::string(what) + " must be a non-nil atom");
  return std::string(v.name());
}

}  // namespace detail

/// Decodes one rule value `(q1 . ((s1 . s2) . q2))` or `(q1 . (LEFT . q2))`.
inline Rule rule_from_value(const Value& v) {
  if (!v.is_pair() || !v.tail().is_pair())
    throw Error(ErrorKind::Syntax, "rule must have the form (q1 . (action . q2)): " + to_sexpr(v));
  std::string q1 = detail::atom_of(v.head(), "rule source state");
  const Value& action = v.tail().head();
  std::string q2 = detail::atom_of(v.tail().tail(), "rule target state");
  if (action.is_pair()) {
    return Rule::symbol(std::move(q1), detail::atom_of(action.head(), "read symbol"),
                        detail::atom_of(action.tail(), "written symbol"), std::move(q2));
  }
  if (action.is_atom() && action.name() == kLeft) return Rule::shift(std::move(q1), Direction::Left, std::move(q2));
  if (action.is_atom() && action.name() == kRight) return Rule::shift(std::move(q1), Direction::Right, std::move(q2));
  throw Error(ErrorKind::Syntax, "rule action must be (s1 . s2), LEFT or RIGHT: " + to_sexpr(v));
}

inline Value rule_to_value(const Rule& r) {
  const Value action = r.is_symbol() ? Value::cons(Value::atom(r.read), Value::atom(r.write))
                                     : Value::atom(to_string(r.dir));
  return Value::cons(Value::atom(r.from), Value::cons(action, Value::atom(r.to)));
}

/// Parses the machine file format `(START FINAL RULES)`.
inline Machine parse_machine(std::string_view text) {
  const Value v = parse_sexpr(text);
  if (!v.is_list()) throw Error(ErrorKind::Syntax, "machine must be a list (START FINAL RULES)");
  const auto parts = v.elements();
  if (parts.size() != 3) throw Error(ErrorKind::Syntax, "machine must be a list (START FINAL RULES)");
  Machine m;
  m.start = detail::atom_of(parts[0], "start state");
  m.final = detail::atom_of(parts[1], "final state");
  if (!parts[2].is_list()) throw Error(ErrorKind::Syntax, "rules must be a proper list");
  for (const auto& r : parts[2].elements()) m.rules.push_back(rule_from_value(r));
  return m;
}

/// Column-aligned rule listing: one rule per line, symbol pairs padded so
/// that every rule's target state lines up.
inline std::string format_rules(const std::vector<Rule>& rules) {
  if (rules.empty()) return "()";
  std::size_t w_from = 0, w_read = 0, w_write = 0, w_shift = 0;
  bool any_symbol = false;
  for (const auto& r : rules) {
    w_from = std::max(w_from, r.from.size());
    if (r.is_symbol()) {
      any_symbol = true;
      w_read = std::max(w_read, r.read.size());
      w_write = std::max(w_write, r.write.size());
    } else {
      w_shift = std::max(w_shift, to_string(r.dir).size());
    }
  }
  const std::size_t w_action = std::max(any_symbol ? w_read + w_write + 5 : 0, w_shift);
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };

  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    out += i == 0 ? "(" : " ";
    const std::string action = r.is_symbol() ? "(" + pad(r.read, w_read) + " . " + pad(r.write, w_write) + ")"
                                             : std::string(to_string(r.dir));
    out += "(" + pad(r.from, w_from) + " . (" + pad(action, w_action) + " . " + r.to + "))";
    out += i + 1 == rules.size() ? ")" : "\n";
  }
  return out;
}

/// Machine file text: `(START FINAL` on the first line, the aligned rule
/// listing below, closing paren, trailing newline.
inline std::string format_machine(const Machine& m) {
  return "(" + m.start + " " + m.final + "\n" + format_rules(m.rules) + ")\n";
}

/// Checks the structural conditions on an RTM: distinct start and final
/// states, nothing enters the start state or leaves the final state, and
/// local forward and backward determinism (a state has either exactly one
/// outgoing/incoming shift rule and nothing else, or only symbol rules that
/// read/write pairwise distinct symbols).
inline std::vector<std::string> check_machine(const Machine& m) {
  std::vector<std::string> diags;
  if (m.start == m.final) diags.push_back("state " + m.start + ": start state equals final state");

  std::map<std::string, std::vector<const Rule*>> outgoing, incoming;
  for (const auto& r : m.rules) {
    outgoing[r.from].push_back(&r);
    incoming[r.to].push_back(&r);
    if (r.to == m.start) diags.push_back("state " + m.start + ": a rule enters the start state");
    if (r.from == m.final) diags.push_back("state " + m.final + ": a rule leaves the final state");
    if (r.is_symbol()) {
      for (const auto* s : {&r.read, &r.write})
        if (*s == kLeft || *s == kRight) diags.push_back("state " + r.from + ": symbol " + *s + " is reserved");
    }
    for (const auto* q : {&r.from, &r.to})
      if (*q == kBlank || *q == kLeft || *q == kRight) diags.push_back("state " + *q + " is a reserved atom");
  }

  auto check = [&](const std::map<std::string, std::vector<const Rule*>>& edges, bool forward) {
    const char* dir = forward ? "forward" : "backward";
    for (const auto& [q, rs] : edges) {
      const bool has_shift = std::any_of(rs.begin(), rs.end(), [](const Rule* r) { return !r->is_symbol(); });
      if (has_shift) {
        if (rs.size() > 1) {
          diags.push_back("state " + q + ": " + dir + " nondeterministic, shift rule alongside " +
                          std::to_string(rs.size() - 1) + " other " + (forward ? "outgoing" : "incoming") +
                          " rule(s)");
        }
        continue;
      }
      std::set<std::string> seen;
      for (const Rule* r : rs) {
        const std::string& s = forward ? r->read : r->write;
        if (!seen.insert(s).second)
          diags.push_back("state " + q + ": " + dir + " nondeterministic, two rules " +
                          (forward ? "read " : "write ") + s);
      }
    }
  };
  check(outgoing, true);
  check(incoming, false);
  return diags;
}

inline Rule invert_rule(const Rule& r) {
  if (r.is_symbol()) return Rule::symbol(r.to, r.write, r.read, r.from);
  return Rule::shift(r.to, opposite(r.dir), r.from);
}

/// Swaps start and final, inverts every rule locally, and reverses the rule
/// order so the inverse traverses rules in the order the original does when
/// run backwards.
inline Machine invert_machine(const Machine& m) {
  Machine out;
  out.start = m.final;
  out.final = m.start;
  out.rules.reserve(m.rules.size());
  for (auto it = m.rules.rbegin(); it != m.rules.rend(); ++it) out.rules.push_back(invert_rule(*it));
  return out;
}

}  // namespace revspec::rtm

#endif
