#ifndef REVSPEC_ARL_WELLFORMED_HPP
#define REVSPEC_ARL_WELLFORMED_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"

namespace revspec::arl {

struct Diagnostic {
  std::string block;  // empty for program-level problems
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::string to_string(const Diagnostic& d) {
  return d.block.empty() ? d.message : d.block + ": " + d.message;
}

/// Checks the syntactic reversibility conditions: single entry and exit,
/// unique labels, declared variables, xor targets not free in their right-hand
/// side, and symmetry between jumps and come-froms (block B names A in its
/// come-from iff A's jump names B). Returns an empty list iff all hold.
inline std::vector<Diagnostic> check_wellformed(const Program& p) {
  std::vector<Diagnostic> diags;
  auto report = [&](std::string block, std::string msg) {
    diags.push_back({std::move(block), std::move(msg)});
  };

  std::set<std::string> declared;
  for (const auto* group : {&p.inputs, &p.outputs, &p.locals}) {
    std::set<std::string> seen;
    for (const auto& v : *group)
      if (!seen.insert(v).second) report("", "duplicate variable " + v + " in declaration");
  }
  for (const auto& v : p.inputs) declared.insert(v);
  for (const auto& v : p.outputs) declared.insert(v);
  for (const auto& v : p.locals) {
    if (declared.count(v)) report("", "local " + v + " also declared as input or output");
    declared.insert(v);
  }

  std::map<std::string, const Block*> by_label;
  int entries = 0, exits = 0;
  for (const auto& b : p.blocks) {
    if (!by_label.emplace(b.label, &b).second) report(b.label, "duplicate label " + b.label);
    if (b.come_from.kind == ComeFromKind::Entry) ++entries;
    if (b.jump.kind == JumpKind::Exit) ++exits;
  }
  if (entries == 0) report("", "no entry");
  if (entries > 1) report("", "multiple entries");
  if (exits == 0) report("", "no exit");
  if (exits > 1) report("", "multiple exits");

  auto check_vars = [&](const Block& b, const std::set<std::string>& used) {
    for (const auto& v : used)
      if (!declared.count(v)) report(b.label, "undeclared variable " + v);
  };

  for (const auto& b : p.blocks) {
    if (b.come_from.kind == ComeFromKind::FiFrom) {
      check_vars(b, b.come_from.pred.vars());
      if (b.come_from.then_label == b.come_from.else_label)
        report(b.label, "conditional come-from names " + b.come_from.then_label + " twice");
    }
    if (b.jump.kind == JumpKind::IfGoto) {
      check_vars(b, b.jump.pred.vars());
      if (b.jump.then_label == b.jump.else_label)
        report(b.label, "conditional jump names " + b.jump.then_label + " twice");
    }
    for (const auto& s : b.body) {
      check_vars(b, s.vars());
      switch (s.kind) {
        case StmtKind::XorAssign:
          if (s.expr.vars().count(s.var))
            report(b.label, "xor target " + s.var + " occurs in its right-hand side");
          break;
        case StmtKind::Push:
        case StmtKind::Pop:
          if (s.var == s.list) report(b.label, "push/pop on a single variable " + s.var);
          break;
        case StmtKind::Assert: break;
      }
    }

    for (const auto& target : b.jump.labels()) {
      auto it = by_label.find(target);
      if (it == by_label.end()) {
        report(b.label, "jump to undefined label " + target);
        continue;
      }
      const auto from = it->second->come_from.labels();
      if (std::find(from.begin(), from.end(), b.label) == from.end())
        report(target, "edge asymmetry at " + target);
    }
    for (const auto& source : b.come_from.labels()) {
      auto it = by_label.find(source);
      if (it == by_label.end()) {
        report(b.label, "come-from names undefined label " + source);
        continue;
      }
      const auto to = it->second->jump.labels();
      if (std::find(to.begin(), to.end(), b.label) == to.end())
        report(b.label, "edge asymmetry at " + b.label);
    }
  }
  return diags;
}

}  // namespace revspec::arl

#endif
