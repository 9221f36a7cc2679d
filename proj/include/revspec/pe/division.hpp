#ifndef REVSPEC_PE_DIVISION_HPP
#define REVSPEC_PE_DIVISION_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/printer.hpp"
#include "revspec/error.hpp"

namespace revspec::pe {

enum class BindingTime { Static, Dynamic };

/// Uniform binding-time classification: one entry per variable, valid at
/// every program point.
class Division {
 public:
  Division() = default;
  Division(std::initializer_list<std::pair<const std::string, BindingTime>> init) : bt_(init) {}

  void set(const std::string& var, BindingTime bt) { bt_[var] = bt; }
  bool classifies(const std::string& var) const { return bt_.count(var) != 0; }

  BindingTime at(const std::string& var) const {
    auto it = bt_.find(var);
    if (it == bt_.end()) throw Error(ErrorKind::Division, "variable " + var + " is not classified");
    return it->second;
  }
  bool is_static(const std::string& var) const { return at(var) == BindingTime::Static; }
  bool is_dynamic(const std::string& var) const { return at(var) == BindingTime::Dynamic; }

  bool all_static(const std::set<std::string>& vars) const {
    for (const auto& v : vars)
      if (is_dynamic(v)) return false;
    return true;
  }

  std::vector<std::string> with(BindingTime bt) const {
    std::vector<std::string> out;
    for (const auto& [v, b] : bt_)
      if (b == bt) out.push_back(v);
    return out;
  }

  const std::map<std::string, BindingTime>& entries() const { return bt_; }

  friend bool operator==(const Division&, const Division&) = default;

 private:
  std::map<std::string, BindingTime> bt_;
};

inline std::string to_string(const Division& d) {
  std::string out = "static (";
  bool first = true;
  for (const auto& v : d.with(BindingTime::Static)) {
    out += (first ? "" : " ") + v;
    first = false;
  }
  out += ") dynamic (";
  first = true;
  for (const auto& v : d.with(BindingTime::Dynamic)) {
    out += (first ? "" : " ") + v;
    first = false;
  }
  return out + ")";
}

/// Least congruent division extending the dynamic seeds of `initial`: an
/// xor-assignment whose right-hand side reads a dynamic variable makes its
/// target dynamic, and push/pop make both operands share one binding time.
/// Variables not mentioned in `initial` start out static.
inline Division compute_division(const arl::Program& p, const Division& initial) {
  for (const auto& v : p.inputs)
    if (!initial.classifies(v)) throw Error(ErrorKind::Division, "input " + v + " has no binding time");

  std::set<std::string> dynamic;
  for (const auto& v : p.variables())
    if (initial.classifies(v) && initial.is_dynamic(v)) dynamic.insert(v);

  for (bool changed = true; changed;) {
    changed = false;
    auto mark = [&](const std::string& v) { changed |= dynamic.insert(v).second; };
    for (const auto& b : p.blocks) {
      for (const auto& s : b.body) {
        switch (s.kind) {
          case arl::StmtKind::XorAssign:
            for (const auto& v : s.expr.vars())
              if (dynamic.count(v)) {
                mark(s.var);
                break;
              }
            break;
          case arl::StmtKind::Push:
          case arl::StmtKind::Pop:
            if (dynamic.count(s.var) || dynamic.count(s.list)) {
              mark(s.var);
              mark(s.list);
            }
            break;
          case arl::StmtKind::Assert: break;
        }
      }
    }
  }

  Division out;
  for (const auto& v : p.variables()) out.set(v, dynamic.count(v) ? BindingTime::Dynamic : BindingTime::Static);
  return out;
}

/// Binding-time annotations of one block: an operation is static iff every
/// variable it reads or writes is static.
struct BlockAnnotation {
  bool come_from_static = true;
  std::vector<bool> stmt_static;
  bool jump_static = true;
};

struct AnnotatedProgram {
  arl::Program program;
  Division division;
  std::vector<BlockAnnotation> blocks;  // parallel to program.blocks
};

inline AnnotatedProgram annotate(const arl::Program& p, const Division& d) {
  AnnotatedProgram ap{p, d, {}};
  for (const auto& v : p.variables()) d.at(v);

  for (const auto& b : p.blocks) {
    BlockAnnotation ann;
    if (b.come_from.kind == arl::ComeFromKind::FiFrom) ann.come_from_static = d.all_static(b.come_from.pred.vars());
    if (b.jump.kind == arl::JumpKind::IfGoto) ann.jump_static = d.all_static(b.jump.pred.vars());
    for (const auto& s : b.body) {
      const bool st = d.all_static(s.vars());
      const bool congruent = [&] {
        switch (s.kind) {
          case arl::StmtKind::XorAssign: return d.is_dynamic(s.var) || d.all_static(s.expr.vars());
          case arl::StmtKind::Push:
          case arl::StmtKind::Pop: return d.at(s.var) == d.at(s.list);
          case arl::StmtKind::Assert: return true;
        }
        return true;
      }();
      if (!congruent) {
        throw Error(ErrorKind::Division, "division is not congruent at '" + arl::to_string(s) + "' in block " +
                                             b.label);
      }
      ann.stmt_static.push_back(st);
    }
    ap.blocks.push_back(std::move(ann));
  }
  return ap;
}

}  // namespace revspec::pe

#endif
