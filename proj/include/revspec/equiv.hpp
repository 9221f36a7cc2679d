#ifndef REVSPEC_EQUIV_HPP
#define REVSPEC_EQUIV_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/printer.hpp"

namespace revspec::equiv {

struct Canonical {
  arl::Program program;
  std::size_t dropped = 0;  // unreachable blocks removed
};

namespace detail {

inline arl::Expr rename_expr(const arl::Expr& e, const std::map<std::string, std::string>& m) {
  using arl::Expr;
  using arl::ExprKind;
  switch (e.kind()) {
    case ExprKind::Const: return e;
    case ExprKind::Var: return Expr::var(m.at(e.name()));
    case ExprKind::Cons: return Expr::cons(rename_expr(e.lhs(), m), rename_expr(e.rhs(), m));
    case ExprKind::Eq: return Expr::eq(rename_expr(e.lhs(), m), rename_expr(e.rhs(), m));
    case ExprKind::And: return Expr::conj(rename_expr(e.lhs(), m), rename_expr(e.rhs(), m));
    case ExprKind::Head: return Expr::head(rename_expr(e.lhs(), m));
    case ExprKind::Tail: return Expr::tail(rename_expr(e.lhs(), m));
    case ExprKind::IsPair: return Expr::is_pair(rename_expr(e.lhs(), m));
    case ExprKind::Not: return Expr::negate(rename_expr(e.lhs(), m));
  }
  return e;
}

inline void note_first_use(const arl::Expr& e, std::vector<std::string>& order, std::set<std::string>& seen) {
  using arl::ExprKind;
  switch (e.kind()) {
    case ExprKind::Const: return;
    case ExprKind::Var:
      if (seen.insert(e.name()).second) order.push_back(e.name());
      return;
    case ExprKind::Cons:
    case ExprKind::Eq:
    case ExprKind::And:
      note_first_use(e.lhs(), order, seen);
      note_first_use(e.rhs(), order, seen);
      return;
    default: note_first_use(e.lhs(), order, seen);
  }
}

}  // namespace detail

/// Depth-first preorder from the entry block (then-branch first), blocks
/// relabeled b0, b1, ... in discovery order. Unreachable blocks are dropped
/// and counted. Variable names are untouched.
inline Canonical canonicalize_report(const arl::Program& p) {
  Canonical out;
  out.program.inputs = p.inputs;
  out.program.outputs = p.outputs;
  out.program.locals = p.locals;
  const auto entry = p.entry_index();
  if (!entry) {
    out.program.blocks = p.blocks;
    return out;
  }
  const auto index = p.label_index();
  std::vector<std::size_t> order;
  std::vector<bool> seen(p.blocks.size(), false);
  std::vector<std::size_t> stack{*entry};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (seen[i]) continue;
    seen[i] = true;
    order.push_back(i);
    const auto targets = p.blocks[i].jump.labels();
    for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
      auto found = index.find(*it);
      if (found != index.end() && !seen[found->second]) stack.push_back(found->second);
    }
  }

  std::map<std::string, std::string> rename;
  for (std::size_t k = 0; k < order.size(); ++k) rename.emplace(p.blocks[order[k]].label, "b" + std::to_string(k));
  auto relabel = [&](std::string& l) {
    if (l.empty()) return;
    auto it = rename.find(l);
    if (it != rename.end()) l = it->second;
  };
  for (std::size_t i : order) {
    arl::Block b = p.blocks[i];
    relabel(b.label);
    relabel(b.come_from.then_label);
    relabel(b.come_from.else_label);
    relabel(b.jump.then_label);
    relabel(b.jump.else_label);
    out.program.blocks.push_back(std::move(b));
  }
  out.dropped = p.blocks.size() - order.size();
  return out;
}

inline arl::Program canonicalize(const arl::Program& p) { return canonicalize_report(p).program; }

/// Renames variables to v0, v1, ...: inputs in order, then outputs, then
/// locals by first use in block order.
inline arl::Program rename_variables(const arl::Program& p) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const auto* group : {&p.inputs, &p.outputs})
    for (const auto& v : *group)
      if (seen.insert(v).second) order.push_back(v);

  std::vector<std::string> used;
  std::set<std::string> used_seen;
  for (const auto& b : p.blocks) {
    if (b.come_from.kind == arl::ComeFromKind::FiFrom) detail::note_first_use(b.come_from.pred, used, used_seen);
    for (const auto& s : b.body) {
      switch (s.kind) {
        case arl::StmtKind::XorAssign:
          if (used_seen.insert(s.var).second) used.push_back(s.var);
          detail::note_first_use(s.expr, used, used_seen);
          break;
        case arl::StmtKind::Push:
        case arl::StmtKind::Pop:
          for (const auto* v : {&s.var, &s.list})
            if (used_seen.insert(*v).second) used.push_back(*v);
          break;
        case arl::StmtKind::Assert: detail::note_first_use(s.expr, used, used_seen); break;
      }
    }
    if (b.jump.kind == arl::JumpKind::IfGoto) detail::note_first_use(b.jump.pred, used, used_seen);
  }
  const std::set<std::string> locals(p.locals.begin(), p.locals.end());
  std::vector<std::string> local_order;
  for (const auto& v : used)
    if (locals.count(v) && seen.insert(v).second) local_order.push_back(v);
  for (const auto& v : p.locals)
    if (seen.insert(v).second) local_order.push_back(v);
  order.insert(order.end(), local_order.begin(), local_order.end());

  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < order.size(); ++i) m.emplace(order[i], "v" + std::to_string(i));

  arl::Program out;
  for (const auto& v : p.inputs) out.inputs.push_back(m.at(v));
  for (const auto& v : p.outputs) out.outputs.push_back(m.at(v));
  for (const auto& v : local_order) out.locals.push_back(m.at(v));
  for (arl::Block b : p.blocks) {
    if (b.come_from.kind == arl::ComeFromKind::FiFrom) b.come_from.pred = detail::rename_expr(b.come_from.pred, m);
    if (b.jump.kind == arl::JumpKind::IfGoto) b.jump.pred = detail::rename_expr(b.jump.pred, m);
    for (auto& s : b.body) {
      if (!s.var.empty()) s.var = m.at(s.var);
      if (!s.list.empty()) s.list = m.at(s.list);
      if (s.kind == arl::StmtKind::XorAssign || s.kind == arl::StmtKind::Assert)
        s.expr = detail::rename_expr(s.expr, m);
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

struct Options {
  bool rename_vars = false;
};

/// First point of difference between two canonical forms. `block` is
/// absent when the declaration headers differ.
struct Witness {
  std::optional<std::size_t> block;
  std::string left;
  std::string right;
};

struct Verdict {
  bool equivalent = false;
  std::string left_text;
  std::string right_text;
  std::size_t left_blocks = 0;
  std::size_t right_blocks = 0;
  std::size_t dropped = 0;
  std::optional<Witness> witness;

  explicit operator bool() const { return equivalent; }
};

inline std::string header_text(const arl::Program& p) {
  arl::Program h = p;
  h.blocks.clear();
  return arl::pretty_print(h);
}

inline Verdict textually_equivalent(const arl::Program& a, const arl::Program& b, const Options& opts = {}) {
  Canonical ca = canonicalize_report(a);
  Canonical cb = canonicalize_report(b);
  if (opts.rename_vars) {
    ca.program = rename_variables(ca.program);
    cb.program = rename_variables(cb.program);
  }
  Verdict v;
  v.left_text = arl::pretty_print(ca.program);
  v.right_text = arl::pretty_print(cb.program);
  v.left_blocks = ca.program.blocks.size();
  v.right_blocks = cb.program.blocks.size();
  v.dropped = ca.dropped + cb.dropped;
  v.equivalent = v.left_text == v.right_text;
  if (v.equivalent) return v;

  const std::string ha = header_text(ca.program);
  const std::string hb = header_text(cb.program);
  if (ha != hb) {
    v.witness = Witness{std::nullopt, ha, hb};
    return v;
  }
  const std::size_t n = std::max(v.left_blocks, v.right_blocks);
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = i < v.left_blocks ? arl::to_string(ca.program.blocks[i]) : std::string("<missing>\n");
    std::string r = i < v.right_blocks ? arl::to_string(cb.program.blocks[i]) : std::string("<missing>\n");
    if (l != r) {
      v.witness = Witness{i, std::move(l), std::move(r)};
      return v;
    }
  }
  return v;
}

}  // namespace revspec::equiv

#endif
