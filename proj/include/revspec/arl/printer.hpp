#ifndef REVSPEC_ARL_PRINTER_HPP
#define REVSPEC_ARL_PRINTER_HPP

#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/sexpr.hpp"

namespace revspec::arl {

namespace detail {

// Binding strength: && < = < prefix operators < atoms.
inline int level_of(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::And: return 1;
    case ExprKind::Eq: return 2;
    case ExprKind::Const:
    case ExprKind::Var: return 4;
    default: return 3;
  }
}

inline void write_expr(std::string& out, const Expr& e, int min_level) {
  const bool paren = level_of(e) < min_level;
  if (paren) out += '(';
  switch (e.kind()) {
    case ExprKind::Const:
      if (e.value().is_nil()) {
        out += "nil";
      } else {
        out += '\'';
        write_sexpr(out, e.value());
      }
      break;
    case ExprKind::Var: out += e.name(); break;
    case ExprKind::And:
      write_expr(out, e.lhs(), 1);
      out += " && ";
      write_expr(out, e.rhs(), 2);
      break;
    case ExprKind::Eq:
      write_expr(out, e.lhs(), 3);
      out += " = ";
      write_expr(out, e.rhs(), 3);
      break;
    case ExprKind::Not:
      out += '!';
      write_expr(out, e.lhs(), 3);
      break;
    case ExprKind::Head:
      out += "hd ";
      write_expr(out, e.lhs(), 3);
      break;
    case ExprKind::Tail:
      out += "tl ";
      write_expr(out, e.lhs(), 3);
      break;
    case ExprKind::IsPair:
      out += "ispair ";
      write_expr(out, e.lhs(), 3);
      break;
    case ExprKind::Cons:
      out += "cons ";
      write_expr(out, e.lhs(), 3);
      out += ' ';
      write_expr(out, e.rhs(), 3);
      break;
  }
  if (paren) out += ')';
}

inline void write_vars(std::string& out, const std::vector<std::string>& vars) {
  out += '(';
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ' ';
    out += vars[i];
  }
  out += ')';
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  std::string out;
  detail::write_expr(out, e, 0);
  return out;
}

inline std::string to_string(const Statement& s) {
  switch (s.kind) {
    case StmtKind::XorAssign: return s.var + " ^= " + to_string(s.expr);
    case StmtKind::Push: return "push " + s.var + " " + s.list;
    case StmtKind::Pop: return "pop " + s.var + " " + s.list;
    case StmtKind::Assert: return "assert " + to_string(s.expr);
  }
  return {};
}

inline std::string to_string(const ComeFrom& c) {
  switch (c.kind) {
    case ComeFromKind::Entry: return "entry";
    case ComeFromKind::From: return "from " + c.then_label;
    case ComeFromKind::FiFrom:
      return "fi " + to_string(c.pred) + " from " + c.then_label + " else " + c.else_label;
  }
  return {};
}

inline std::string to_string(const Jump& j) {
  switch (j.kind) {
    case JumpKind::Exit: return "exit";
    case JumpKind::Goto: return "goto " + j.then_label;
    case JumpKind::IfGoto:
      return "if " + to_string(j.pred) + " goto " + j.then_label + " else " + j.else_label;
  }
  return {};
}

inline std::string to_string(const Block& b) {
  std::string out = b.label + ":\n  " + to_string(b.come_from) + "\n";
  for (const auto& s : b.body) out += "  " + to_string(s) + "\n";
  out += "  " + to_string(b.jump) + "\n";
  return out;
}

/// Canonical layout: header line, then one blank-line-separated block per
/// label, two-space indentation. Equal ASTs print to identical bytes.
inline std::string pretty_print(const Program& p) {
  std::string out;
  detail::write_vars(out, p.inputs);
  out += " -> ";
  detail::write_vars(out, p.outputs);
  out += " with ";
  detail::write_vars(out, p.locals);
  out += '\n';
  for (const auto& b : p.blocks) {
    out += '\n';
    out += to_string(b);
  }
  return out;
}

}  // namespace revspec::arl

#endif
