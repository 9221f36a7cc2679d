#ifndef REVSPEC_PE_SPECIALIZER_HPP
#define REVSPEC_PE_SPECIALIZER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/interp.hpp"
#include "revspec/arl/printer.hpp"
#include "revspec/error.hpp"
#include "revspec/pe/division.hpp"
#include "revspec/sexpr.hpp"

namespace revspec::pe {

using arl::Expr;

/// Program point of the residual program: a source block together with the
/// values of all static variables on entry to it.
struct SpecPoint {
  std::size_t block = 0;
  arl::Store statics;

  friend bool operator==(const SpecPoint&, const SpecPoint&) = default;
  friend auto operator<=>(const SpecPoint&, const SpecPoint&) = default;
};

struct SpecOptions {
  std::size_t spec_point_budget = 100'000;
};

struct SpecResult {
  arl::Program residual;
  Division division;
  std::size_t spec_points = 0;         // SpecPoints generated, including pruned ones
  std::size_t residual_blocks = 0;     // blocks before compression
  std::map<std::string, Value> static_outputs;
};

namespace detail {

inline bool is_static_expr(const Expr& e, const Division& d) { return d.all_static(e.vars()); }

inline Expr literal(const Value& v) { return Expr::constant(v); }

/// Replaces every maximal static subexpression by the literal of its value.
inline Expr residualize(const Expr& e, const arl::Store& statics, const Division& d) {
  using arl::ExprKind;
  if (is_static_expr(e, d)) return literal(arl::eval_expr(e, statics));
  switch (e.kind()) {
    case ExprKind::Const:
    case ExprKind::Var: return e;
    case ExprKind::Cons: return Expr::cons(residualize(e.lhs(), statics, d), residualize(e.rhs(), statics, d));
    case ExprKind::Eq: return Expr::eq(residualize(e.lhs(), statics, d), residualize(e.rhs(), statics, d));
    case ExprKind::And: return Expr::conj(residualize(e.lhs(), statics, d), residualize(e.rhs(), statics, d));
    case ExprKind::Head: return Expr::head(residualize(e.lhs(), statics, d));
    case ExprKind::Tail: return Expr::tail(residualize(e.lhs(), statics, d));
    case ExprKind::IsPair: return Expr::is_pair(residualize(e.lhs(), statics, d));
    case ExprKind::Not: return Expr::negate(residualize(e.lhs(), statics, d));
  }
  return e;
}

/// Residualizes an expression used only for its truth value. Conjunctions
/// and negations with a literal operand are folded, so a partly static
/// predicate such as `Q = Q1 && S = S1` either collapses to a literal or
/// keeps only its dynamic conjunct.
inline Expr residualize_pred(const Expr& e, const arl::Store& statics, const Division& d) {
  using arl::ExprKind;
  if (is_static_expr(e, d)) return literal(Value::boolean(arl::eval_expr(e, statics).truthy()));
  if (e.kind() == ExprKind::And) {
    Expr a = residualize_pred(e.lhs(), statics, d);
    if (a.is_const() && !a.value().truthy()) return literal(Value::nil());
    Expr b = residualize_pred(e.rhs(), statics, d);
    if (a.is_const()) return b;
    if (b.is_const()) return b.value().truthy() ? a : literal(Value::nil());
    return Expr::conj(std::move(a), std::move(b));
  }
  if (e.kind() == ExprKind::Not) {
    Expr a = residualize_pred(e.lhs(), statics, d);
    if (a.is_const()) return literal(Value::boolean(!a.value().truthy()));
    return Expr::negate(std::move(a));
  }
  return residualize(e, statics, d);
}

inline Expr negated(const Expr& e) {
  if (e.kind() == arl::ExprKind::Not) return e.lhs();
  return Expr::negate(e);
}

inline std::string describe(const arl::Program& p, const SpecPoint& sp) {
  std::string out = p.blocks[sp.block].label + " {";
  bool first = true;
  for (const auto& [k, v] : sp.statics.values()) {
    out += (first ? "" : ", ") + k + "=" + to_sexpr(v);
    first = false;
  }
  return out + "}";
}

/// One generated residual node.
struct Node {
  SpecPoint point;
  std::string label;
  std::vector<arl::Statement> body;
  arl::JumpKind jump = arl::JumpKind::Exit;
  Expr pred;                           // residual branch predicate
  std::optional<std::size_t> succ[2];  // then/else target, absent if the edge is infeasible
  std::optional<Expr> cf_pred;         // dynamic residual come-from predicate, if any
  bool dead = false;                   // a residual assertion folded to false
  arl::Store exit_statics;             // static store after the body
};

}  // namespace detail

/// Polyvariant program-point specialization of an annotated program. The
/// result is uncompressed; see `compress`.
inline SpecResult specialize(const AnnotatedProgram& ap, const std::map<std::string, Value>& static_inputs,
                             const SpecOptions& opts = {}) {
  using namespace arl;
  using detail::Node;
  const Program& p = ap.program;
  const Division& d = ap.division;

  for (const auto& v : p.inputs) {
    const bool given = static_inputs.count(v) != 0;
    if (d.is_static(v) && !given) throw Error(ErrorKind::Specialization, "static input " + v + " has no value");
    if (d.is_dynamic(v) && given) throw Error(ErrorKind::Specialization, "dynamic input " + v + " was given a value");
  }
  for (const auto& [v, _] : static_inputs)
    if (std::find(p.inputs.begin(), p.inputs.end(), v) == p.inputs.end())
      throw Error(ErrorKind::Specialization, v + " is not an input");

  const auto entry = p.entry_index();
  if (!entry) throw Error(ErrorKind::Specialization, "program has no entry block");
  const auto index = p.label_index();
  auto block_of = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "jump to undefined label " + l);
    return it->second;
  };

  Store seed;
  for (const auto& v : p.variables())
    if (d.is_static(v)) seed.define(v, static_inputs.count(v) ? static_inputs.at(v) : Value::nil());

  std::vector<Node> nodes;
  std::map<SpecPoint, std::size_t> seen;
  std::map<std::size_t, std::size_t> label_counter;
  std::deque<std::size_t> work;

  auto intern = [&](SpecPoint sp) {
    auto it = seen.find(sp);
    if (it != seen.end()) return it->second;
    if (nodes.size() >= opts.spec_point_budget) {
      throw Error(ErrorKind::Specialization,
                  "SpecPoint budget of " + std::to_string(opts.spec_point_budget) + " exceeded");
    }
    Node n;
    n.label = p.blocks[sp.block].label + "_" + std::to_string(label_counter[sp.block]++);
    n.point = sp;
    nodes.push_back(std::move(n));
    seen.emplace(std::move(sp), nodes.size() - 1);
    work.push_back(nodes.size() - 1);
    return nodes.size() - 1;
  };

  // Whether the come-from of `target` can accept control from `from` given
  // the static store on arrival. Dynamic predicates always can.
  auto feasible = [&](std::size_t target, const std::string& from, const Store& statics) {
    const ComeFrom& cf = p.blocks[target].come_from;
    switch (cf.kind) {
      case ComeFromKind::Entry: return false;
      case ComeFromKind::From: return cf.then_label == from;
      case ComeFromKind::FiFrom: {
        if (from != cf.then_label && from != cf.else_label) return false;
        Expr r;
        try {
          r = detail::residualize_pred(cf.pred, statics, d);
        } catch (const Error&) {
          return false;
        }
        return !r.is_const() || r.value().truthy() == (from == cf.then_label);
      }
    }
    return false;
  };

  intern(SpecPoint{*entry, seed});
  while (!work.empty()) {
    const std::size_t id = work.front();
    work.pop_front();
    const SpecPoint sp = nodes[id].point;
    const Block& b = p.blocks[sp.block];
    const BlockAnnotation& ann = ap.blocks[sp.block];
    const std::string where = detail::describe(p, sp);
    Node n;
    n.point = sp;
    n.label = nodes[id].label;

    try {
      if (b.come_from.kind == ComeFromKind::FiFrom) {
        Expr r = detail::residualize_pred(b.come_from.pred, sp.statics, d);
        if (!r.is_const()) n.cf_pred = r;
      }
      Store s = sp.statics;
      for (std::size_t i = 0; i < b.body.size() && !n.dead; ++i) {
        const Statement& st = b.body[i];
        if (ann.stmt_static[i]) {
          exec_statement_in_place(st, s, b.label);
          continue;
        }
        switch (st.kind) {
          case StmtKind::XorAssign:
            n.body.push_back(Statement::xor_assign(st.var, detail::residualize(st.expr, s, d)));
            break;
          case StmtKind::Push:
          case StmtKind::Pop: n.body.push_back(st); break;
          case StmtKind::Assert: {
            Expr r = detail::residualize_pred(st.expr, s, d);
            if (!r.is_const()) n.body.push_back(Statement::assertion(r));
            else if (!r.value().truthy()) n.dead = true;
            break;
          }
        }
      }
      n.exit_statics = s;

      if (!n.dead) {
        switch (b.jump.kind) {
          case JumpKind::Exit: n.jump = JumpKind::Exit; break;
          case JumpKind::Goto: {
            n.jump = JumpKind::Goto;
            const std::size_t t = block_of(b.jump.then_label);
            if (feasible(t, b.label, s)) n.succ[0] = intern(SpecPoint{t, s});
            break;
          }
          case JumpKind::IfGoto: {
            Expr r = detail::residualize_pred(b.jump.pred, s, d);
            if (r.is_const()) {
              n.jump = JumpKind::Goto;
              const std::size_t t = block_of(r.value().truthy() ? b.jump.then_label : b.jump.else_label);
              if (feasible(t, b.label, s)) n.succ[0] = intern(SpecPoint{t, s});
            } else {
              n.jump = JumpKind::IfGoto;
              n.pred = r;
              const std::size_t t1 = block_of(b.jump.then_label);
              const std::size_t t2 = block_of(b.jump.else_label);
              if (feasible(t1, b.label, s)) n.succ[0] = intern(SpecPoint{t1, s});
              if (feasible(t2, b.label, s)) n.succ[1] = intern(SpecPoint{t2, s});
            }
            break;
          }
        }
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Specialization) throw;
      throw Error(ErrorKind::Specialization, "static evaluation failed at " + where + ": " + e.what());
    }
    nodes[id] = std::move(n);
  }

  // Liveness: a node is live iff it can reach the exit. Infeasible paths are
  // pruned, and a dynamic branch with one pruned side becomes an assertion.
  const std::size_t count = nodes.size();
  std::vector<std::vector<std::size_t>> preds(count);
  for (std::size_t i = 0; i < count; ++i)
    for (const auto& s : nodes[i].succ)
      if (s) preds[*s].push_back(i);

  std::vector<bool> live(count, false);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < count; ++i)
    if (!nodes[i].dead && nodes[i].jump == JumpKind::Exit) {
      live[i] = true;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t q : preds[i])
      if (!live[q] && !nodes[q].dead) {
        live[q] = true;
        stack.push_back(q);
      }
  }
  if (!live[0]) throw Error(ErrorKind::Specialization, "no specialization path from the entry reaches the exit");
  for (auto& n : nodes)
    for (auto& s : n.succ)
      if (s && !live[*s]) s.reset();

  std::vector<bool> keep(count, false);
  stack.assign(1, 0);
  keep[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& s : nodes[i].succ)
      if (s && !keep[*s]) {
        keep[*s] = true;
        stack.push_back(*s);
      }
  }

  std::vector<std::size_t> exits;
  for (std::size_t i = 0; i < count; ++i)
    if (keep[i] && nodes[i].jump == JumpKind::Exit) exits.push_back(i);
  if (exits.size() != 1) {
    throw Error(ErrorKind::Specialization,
                "the exit block was specialized at " + std::to_string(exits.size()) + " SpecPoints");
  }

  // Residual predecessors: (node, arrived via else?) in node order.
  std::vector<std::vector<std::pair<std::size_t, bool>>> in(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!keep[i]) continue;
    for (int k = 0; k < 2; ++k)
      if (nodes[i].succ[k]) in[*nodes[i].succ[k]].push_back({i, k == 1});
  }

  SpecResult res;
  res.division = d;
  res.spec_points = count;
  Program& out = res.residual;
  auto dynamic_only = [&](const std::vector<std::string>& vars) {
    std::vector<std::string> r;
    for (const auto& v : vars)
      if (d.is_dynamic(v)) r.push_back(v);
    return r;
  };
  out.inputs = dynamic_only(p.inputs);
  out.outputs = dynamic_only(p.outputs);
  out.locals = dynamic_only(p.locals);

  for (std::size_t i = 0; i < count; ++i) {
    if (!keep[i]) continue;
    const Node& n = nodes[i];
    const Block& src = p.blocks[n.point.block];
    Block blk;
    blk.label = n.label;

    const auto& ps = in[i];
    auto source_label = [&](std::size_t q) { return p.blocks[nodes[q].point.block].label; };
    if (ps.empty()) {
      blk.come_from = ComeFrom::entry();
    } else if (ps.size() == 1) {
      blk.come_from = ComeFrom::from(nodes[ps[0].first].label);
      if (n.cf_pred) {
        const bool via_then = source_label(ps[0].first) == src.come_from.then_label;
        blk.body.push_back(Statement::assertion(via_then ? *n.cf_pred : detail::negated(*n.cf_pred)));
      }
    } else if (ps.size() == 2 && n.cf_pred) {
      const bool first_then = source_label(ps[0].first) == src.come_from.then_label;
      const bool second_then = source_label(ps[1].first) == src.come_from.then_label;
      if (first_then == second_then) {
        throw Error(ErrorKind::Specialization, "both residual predecessors of " + n.label +
                                                   " arrive through the same come-from label");
      }
      const auto& l1 = nodes[(first_then ? ps[0] : ps[1]).first].label;
      const auto& l2 = nodes[(first_then ? ps[1] : ps[0]).first].label;
      blk.come_from = ComeFrom::fi(*n.cf_pred, l1, l2);
    } else {
      throw Error(ErrorKind::Specialization, "residual block " + n.label + " has " + std::to_string(ps.size()) +
                                                 " predecessors that a come-from cannot distinguish");
    }

    blk.body.insert(blk.body.end(), n.body.begin(), n.body.end());

    switch (n.jump) {
      case JumpKind::Exit: blk.jump = Jump::exit(); break;
      case JumpKind::Goto: blk.jump = Jump::go(nodes[*n.succ[0]].label); break;
      case JumpKind::IfGoto:
        if (n.succ[0] && n.succ[1]) {
          blk.jump = Jump::branch(n.pred, nodes[*n.succ[0]].label, nodes[*n.succ[1]].label);
        } else if (n.succ[0]) {
          blk.body.push_back(Statement::assertion(n.pred));
          blk.jump = Jump::go(nodes[*n.succ[0]].label);
        } else {
          blk.body.push_back(Statement::assertion(detail::negated(n.pred)));
          blk.jump = Jump::go(nodes[*n.succ[1]].label);
        }
        break;
    }
    out.blocks.push_back(std::move(blk));
  }
  res.residual_blocks = out.blocks.size();

  const Node& ex = nodes[exits[0]];
  const std::set<std::string> outs(p.outputs.begin(), p.outputs.end());
  for (const auto& [v, val] : ex.exit_statics.values()) {
    if (outs.count(v)) {
      res.static_outputs.emplace(v, val);
    } else if (!val.is_nil()) {
      throw Error(ErrorKind::Specialization, "static variable " + v + " is non-nil at exit");
    }
  }
  return res;
}

}  // namespace revspec::pe

#endif
