#ifndef REVSPEC_ARL_INTERP_HPP
#define REVSPEC_ARL_INTERP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/inverter.hpp"
#include "revspec/arl/printer.hpp"
#include "revspec/error.hpp"
#include "revspec/value.hpp"

namespace revspec::arl {

/// Variable name to value. Lookups of names outside the domain throw.
class Store {
 public:
  Store() = default;

  /// Every declared variable of `p`, all NIL.
  explicit Store(const Program& p) {
    for (const auto& v : p.variables()) values_.emplace(v, Value::nil());
  }

  const Value& get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error(ErrorKind::Declaration, "unknown variable " + name);
    return it->second;
  }
  void set(const std::string& name, Value v) {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error(ErrorKind::Declaration, "unknown variable " + name);
    it->second = std::move(v);
  }
  void define(const std::string& name, Value v) { values_[name] = std::move(v); }
  bool contains(const std::string& name) const { return values_.count(name) != 0; }

  const std::map<std::string, Value>& values() const { return values_; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& [k, v] : values_) h = h * 31 + std::hash<std::string>{}(k) * 17 + v.hash();
    return h;
  }

  friend bool operator==(const Store&, const Store&) = default;
  friend auto operator<=>(const Store&, const Store&) = default;

 private:
  std::map<std::string, Value> values_;
};

inline Value eval_expr(const Expr& e, const Store& s) {
  switch (e.kind()) {
    case ExprKind::Const: return e.value();
    case ExprKind::Var: return s.get(e.name());
    case ExprKind::Cons: return Value::cons(eval_expr(e.lhs(), s), eval_expr(e.rhs(), s));
    case ExprKind::Head: return eval_expr(e.lhs(), s).head();
    case ExprKind::Tail: return eval_expr(e.lhs(), s).tail();
    case ExprKind::Eq: return Value::boolean(eval_expr(e.lhs(), s) == eval_expr(e.rhs(), s));
    case ExprKind::IsPair: return Value::boolean(eval_expr(e.lhs(), s).is_pair());
    case ExprKind::And:
      if (!eval_expr(e.lhs(), s).truthy()) return Value::nil();
      return Value::boolean(eval_expr(e.rhs(), s).truthy());
    case ExprKind::Not: return Value::boolean(!eval_expr(e.lhs(), s).truthy());
  }
  return Value::nil();
}

namespace detail {

inline std::string where(const Statement& st, const std::string& block) {
  return "'" + to_string(st) + "'" + (block.empty() ? std::string() : " in block " + block);
}

}  // namespace detail

/// Applies one statement in place. Every statement is an injective partial
/// function on stores; failures throw with the statement and block named.
inline void exec_statement_in_place(const Statement& st, Store& s, const std::string& block = {}) {
  switch (st.kind) {
    case StmtKind::XorAssign: {
      const Value rhs = eval_expr(st.expr, s);
      const Value& cur = s.get(st.var);
      if (cur.is_nil()) {
        s.set(st.var, rhs);
      } else if (cur == rhs) {
        s.set(st.var, Value::nil());
      } else {
        throw Error(ErrorKind::XorClash, detail::where(st, block));
      }
      return;
    }
    case StmtKind::Push: {
      if (st.var == st.list) throw Error(ErrorKind::PushSameVar, detail::where(st, block));
      Value cell = Value::cons(s.get(st.var), s.get(st.list));
      s.set(st.list, std::move(cell));
      s.set(st.var, Value::nil());
      return;
    }
    case StmtKind::Pop: {
      if (st.var == st.list) throw Error(ErrorKind::PushSameVar, detail::where(st, block));
      if (!s.get(st.var).is_nil()) throw Error(ErrorKind::PopNonNilDest, detail::where(st, block));
      const Value list = s.get(st.list);
      if (!list.is_pair()) throw Error(ErrorKind::PopOnAtom, detail::where(st, block));
      s.set(st.var, list.head());
      s.set(st.list, list.tail());
      return;
    }
    case StmtKind::Assert:
      if (!eval_expr(st.expr, s).truthy()) throw Error(ErrorKind::AssertionFailed, detail::where(st, block));
      return;
  }
}

inline Store exec_statement(const Statement& st, Store s, const std::string& block = {}) {
  exec_statement_in_place(st, s, block);
  return s;
}

struct TraceEntry {
  std::string label;
  std::size_t store_hash;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct ExecTrace {
  std::vector<TraceEntry> entries;
  std::uint64_t steps = 0;
};

struct RunOptions {
  std::uint64_t step_limit = 10'000'000;
  bool record_trace = false;
  // Called on entry to every block, after its come-from check.
  std::function<void(const std::string& label, const Store&)> on_block;
};

struct RunResult {
  std::vector<Value> outputs;
  Store final_store;
  ExecTrace trace;
};

/// Executes block by block from the entry block. Each block's come-from is
/// checked against the block actually left; a conditional come-from's
/// predicate must hold exactly when control arrived from its first label.
/// Variables that are not inputs start NIL; variables that are not outputs
/// must be NIL again at exit.
inline RunResult run_full(const Program& p, const std::vector<Value>& inputs, const RunOptions& opts = {}) {
  if (inputs.size() != p.inputs.size()) {
    throw Error(ErrorKind::Arity, "program takes " + std::to_string(p.inputs.size()) + " inputs, got " +
                                      std::to_string(inputs.size()));
  }
  const auto index = p.label_index();
  const auto entry = p.entry_index();
  if (!entry) throw Error(ErrorKind::UnknownLabel, "program has no entry block");

  RunResult result;
  Store& s = result.final_store;
  s = Store(p);
  for (std::size_t i = 0; i < inputs.size(); ++i) s.set(p.inputs[i], inputs[i]);

  const Block* cur = &p.blocks[*entry];
  const Block* prev = nullptr;
  for (;;) {
    if (++result.trace.steps > opts.step_limit)
      throw Error(ErrorKind::StepLimit, "more than " + std::to_string(opts.step_limit) + " blocks executed");

    const ComeFrom& cf = cur->come_from;
    const std::string arrived = prev ? prev->label : std::string("<start>");
    switch (cf.kind) {
      case ComeFromKind::Entry:
        if (prev) throw Error(ErrorKind::ComeFrom, "entry block " + cur->label + " re-entered from " + arrived);
        break;
      case ComeFromKind::From:
        if (!prev || prev->label != cf.then_label)
          throw Error(ErrorKind::ComeFrom, "block " + cur->label + " entered from " + arrived);
        break;
      case ComeFromKind::FiFrom: {
        if (!prev || (prev->label != cf.then_label && prev->label != cf.else_label))
          throw Error(ErrorKind::ComeFrom, "block " + cur->label + " entered from " + arrived);
        const bool holds = eval_expr(cf.pred, s).truthy();
        if (holds != (prev->label == cf.then_label)) {
          throw Error(ErrorKind::ComeFrom, "backward-determinism violation at block " + cur->label +
                                               ": arrived from " + arrived + " but '" + to_string(cf.pred) +
                                               "' is " + (holds ? "true" : "false"));
        }
        break;
      }
    }
    if (opts.record_trace) result.trace.entries.push_back({cur->label, s.hash()});
    if (opts.on_block) opts.on_block(cur->label, s);

    for (const auto& st : cur->body) exec_statement_in_place(st, s, cur->label);

    const Jump& j = cur->jump;
    if (j.kind == JumpKind::Exit) break;
    const std::string& target =
        j.kind == JumpKind::Goto || eval_expr(j.pred, s).truthy() ? j.then_label : j.else_label;
    auto it = index.find(target);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "jump to undefined label " + target);
    prev = cur;
    cur = &p.blocks[it->second];
  }

  const std::set<std::string> outs(p.outputs.begin(), p.outputs.end());
  for (const auto& [name, v] : s.values())
    if (!outs.count(name) && !v.is_nil())
      throw Error(ErrorKind::NonNilAtExit, "variable " + name + " is non-nil at exit");

  result.outputs.reserve(p.outputs.size());
  for (const auto& o : p.outputs) result.outputs.push_back(s.get(o));
  return result;
}

inline std::vector<Value> run(const Program& p, const std::vector<Value>& inputs, const RunOptions& opts = {}) {
  return run_full(p, inputs, opts).outputs;
}

/// Runs the structural inverse: maps outputs of `p` back to its inputs.
inline std::vector<Value> run_backward(const Program& p, const std::vector<Value>& outputs,
                                       const RunOptions& opts = {}) {
  return run(invert_program(p), outputs, opts);
}

}  // namespace revspec::arl

#endif
