#ifndef REVSPEC_ARL_AST_HPP
#define REVSPEC_ARL_AST_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "revspec/value.hpp"

namespace revspec::arl {

enum class ExprKind { Const, Var, Cons, Head, Tail, Eq, IsPair, And, Not };

/// Immutable expression tree. Evaluation is pure; only hd/tl can fail.
class Expr {
 public:
  Expr() : Expr(constant(Value::nil())) {}

  static Expr constant(Value v) { return Expr(Node{ExprKind::Const, std::move(v), {}, {}, {}}); }
  static Expr var(std::string name) { return Expr(Node{ExprKind::Var, {}, std::move(name), {}, {}}); }
  static Expr cons(Expr a, Expr b) { return binary(ExprKind::Cons, std::move(a), std::move(b)); }
  static Expr eq(Expr a, Expr b) { return binary(ExprKind::Eq, std::move(a), std::move(b)); }
  static Expr conj(Expr a, Expr b) { return binary(ExprKind::And, std::move(a), std::move(b)); }
  static Expr head(Expr a) { return unary(ExprKind::Head, std::move(a)); }
  static Expr tail(Expr a) { return unary(ExprKind::Tail, std::move(a)); }
  static Expr is_pair(Expr a) { return unary(ExprKind::IsPair, std::move(a)); }
  static Expr negate(Expr a) { return unary(ExprKind::Not, std::move(a)); }

  ExprKind kind() const { return node_->kind; }
  const Value& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  const Expr& lhs() const { return *node_->lhs; }
  const Expr& rhs() const { return *node_->rhs; }

  bool is_const() const { return kind() == ExprKind::Const; }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case ExprKind::Const: return x.value == y.value;
      case ExprKind::Var: return x.name == y.name;
      case ExprKind::Cons:
      case ExprKind::Eq:
      case ExprKind::And: return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
      default: return *x.lhs == *y.lhs;
    }
  }

  /// Adds every variable read by this expression to `out`.
  void collect_vars(std::set<std::string>& out) const {
    switch (kind()) {
      case ExprKind::Const: return;
      case ExprKind::Var: out.insert(name()); return;
      case ExprKind::Cons:
      case ExprKind::Eq:
      case ExprKind::And:
        lhs().collect_vars(out);
        rhs().collect_vars(out);
        return;
      default: lhs().collect_vars(out);
    }
  }

  std::set<std::string> vars() const {
    std::set<std::string> out;
    collect_vars(out);
    return out;
  }

 private:
  struct Node {
    ExprKind kind;
    Value value;
    std::string name;
    std::shared_ptr<const Expr> lhs;
    std::shared_ptr<const Expr> rhs;
  };

  explicit Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  static Expr unary(ExprKind k, Expr a) {
    return Expr(Node{k, {}, {}, std::make_shared<const Expr>(std::move(a)), {}});
  }
  static Expr binary(ExprKind k, Expr a, Expr b) {
    return Expr(Node{k, {}, {}, std::make_shared<const Expr>(std::move(a)),
                     std::make_shared<const Expr>(std::move(b))});
  }

  std::shared_ptr<const Node> node_;
};

enum class StmtKind { XorAssign, Push, Pop, Assert };

/// `var ^= expr`, `push var list`, `pop var list` or `assert expr`.
struct Statement {
  StmtKind kind = StmtKind::Assert;
  std::string var;
  std::string list;
  Expr expr;

  static Statement xor_assign(std::string target, Expr rhs) {
    return {StmtKind::XorAssign, std::move(target), {}, std::move(rhs)};
  }
  static Statement push(std::string src, std::string list) {
    return {StmtKind::Push, std::move(src), std::move(list), {}};
  }
  static Statement pop(std::string dst, std::string list) {
    return {StmtKind::Pop, std::move(dst), std::move(list), {}};
  }
  static Statement assertion(Expr e) { return {StmtKind::Assert, {}, {}, std::move(e)}; }

  /// Variables read or written.
  std::set<std::string> vars() const {
    std::set<std::string> out;
    switch (kind) {
      case StmtKind::XorAssign:
        out.insert(var);
        expr.collect_vars(out);
        break;
      case StmtKind::Push:
      case StmtKind::Pop:
        out.insert(var);
        out.insert(list);
        break;
      case StmtKind::Assert: expr.collect_vars(out); break;
    }
    return out;
  }

  friend bool operator==(const Statement&, const Statement&) = default;
};

enum class ComeFromKind { Entry, From, FiFrom };

/// Entry-side dual of a jump. `From` uses `then_label` only.
struct ComeFrom {
  ComeFromKind kind = ComeFromKind::Entry;
  Expr pred;
  std::string then_label;
  std::string else_label;

  static ComeFrom entry() { return {}; }
  static ComeFrom from(std::string l) { return {ComeFromKind::From, {}, std::move(l), {}}; }
  static ComeFrom fi(Expr e, std::string l1, std::string l2) {
    return {ComeFromKind::FiFrom, std::move(e), std::move(l1), std::move(l2)};
  }

  std::vector<std::string> labels() const {
    switch (kind) {
      case ComeFromKind::Entry: return {};
      case ComeFromKind::From: return {then_label};
      case ComeFromKind::FiFrom: return {then_label, else_label};
    }
    return {};
  }

  friend bool operator==(const ComeFrom& a, const ComeFrom& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case ComeFromKind::Entry: return true;
      case ComeFromKind::From: return a.then_label == b.then_label;
      case ComeFromKind::FiFrom:
        return a.pred == b.pred && a.then_label == b.then_label && a.else_label == b.else_label;
    }
    return false;
  }
};

enum class JumpKind { Exit, Goto, IfGoto };

/// Block terminator. `Goto` uses `then_label` only.
struct Jump {
  JumpKind kind = JumpKind::Exit;
  Expr pred;
  std::string then_label;
  std::string else_label;

  static Jump exit() { return {}; }
  static Jump go(std::string l) { return {JumpKind::Goto, {}, std::move(l), {}}; }
  static Jump branch(Expr e, std::string l1, std::string l2) {
    return {JumpKind::IfGoto, std::move(e), std::move(l1), std::move(l2)};
  }

  std::vector<std::string> labels() const {
    switch (kind) {
      case JumpKind::Exit: return {};
      case JumpKind::Goto: return {then_label};
      case JumpKind::IfGoto: return {then_label, else_label};
    }
    return {};
  }

  friend bool operator==(const Jump& a, const Jump& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case JumpKind::Exit: return true;
      case JumpKind::Goto: return a.then_label == b.then_label;
      case JumpKind::IfGoto:
        return a.pred == b.pred && a.then_label == b.then_label && a.else_label == b.else_label;
    }
    return false;
  }
};

struct Block {
  std::string label;
  ComeFrom come_from;
  std::vector<Statement> body;
  Jump jump;

  friend bool operator==(const Block&, const Block&) = default;
};

struct Program {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> locals;
  std::vector<Block> blocks;

  friend bool operator==(const Program&, const Program&) = default;

  /// Declared variables in declaration order, each name once.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto* group : {&inputs, &outputs, &locals})
      for (const auto& v : *group)
        if (seen.insert(v).second) out.push_back(v);
    return out;
  }

  std::unordered_map<std::string, std::size_t> label_index() const {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < blocks.size(); ++i) idx.emplace(blocks[i].label, i);
    return idx;
  }

  std::optional<std::size_t> entry_index() const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].come_from.kind == ComeFromKind::Entry) return i;
    return std::nullopt;
  }
};

}  // namespace revspec::arl

#endif
