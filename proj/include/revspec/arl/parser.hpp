#ifndef REVSPEC_ARL_PARSER_HPP
#define REVSPEC_ARL_PARSER_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/error.hpp"
#include "revspec/sexpr.hpp"

namespace revspec::arl {

inline bool is_keyword(std::string_view w) {
  static const std::set<std::string_view> kw = {
      "entry", "from", "fi",     "else", "exit", "goto", "if",  "push",
      "pop",   "assert", "with", "hd",   "tl",   "cons", "nil", "ispair"};
  return kw.count(w) != 0;
}

inline bool is_identifier(std::string_view w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  for (char c : w)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !is_keyword(w);
}

namespace detail {

enum class Tok { Word, Const, LParen, RParen, Arrow, Colon, XorEq, Eq, AndAnd, Bang, End };

struct Token {
  Tok kind;
  std::string text;
  Value value;
  int line;
  int col;
};

inline std::vector<Token> tokenize(std::string_view text) {
  revspec::detail::Cursor cur{text};
  std::vector<Token> out;
  for (;;) {
    cur.skip_space();
    const int line = cur.line, col = cur.col;
    auto emit = [&](Tok k, std::string t) { out.push_back(Token{k, std::move(t), {}, line, col}); };
    if (cur.eof()) {
      emit(Tok::End, "<end of input>");
      return out;
    }
    const char c = cur.peek();
    if (static_cast<unsigned char>(c) > 126 || (c < 32 && !std::isspace(static_cast<unsigned char>(c))))
      cur.fail("non-printable character");
    if (c == '-' && cur.peek(1) == '>') {
      cur.get();
      cur.get();
      emit(Tok::Arrow, "->");
    } else if (c == '^' && cur.peek(1) == '=') {
      cur.get();
      cur.get();
      emit(Tok::XorEq, "^=");
    } else if (c == '&' && cur.peek(1) == '&') {
      cur.get();
      cur.get();
      emit(Tok::AndAnd, "&&");
    } else if (c == '(') {
      cur.get();
      emit(Tok::LParen, "(");
    } else if (c == ')') {
      cur.get();
      emit(Tok::RParen, ")");
    } else if (c == ':') {
      cur.get();
      emit(Tok::Colon, ":");
    } else if (c == '=') {
      cur.get();
      emit(Tok::Eq, "=");
    } else if (c == '!') {
      cur.get();
      emit(Tok::Bang, "!");
    } else if (c == '\'') {
      cur.get();
      Value v = revspec::detail::read_value(cur);
      out.push_back(Token{Tok::Const, "'", std::move(v), line, col});
    } else if (is_atom_char(c)) {
      emit(Tok::Word, cur.read_word());
    } else {
      cur.fail(std::string("unexpected character '") + c + "'");
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Program program() {
    Program p;
    p.inputs = var_list();
    expect(Tok::Arrow, "'->'");
    p.outputs = var_list();
    if (is_word("with")) {
      ++pos_;
      p.locals = var_list();
    }
    declare(p);
    std::set<std::string> labels;
    while (peek().kind != Tok::End) {
      const Token& at = peek();
      Block b = block();
      if (!labels.insert(b.label).second) fail(at, "duplicate label " + b.label);
      p.blocks.push_back(std::move(b));
    }
    if (p.blocks.empty()) fail(peek(), "program has no blocks");
    return p;
  }

  Expr expression_only() {
    allow_any_var_ = true;
    Expr e = expr();
    if (peek().kind != Tok::End) fail(peek(), "trailing input after expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool is_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw Error(ErrorKind::Syntax,
                std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what + ", found '" + peek().text + "'");
    return next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail(peek(), "expected '" + std::string(w) + "', found '" + peek().text + "'");
    ++pos_;
  }

  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Word || !is_identifier(t.text))
      fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
    ++pos_;
    return t.text;
  }

  std::string variable() {
    const Token& t = peek();
    std::string name = identifier("variable");
    if (!allow_any_var_ && !declared_.count(name)) {
      throw Error(ErrorKind::Declaration, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                              ": undeclared variable " + name);
    }
    return name;
  }

  std::vector<std::string> var_list() {
    expect(Tok::LParen, "'('");
    std::vector<std::string> vars;
    std::set<std::string> seen;
    while (peek().kind != Tok::RParen) {
      const Token& t = peek();
      std::string v = identifier("variable name");
      if (!seen.insert(v).second) fail(t, "duplicate variable " + v);
      vars.push_back(std::move(v));
    }
    ++pos_;
    return vars;
  }

  void declare(const Program& p) {
    for (const auto& v : p.inputs) declared_.insert(v);
    for (const auto& v : p.outputs) declared_.insert(v);
    for (const auto& v : p.locals) {
      if (declared_.count(v))
        throw Error(ErrorKind::Declaration, "local " + v + " is also declared as input or output");
      declared_.insert(v);
    }
  }

  Block block() {
    Block b;
    b.label = identifier("block label");
    expect(Tok::Colon, "':'");
    b.come_from = come_from();
    for (;;) {
      if (is_word("exit") || is_word("goto") || is_word("if")) break;
      if (peek().kind == Tok::End) fail(peek(), "block " + b.label + " has no jump");
      b.body.push_back(statement());
    }
    b.jump = jump();
    return b;
  }

  ComeFrom come_from() {
    if (is_word("entry")) {
      ++pos_;
      return ComeFrom::entry();
    }
    if (is_word("from")) {
      ++pos_;
      return ComeFrom::from(identifier("label"));
    }
    if (is_word("fi")) {
      ++pos_;
      Expr e = expr();
      expect_word("from");
      std::string l1 = identifier("label");
      expect_word("else");
      std::string l2 = identifier("label");
      return ComeFrom::fi(std::move(e), std::move(l1), std::move(l2));
    }
    fail(peek(), "expected come-from (entry, from, fi), found '" + peek().text + "'");
  }

  Jump jump() {
    if (is_word("exit")) {
      ++pos_;
      return Jump::exit();
    }
    if (is_word("goto")) {
      ++pos_;
      return Jump::go(identifier("label"));
    }
    expect_word("if");
    Expr e = expr();
    expect_word("goto");
    std::string l1 = identifier("label");
    expect_word("else");
    std::string l2 = identifier("label");
    return Jump::branch(std::move(e), std::move(l1), std::move(l2));
  }

  Statement statement() {
    if (is_word("push") || is_word("pop")) {
      const bool push = is_word("push");
      ++pos_;
      std::string x = variable();
      std::string y = variable();
      return push ? Statement::push(std::move(x), std::move(y)) : Statement::pop(std::move(x), std::move(y));
    }
    if (is_word("assert")) {
      ++pos_;
      return Statement::assertion(expr());
    }
    std::string x = variable();
    expect(Tok::XorEq, "'^='");
    return Statement::xor_assign(std::move(x), expr());
  }

  Expr expr() {
    Expr e = equality();
    while (peek().kind == Tok::AndAnd) {
      ++pos_;
      e = Expr::conj(std::move(e), equality());
    }
    return e;
  }

  Expr equality() {
    Expr e = unary();
    if (peek().kind == Tok::Eq) {
      ++pos_;
      e = Expr::eq(std::move(e), unary());
    }
    return e;
  }

  Expr unary() {
    if (peek().kind == Tok::Bang) {
      ++pos_;
      return Expr::negate(unary());
    }
    if (is_word("hd")) {
      ++pos_;
      return Expr::head(unary());
    }
    if (is_word("tl")) {
      ++pos_;
      return Expr::tail(unary());
    }
    if (is_word("ispair")) {
      ++pos_;
      return Expr::is_pair(unary());
    }
    if (is_word("cons")) {
      ++pos_;
      Expr a = unary();
      return Expr::cons(std::move(a), unary());
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Const) {
      ++pos_;
      return Expr::constant(t.value);
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (is_word("nil")) {
      ++pos_;
      return Expr::constant(Value::nil());
    }
    return Expr::var(variable());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> declared_;
  bool allow_any_var_ = false;
};

}  // namespace detail

/// Parses ARL concrete syntax. Throws Error(Syntax) with line:column, or
/// Error(Declaration) for undeclared or conflicting variable names.
inline Program parse_program(std::string_view text) { return detail::Parser(text).program(); }

/// Parses a standalone expression; variables are not checked against any
/// declaration.
inline Expr parse_expr(std::string_view text) { return detail::Parser(text).expression_only(); }

}  // namespace revspec::arl

#endif
