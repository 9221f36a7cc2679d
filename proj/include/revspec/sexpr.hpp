#ifndef REVSPEC_SEXPR_HPP
#define REVSPEC_SEXPR_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "revspec/error.hpp"
#include "revspec/value.hpp"

namespace revspec {

inline bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-';
}

inline bool is_atom_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_atom_char(c)) return false;
  return true;
}

namespace detail {

/// Position-tracking view over source text shared by the s-expression and
/// ARL readers.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax,
                std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  /// Skips blanks and comments (`;` and `//` both run to end of line).
  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else if (c == ';' || (c == '/' && peek(1) == '/')) {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    std::size_t start = pos;
    while (!eof() && is_atom_char(peek())) get();
    return std::string(text.substr(start, pos - start));
  }
};

inline Value read_value(Cursor& cur) {
  cur.skip_space();
  if (cur.eof()) cur.fail("unexpected end of input");
  char c = cur.peek();
  if (c == '(') {
    cur.get();
    std::vector<Value> items;
    Value tail;
    for (;;) {
      cur.skip_space();
      if (cur.eof()) cur.fail("unterminated list");
      if (cur.peek() == ')') {
        cur.get();
        break;
      }
      if (cur.peek() == '.') {
        if (items.empty()) cur.fail("dot with no preceding element");
        cur.get();
        tail = read_value(cur);
        cur.skip_space();
        if (cur.peek() != ')') cur.fail("expected ')' after dotted tail");
        cur.get();
        break;
      }
      items.push_back(read_value(cur));
    }
    for (auto it = items.rbegin(); it != items.rend(); ++it) tail = Value::cons(*it, std::move(tail));
    return tail;
  }
  if (is_atom_char(c)) return Value::atom(cur.read_word());
  cur.fail(std::string("unexpected character '") + c + "'");
}

}  // namespace detail

/// Parses exactly one s-expression; trailing non-comment text is an error.
inline Value parse_sexpr(std::string_view text) {
  detail::Cursor cur{text};
  Value v = detail::read_value(cur);
  cur.skip_space();
  if (!cur.eof()) cur.fail("trailing input after s-expression");
  return v;
}

/// Lisp-style rendering: proper lists in list notation, `.` before an atomic
/// tail, NIL as `()`.
inline void write_sexpr(std::string& out, const Value& v) {
  if (v.is_nil()) {
    out += "()";
    return;
  }
  if (v.is_atom()) {
    out += v.name();
    return;
  }
  out += '(';
  const Value* cur = &v;
  bool first = true;
  while (cur->is_pair()) {
    if (!first) out += ' ';
    first = false;
    write_sexpr(out, cur->head());
    cur = &cur->tail();
  }
  if (!cur->is_nil()) {
    out += " . ";
    out += cur->name();
  }
  out += ')';
}

inline std::string to_sexpr(const Value& v) {
  std::string out;
  write_sexpr(out, v);
  return out;
}

}  // namespace revspec

#endif
