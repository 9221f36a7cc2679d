#ifndef REVSPEC_VALUE_HPP
#define REVSPEC_VALUE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revspec/error.hpp"

namespace revspec {

/// Symbolic datum: an atom or an immutable pair. The atom `nil` is the empty
/// list and the only false value. Copies share structure.
class Value {
 public:
  Value() = default;

  static Value atom(std::string_view name) {
    Value v;
    if (name != "nil") v.atom_ = std::string(name);
    return v;
  }
  static Value nil() { return Value{}; }
  static Value truth() { return atom("true"); }
  static Value cons(Value head, Value tail) {
    Value v;
    v.pair_ = std::make_shared<const Pair>(std::move(head), std::move(tail));
    return v;
  }
  static Value boolean(bool b) { return b ? truth() : nil(); }

  /// NIL-terminated list of the given elements.
  static Value list(const std::vector<Value>& items) {
    Value out;
    for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(*it, std::move(out));
    return out;
  }

  bool is_pair() const noexcept { return pair_ != nullptr; }
  bool is_atom() const noexcept { return pair_ == nullptr; }
  bool is_nil() const noexcept { return pair_ == nullptr && atom_.empty(); }
  bool truthy() const noexcept { return !is_nil(); }

  /// Atom name; "nil" for the empty value. Throws for pairs.
  std::string_view name() const {
    if (is_pair()) throw Error(ErrorKind::HeadOfAtom, "name of a pair");
    return atom_.empty() ? std::string_view("nil") : std::string_view(atom_);
  }

  const Value& head() const {
    if (!is_pair()) throw Error(ErrorKind::HeadOfAtom, "hd applied to atom " + std::string(name()));
    return pair_->first;
  }
  const Value& tail() const {
    if (!is_pair()) throw Error(ErrorKind::HeadOfAtom, "tl applied to atom " + std::string(name()));
    return pair_->second;
  }

  /// True iff this is NIL or a pair chain ending in NIL.
  bool is_list() const noexcept {
    const Value* v = this;
    while (v->is_pair()) v = &v->pair_->second;
    return v->is_nil();
  }

  /// Elements of a proper list. Throws for dotted or atomic values other than NIL.
  std::vector<Value> elements() const {
    std::vector<Value> out;
    const Value* v = this;
    while (v->is_pair()) {
      out.push_back(v->pair_->first);
      v = &v->pair_->second;
    }
    if (!v->is_nil()) throw Error(ErrorKind::Syntax, "expected a proper list");
    return out;
  }

  friend bool operator==(const Value& a, const Value& b) noexcept {
    if (a.pair_ == b.pair_) return a.atom_ == b.atom_;
    if (!a.pair_ || !b.pair_) return false;
    return a.pair_->first == b.pair_->first && a.pair_->second == b.pair_->second;
  }

  /// Total order: atoms (by name, nil first) before pairs (lexicographic).
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
    if (a.pair_ == b.pair_ && a.atom_ == b.atom_) return std::strong_ordering::equal;
    if (a.is_atom() && b.is_atom()) return a.atom_.compare(b.atom_) <=> 0;
    if (a.is_atom()) return std::strong_ordering::less;
    if (b.is_atom()) return std::strong_ordering::greater;
    if (auto c = a.pair_->first <=> b.pair_->first; c != 0) return c;
    return a.pair_->second <=> b.pair_->second;
  }

  std::size_t hash() const noexcept {
    if (is_atom()) return std::hash<std::string>{}(atom_);
    std::size_t h = pair_->first.hash();
    return h * 1000003u ^ (pair_->second.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }

 private:
  using Pair = std::pair<Value, Value>;
  std::string atom_;  // empty encodes nil
  std::shared_ptr<const Pair> pair_;
};

}  // namespace revspec

template <>
struct std::hash<revspec::Value> {
  std::size_t operator()(const revspec::Value& v) const noexcept { return v.hash(); }
};

#endif
