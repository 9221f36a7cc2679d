#ifndef REVSPEC_TESTS_SUPPORT_HPP
#define REVSPEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "revspec/revspec.hpp"

namespace revspec {

inline void PrintTo(const Value& v, std::ostream* os) { *os << to_sexpr(v); }

}  // namespace revspec

namespace testing_support {

using namespace revspec;
namespace fs = std::filesystem;

inline fs::path corpus_dir() { return fs::path(REVSPEC_SOURCE_DIR) / "corpus"; }

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<fs::path> files_with(const fs::path& dir, const std::string& ext) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline rtm::Machine machine(const std::string& name) {
  return rtm::parse_machine(slurp(corpus_dir() / "machines" / (name + ".rtm")));
}

inline std::vector<std::pair<std::string, rtm::Machine>> corpus_machines() {
  std::vector<std::pair<std::string, rtm::Machine>> out;
  for (const auto& f : files_with(corpus_dir() / "machines", ".rtm"))
    out.emplace_back(f.stem().string(), rtm::parse_machine(slurp(f)));
  return out;
}

inline arl::Program arl_program(const std::string& name) {
  return arl::parse_program(slurp(corpus_dir() / "arl" / (name + ".arl")));
}

/// Tape symbols a machine reads or writes, BLANK excluded.
inline std::vector<std::string> alphabet(const rtm::Machine& m) {
  std::vector<std::string> out;
  for (const auto& r : m.rules)
    if (r.is_symbol())
      for (const auto* s : {&r.read, &r.write})
        if (*s != rtm::kBlank && std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  std::sort(out.begin(), out.end());
  return out;
}

inline rtm::Symbols random_tape(std::mt19937& rng, const std::vector<std::string>& symbols, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  rtm::Symbols t(len(rng));
  for (auto& s : t) s = symbols[pick(rng)];
  return t;
}

/// All strings over `symbols` of length at most `max_len`.
inline std::vector<rtm::Symbols> all_tapes(const std::vector<std::string>& symbols, std::size_t max_len) {
  std::vector<rtm::Symbols> out{{}};
  std::vector<rtm::Symbols> layer{{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<rtm::Symbols> next;
    for (const auto& t : layer)
      for (const auto& s : symbols) {
        next.push_back(t);
        next.back().push_back(s);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline Value random_value(std::mt19937& rng, int depth = 3) {
  static const char* atoms[] = {"a", "b", "c", "0", "1", "x", "LEFT", "BLANK"};
  std::uniform_int_distribution<int> coin(0, 9);
  const int c = coin(rng);
  if (depth <= 0 || c < 4) {
    if (c == 0) return Value::nil();
    return Value::atom(atoms[std::uniform_int_distribution<std::size_t>(0, 7)(rng)]);
  }
  return Value::cons(random_value(rng, depth - 1), random_value(rng, depth - 1));
}

inline Value random_list(std::mt19937& rng, std::size_t max_len, int depth = 2) {
  std::vector<Value> items(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& v : items) v = random_value(rng, depth);
  return Value::list(items);
}

/// Random well-formed program over threaded variables v0..v{n-1} (inputs
/// equal outputs, no locals). Control flow is a chain of straight blocks
/// and diamonds; a diamond's predicate reads only variables its arms leave
/// alone, so the join's come-from always agrees with the branch taken.
/// Statements may fail at run time on some inputs.
class ProgramGen {
 public:
  explicit ProgramGen(std::mt19937& rng, std::size_t vars = 4) : rng_(rng) {
    for (std::size_t i = 0; i < vars; ++i) vars_.push_back("v" + std::to_string(i));
  }

  arl::Program generate(std::size_t segments) {
    arl::Program p;
    p.inputs = vars_;
    p.outputs = vars_;
    label_ = 0;
    std::string prev = fresh();
    p.blocks.push_back({prev, arl::ComeFrom::entry(), body(vars_), arl::Jump::exit()});
    for (std::size_t s = 0; s < segments; ++s) {
      if (pick(3) == 0) {
        const std::string next = fresh();
        p.blocks.back().jump = arl::Jump::go(next);
        p.blocks.push_back({next, arl::ComeFrom::from(prev), body(vars_), arl::Jump::exit()});
        prev = next;
        continue;
      }
      // Diamond: guard variables are frozen inside both arms.
      std::vector<std::string> guard_vars, arm_vars;
      for (const auto& v : vars_) (pick(2) == 0 && guard_vars.size() < 2 ? guard_vars : arm_vars).push_back(v);
      if (guard_vars.empty()) {
        guard_vars.push_back(arm_vars.back());
        arm_vars.pop_back();
      }
      const arl::Expr pred = predicate(guard_vars);
      const std::string t = fresh(), e = fresh(), join = fresh();
      p.blocks.back().jump = arl::Jump::branch(pred, t, e);
      p.blocks.push_back({t, arl::ComeFrom::from(prev), body(arm_vars), arl::Jump::go(join)});
      p.blocks.push_back({e, arl::ComeFrom::from(prev), body(arm_vars), arl::Jump::go(join)});
      p.blocks.push_back({join, arl::ComeFrom::fi(pred, t, e), body(vars_), arl::Jump::exit()});
      prev = join;
    }
    return p;
  }

  std::vector<Value> inputs() {
    std::vector<Value> out;
    for (std::size_t i = 0; i < vars_.size(); ++i) out.push_back(pick(2) == 0 ? Value::nil() : random_value(rng_, 3));
    return out;
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::string fresh() { return "l" + std::to_string(label_++); }

  Value constant() {
    static const char* atoms[] = {"a", "b", "0", "1"};
    if (pick(4) == 0) return Value::cons(Value::atom(atoms[pick(4)]), Value::atom(atoms[pick(4)]));
    return Value::atom(atoms[pick(4)]);
  }

  arl::Expr operand(const std::vector<std::string>& from, int depth) {
    using arl::Expr;
    const std::size_t c = pick(depth > 0 ? 8 : 4);
    if (c == 0 || from.empty()) return Expr::constant(constant());
    if (c <= 3) return Expr::var(from[pick(from.size())]);
    if (c <= 5) return Expr::cons(operand(from, depth - 1), operand(from, depth - 1));
    if (c == 6) return Expr::head(Expr::cons(Expr::var(from[pick(from.size())]), operand(from, depth - 1)));
    return Expr::tail(Expr::cons(operand(from, depth - 1), Expr::var(from[pick(from.size())])));
  }

  arl::Expr predicate(const std::vector<std::string>& from) {
    using arl::Expr;
    const std::size_t c = pick(4);
    if (c == 0) return Expr::is_pair(Expr::var(from[pick(from.size())]));
    if (c == 1) return Expr::eq(Expr::var(from[pick(from.size())]), Expr::constant(Value::nil()));
    if (c == 2) return Expr::negate(Expr::eq(Expr::var(from[pick(from.size())]), Expr::constant(constant())));
    return Expr::conj(Expr::is_pair(Expr::var(from[pick(from.size())])),
                      Expr::eq(Expr::var(from[pick(from.size())]), Expr::constant(Value::nil())));
  }

  std::vector<arl::Statement> body(const std::vector<std::string>& writable) {
    std::vector<arl::Statement> out;
    const std::size_t n = pick(4);
    for (std::size_t i = 0; i < n && !writable.empty(); ++i) {
      const std::string x = writable[pick(writable.size())];
      std::vector<std::string> others;
      for (const auto& v : vars_)
        if (v != x) others.push_back(v);
      std::vector<std::string> other_writable;
      for (const auto& v : writable)
        if (v != x) other_writable.push_back(v);
      switch (pick(8)) {
        case 0:
        case 1:
        case 2:
        case 3: out.push_back(arl::Statement::xor_assign(x, operand(others, 2))); break;
        case 4:
        case 5:
          if (!other_writable.empty()) out.push_back(arl::Statement::push(x, other_writable[pick(other_writable.size())]));
          break;
        case 6:
          if (!other_writable.empty()) out.push_back(arl::Statement::pop(x, other_writable[pick(other_writable.size())]));
          break;
        default:
          out.push_back(arl::Statement::assertion(
              arl::Expr::negate(arl::Expr::eq(arl::Expr::var(x), arl::Expr::constant(Value::atom("zz"))))));
      }
    }
    return out;
  }

  std::mt19937& rng_;
  std::vector<std::string> vars_;
  std::size_t label_ = 0;
};

/// Random relabeling and reordering of a program's blocks.
inline arl::Program shuffle_blocks(const arl::Program& p, std::mt19937& rng) {
  std::vector<std::size_t> perm(p.blocks.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) rename[p.blocks[i].label] = "q" + std::to_string(perm[i] * 7 + 3);
  auto fix = [&](std::string& l) {
    if (!l.empty()) l = rename.at(l);
  };
  arl::Program out = p;
  out.blocks.clear();
  std::vector<std::size_t> order = perm;
  for (std::size_t i : order) {
    arl::Block b = p.blocks[i];
    fix(b.label);
    fix(b.come_from.then_label);
    fix(b.come_from.else_label);
    fix(b.jump.then_label);
    fix(b.jump.else_label);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

/// Valid random inputs for the corpus ARL programs.
inline std::vector<Value> corpus_input(const std::string& name, std::mt19937& rng) {
  if (name == "unzip") {
    std::vector<Value> pairs(std::uniform_int_distribution<std::size_t>(0, 6)(rng));
    for (auto& v : pairs) v = Value::cons(random_value(rng, 2), random_value(rng, 2));
    return {Value::list(pairs)};
  }
  if (name == "rtm_interpreter") {
    static const auto machines = corpus_machines();
    const auto& m = machines[std::uniform_int_distribution<std::size_t>(0, machines.size() - 1)(rng)].second;
    return interpreter_inputs(m, random_tape(rng, alphabet(m), 8));
  }
  return {random_list(rng, 8)};
}

/// Corpus ARL programs by name, the bundled interpreter included.
inline std::vector<std::pair<std::string, arl::Program>> corpus_programs() {
  std::vector<std::pair<std::string, arl::Program>> out;
  for (const auto& f : files_with(corpus_dir() / "arl", ".arl"))
    out.emplace_back(f.stem().string(), arl::parse_program(slurp(f)));
  out.emplace_back("rtm_interpreter", interpreter_program());
  return out;
}

}  // namespace testing_support

#endif
