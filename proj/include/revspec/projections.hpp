#ifndef REVSPEC_PROJECTIONS_HPP
#define REVSPEC_PROJECTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"
#include "revspec/arl/inverter.hpp"
#include "revspec/equiv.hpp"
#include "revspec/pe/compress.hpp"
#include "revspec/pe/division.hpp"
#include "revspec/pe/specializer.hpp"
#include "revspec/rtm/machine.hpp"
#include "revspec/rtm_in_arl.hpp"

namespace revspec {

/// Division seeds from the given static and dynamic inputs, then
/// specialize and compress.
inline pe::SpecResult partial_evaluate(const arl::Program& p, const std::map<std::string, Value>& statics,
                                       const std::vector<std::string>& dynamic, const pe::SpecOptions& opts = {}) {
  pe::Division initial;
  for (const auto& [v, _] : statics) initial.set(v, pe::BindingTime::Static);
  for (const auto& v : dynamic) initial.set(v, pe::BindingTime::Dynamic);
  const pe::Division d = pe::compute_division(p, initial);
  pe::SpecResult r = pe::specialize(pe::annotate(p, d), statics, opts);
  r.residual = pe::compress(std::move(r.residual));
  return r;
}

/// Specializes `interpreter` (the bundled one or its inverse) to machine
/// `m`, with the tape dynamic. The residual is canonicalized.
inline pe::SpecResult specialize_interpreter(const arl::Program& interpreter, const rtm::Machine& m) {
  const EncodedMachine e = encode_machine(m);
  pe::SpecResult r =
      partial_evaluate(interpreter, {{"Start", e.start}, {"Final", e.final}, {"Rules", e.rules}}, {"S_right"});
  r.residual = equiv::canonicalize(r.residual);
  return r;
}

/// First Futamura projection: a tape-to-tape ARL program computing `m`.
inline pe::SpecResult compile_machine(const rtm::Machine& m) {
  return specialize_interpreter(interpreter_program(), m);
}

/// First inversion projection: a tape-to-tape ARL program computing the
/// inverse of `m`.
inline pe::SpecResult invert_compile_machine(const rtm::Machine& m) {
  static const arl::Program inverse = arl::invert_program(interpreter_program());
  return specialize_interpreter(inverse, m);
}

struct ExperimentReport {
  arl::Program left;   // forward interpreter residual
  arl::Program right;  // inverse interpreter residual
  equiv::Verdict verdict;
};

/// pe(interp, inv(m)) against pe(inv(interp), m).
inline ExperimentReport commute(const rtm::Machine& m) {
  ExperimentReport r;
  r.left = compile_machine(rtm::invert_machine(m)).residual;
  r.right = invert_compile_machine(m).residual;
  r.verdict = equiv::textually_equivalent(r.left, r.right);
  return r;
}

/// pe(interp, m) against pe(inv(interp), inv(m)).
inline ExperimentReport neutralize(const rtm::Machine& m) {
  ExperimentReport r;
  r.left = compile_machine(m).residual;
  r.right = invert_compile_machine(rtm::invert_machine(m)).residual;
  r.verdict = equiv::textually_equivalent(r.left, r.right);
  return r;
}

}  // namespace revspec

#endif
