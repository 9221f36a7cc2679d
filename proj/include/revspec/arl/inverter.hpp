#ifndef REVSPEC_ARL_INVERTER_HPP
#define REVSPEC_ARL_INVERTER_HPP

#include <algorithm>
#include <iterator>

#include "revspec/arl/ast.hpp"

namespace revspec::arl {

/// Xor-assignments and assertions are self-inverse; push and pop swap.
inline Statement invert_statement(const Statement& s) {
  Statement out = s;
  if (s.kind == StmtKind::Push) out.kind = StmtKind::Pop;
  else if (s.kind == StmtKind::Pop) out.kind = StmtKind::Push;
  return out;
}

inline Block invert_block(const Block& b) {
  Block out;
  out.label = b.label;

  switch (b.jump.kind) {
    case JumpKind::Exit: out.come_from = ComeFrom::entry(); break;
    case JumpKind::Goto: out.come_from = ComeFrom::from(b.jump.then_label); break;
    case JumpKind::IfGoto:
      out.come_from = ComeFrom::fi(b.jump.pred, b.jump.then_label, b.jump.else_label);
      break;
  }
  switch (b.come_from.kind) {
    case ComeFromKind::Entry: out.jump = Jump::exit(); break;
    case ComeFromKind::From: out.jump = Jump::go(b.come_from.then_label); break;
    case ComeFromKind::FiFrom:
      out.jump = Jump::branch(b.come_from.pred, b.come_from.then_label, b.come_from.else_label);
      break;
  }

  out.body.reserve(b.body.size());
  for (auto it = b.body.rbegin(); it != b.body.rend(); ++it) out.body.push_back(invert_statement(*it));
  return out;
}

/// Purely structural inversion: every block inverted in place, labels and
/// block order kept, input and output declarations swapped.
inline Program invert_program(const Program& p) {
  Program out;
  out.inputs = p.outputs;
  out.outputs = p.inputs;
  out.locals = p.locals;
  out.blocks.reserve(p.blocks.size());
  std::transform(p.blocks.begin(), p.blocks.end(), std::back_inserter(out.blocks), invert_block);
  return out;
}

}  // namespace revspec::arl

#endif
