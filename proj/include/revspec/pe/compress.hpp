#ifndef REVSPEC_PE_COMPRESS_HPP
#define REVSPEC_PE_COMPRESS_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "revspec/arl/ast.hpp"

namespace revspec::pe {

namespace detail {

inline void rename_come_from(arl::ComeFrom& cf, const std::string& from, const std::string& to) {
  if (cf.then_label == from) cf.then_label = to;
  if (cf.else_label == from) cf.else_label = to;
}

inline std::vector<arl::Block> reachable_blocks(const arl::Program& p) {
  const auto entry = p.entry_index();
  if (!entry) return p.blocks;
  const auto index = p.label_index();
  std::vector<bool> seen(p.blocks.size(), false);
  std::vector<std::size_t> stack{*entry};
  seen[*entry] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& l : p.blocks[i].jump.labels()) {
      auto it = index.find(l);
      if (it != index.end() && !seen[it->second]) {
        seen[it->second] = true;
        stack.push_back(it->second);
      }
    }
  }
  std::vector<arl::Block> out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    if (seen[i]) out.push_back(p.blocks[i]);
  return out;
}

}  // namespace detail

/// Path compression: repeatedly merges `A: ... goto B` with `B: from A ...`
/// and drops blocks unreachable from the entry.
inline arl::Program compress(arl::Program p) {
  using namespace arl;
  for (bool changed = true; changed;) {
    changed = false;
    p.blocks = detail::reachable_blocks(p);
    for (std::size_t a = 0; a < p.blocks.size() && !changed; ++a) {
      Block& A = p.blocks[a];
      if (A.jump.kind != JumpKind::Goto || A.jump.then_label == A.label) continue;
      const auto index = p.label_index();
      auto it = index.find(A.jump.then_label);
      if (it == index.end()) continue;
      const std::size_t bi = it->second;
      Block B = p.blocks[bi];
      if (B.come_from.kind != ComeFromKind::From || B.come_from.then_label != A.label) continue;

      A.body.insert(A.body.end(), B.body.begin(), B.body.end());
      A.jump = B.jump;
      const std::string a_label = A.label;
      p.blocks.erase(p.blocks.begin() + static_cast<std::ptrdiff_t>(bi));
      for (auto& C : p.blocks)
        for (const auto& l : C.come_from.labels())
          if (l == B.label) {
            for (const auto& j : B.jump.labels())
              if (j == C.label) detail::rename_come_from(C.come_from, B.label, a_label);
            break;
          }
      changed = true;
    }
  }
  return p;
}

}  // namespace revspec::pe

#endif
