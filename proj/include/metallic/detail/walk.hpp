/**
 * @file walk.hpp
 * @brief Shared top-down walkers over a code's digits (internal).
 *
 * Both walkers consume the digits of a canonical code once and produce the
 * ancestor chain of the node in their tree: for every level 1..L the
 * signature, class and black status of the ancestor, in root-to-node order.
 * They are the engines behind classify(), path_top_down() and path_black().
 *
 * Entries do not carry codes; instead each entry records how its node
 * relates to the digit prefix it was derived from (offset 0, 1 or 2 over
 * the prefix value), so callers that want codes can resolve them with at
 * most two increments per level.
 */
#pragma once

#include <vector>

#include "metallic/code.hpp"
#include "metallic/trees.hpp"

namespace metallic::detail {

struct WalkEntry {
  int signature;   // low digit of the ancestor's code
  NodeClass cls;
  int prefix_len;  // ancestor = value(first prefix_len digits) + offset
  int offset;      // 0..2
};

struct WalkResult {
  std::vector<WalkEntry> entries;  // levels 1..L in order
  NodeClass final_class;           // class of the code itself
  long long digit_visits = 0;
};

/// White-tree walk (two-candidate automaton, linear).
WalkResult white_walk(const MetallicCode& code);

/// Black-tree walk (ancestor-offset chain, linear).
WalkResult black_walk(const MetallicCode& code);

}  // namespace metallic::detail
