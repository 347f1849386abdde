/**
 * @file oracle.hpp
 * @brief Independent reference model: explicit trees built by breadth-first
 *        production, plus the cross-check battery.
 *
 * The oracle deliberately avoids the digit algorithms it is meant to judge.
 * Trees are materialized from the colour production alone (a black node has
 * p-3 sons, a white node p-2, the first son black and the rest white),
 * numbered in breadth-first order.  Codes are then read off three mutually
 * independent ways: by the increment chain, by greedy weight subtraction
 * with backtracking enumeration, and by the encode() under test.  Classes
 * are assigned top-down by the father-class production and compared against
 * classify().  Neighbour maps, paths, strips and numbering shifts are
 * verified against the explicit arrays.
 *
 * verify_all() runs every check for one grade and reports one line per
 * check: "CHECK <name> p=<p> levels=<L> PASS|FAIL [witness]".
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metallic/grade.hpp"
#include "metallic/numeration.hpp"
#include "metallic/trees.hpp"

namespace metallic {

/// Explicitly materialized tree, nodes 1..size in breadth-first order.
/// Sons are materialized for every node whose level is < max_level, so
/// level max_level nodes have son_count 0.
struct TreeSnapshot {
  Grade grade;
  TreeKind kind;
  int max_level;
  // Arrays indexed by node number; index 0 is unused.
  std::vector<char> black;         // 1 = black-status node
  std::vector<std::int64_t> father;     // 0 for the root
  std::vector<std::int64_t> first_son;  // 0 when sons not materialized
  std::vector<std::int32_t> son_count;
  std::vector<std::int32_t> level;
  std::vector<std::int64_t> level_first;  // level_first[l] = first number of level l

  std::int64_t size() const { return static_cast<std::int64_t>(black.size()) - 1; }
  std::int64_t level_last(int l) const;
};

/// Build a tree by breadth-first production down to max_level.
/// Refuses to build more than 10^7 nodes.
TreeSnapshot build(const Grade& g, TreeKind kind, int max_level);

/// Codes of the numbers 0..count obtained solely by repeated increment;
/// the result has count+1 entries and result[k] is the code of k.
std::vector<MetallicCode> codes_by_chain(const Grade& g, std::int64_t count);

/// Code of one number by greedy most-significant weight subtraction with
/// explicit backtracking over digit choices (third independent source;
/// exponential-free thanks to a capacity prune, intended for n <= ~5000).
MetallicCode code_by_greedy_backtracking(const Grade& g, std::int64_t value);

/// Outcome of one named check.
struct CheckResult {
  std::string name;
  bool pass;
  std::string witness;  // empty when passing
};

/// Outcome of a verify_all run.
struct Report {
  Grade grade;
  int levels;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// One "CHECK ..." line per check, newline-terminated.
  std::string to_text() const;
};

/// Run the full battery for one grade with white levels (and black levels)
/// bounded by max_level.
Report verify_all(const Grade& g, int max_level);

}  // namespace metallic
