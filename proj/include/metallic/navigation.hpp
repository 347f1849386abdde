/**
 * @file navigation.hpp
 * @brief Fathers, neighbours and root paths, all in digit arithmetic.
 *
 * The tilings served are the quadrangular one with p tiles around a vertex
 * ({p,4}) and the triangular-vertex one with p+2 sides per tile ({p+2,3}).
 * In both, the plane minus the central tile splits into p (resp. p+2)
 * sectors, each spanned by a white tree; each sector splits further into
 * nested strips, each spanned by a black tree.  Sides of a tile are
 * numbered 1..S clockwise starting at the side shared with the father.
 *
 * Neighbour entries either name a tile in the same sector by code, or mark
 * a crossing: to the central tile, to an adjacent sector, or to an adjacent
 * strip.  For crossings the partner's code in its own sector/strip
 * numbering is still reported.
 *
 * The four path algorithms return the same chain of ancestors and differ
 * only in how much work they spend per digit; each trace carries the count
 * of digit visits its run consumed so the linear/quadratic contrast is
 * observable.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metallic/arithmetic.hpp"
#include "metallic/code.hpp"
#include "metallic/grade.hpp"
#include "metallic/numeration.hpp"
#include "metallic/trees.hpp"

namespace metallic {

/// Which tiling the neighbour map refers to.
enum class Tiling { P4, P23 };  // {p,4} and {p+2,3}

std::string to_string(Tiling t);
Tiling tiling_from_string(const std::string& s);

/// Father of a node, or nothing for the root.  White tree: drop the low
/// digit, then adjust by +1 according to the low digit (0: nothing;
/// 2..p-3: +1; 1: +1 exactly when the scan over the run of 1s above stops
/// on a digit >= 2).  Black tree: drop the low digit; +1 unless the node
/// is on the rightmost branch's son chain (low digit 0 under a code 10^*).
std::optional<MetallicCode> father(TreeKind kind, const MetallicCode& code);

/// A tile adjacent to the queried tile, as seen across one of its sides.
struct NeighborEntry {
  enum Kind {
    in_sector,     ///< same sector: `code` names the tile
    father_tile,   ///< same sector, the father (side 1)
    central,       ///< the central tile
    cross_sector,  ///< sector sigma + delta, tile `code` in that sector
    cross_strip,   ///< strip sigma + delta of the same sector, tile `code`
    strip_father   ///< enclosing strip, tile `code` there (black side 1)
  };
  int side;
  Kind kind;
  /// Absent for `central` and for the sector crossing seen from a strip's
  /// leading tile (the black root cannot name that partner locally).
  std::optional<MetallicCode> code;
  int delta = 0;  // sector/strip offset for crossings
};

/// All S neighbours of a white-tree tile, sides 1..S in order.
std::vector<NeighborEntry> neighbors_white(Tiling tiling,
                                           const MetallicCode& code);

/// All S neighbours of a black-tree tile, sides 1..S in order.
std::vector<NeighborEntry> neighbors_black(Tiling tiling,
                                           const MetallicCode& code);

std::string to_string(const NeighborEntry& e);

/// One ancestor on a root path, reported bottom-up ancestor data:
/// level, signature (low digit of the ancestor's code), black status, and
/// optionally the resolved code / number.
struct PathStep {
  int level;
  int signature;
  bool black;
  std::optional<MetallicCode> code;
  std::optional<BigInt> number;
};

/// A root path: the ancestors of the queried node from level 1 down to the
/// node itself, plus the digit-visit count the algorithm spent.
struct PathTrace {
  TreeKind kind;
  std::vector<PathStep> steps;
  long long digit_visits = 0;
};

/// Options for the path algorithms.
struct PathOptions {
  /// Also resolve each step's code (and number when cheap).  Costs extra
  /// digit work per level and is excluded from the visit count contracts.
  bool resolve_codes = false;
};

/// Repeated father(): simple, worst-case quadratic in the code length
/// (witnessed by the all-ones codes).  Steps always carry codes.
PathTrace path_bottom_up(TreeKind kind, const MetallicCode& code);

/// White tree, single most-significant-first scan with a two-candidate
/// automaton; linear in the code length.
PathTrace path_top_down(const MetallicCode& code, const PathOptions& opts = {});

/// Black tree, single scan of the digits maintaining the offset of the
/// true ancestor over each prefix value (0, 1 or 2); linear.
PathTrace path_black(const MetallicCode& code, const PathOptions& opts = {});

/// White tree via the strip decomposition: peel to the enclosing strip,
/// walk the black-local path, map back.  Steps carry codes and numbers.
PathTrace path_via_strips(const MetallicCode& code);

}  // namespace metallic
