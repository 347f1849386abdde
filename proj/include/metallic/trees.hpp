/**
 * @file trees.hpp
 * @brief The two spanning trees of a sector and their node taxonomy.
 *
 * Nodes of either tree are numbered from 1 (the sector root) in
 * breadth-first order and are addressed by the canonical code of their
 * number.  The white tree is spanned by nodes whose sons number p-2 when
 * white and p-3 when black; level n holds the numbers (M_{n-1}, M_n].  The
 * black tree is the variant rooted in a black node; its level n holds
 * (m_{n-1}, m_n].
 *
 * Each node carries a class:
 *
 *   b0 / b1 / b2   black nodes (b0 only in the black tree, b2 only in the
 *                  white tree; b1 marks the leftmost branch)
 *   w-alpha        white nodes, where alpha is the node's signature (the
 *                  low digit of its code); w0 and w1 play special roles
 *                  (w0 marks the rightmost branch / preferred sons).
 *
 * The class of a father determines the ordered class-and-signature word of
 * its sons, which is what sons_signature_word() returns.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metallic/arithmetic.hpp"
#include "metallic/code.hpp"
#include "metallic/grade.hpp"
#include "metallic/numeration.hpp"

namespace metallic {

/// Which spanning tree of the sector is meant.
enum class TreeKind { white, black };

std::string to_string(TreeKind kind);
TreeKind tree_kind_from_string(const std::string& s);

/// Node classification.  White classes are identified by their signature
/// alpha; the generic white class ("w-alpha" with alpha >= 2) and the
/// special classes w0/w1 are distinguished by the alpha value alone.
struct NodeClass {
  enum Kind { B0, B1, B2, W } kind;
  int alpha = -1;    // signature; meaningful for W (0, 1, or >= 2)
  bool root = false; // set for the sector root of either tree

  static NodeClass black0() { return {B0, -1, false}; }
  static NodeClass black1() { return {B1, -1, false}; }
  static NodeClass black2() { return {B2, -1, false}; }
  static NodeClass white(int alpha) { return {W, alpha, false}; }

  bool is_black() const { return kind != W; }
  bool is_white() const { return kind == W; }
  /// True for w0/w1 (the classes that own both a 0-son and a 1-son).
  bool is_white_special() const { return kind == W && alpha <= 1; }

  friend bool operator==(const NodeClass& a, const NodeClass& b) {
    return a.kind == b.kind && a.alpha == b.alpha && a.root == b.root;
  }
  friend bool operator!=(const NodeClass& a, const NodeClass& b) {
    return !(a == b);
  }
};

/// Render a class token: "b0", "b1", "b2", or "w<alpha>".
std::string to_string(const NodeClass& cls);

/// One son in a signature word: its class plus the signature (low digit)
/// its code will carry.
struct SonEntry {
  NodeClass cls;
  int signature;
};

/// A node in a given tree, identified by number and code.
struct NodeRef {
  TreeKind kind;
  BigInt number;
  MetallicCode code;
};

/// Tree level of a code: 0 for the root, else the unique n with
/// M_{n-1} < value <= M_n (white) or m_{n-1} < value <= m_n (black).
/// Computed from the digit string alone.
int level_of(TreeKind kind, const MetallicCode& code);

/// Class of the node with this code, by a single most-significant-first
/// scan of the digits (no tree materialization).
NodeClass classify(TreeKind kind, const MetallicCode& code);

/// Ordered list of son classes and signatures for a father of class cls.
std::vector<SonEntry> sons_signature_word(const Grade& g, TreeKind kind,
                                          const NodeClass& cls);

/// Render a signature word as space-separated class tokens.
std::string to_string(const std::vector<SonEntry>& word);

/// The son with code [nu]*0 in the white tree: its 1-based position among
/// the sons (last for black and generic white fathers, next-to-last for
/// w0/w1 fathers and the root) and its code.
struct PreferredSon {
  int position;
  MetallicCode code;
};
PreferredSon preferred_son(const MetallicCode& code);

/// Where the code [nu]*0 sits relative to the black tree: for the node
/// m_n (rightmost branch) it is the rightmost node of the next level and a
/// son of nu itself; for every other nu it is the leftmost son of nu + 1.
struct Successor {
  bool rightmost;  // true when nu = m_n
  MetallicCode code;
};
Successor successor(const MetallicCode& code);

/// White-tree number of the node numbered nu_b in the black tree: identical
/// on levels 0 and 1, shifted by M_{n-2} on black level n >= 2.
BigInt black_to_white_number(const Grade& g, const BigInt& nu_b);

/// The decomposition vectors of level n:
///   white (n >= 1): codes "a 0 1^{n-1}" (a = 2..p-3), "1 0 1^n", "1^{n+2}",
///                   with values M_{n+1} - k m_n for k = p-3 down to 0;
///   black (n >= 1): codes "a c^{n-1} d" (a = 1..p-4), "1 0^{n+1}",
///                   with values m_{n+1} - j m_n for j = p-4 down to 0.
std::vector<MetallicCode> decomposition_vectors(const Grade& g, TreeKind kind,
                                                int n);

/// Append h zeros to a canonical code; the result is always canonical
/// (appending zeros can create no forbidden factor).
MetallicCode zero_branch(const MetallicCode& code, int h);

}  // namespace metallic
