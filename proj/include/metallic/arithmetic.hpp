/**
 * @file arithmetic.hpp
 * @brief Digitwise arithmetic on metallic codes.
 *
 * All operations work directly on digit strings and return canonical codes;
 * none of them converts its operands to integers (the big-integer route is
 * used only by the test oracles).  The central device is a canonicalization
 * fixpoint over two rewrite rules applied to a working representation whose
 * digits may temporarily exceed the canonical bound:
 *
 *   carry    a_i >= p-2       ->  a_i -= p-2, a_{i+1} += 1, a_{i-1} += 1
 *                                 (at place 0 only the upper neighbour)
 *   pattern  d c^j d at [h..] ->  zeros there, +1 at place h+j+2,
 *                                 +1 at place h-1 when h >= 1
 *
 * Every rewrite strictly decreases the total digit mass, which bounds the
 * number of rewrites by the initial mass and guarantees termination; the
 * implementation enforces that bound and fails loudly if it is ever
 * exceeded.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "metallic/code.hpp"
#include "metallic/grade.hpp"
#include "metallic/numeration.hpp"

namespace metallic {

/// Three-way comparison outcome.
enum class Ordering { less, equal, greater };

/// Precomputed single-digit carry outcomes for one grade: for a working
/// digit value v in [0, 2(p-2)], whether the carry rule fires and the
/// reduced digit it leaves behind.  A convenience for the digitwise passes;
/// values above the table range fall back to the generic loop.
struct CarryTable {
  Grade grade;
  std::vector<int> reduced;   // v - (p-2) where fires[v], else v
  std::vector<char> fires;    // 1 iff v >= p-2

  explicit CarryTable(const Grade& g);
};

/// A working digit string (least-significant first) whose digits may exceed
/// the canonical bound during intermediate computation.
struct Representation {
  Grade grade;
  std::vector<long long> digits;  // least-significant first

  explicit Representation(const Grade& g) : grade(g) {}
  Representation(const Grade& g, const MetallicCode& code);

  /// Convert back to a code (digits must be canonical-range by then);
  /// trims leading zeros.
  MetallicCode to_code() const;
};

namespace detail {
/// Run the canonicalization fixpoint in place.  Throws std::logic_error if
/// the digit-mass bound on the number of rewrites is exceeded.
void canonicalize(Representation& rep);
}  // namespace detail

/// Digitwise sum, canonicalized.
MetallicCode add(const MetallicCode& a, const MetallicCode& b);

/// Compare two canonical codes (throws std::invalid_argument when either
/// operand is not canonical): longer code is larger, equal lengths compare
/// lexicographically from the most-significant digit.
Ordering compare(const MetallicCode& a, const MetallicCode& b);

/// Successor of a canonical code, computed by the constant-amortized
/// low-digit case split.
MetallicCode increment(const MetallicCode& a);

/// Predecessor of a canonical code; throws std::domain_error on zero.
MetallicCode decrement(const MetallicCode& a);

/// m_k - value(b), for canonical b with value(b) <= m_k, computed by digit
/// comparison against the code d c^{k-2} d with place-lifting rewrites.
MetallicCode complement(const MetallicCode& b, int k);

/// a - b for canonical codes with a >= b; throws std::domain_error when
/// a < b.  Reduces to a complement at the most significant differing place.
MetallicCode subtract(const MetallicCode& a, const MetallicCode& b);

}  // namespace metallic
