/**
 * @file numeration.hpp
 * @brief Weight sequences, encoding and decoding for the metallic numeration.
 *
 * The weights of grade p are
 *
 *   m_{-1} = 0,  m_0 = 1,  m_{n+2} = (p-2) m_{n+1} - m_n
 *
 * together with the derived sequences
 *
 *   b_0 = 1,  b_1 = p-3,  b_{n+2} = (p-2) b_{n+1} - b_n
 *   M_{-1} = 0,  M_0 = 1,  M_{n+2} = (p-2) M_{n+1} - M_n + 1
 *
 * satisfying b_{n+1} = m_{n+1} - m_n and M_n = sum_{i<=n} m_i.  Values grow
 * exponentially, so everything is computed over arbitrary-precision integers.
 *
 * encode() produces the canonical digit string of a natural number by greedy
 * most-significant-first division; decode() evaluates a digit string; both
 * are exact inverses on canonical codes.  normalize() rewrites any digit
 * string with digits in [0, p-3] into canonical form without changing its
 * value, and is_canonical() recognises canonical strings.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "metallic/code.hpp"
#include "metallic/grade.hpp"

namespace metallic {

using BigInt = boost::multiprecision::cpp_int;

/// Weight m_n (n >= -1): 0, 1, p-2, ...
BigInt seq_m(const Grade& g, int n);

/// Level width b_n (n >= 0): 1, p-3, ...; satisfies b_{n+1} = m_{n+1} - m_n.
BigInt seq_b(const Grade& g, int n);

/// Cumulative weight M_n (n >= -1): partial sums of m.
BigInt seq_M(const Grade& g, int n);

/// Incrementally extendable table of the three sequences for one grade.
/// Grows on demand; intended as a per-call scratch object.
class SequenceTable {
 public:
  explicit SequenceTable(Grade g);
  const BigInt& m(int n);  // n >= -1
  const BigInt& b(int n);  // n >= 0
  const BigInt& M(int n);  // n >= -1

  /// Smallest k with value < m_k; equivalently 1 + (position of the
  /// most-significant digit of the canonical code).  Returns 0 for value 0.
  int weight_count(const BigInt& value);

 private:
  Grade grade_;
  std::vector<BigInt> m_;  // m_[i] = m_{i-1}
  std::vector<BigInt> b_;  // b_[i] = b_i
  std::vector<BigInt> M_;  // M_[i] = M_{i-1}
  void grow_m(int n);
};

/// Canonical code of a natural number (greedy most-significant-first).
MetallicCode encode(const Grade& g, const BigInt& value);

/// Value of a digit string (does not require canonical input).
BigInt decode(const MetallicCode& code);

/// Rewrite a digit string with digits in [0, p-3] into the canonical code of
/// the same value.  Inputs containing digits outside that range are rejected.
MetallicCode normalize(const MetallicCode& code);

/// True iff the code is canonical: digits in [0, p-3], no leading zero
/// (except the zero code), and no factor d c^j d.
bool is_canonical(const MetallicCode& code);

}  // namespace metallic
