/**
 * @file grade.hpp
 * @brief Grade parameter for the metallic numeration family.
 *
 * A grade fixes the integer p >= 5 that selects one member of the family:
 * the positional system whose weights satisfy u_{n+2} = (p-2) u_{n+1} - u_n.
 * All digit bounds used elsewhere are derived from p and exposed here under
 * the names used throughout the library:
 *
 *   d = p - 3   largest canonical digit
 *   c = p - 4   the digit that may repeat inside a forbidden factor
 *   e = p - 5   the digit below c (meaningful only for p > 5)
 *
 * A digit string is canonical when every digit lies in [0, d] and no factor
 * d c^j d (j >= 0) occurs; such strings are in bijection with the natural
 * numbers.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace metallic {

/// Family selector.  Construction validates p >= 5.
struct Grade {
  int p;

  explicit Grade(int p_) : p(p_) {
    if (p_ < 5) {
      throw std::invalid_argument("grade requires p >= 5, got " +
                                  std::to_string(p_));
    }
  }

  /// Largest canonical digit, p - 3.
  int d() const { return p - 3; }
  /// Repeatable middle digit of the forbidden factor, p - 4.
  int c() const { return p - 4; }
  /// Digit below c, p - 5 (zero when p = 5).
  int e() const { return p - 5; }
  /// Carry modulus: a digit reaching p - 2 triggers a carry rewrite.
  int carry_bound() const { return p - 2; }

  friend bool operator==(const Grade& a, const Grade& b) { return a.p == b.p; }
  friend bool operator!=(const Grade& a, const Grade& b) { return a.p != b.p; }
};

}  // namespace metallic
