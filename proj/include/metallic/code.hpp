/**
 * @file code.hpp
 * @brief Digit strings of the metallic numeration and their text form.
 *
 * A MetallicCode stores digits most-significant first, together with the
 * grade they belong to.  Place i (the coefficient of the weight m_i) is
 * counted from the right, so place(0) is the last stored digit.  The number
 * zero is represented by the single digit 0; nonzero codes never carry
 * leading zeros.
 *
 * Text form: for p <= 13 digits are single characters '0'..'9','A'..'C';
 * for larger p digits are written in decimal and joined with '.'.  Both
 * forms are accepted by the parser regardless of grade (a '.' in the input
 * selects the dotted form), and round-trip exactly.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metallic/grade.hpp"

namespace metallic {

/// A digit string in the numeration of a fixed grade, most-significant first.
struct MetallicCode {
  Grade grade;
  std::vector<int> digits;  // most-significant first; {0} encodes zero

  MetallicCode(Grade g, std::vector<int> ds) : grade(g), digits(std::move(ds)) {}

  /// Number of stored digits (the zero code has length 1).
  int length() const { return static_cast<int>(digits.size()); }

  /// Digit at place i (coefficient of m_i), counted from the right.
  int place(int i) const { return digits[digits.size() - 1 - i]; }

  /// True when this is the zero code.
  bool is_zero() const { return digits.size() == 1 && digits[0] == 0; }

  friend bool operator==(const MetallicCode& a, const MetallicCode& b) {
    return a.grade == b.grade && a.digits == b.digits;
  }
  friend bool operator!=(const MetallicCode& a, const MetallicCode& b) {
    return !(a == b);
  }
};

/// Render a code in the grade's text form.
std::string to_text(const MetallicCode& code);

/// Render a bare digit vector (most-significant first) in the grade's form.
std::string digits_to_text(const Grade& g, const std::vector<int>& digits);

/// Parse a code from text.  Accepts both the contiguous and the dotted form;
/// rejects empty input, malformed characters, and digits >= p - 2.  Leading
/// zeros are trimmed ("0012" parses as "12").
MetallicCode parse_code(const Grade& g, const std::string& text);

}  // namespace metallic
