/**
 * @file code.cpp
 * @brief Text form of metallic codes.
 */
#include "metallic/code.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace metallic {

namespace {

// Contiguous digit characters cover digits 0..12 ('0'..'9','A'..'C'),
// enough for every grade p <= 13 (largest digit p-3 <= 10).
char digit_char(int v) {
  if (v < 10) return static_cast<char>('0' + v);
  return static_cast<char>('A' + (v - 10));
}

int char_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'A' && ch <= 'C') return 10 + (ch - 'A');
  if (ch >= 'a' && ch <= 'c') return 10 + (ch - 'a');
  return -1;
}

}  // namespace

std::string digits_to_text(const Grade& g, const std::vector<int>& digits) {
  std::ostringstream out;
  if (g.p <= 13) {
    for (int v : digits) out << digit_char(v);
  } else {
    bool first = true;
    for (int v : digits) {
      if (!first) out << '.';
      out << v;
      first = false;
    }
  }
  return out.str();
}

std::string to_text(const MetallicCode& code) {
  return digits_to_text(code.grade, code.digits);
}

MetallicCode parse_code(const Grade& g, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty code");
  std::vector<int> digits;
  if (text.find('.') != std::string::npos) {
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '.')) {
      if (part.empty()) throw std::invalid_argument("empty digit in code '" + text + "'");
      for (char ch : part) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw std::invalid_argument("bad character in code '" + text + "'");
        }
      }
      digits.push_back(std::stoi(part));
    }
    if (text.back() == '.') throw std::invalid_argument("trailing separator in code '" + text + "'");
  } else {
    digits.reserve(text.size());
    for (char ch : text) {
      int v = char_digit(ch);
      if (v < 0) throw std::invalid_argument("bad character in code '" + text + "'");
      digits.push_back(v);
    }
  }
  for (int v : digits) {
    if (v >= g.carry_bound()) {
      throw std::invalid_argument("digit " + std::to_string(v) +
                                  " out of range for p=" + std::to_string(g.p));
    }
  }
  // Trim leading zeros, keeping a single 0 for the zero code.
  std::size_t lead = 0;
  while (lead + 1 < digits.size() && digits[lead] == 0) ++lead;
  digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
  return MetallicCode(g, std::move(digits));
}

}  // namespace metallic
