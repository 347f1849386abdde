/**
 * @file numeration.cpp
 * @brief Weight sequences, encode/decode, normalization predicate.
 */
#include "metallic/numeration.hpp"

#include <stdexcept>

#include "metallic/arithmetic.hpp"

namespace metallic {

SequenceTable::SequenceTable(Grade g) : grade_(g) {
  m_ = {BigInt(0), BigInt(1)};          // m_{-1}, m_0
  b_ = {BigInt(1), BigInt(g.p - 3)};    // b_0, b_1
  M_ = {BigInt(0), BigInt(1)};          // M_{-1}, M_0
}

void SequenceTable::grow_m(int n) {
  // Keep all three tables the same length; each obeys the shared recurrence
  // u_{k+2} = (p-2) u_{k+1} - u_k, with M additionally adding 1.
  const BigInt q(grade_.p - 2);
  while (static_cast<int>(m_.size()) <= n + 1) {
    std::size_t k = m_.size();
    m_.push_back(q * m_[k - 1] - m_[k - 2]);
    b_.push_back(q * b_[k - 1] - b_[k - 2]);
    M_.push_back(q * M_[k - 1] - M_[k - 2] + 1);
  }
}

const BigInt& SequenceTable::m(int n) {
  if (n < -1) throw std::invalid_argument("seq_m defined for n >= -1");
  grow_m(n);
  return m_[static_cast<std::size_t>(n + 1)];
}

const BigInt& SequenceTable::b(int n) {
  if (n < 0) throw std::invalid_argument("seq_b defined for n >= 0");
  grow_m(n - 1);
  return b_[static_cast<std::size_t>(n)];
}

const BigInt& SequenceTable::M(int n) {
  if (n < -1) throw std::invalid_argument("seq_M defined for n >= -1");
  grow_m(n);
  return M_[static_cast<std::size_t>(n + 1)];
}

int SequenceTable::weight_count(const BigInt& value) {
  if (value < 0) throw std::invalid_argument("negative value");
  if (value == 0) return 0;
  int k = 0;
  while (m(k) <= value) ++k;
  return k;
}

BigInt seq_m(const Grade& g, int n) { return SequenceTable(g).m(n); }
BigInt seq_b(const Grade& g, int n) { return SequenceTable(g).b(n); }
BigInt seq_M(const Grade& g, int n) { return SequenceTable(g).M(n); }

BigInt decode(const MetallicCode& code) {
  SequenceTable seq(code.grade);
  BigInt total = 0;
  const int len = code.length();
  for (int i = 0; i < len; ++i) {
    int dv = code.digits[static_cast<std::size_t>(i)];
    if (dv != 0) total += dv * seq.m(len - 1 - i);
  }
  return total;
}

MetallicCode encode(const Grade& g, const BigInt& value) {
  if (value < 0) throw std::invalid_argument("encode requires a natural number");
  if (value == 0) return MetallicCode(g, {0});
  SequenceTable seq(g);
  int k = seq.weight_count(value) - 1;  // most significant place
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(k + 1));
  BigInt rest = value;
  for (int i = k; i >= 0; --i) {
    BigInt q = rest / seq.m(i);
    // The quotient is at most p-3: rest < m_{i+1} <= (p-2) m_i.
    digits.push_back(static_cast<int>(q));
    rest -= q * seq.m(i);
  }
  // Greedy digits can still contain a forbidden factor; normalize settles it.
  return normalize(MetallicCode(g, std::move(digits)));
}

MetallicCode normalize(const MetallicCode& code) {
  const Grade& g = code.grade;
  for (int dv : code.digits) {
    if (dv < 0 || dv > g.d()) {
      throw std::invalid_argument("normalize requires digits in [0, p-3]");
    }
  }
  Representation rep(g, code);
  detail::canonicalize(rep);
  return rep.to_code();
}

bool is_canonical(const MetallicCode& code) {
  const Grade& g = code.grade;
  const auto& ds = code.digits;
  if (ds.empty()) return false;
  if (ds.size() > 1 && ds.front() == 0) return false;
  for (int dv : ds) {
    if (dv < 0 || dv > g.d()) return false;
  }
  // Scan for the factor d c^j d with a two-state automaton: `open` marks a
  // previously seen d followed so far only by c's.
  bool open = false;
  for (int dv : ds) {
    if (dv == g.d()) {
      if (open) return false;
      open = true;
    } else if (dv != g.c()) {
      open = false;
    }
  }
  return true;
}

}  // namespace metallic
