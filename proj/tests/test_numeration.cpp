/**
 * @file test_numeration.cpp
 * @brief Weight sequences, text form, encode/decode, canonicity.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "metallic/numeration.hpp"

using namespace metallic;

TEST_CASE("weight sequences, small frozen values") {
  Grade g5(5);
  // m: 0, 1, 3, 8, 21, 55, 144, 377, 987, 2584
  CHECK(seq_m(g5, -1) == 0);
  CHECK(seq_m(g5, 0) == 1);
  CHECK(seq_m(g5, 1) == 3);
  CHECK(seq_m(g5, 2) == 8);
  CHECK(seq_m(g5, 3) == 21);
  CHECK(seq_m(g5, 4) == 55);
  CHECK(seq_m(g5, 5) == 144);
  CHECK(seq_m(g5, 8) == 2584);
  // b: 1, 2, 5, 13, 34, 89
  CHECK(seq_b(g5, 0) == 1);
  CHECK(seq_b(g5, 1) == 2);
  CHECK(seq_b(g5, 2) == 5);
  CHECK(seq_b(g5, 3) == 13);
  CHECK(seq_b(g5, 4) == 34);
  CHECK(seq_b(g5, 5) == 89);
  // M: 0, 1, 4, 12, 33, 88, 232
  CHECK(seq_M(g5, -1) == 0);
  CHECK(seq_M(g5, 0) == 1);
  CHECK(seq_M(g5, 1) == 4);
  CHECK(seq_M(g5, 2) == 12);
  CHECK(seq_M(g5, 3) == 33);
  CHECK(seq_M(g5, 4) == 88);
  CHECK(seq_M(g5, 5) == 232);

  Grade g7(7);
  CHECK(seq_m(g7, 1) == 5);
  CHECK(seq_m(g7, 2) == 24);
  CHECK(seq_m(g7, 3) == 115);
  CHECK(seq_b(g7, 1) == 4);
  CHECK(seq_M(g7, 2) == 30);
  CHECK(seq_M(g7, 3) == 145);
}

TEST_CASE("sequence identities hold exactly") {
  for (int p : {5, 6, 7, 9, 11}) {
    Grade g(p);
    SequenceTable seq(g);
    BigInt running = 0;
    for (int n = 0; n <= 60; ++n) {
      running += seq.m(n);
      CHECK(seq.M(n) == running);                          // M_n = sum m_i
      CHECK(seq.b(n + 1) == seq.m(n + 1) - seq.m(n));      // b step
      CHECK(seq.M(n + 1) == seq.m(n + 1) + seq.M(n));      // M step
      if (n >= 1) {
        CHECK(seq.m(n + 1) == BigInt(p - 2) * seq.m(n) - seq.m(n - 1));
      }
      // m_{l-1} + M_{l-2} = M_{l-1}
      CHECK(seq.m(n) + seq.M(n - 1) == seq.M(n));
    }
  }
}

TEST_CASE("text form round-trips in both spellings") {
  Grade g5(5);
  CHECK(to_text(parse_code(g5, "102")) == "102");
  CHECK(to_text(parse_code(g5, "0")) == "0");
  CHECK(to_text(parse_code(g5, "0012")) == "12");  // leading zeros trimmed
  CHECK_THROWS(parse_code(g5, ""));
  CHECK_THROWS(parse_code(g5, "13"));   // digit 3 out of range for p=5
  CHECK_THROWS(parse_code(g5, "1x2"));

  Grade g13(13);
  CHECK(parse_code(g13, "A3").digits == std::vector<int>{10, 3});
  CHECK(to_text(parse_code(g13, "a3")) == "A3");

  Grade g17(17);  // digits written in decimal, joined by '.'
  MetallicCode dotted = parse_code(g17, "12.0.3");
  CHECK(dotted.digits == std::vector<int>{12, 0, 3});
  CHECK(to_text(dotted) == "12.0.3");
  CHECK_THROWS(parse_code(g17, "12..3"));
  CHECK_THROWS(parse_code(g17, "15.0"));  // 15 = p-2 out of range
  // The dotted spelling is accepted for small grades too.
  CHECK(to_text(parse_code(g5, "1.0.2")) == "102");
}

TEST_CASE("encode matches the frozen table for p=5") {
  Grade g(5);
  const char* table[] = {"0",   "1",   "2",   "10",  "11",  "12",  "20",
                         "21",  "100", "101", "102", "110", "111", "112",
                         "120", "121", "200", "201", "202", "210", "211",
                         "1000"};
  for (int n = 0; n < 22; ++n) {
    CHECK(to_text(encode(g, n)) == table[n]);
    CHECK(decode(parse_code(g, table[n])) == n);
  }
}

TEST_CASE("encode/decode round-trip and canonicity") {
  for (int p : {5, 7, 9}) {
    Grade g(p);
    for (int n = 0; n <= 3000; ++n) {
      MetallicCode code = encode(g, n);
      CHECK(is_canonical(code));
      CHECK(decode(code) == n);
    }
  }
  // A large value for good measure.
  Grade g5(5);
  BigInt big = seq_m(g5, 40) * 7 + seq_m(g5, 17) + 12345;
  CHECK(decode(encode(g5, big)) == big);
}

TEST_CASE("greedy digits are canonical before normalization") {
  // The most-significant-first greedy expansion never needs rewriting; the
  // normalize() inside encode() must be the identity.
  for (int p : {5, 7}) {
    Grade g(p);
    SequenceTable seq(g);
    for (int n = 1; n <= 2000; ++n) {
      BigInt rest = n;
      int k = seq.weight_count(rest) - 1;
      std::vector<int> digits;
      for (int i = k; i >= 0; --i) {
        BigInt q = rest / seq.m(i);
        digits.push_back(static_cast<int>(q));
        rest -= q * seq.m(i);
      }
      CHECK(is_canonical(MetallicCode(g, digits)));
    }
  }
}

TEST_CASE("canonical strings of bounded length enumerate [0, m_k)") {
  // Every digit string over {0..2} of length <= 6 without leading zeros and
  // without the factor 2 1^j 2 decodes to a distinct value below m_6 = 377,
  // and encode() inverts it.
  Grade g(5);
  const int maxlen = 6;
  std::set<BigInt> seen;
  std::vector<std::vector<int>> pool = {{}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : pool) {
      for (int dv = 0; dv <= 2; ++dv) {
        auto s = prefix;
        s.push_back(dv);
        next.push_back(s);
        if (s.front() == 0) continue;
        MetallicCode code(g, s);
        if (!is_canonical(code)) continue;
        BigInt v = decode(code);
        CHECK(seen.insert(v).second);  // distinct
        CHECK(encode(g, v) == code);   // inverse
      }
    }
    pool = std::move(next);
  }
  seen.insert(0);  // the zero code itself
  CHECK(seen.size() == 377);
  CHECK(*seen.rbegin() == 376);
}

TEST_CASE("normalize rewrites out-of-pattern strings") {
  Grade g(5);
  auto norm = [&](const std::string& s) {
    std::vector<int> digits;
    for (char ch : s) digits.push_back(ch - '0');
    return to_text(normalize(MetallicCode(g, digits)));
  };
  CHECK(norm("22") == "100");     // d d -> carry to m_2
  CHECK(norm("212") == "1000");   // d c d = m_3
  CHECK(norm("1022") == "1100");
  CHECK(norm("00") == "0");
  CHECK(norm("012") == "12");
  // Digits beyond p-3 are rejected outright.
  CHECK_THROWS(normalize(MetallicCode(g, {3})));
}

TEST_CASE("is_canonical recognises the forbidden factor") {
  Grade g5(5);
  auto canon = [&](const std::string& s) {
    std::vector<int> digits;
    for (char ch : s) digits.push_back(ch - '0');
    return is_canonical(MetallicCode(g5, digits));
  };
  CHECK(canon("0"));
  CHECK(canon("102"));
  CHECK(canon("120"));
  CHECK_FALSE(canon("22"));
  CHECK_FALSE(canon("212"));
  CHECK_FALSE(canon("2112"));
  CHECK_FALSE(canon("02"));    // leading zero
  CHECK(canon("2102"));        // the 0 breaks the factor
  Grade g7(7);
  CHECK(is_canonical(MetallicCode(g7, {4, 3, 3, 4})) == false);  // d c c d
  CHECK(is_canonical(MetallicCode(g7, {4, 3, 2, 4})) == true);
}

TEST_CASE("weight_count finds the digit count") {
  Grade g(5);
  SequenceTable seq(g);
  CHECK(seq.weight_count(0) == 0);
  CHECK(seq.weight_count(1) == 1);
  CHECK(seq.weight_count(2) == 1);
  CHECK(seq.weight_count(3) == 2);  // m_1 = 3
  CHECK(seq.weight_count(7) == 2);
  CHECK(seq.weight_count(8) == 3);
}
