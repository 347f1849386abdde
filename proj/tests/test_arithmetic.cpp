/**
 * @file test_arithmetic.cpp
 * @brief Digitwise arithmetic against the big-integer oracle.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "metallic/arithmetic.hpp"
#include "metallic/numeration.hpp"

using namespace metallic;

namespace {
MetallicCode c(const Grade& g, const std::string& s) { return parse_code(g, s); }
}

TEST_CASE("carry table marks exactly the digits past the bound") {
  Grade g(5);
  CarryTable t(g);
  CHECK(t.fires[2] == 0);
  CHECK(t.fires[3] == 1);   // p-2 = 3
  CHECK(t.reduced[3] == 0);
  CHECK(t.reduced[5] == 2);
  CHECK(t.fires.size() == 7u);
}

TEST_CASE("representation round-trips and trims") {
  Grade g(5);
  Representation r(g, c(g, "102"));
  CHECK(r.digits == std::vector<long long>{2, 0, 1});
  CHECK(to_text(r.to_code()) == "102");
  r.digits.push_back(0);
  CHECK(to_text(r.to_code()) == "102");
}

TEST_CASE("add, frozen examples") {
  Grade g(5);
  CHECK(to_text(add(c(g, "11"), c(g, "11"))) == "100");  // 4+4
  CHECK(to_text(add(c(g, "2"), c(g, "2"))) == "11");     // 2+2
  CHECK(to_text(add(c(g, "102"), c(g, "21"))) == "201"); // 10+7
  CHECK(to_text(add(c(g, "0"), c(g, "0"))) == "0");
  CHECK(to_text(add(c(g, "120"), c(g, "21"))) == "1000");  // 14+7 = m_3
}

TEST_CASE("add and compare agree with integers, exhaustively") {
  for (int p : {5, 7}) {
    Grade g(p);
    const int N = 260;
    std::vector<MetallicCode> codes;
    codes.reserve(N + 1);
    for (int n = 0; n <= N; ++n) codes.push_back(encode(g, n));
    for (int a = 0; a <= N; ++a) {
      for (int b = 0; b <= N; ++b) {
        MetallicCode s = add(codes[a], codes[b]);
        REQUIRE(is_canonical(s));
        REQUIRE(decode(s) == a + b);
        Ordering ord = compare(codes[a], codes[b]);
        Ordering expect = a < b   ? Ordering::less
                          : a > b ? Ordering::greater
                                  : Ordering::equal;
        REQUIRE(ord == expect);
      }
    }
  }
}

TEST_CASE("compare rejects non-canonical operands") {
  Grade g(5);
  MetallicCode bad(g, {2, 2});  // contains the forbidden factor
  CHECK_THROWS_AS(compare(bad, c(g, "1")), std::invalid_argument);
  CHECK_THROWS_AS(compare(c(g, "1"), bad), std::invalid_argument);
}

TEST_CASE("increment, frozen examples") {
  Grade g5(5);
  CHECK(to_text(increment(c(g5, "0"))) == "1");
  CHECK(to_text(increment(c(g5, "1"))) == "2");
  CHECK(to_text(increment(c(g5, "2"))) == "10");
  CHECK(to_text(increment(c(g5, "11"))) == "12");
  CHECK(to_text(increment(c(g5, "21"))) == "100");
  CHECK(to_text(increment(c(g5, "101"))) == "102");
  CHECK(to_text(increment(c(g5, "211"))) == "1000");
  Grade g7(7);
  CHECK(to_text(increment(c(g7, "23"))) == "24");
  CHECK(to_text(increment(c(g7, "34"))) == "40");
  CHECK(to_text(increment(c(g7, "4"))) == "10");
}

TEST_CASE("increment and decrement walk the whole chain") {
  for (int p : {5, 7, 9}) {
    Grade g(p);
    MetallicCode cur = encode(g, 0);
    for (int n = 0; n < 3000; ++n) {
      MetallicCode next = increment(cur);
      REQUIRE(is_canonical(next));
      REQUIRE(next == encode(g, n + 1));
      REQUIRE(decrement(next) == cur);
      cur = next;
    }
  }
}

TEST_CASE("decrement, frozen examples and the zero error") {
  Grade g(5);
  CHECK(to_text(decrement(c(g, "100"))) == "21");
  CHECK(to_text(decrement(c(g, "10"))) == "2");
  CHECK(to_text(decrement(c(g, "1"))) == "0");
  CHECK(to_text(decrement(c(g, "1000"))) == "211");
  // 1^{j+1} - 1 = 1^j 0  (the M-chain steps down to a preferred son)
  CHECK(to_text(decrement(c(g, "1111"))) == "1110");
  CHECK_THROWS_AS(decrement(c(g, "0")), std::domain_error);
}

TEST_CASE("complement against the integer oracle, exhaustively") {
  for (int p : {5, 7}) {
    Grade g(p);
    SequenceTable seq(g);
    for (int k = 0; k <= 7; ++k) {
      BigInt mk = seq.m(k);
      for (BigInt v = 0; v <= mk; ++v) {
        MetallicCode b = encode(g, v);
        MetallicCode r = complement(b, k);
        REQUIRE(is_canonical(r));
        REQUIRE(decode(r) == mk - v);
      }
      // Values above m_k are rejected.
      CHECK_THROWS_AS(complement(encode(g, mk + 1), k), std::domain_error);
    }
  }
}

TEST_CASE("complement, frozen example") {
  Grade g(5);
  CHECK(to_text(complement(c(g, "100"), 3)) == "112");  // 21 - 8 = 13
  CHECK(to_text(complement(c(g, "1000"), 3)) == "0");
  CHECK(to_text(complement(c(g, "0"), 2)) == "100");
}

TEST_CASE("subtract against the integer oracle") {
  Grade g(5);
  const int N = 220;
  std::vector<MetallicCode> codes;
  for (int n = 0; n <= N; ++n) codes.push_back(encode(g, n));
  for (int a = 0; a <= N; ++a) {
    for (int b = 0; b <= a; ++b) {
      MetallicCode r = subtract(codes[a], codes[b]);
      REQUIRE(is_canonical(r));
      REQUIRE(decode(r) == a - b);
    }
  }
  CHECK_THROWS_AS(subtract(codes[3], codes[5]), std::domain_error);

  // Larger, sampled pairs across grades.
  std::mt19937 rng(20260822);
  for (int p : {5, 7, 9}) {
    Grade gp(p);
    for (int trial = 0; trial < 400; ++trial) {
      long long x = rng() % 5000;
      long long y = rng() % 5000;
      if (x < y) std::swap(x, y);
      MetallicCode r = subtract(encode(gp, x), encode(gp, y));
      REQUIRE(is_canonical(r));
      REQUIRE(decode(r) == x - y);
    }
  }
}

TEST_CASE("subtract, frozen example") {
  Grade g(5);
  CHECK(to_text(subtract(c(g, "100"), c(g, "21"))) == "1");
  CHECK(to_text(subtract(c(g, "100"), c(g, "11"))) == "11");
  CHECK(to_text(subtract(c(g, "1000"), c(g, "112"))) == "100");  // 21-13
}
