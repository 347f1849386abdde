/**
 * @file test_oracle.cpp
 * @brief Reference tree production, independent code sources, full battery.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "metallic/oracle.hpp"

using namespace metallic;

TEST_CASE("breadth-first production, white tree p=5") {
  Grade g(5);
  TreeSnapshot t = build(g, TreeKind::white, 3);
  CHECK(t.size() == 33);  // M_3
  REQUIRE(t.level_first.size() == 4);
  CHECK(t.level_first[0] == 1);
  CHECK(t.level_first[1] == 2);
  CHECK(t.level_first[2] == 5);
  CHECK(t.level_first[3] == 13);
  CHECK(t.level_last(2) == 12);
  CHECK(t.level_last(3) == 33);

  // Black status follows "first son black, rest white".
  std::vector<std::int64_t> blacks;
  for (std::int64_t v = 1; v <= t.size(); ++v)
    if (t.black[v]) blacks.push_back(v);
  CHECK(blacks == std::vector<std::int64_t>{2, 5, 7, 10, 13, 15, 18, 20, 23,
                                            26, 28, 31});

  // Son ranges of the first rows.
  CHECK(t.first_son[1] == 2);
  CHECK(t.son_count[1] == 3);
  CHECK(t.first_son[2] == 5);   // black father: two sons
  CHECK(t.son_count[2] == 2);
  CHECK(t.first_son[3] == 7);
  CHECK(t.son_count[3] == 3);
  CHECK(t.first_son[4] == 10);
  CHECK(t.son_count[4] == 3);
  CHECK(t.father[12] == 4);
  CHECK(t.father[33] == 12);
  CHECK(t.son_count[13] == 0);  // level 3 sons are not materialized
}

TEST_CASE("breadth-first production, black tree p=5") {
  Grade g(5);
  TreeSnapshot t = build(g, TreeKind::black, 4);
  CHECK(t.size() == 55);  // m_4
  CHECK(t.level_first[1] == 2);
  CHECK(t.level_first[2] == 4);
  CHECK(t.level_first[3] == 9);
  CHECK(t.level_first[4] == 22);
  CHECK(t.black[1] == 1);  // the black root
  CHECK(t.son_count[1] == 2);
  CHECK(t.first_son[2] == 4);
  CHECK(t.first_son[3] == 6);
  CHECK(t.son_count[3] == 3);  // white node: three sons
  CHECK(t.father[21] == 8);
  CHECK(t.father[55] == 21);
}

TEST_CASE("size guard refuses oversized builds") {
  Grade g(5);
  CHECK_THROWS_AS(build(g, TreeKind::white, 40), std::invalid_argument);
}

TEST_CASE("increment chain against frozen codes") {
  Grade g(5);
  const auto codes = codes_by_chain(g, 14);
  const std::vector<std::string> want{"0",   "1",   "2",   "10",  "11",
                                      "12",  "20",  "21",  "100", "101",
                                      "102", "110", "111", "112", "120"};
  REQUIRE(codes.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(to_text(codes[i]) == want[i]);
}

TEST_CASE("greedy backtracking equals the increment chain") {
  for (int p : {5, 7, 9}) {
    Grade g(p);
    const auto codes = codes_by_chain(g, 500);
    for (std::int64_t v = 1; v <= 500; ++v)
      CHECK(code_by_greedy_backtracking(g, v) == codes[v]);
  }
}

TEST_CASE("report text format") {
  Report r{Grade(5), 4, {{"demo", true, ""}, {"other", false, "at 7"}}};
  CHECK(r.to_text() ==
        "CHECK demo p=5 levels=4 PASS\nCHECK other p=5 levels=4 FAIL at 7\n");
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("full battery p=5") {
  Report r = verify_all(Grade(5), 5);
  for (const CheckResult& c : r.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.pass);
  }
  CHECK(r.checks.size() == 16);
}

TEST_CASE("full battery p=7") {
  Report r = verify_all(Grade(7), 4);
  for (const CheckResult& c : r.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.pass);
  }
  CHECK(r.all_pass());
}

TEST_CASE("full battery p=6 exercises the even grades") {
  Report r = verify_all(Grade(6), 4);
  for (const CheckResult& c : r.checks) {
    INFO(c.name, " ", c.witness);
    CHECK(c.pass);
  }
  CHECK(r.all_pass());
}
