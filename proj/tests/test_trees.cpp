/**
 * @file test_trees.cpp
 * @brief Node taxonomy, son words, levels, shifts, decomposition vectors.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "metallic/trees.hpp"

using namespace metallic;

namespace {

MetallicCode code5(const std::string& text) {
  return parse_code(Grade(5), text);
}

std::string cls5(TreeKind kind, const std::string& text) {
  return to_string(classify(kind, code5(text)));
}

}  // namespace

TEST_CASE("levels from the digit string, white tree p=5") {
  // Level n holds the numbers (M_{n-1}, M_n]: 1 | 2..4 | 5..12 | 13..33.
  CHECK(level_of(TreeKind::white, code5("1")) == 0);
  for (const char* t : {"2", "10", "11"})
    CHECK(level_of(TreeKind::white, code5(t)) == 1);
  for (const char* t : {"12", "20", "21", "100", "101", "102", "110", "111"})
    CHECK(level_of(TreeKind::white, code5(t)) == 2);
  for (const char* t : {"112", "120", "1000", "1110", "1111"})
    CHECK(level_of(TreeKind::white, code5(t)) == 3);
}

TEST_CASE("levels from the digit string, black tree p=5") {
  // Level n holds the numbers (m_{n-1}, m_n]: 1 | 2..3 | 4..8 | 9..21 | ...
  CHECK(level_of(TreeKind::black, code5("1")) == 0);
  for (const char* t : {"2", "10"})
    CHECK(level_of(TreeKind::black, code5(t)) == 1);
  for (const char* t : {"11", "12", "20", "21", "100"})
    CHECK(level_of(TreeKind::black, code5(t)) == 2);
  for (const char* t : {"101", "211", "1000"})
    CHECK(level_of(TreeKind::black, code5(t)) == 3);
  CHECK(level_of(TreeKind::black, code5("1001")) == 4);
}

TEST_CASE("classification, white tree p=5 frozen rows") {
  NodeClass root = classify(TreeKind::white, code5("1"));
  CHECK(root.root);
  CHECK(root.is_white());
  // Numbers 2..13 in code order.
  const std::vector<std::pair<const char*, const char*>> rows{
      {"2", "b2"},   {"10", "w0"},  {"11", "w1"},  {"12", "b2"},
      {"20", "w0"},  {"21", "b1"},  {"100", "w0"}, {"101", "w1"},
      {"102", "b2"}, {"110", "w0"}, {"111", "w1"}, {"112", "b2"},
      {"120", "w0"}};
  for (const auto& [code, want] : rows) {
    INFO(code);
    CHECK(cls5(TreeKind::white, code) == want);
    CHECK_FALSE(classify(TreeKind::white, code5(code)).root);
  }
  // The leftmost branch below the first sector son is b1 all the way.
  CHECK(cls5(TreeKind::white, "21") == "b1");
  CHECK(cls5(TreeKind::white, "210") == "w0");
}

TEST_CASE("classification, black tree p=5 frozen rows") {
  NodeClass root = classify(TreeKind::black, code5("1"));
  CHECK(root.root);
  CHECK(root.is_black());
  const std::vector<std::pair<const char*, const char*>> rows{
      {"2", "b1"},    {"10", "w0"},  {"11", "b1"},  {"12", "w2"},
      {"20", "b0"},   {"21", "w1"},  {"100", "w0"}, {"101", "b1"},
      {"102", "w2"},  {"110", "b0"}, {"111", "w1"}, {"112", "w2"},
      {"120", "b0"},  {"121", "w1"}, {"200", "b0"}, {"201", "w1"},
      {"202", "w2"},  {"210", "b0"}, {"211", "w1"}, {"1000", "w0"},
      {"1001", "b1"}, {"1010", "b0"}};
  for (const auto& [code, want] : rows) {
    INFO(code);
    CHECK(cls5(TreeKind::black, code) == want);
    CHECK_FALSE(classify(TreeKind::black, code5(code)).root);
  }
}

TEST_CASE("son signature words p=5") {
  Grade g(5);
  NodeClass root_w = classify(TreeKind::white, code5("1"));
  CHECK(to_string(sons_signature_word(g, TreeKind::white, root_w)) ==
        "b2:2 w0:0 w1:1");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::black2())) ==
        "b2:2 w0:0");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::black1())) ==
        "b2:2 w0:0");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::white(0))) ==
        "b1:1 w0:0 w1:1");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::white(1))) ==
        "b2:2 w0:0 w1:1");

  NodeClass root_b = classify(TreeKind::black, code5("1"));
  CHECK(to_string(sons_signature_word(g, TreeKind::black, root_b)) ==
        "b1:2 w0:0");
  CHECK(to_string(sons_signature_word(g, TreeKind::black, NodeClass::black0())) ==
        "b0:0 w1:1");
  CHECK(to_string(sons_signature_word(g, TreeKind::black, NodeClass::black1())) ==
        "b1:1 w2:2");
  CHECK(to_string(sons_signature_word(g, TreeKind::black, NodeClass::white(2))) ==
        "b0:0 w1:1 w2:2");
  CHECK(to_string(sons_signature_word(g, TreeKind::black, NodeClass::white(0))) ==
        "b0:0 w1:1 w0:0");

  CHECK_THROWS_AS(sons_signature_word(g, TreeKind::white, NodeClass::black0()),
                  std::invalid_argument);
  CHECK_THROWS_AS(sons_signature_word(g, TreeKind::black, NodeClass::black2()),
                  std::invalid_argument);
}

TEST_CASE("son signature words p=7 carry the generic white run") {
  Grade g(7);
  NodeClass root_w = classify(TreeKind::white, parse_code(g, "1"));
  CHECK(to_string(sons_signature_word(g, TreeKind::white, root_w)) ==
        "b2:2 w3:3 w4:4 w0:0 w1:1");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::white(3))) ==
        "b1:1 w2:2 w3:3 w4:4 w0:0");
  CHECK(to_string(sons_signature_word(g, TreeKind::white, NodeClass::black1())) ==
        "b2:2 w3:3 w4:4 w0:0");
  CHECK(to_string(sons_signature_word(g, TreeKind::black, NodeClass::white(0))) ==
        "b0:0 w1:1 w2:2 w3:3 w0:0");
}

TEST_CASE("preferred sons p=5") {
  // Root: sons 2,3,4; the 0-son "10" is next-to-last.
  PreferredSon ps = preferred_son(code5("1"));
  CHECK(ps.position == 2);
  CHECK(to_text(ps.code) == "10");
  // Black father "2": two sons, the 0-son is last.
  ps = preferred_son(code5("2"));
  CHECK(ps.position == 2);
  CHECK(to_text(ps.code) == "20");
  // w0 father "10": three sons, next-to-last.
  ps = preferred_son(code5("10"));
  CHECK(ps.position == 2);
  CHECK(to_text(ps.code) == "100");
  ps = preferred_son(code5("21"));
  CHECK(ps.position == 2);
  CHECK(to_text(ps.code) == "210");
}

TEST_CASE("preferred son of a generic white father p=7") {
  Grade g(7);
  PreferredSon ps = preferred_son(parse_code(g, "3"));
  CHECK(ps.position == 5);  // last of the five sons
  CHECK(to_text(ps.code) == "30");
}

TEST_CASE("successor against the black tree p=5") {
  // 3 = m_1 sits on the rightmost branch: its 0-son is m_2 = 8.
  Successor s = successor(code5("10"));
  CHECK(s.rightmost);
  CHECK(to_text(s.code) == "100");
  // 2 is not rightmost: "20" is the leftmost son of 3.
  s = successor(code5("2"));
  CHECK_FALSE(s.rightmost);
  CHECK(to_text(s.code) == "20");
  s = successor(code5("21"));
  CHECK_FALSE(s.rightmost);
  CHECK(to_text(s.code) == "210");
  s = successor(code5("100"));
  CHECK(s.rightmost);
  CHECK(to_text(s.code) == "1000");
}

TEST_CASE("black-to-white renumbering p=5") {
  Grade g(5);
  // Identity through level 1, then shifted by M_{n-2}.
  for (int v : {1, 2, 3}) CHECK(black_to_white_number(g, v) == v);
  CHECK(black_to_white_number(g, 4) == 5);    // level 2: +M_0
  CHECK(black_to_white_number(g, 8) == 9);
  CHECK(black_to_white_number(g, 9) == 13);   // level 3: +M_1
  CHECK(black_to_white_number(g, 21) == 25);
  CHECK(black_to_white_number(g, 22) == 34);  // level 4: +M_2
  CHECK(black_to_white_number(g, 55) == 67);
}

TEST_CASE("decomposition vectors p=5") {
  Grade g(5);
  auto texts = [](const std::vector<MetallicCode>& v) {
    std::vector<std::string> out;
    for (const auto& c : v) out.push_back(to_text(c));
    return out;
  };
  CHECK(texts(decomposition_vectors(g, TreeKind::white, 1)) ==
        std::vector<std::string>{"20", "101", "111"});
  CHECK(texts(decomposition_vectors(g, TreeKind::black, 1)) ==
        std::vector<std::string>{"12", "100"});
  CHECK(texts(decomposition_vectors(g, TreeKind::white, 2)) ==
        std::vector<std::string>{"201", "1011", "1111"});
  CHECK(texts(decomposition_vectors(g, TreeKind::black, 2)) ==
        std::vector<std::string>{"112", "1000"});
  // Values of the white level-1 vectors: 6, 9, 12.
  const auto wv = decomposition_vectors(g, TreeKind::white, 1);
  CHECK(decode(wv[0]) == 6);
  CHECK(decode(wv[1]) == 9);
  CHECK(decode(wv[2]) == 12);
  const auto bv = decomposition_vectors(g, TreeKind::black, 1);
  CHECK(decode(bv[0]) == 5);
  CHECK(decode(bv[1]) == 8);
}

TEST_CASE("zero branches stay canonical") {
  CHECK(to_text(zero_branch(code5("12"), 2)) == "1200");
  CHECK(to_text(zero_branch(code5("2"), 1)) == "20");
  CHECK(is_canonical(zero_branch(code5("112"), 5)));
}
