/**
 * @file test_cli.cpp
 * @brief In-process smoke tests of the command-line front end.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "metallic/cli.hpp"

using namespace metallic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 2, help with 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"encode", "12"}).code == 2);        // missing --p
  CHECK(run({"encode", "--p", "4", "12"}).code == 2);  // grade too small
  CHECK(run({"decode", "--p", "5", "93"}).code == 2);  // digit out of range
  CHECK(run({"dec", "--p", "5", "0"}).code == 2);       // predecessor of zero
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"seq", "--help"}).code == 0);
}

TEST_CASE("sequences") {
  Run r = run({"seq", "--p", "5", "--kind", "m", "--upto", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1 0\n0 1\n1 3\n2 8\n3 21\n4 55\n5 144\n");
  r = run({"seq", "--p", "7", "--kind", "b", "--upto", "3"});
  CHECK(r.out == "0 1\n1 4\n2 19\n3 91\n");
  r = run({"seq", "--p", "5", "--kind", "M", "--upto", "4"});
  CHECK(r.out == "-1 0\n0 1\n1 4\n2 12\n3 33\n4 88\n");
}

TEST_CASE("numeration and arithmetic commands") {
  CHECK(run({"encode", "--p", "5", "26"}).out == "1012\n");
  CHECK(run({"decode", "--p", "5", "1012"}).out == "26\n");
  CHECK(run({"add", "--p", "5", "102", "21"}).out == "201\n");
  CHECK(run({"sub", "--p", "5", "201", "21"}).out == "102\n");
  CHECK(run({"inc", "--p", "5", "12"}).out == "20\n");
  CHECK(run({"dec", "--p", "5", "20"}).out == "12\n");
  CHECK(run({"cmp", "--p", "5", "21", "100"}).out == "-1\n");
  CHECK(run({"cmp", "--p", "5", "21", "21"}).out == "0\n");
  CHECK(run({"cmp", "--p", "5", "102", "21"}).out == "1\n");
  CHECK(run({"sub", "--p", "5", "21", "102"}).code == 2);  // negative
}

TEST_CASE("node report") {
  Run r = run({"node", "--p", "5", "--tree", "white", "102"});
  CHECK(r.code == 0);
  CHECK(r.out.find("number: 10\n") != std::string::npos);
  CHECK(r.out.find("level: 2\n") != std::string::npos);
  CHECK(r.out.find("class: b2\n") != std::string::npos);
  CHECK(r.out.find("father: 11\n") != std::string::npos);
  CHECK(r.out.find("preferred_son: 1020 (position 2)\n") != std::string::npos);
  r = run({"node", "--p", "5", "--tree", "black", "10"});
  CHECK(r.out.find("class: w0\n") != std::string::npos);
  CHECK(r.out.find("successor: 100") != std::string::npos);
}

TEST_CASE("neighbors output") {
  Run r = run({"neighbors", "--p", "5", "--tiling", "p4", "--tree", "white",
               "10"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1: father 1\n2: 21\n3: 100\n4: 101\n5: 102\n");
  r = run({"neighbors", "--p", "5", "--tiling", "p23", "--tree", "black",
           "10"});
  CHECK(r.out ==
        "1: father 1\n2: 2\n3: 20\n4: 21\n5: 100\n6: strip+1 2\n"
        "7: strip+1 1\n");
}

TEST_CASE("path output") {
  Run r = run({"path", "--p", "5", "--algo", "topdown", "1012"});
  CHECK(r.code == 0);
  CHECK(r.out.find("level 1: 11 (#4) white sig 1\n") != std::string::npos);
  CHECK(r.out.find("level 3: 1012 (#26) black sig 2\n") != std::string::npos);
  CHECK(r.out.find("digit visits: ") != std::string::npos);
  r = run({"path", "--p", "5", "--algo", "black", "1210"});
  CHECK(r.out.find("level 4: 1210 (#40) black sig 0\n") != std::string::npos);
  r = run({"path", "--p", "5", "--algo", "bottomup", "--tree", "black",
           "1210"});
  CHECK(r.out.find("level 2: 21") != std::string::npos);
  r = run({"path", "--p", "5", "--algo", "strips", "1012"});
  CHECK(r.out.find("level 2: 102 (#10)") != std::string::npos);
}

TEST_CASE("verify battery through the CLI") {
  Run r = run({"verify", "--p", "5", "--levels", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("CHECK levels p=5 levels=4 PASS\n") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bench runs and reports visit counts") {
  Run r = run({"bench", "--p", "5", "--len", "40", "--samples", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("len=40 samples=5\n") != std::string::npos);
  CHECK(r.out.find("bottom_up mean digit visits: ") != std::string::npos);
  CHECK(r.out.find("top_down mean digit visits: ") != std::string::npos);
}

TEST_CASE("render emits DOT and SVG") {
  Run dot = run({"render", "--p", "5", "--tree", "white", "--levels", "2",
                 "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph white_p5 {") == 0);
  // One node statement per tile: M_2 = 12 of them.
  std::size_t count = 0, pos = 0;
  while ((pos = dot.out.find("[label=", pos)) != std::string::npos) {
    ++count;
    pos += 7;
  }
  CHECK(count == 12);
  CHECK(dot.out.find("n1 -> n2;") != std::string::npos);

  Run svg = run({"render", "--p", "5", "--tree", "black", "--levels", "2",
                 "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg xmlns=") == 0);
  CHECK(svg.out.find("</svg>") != std::string::npos);
}
