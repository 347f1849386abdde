/**
 * @file cli.cpp
 * @brief Command-line front end over the library operations.
 */
#include "metallic/cli.hpp"

#include <CLI11.hpp>

#include <random>
#include <string>
#include <vector>

#include "metallic/arithmetic.hpp"
#include "metallic/navigation.hpp"
#include "metallic/numeration.hpp"
#include "metallic/oracle.hpp"
#include "metallic/render.hpp"
#include "metallic/trees.hpp"

namespace metallic {

namespace {

/// A random canonical code of the exact length, most-significant digit
/// first.  Tracks whether the emitted suffix matches d c^* and redraws a d
/// that would complete the forbidden factor.
MetallicCode random_canonical(const Grade& g, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> lead(1, g.d());
  std::uniform_int_distribution<int> any(0, g.d());
  std::vector<int> ds(len);
  ds[0] = lead(rng);
  bool in_pattern = (ds[0] == g.d());
  for (int i = 1; i < len; ++i) {
    int a = any(rng);
    while (in_pattern && a == g.d()) a = any(rng);
    ds[i] = a;
    if (a == g.d()) in_pattern = true;
    else if (a != g.c()) in_pattern = false;
  }
  return MetallicCode(g, std::move(ds));
}

void print_node_report(const Grade& g, TreeKind kind, const MetallicCode& code,
                       std::ostream& out) {
  const NodeClass cls = classify(kind, code);
  out << "code: " << to_text(code) << "\n";
  out << "tree: " << to_string(kind) << "\n";
  out << "number: " << decode(code).str() << "\n";
  out << "level: " << level_of(kind, code) << "\n";
  out << "class: " << to_string(cls) << (cls.root ? " (root)" : "") << "\n";
  out << "signature: " << code.digits.back() << "\n";
  out << "sons: " << to_string(sons_signature_word(g, kind, cls)) << "\n";
  const auto f = father(kind, code);
  out << "father: " << (f ? to_text(*f) : "-") << "\n";
  if (kind == TreeKind::white) {
    const PreferredSon ps = preferred_son(code);
    out << "preferred_son: " << to_text(ps.code) << " (position "
        << ps.position << ")\n";
  } else {
    const Successor s = successor(code);
    out << "successor: " << to_text(s.code)
        << (s.rightmost ? " (rightmost, own son)" : " (leftmost son of the"
                                                    " next number)")
        << "\n";
  }
}

void print_path(const PathTrace& tr, std::ostream& out) {
  for (const PathStep& s : tr.steps) {
    out << "level " << s.level << ": ";
    out << (s.code ? to_text(*s.code) : "?");
    if (s.number) out << " (#" << s.number->str() << ")";
    out << " " << (s.black ? "black" : "white") << " sig " << s.signature
        << "\n";
  }
  out << "digit visits: " << tr.digit_visits << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Numeration, trees and navigation for the metallic tilings"};
  app.require_subcommand(1);
  int exit_code = 0;

  // Shared option storage; each subcommand registers the flags it uses.
  int p = 0;
  std::string kind_text = "m";
  std::string tree_text = "white";
  std::string tiling_text = "p4";
  std::string algo = "topdown";
  std::string format = "dot";
  std::string arg_a, arg_b;
  int upto = 10, levels = 0, len = 250, samples = 100;
  std::uint64_t seed = 0;

  auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", p, "grade (>= 5)")->required();
  };

  // seq ------------------------------------------------------------------
  CLI::App* seq = app.add_subcommand("seq", "print a weight sequence");
  add_p(seq);
  seq->add_option("--kind", kind_text, "m, b, or M")
      ->check(CLI::IsMember({"m", "b", "M"}));
  seq->add_option("--upto", upto, "largest index")->required();
  seq->callback([&] {
    Grade g(p);
    SequenceTable table(g);
    const int from = (kind_text == "b") ? 0 : -1;
    for (int n = from; n <= upto; ++n) {
      const BigInt& v = (kind_text == "m")   ? table.m(n)
                        : (kind_text == "b") ? table.b(n)
                                             : table.M(n);
      out << n << " " << v.str() << "\n";
    }
  });

  // encode / decode ------------------------------------------------------
  CLI::App* enc = app.add_subcommand("encode", "canonical code of a number");
  add_p(enc);
  enc->add_option("value", arg_a, "natural number")->required();
  enc->callback([&] {
    Grade g(p);
    out << to_text(encode(g, BigInt(arg_a))) << "\n";
  });

  CLI::App* dec = app.add_subcommand("decode", "value of a digit string");
  add_p(dec);
  dec->add_option("code", arg_a, "digit string")->required();
  dec->callback([&] {
    Grade g(p);
    out << decode(parse_code(g, arg_a)).str() << "\n";
  });

  // arithmetic -----------------------------------------------------------
  CLI::App* add_cmd = app.add_subcommand("add", "sum of two codes");
  add_p(add_cmd);
  add_cmd->add_option("a", arg_a)->required();
  add_cmd->add_option("b", arg_b)->required();
  add_cmd->callback([&] {
    Grade g(p);
    out << to_text(add(parse_code(g, arg_a), parse_code(g, arg_b))) << "\n";
  });

  CLI::App* sub_cmd = app.add_subcommand("sub", "difference of two codes");
  add_p(sub_cmd);
  sub_cmd->add_option("a", arg_a)->required();
  sub_cmd->add_option("b", arg_b)->required();
  sub_cmd->callback([&] {
    Grade g(p);
    out << to_text(subtract(parse_code(g, arg_a), parse_code(g, arg_b)))
        << "\n";
  });

  CLI::App* inc_cmd = app.add_subcommand("inc", "successor of a code");
  add_p(inc_cmd);
  inc_cmd->add_option("code", arg_a)->required();
  inc_cmd->callback([&] {
    Grade g(p);
    out << to_text(increment(parse_code(g, arg_a))) << "\n";
  });

  CLI::App* dec_cmd = app.add_subcommand("dec", "predecessor of a code");
  add_p(dec_cmd);
  dec_cmd->add_option("code", arg_a)->required();
  dec_cmd->callback([&] {
    Grade g(p);
    out << to_text(decrement(parse_code(g, arg_a))) << "\n";
  });

  CLI::App* cmp_cmd = app.add_subcommand("cmp", "compare two codes");
  add_p(cmp_cmd);
  cmp_cmd->add_option("a", arg_a)->required();
  cmp_cmd->add_option("b", arg_b)->required();
  cmp_cmd->callback([&] {
    Grade g(p);
    const Ordering o = compare(parse_code(g, arg_a), parse_code(g, arg_b));
    out << (o == Ordering::less ? "-1" : o == Ordering::equal ? "0" : "1")
        << "\n";
  });

  // trees ----------------------------------------------------------------
  CLI::App* node = app.add_subcommand("node", "describe one tree node");
  add_p(node);
  node->add_option("--tree", tree_text, "white or black")
      ->check(CLI::IsMember({"white", "black"}));
  node->add_option("code", arg_a)->required();
  node->callback([&] {
    Grade g(p);
    print_node_report(g, tree_kind_from_string(tree_text), parse_code(g, arg_a),
                      out);
  });

  CLI::App* nb = app.add_subcommand("neighbors", "all sides of one tile");
  add_p(nb);
  nb->add_option("--tiling", tiling_text, "p4 or p23")
      ->check(CLI::IsMember({"p4", "p23"}));
  nb->add_option("--tree", tree_text, "white or black")
      ->check(CLI::IsMember({"white", "black"}));
  nb->add_option("code", arg_a)->required();
  nb->callback([&] {
    Grade g(p);
    const Tiling t = tiling_from_string(tiling_text);
    const MetallicCode code = parse_code(g, arg_a);
    const auto entries = (tree_kind_from_string(tree_text) == TreeKind::white)
                             ? neighbors_white(t, code)
                             : neighbors_black(t, code);
    for (const NeighborEntry& e : entries)
      out << e.side << ": " << to_string(e) << "\n";
  });

  CLI::App* path = app.add_subcommand("path", "root path of a node");
  add_p(path);
  path->add_option("--algo", algo, "bottomup, topdown, black, or strips")
      ->check(CLI::IsMember({"bottomup", "topdown", "black", "strips"}));
  path->add_option("--tree", tree_text, "tree for bottomup (white or black)")
      ->check(CLI::IsMember({"white", "black"}));
  path->add_option("code", arg_a)->required();
  path->callback([&] {
    Grade g(p);
    const MetallicCode code = parse_code(g, arg_a);
    PathOptions resolve;
    resolve.resolve_codes = true;
    PathTrace tr =
        (algo == "bottomup")
            ? path_bottom_up(tree_kind_from_string(tree_text), code)
        : (algo == "topdown") ? path_top_down(code, resolve)
        : (algo == "black")   ? path_black(code, resolve)
                              : path_via_strips(code);
    print_path(tr, out);
  });

  // verification, benchmark, pictures ------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run the check battery");
  add_p(verify);
  verify->add_option("--levels", levels, "tree depth to build")->required();
  verify->callback([&] {
    Report r = verify_all(Grade(p), levels);
    out << r.to_text();
    if (!r.all_pass()) exit_code = 1;
  });

  CLI::App* bench = app.add_subcommand("bench", "digit visits per algorithm");
  add_p(bench);
  bench->add_option("--len", len, "code length")->required();
  bench->add_option("--samples", samples, "number of random codes");
  bench->add_option("--seed", seed, "RNG seed");
  bench->callback([&] {
    Grade g(p);
    std::mt19937_64 rng(seed);
    long long up = 0, down = 0;
    for (int i = 0; i < samples; ++i) {
      const MetallicCode code = random_canonical(g, len, rng);
      up += path_bottom_up(TreeKind::white, code).digit_visits;
      down += path_top_down(code).digit_visits;
    }
    out << "len=" << len << " samples=" << samples << "\n";
    out << "bottom_up mean digit visits: " << (up / samples) << "\n";
    out << "top_down mean digit visits: " << (down / samples) << "\n";
  });

  CLI::App* render = app.add_subcommand("render", "draw a tree");
  add_p(render);
  render->add_option("--tree", tree_text, "white or black")
      ->check(CLI::IsMember({"white", "black"}));
  render->add_option("--levels", levels, "tree depth to draw")->required();
  render->add_option("--format", format, "dot or svg")
      ->check(CLI::IsMember({"dot", "svg"}));
  render->callback([&] {
    Grade g(p);
    const TreeKind kind = tree_kind_from_string(tree_text);
    if (format == "dot")
      render_dot(g, kind, levels, out);
    else
      render_svg(g, kind, levels, out);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace metallic
