/**
 * @file module.cpp
 * @brief Python bindings for the metallic numeration and navigation core.
 *
 * Codes cross the boundary as digit strings (most significant first) and
 * values as ordinary Python integers, so no wrapper types are needed on
 * the Python side.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "metallic/arithmetic.hpp"
#include "metallic/navigation.hpp"
#include "metallic/numeration.hpp"
#include "metallic/oracle.hpp"
#include "metallic/render.hpp"
#include "metallic/trees.hpp"

namespace py = pybind11;
using namespace metallic;

namespace {

BigInt big_from(const py::int_& v) {
  return BigInt(static_cast<std::string>(py::str(static_cast<py::handle>(v))));
}

py::int_ big_to(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

MetallicCode code_from(int p, const std::string& text) {
  return parse_code(Grade(p), text);
}

py::dict step_to_dict(const PathStep& s) {
  py::dict d;
  d["level"] = s.level;
  d["signature"] = s.signature;
  d["black"] = s.black;
  d["code"] = s.code ? py::object(py::str(to_text(*s.code))) : py::none();
  d["number"] = s.number ? py::object(big_to(*s.number)) : py::none();
  return d;
}

py::dict trace_to_dict(const PathTrace& t) {
  py::list steps;
  for (const PathStep& s : t.steps) steps.append(step_to_dict(s));
  py::dict d;
  d["tree"] = to_string(t.kind);
  d["steps"] = steps;
  d["digit_visits"] = t.digit_visits;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Numeration, arithmetic and navigation for the metallic trees that "
      "span the tilings {p,4} and {p+2,3}.";

  // --- sequences ---------------------------------------------------------
  m.def(
      "seq_m", [](int p, int n) { return big_to(seq_m(Grade(p), n)); },
      py::arg("p"), py::arg("n"),
      "n-th term of the metallic sequence m (level size of the black tree).");
  m.def(
      "seq_b", [](int p, int n) { return big_to(seq_b(Grade(p), n)); },
      py::arg("p"), py::arg("n"), "n-th branching term b_n = m_n - m_{n-1}.");
  m.def(
      "seq_M", [](int p, int n) { return big_to(seq_M(Grade(p), n)); },
      py::arg("p"), py::arg("n"),
      "n-th cumulated term M_n (level size of the white tree).");

  // --- numeration --------------------------------------------------------
  m.def(
      "encode",
      [](int p, const py::int_& v) {
        return to_text(encode(Grade(p), big_from(v)));
      },
      py::arg("p"), py::arg("value"),
      "Canonical digit string of a non-negative integer.");
  m.def(
      "decode",
      [](int p, const std::string& code) {
        return big_to(decode(code_from(p, code)));
      },
      py::arg("p"), py::arg("code"),
      "Integer value of a digit string (canonical or not).");
  m.def(
      "is_canonical",
      [](int p, const std::string& code) {
        return is_canonical(code_from(p, code));
      },
      py::arg("p"), py::arg("code"),
      "Whether the string is the canonical representation of its value.");
  m.def(
      "normalize",
      [](int p, const std::string& code) {
        return to_text(normalize(code_from(p, code)));
      },
      py::arg("p"), py::arg("code"),
      "Canonical representation with the same value.");

  // --- arithmetic --------------------------------------------------------
  m.def(
      "add",
      [](int p, const std::string& a, const std::string& b) {
        return to_text(add(code_from(p, a), code_from(p, b)));
      },
      py::arg("p"), py::arg("a"), py::arg("b"), "Digitwise sum, canonical.");
  m.def(
      "subtract",
      [](int p, const std::string& a, const std::string& b) {
        return to_text(subtract(code_from(p, a), code_from(p, b)));
      },
      py::arg("p"), py::arg("a"), py::arg("b"),
      "Digitwise difference a - b; raises if a < b.");
  m.def(
      "increment",
      [](int p, const std::string& a) {
        return to_text(increment(code_from(p, a)));
      },
      py::arg("p"), py::arg("code"), "Canonical successor code.");
  m.def(
      "decrement",
      [](int p, const std::string& a) {
        return to_text(decrement(code_from(p, a)));
      },
      py::arg("p"), py::arg("code"),
      "Canonical predecessor code; raises on zero.");
  m.def(
      "complement",
      [](int p, const std::string& b, int k) {
        return to_text(complement(code_from(p, b), k));
      },
      py::arg("p"), py::arg("code"), py::arg("k"),
      "Code of m_k minus the given value.");
  m.def(
      "compare",
      [](int p, const std::string& a, const std::string& b) {
        switch (compare(code_from(p, a), code_from(p, b))) {
          case Ordering::less: return -1;
          case Ordering::greater: return 1;
          default: return 0;
        }
      },
      py::arg("p"), py::arg("a"), py::arg("b"),
      "-1, 0 or 1 by numeric value, computed on the digits.");

  // --- trees -------------------------------------------------------------
  m.def(
      "level_of",
      [](int p, const std::string& tree, const std::string& code) {
        return level_of(tree_kind_from_string(tree), code_from(p, code));
      },
      py::arg("p"), py::arg("tree"), py::arg("code"),
      "Level of the node in the chosen tree ('white' or 'black').");
  m.def(
      "classify",
      [](int p, const std::string& tree, const std::string& code) {
        return to_string(classify(tree_kind_from_string(tree),
                                  code_from(p, code)));
      },
      py::arg("p"), py::arg("tree"), py::arg("code"),
      "Status and signature of the node, read from the digits.");
  m.def(
      "sons_word",
      [](int p, const std::string& tree, const std::string& code) {
        const TreeKind kind = tree_kind_from_string(tree);
        return to_string(sons_signature_word(
            Grade(p), kind, classify(kind, code_from(p, code))));
      },
      py::arg("p"), py::arg("tree"), py::arg("code"),
      "Left-to-right statuses of the node's sons.");
  m.def(
      "preferred_son",
      [](int p, const std::string& code) {
        const PreferredSon s = preferred_son(code_from(p, code));
        return py::make_tuple(to_text(s.code), s.position);
      },
      py::arg("p"), py::arg("code"),
      "(code, position) of the preferred son in the white tree.");
  m.def(
      "successor",
      [](int p, const std::string& code) {
        const Successor s = successor(code_from(p, code));
        return py::make_tuple(to_text(s.code), s.rightmost);
      },
      py::arg("p"), py::arg("code"),
      "(code, rightmost) for the next node on the same level.");
  m.def(
      "black_to_white_number",
      [](int p, const py::int_& nu) {
        return big_to(black_to_white_number(Grade(p), big_from(nu)));
      },
      py::arg("p"), py::arg("nu"),
      "White-tree number of the tile holding black-tree number nu.");
  m.def(
      "decomposition_vectors",
      [](int p, const std::string& tree, int n) {
        std::vector<std::string> out;
        for (const MetallicCode& c : decomposition_vectors(
                 Grade(p), tree_kind_from_string(tree), n))
          out.push_back(to_text(c));
        return out;
      },
      py::arg("p"), py::arg("tree"), py::arg("n"),
      "Codes of the level-(n+1) decomposition vectors.");

  // --- navigation --------------------------------------------------------
  m.def(
      "father",
      [](int p, const std::string& tree, const std::string& code)
          -> std::optional<std::string> {
        const auto f = father(tree_kind_from_string(tree), code_from(p, code));
        if (!f) return std::nullopt;
        return to_text(*f);
      },
      py::arg("p"), py::arg("tree"), py::arg("code"),
      "Father's code, or None for the root.");
  m.def(
      "neighbors",
      [](int p, const std::string& tiling, const std::string& tree,
         const std::string& code) {
        const Tiling t = tiling_from_string(tiling);
        const MetallicCode c = code_from(p, code);
        const auto entries = (tree_kind_from_string(tree) == TreeKind::white)
                                 ? neighbors_white(t, c)
                                 : neighbors_black(t, c);
        std::vector<std::string> out;
        for (const NeighborEntry& e : entries) out.push_back(to_string(e));
        return out;
      },
      py::arg("p"), py::arg("tiling"), py::arg("tree"), py::arg("code"),
      "Per-side neighbour descriptions, side 1 first ('p4' or 'p23').");
  m.def(
      "path",
      [](int p, const std::string& code, const std::string& algo) {
        const MetallicCode c = code_from(p, code);
        PathOptions opts;
        opts.resolve_codes = true;
        if (algo == "bottomup") {
          return trace_to_dict(path_bottom_up(TreeKind::white, c));
        } else if (algo == "bottomup-black") {
          return trace_to_dict(path_bottom_up(TreeKind::black, c));
        } else if (algo == "topdown") {
          return trace_to_dict(path_top_down(c, opts));
        } else if (algo == "black") {
          return trace_to_dict(path_black(c, opts));
        } else if (algo == "strips") {
          return trace_to_dict(path_via_strips(c));
        }
        throw std::invalid_argument("unknown path algorithm: " + algo);
      },
      py::arg("p"), py::arg("code"), py::arg("algo") = "topdown",
      "Root-to-node path as {'tree', 'steps', 'digit_visits'}; algorithms: "
      "bottomup, topdown, strips, black, bottomup-black.");

  // --- verification and rendering ---------------------------------------
  m.def(
      "verify",
      [](int p, int levels) {
        const Report r = verify_all(Grade(p), levels);
        return py::make_tuple(r.all_pass(), r.to_text());
      },
      py::arg("p"), py::arg("levels"),
      "(all_pass, report_text) for the cross-check battery.");
  m.def(
      "render_dot",
      [](int p, const std::string& tree, int levels) {
        std::ostringstream out;
        render_dot(Grade(p), tree_kind_from_string(tree), levels, out);
        return out.str();
      },
      py::arg("p"), py::arg("tree"), py::arg("levels"),
      "Graphviz DOT picture of the tree down to the given level.");
  m.def(
      "render_svg",
      [](int p, const std::string& tree, int levels) {
        std::ostringstream out;
        render_svg(Grade(p), tree_kind_from_string(tree), levels, out);
        return out.str();
      },
      py::arg("p"), py::arg("tree"), py::arg("levels"),
      "Self-contained SVG picture of the tree down to the given level.");
}
