/**
 * @file render.cpp
 * @brief DOT and SVG pictures of the spanning trees.
 */
#include "metallic/render.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "metallic/arithmetic.hpp"
#include "metallic/navigation.hpp"
#include "metallic/numeration.hpp"

namespace metallic {

namespace {

constexpr const char* kRed = "#e57373";     // black-status nodes
constexpr const char* kBlue = "#81a9e0";    // generic white nodes
constexpr const char* kGreen = "#8fd19e";   // w0 / w1 nodes
constexpr const char* kBorder = "#444444";
constexpr const char* kMark = "#c62828";    // preferred-son outline

struct RenderNode {
  std::int64_t number;
  std::int64_t father;  // 0 for the root
  int level;
  std::string label;
  const char* fill;
  bool marked;  // preferred son: outlined in red
};

/// Everything the two emitters need, computed from the digit algorithms
/// alone by walking the increment chain.
std::vector<RenderNode> layout(const Grade& g, TreeKind kind, int max_level) {
  if (max_level < 0) throw std::invalid_argument("levels must be >= 0");
  SequenceTable table(g);
  const BigInt total_big =
      (kind == TreeKind::white) ? table.M(max_level) : table.m(max_level);
  if (total_big > 100'000)
    throw std::invalid_argument("refusing to draw more than 10^5 tiles");
  const std::int64_t total = total_big.convert_to<std::int64_t>();

  std::vector<RenderNode> nodes;
  nodes.reserve(total);
  MetallicCode code(g, {1});
  for (std::int64_t v = 1; v <= total; ++v) {
    const NodeClass cls = classify(kind, code);
    const auto f = father(kind, code);
    RenderNode n;
    n.number = v;
    n.father = f ? decode(*f).convert_to<std::int64_t>() : 0;
    n.level = level_of(kind, code);
    n.label = to_text(code);
    n.marked = !cls.is_black() && !cls.root && code.digits.back() == 0;
    n.fill = cls.is_black() ? kRed
             : (cls.root || cls.alpha <= 1) ? kGreen
                                            : kBlue;
    nodes.push_back(std::move(n));
    if (v < total) code = increment(code);
  }
  return nodes;
}

}  // namespace

void render_dot(const Grade& g, TreeKind kind, int max_level,
                std::ostream& out) {
  const auto nodes = layout(g, kind, max_level);
  out << "digraph " << to_string(kind) << "_p" << g.p << " {\n"
      << "  rankdir=TB;\n"
      << "  node [shape=box, style=filled, fontname=\"monospace\","
         " color=\"" << kBorder << "\"];\n";
  for (const RenderNode& n : nodes) {
    out << "  n" << n.number << " [label=\"" << n.label << "\\n#" << n.number
        << "\", fillcolor=\"" << n.fill << "\"";
    if (n.marked) out << ", color=\"" << kMark << "\", penwidth=2";
    out << "];\n";
  }
  for (const RenderNode& n : nodes)
    if (n.father != 0) out << "  n" << n.father << " -> n" << n.number << ";\n";
  // Keep each level on one rank.
  for (int l = 0; l <= max_level; ++l) {
    out << "  { rank=same;";
    for (const RenderNode& n : nodes)
      if (n.level == l) out << " n" << n.number << ";";
    out << " }\n";
  }
  out << "}\n";
}

void render_svg(const Grade& g, TreeKind kind, int max_level,
                std::ostream& out) {
  const auto nodes = layout(g, kind, max_level);

  // Per-level extents for an even horizontal spread.
  std::vector<std::int64_t> level_count(max_level + 1, 0);
  std::vector<std::int64_t> level_seen(max_level + 1, 0);
  for (const RenderNode& n : nodes) ++level_count[n.level];
  std::int64_t widest = 1;
  for (auto c : level_count) widest = std::max(widest, c);

  const double dx = 34.0, dy = 80.0, margin = 40.0, radius = 11.0;
  const double width = 2 * margin + static_cast<double>(widest - 1) * dx;
  const double height = 2 * margin + max_level * dy;

  std::vector<double> xs(nodes.size() + 1), ys(nodes.size() + 1);
  for (const RenderNode& n : nodes) {
    const std::int64_t count = level_count[n.level];
    const std::int64_t idx = level_seen[n.level]++;
    // Center each level's row inside the widest row's span.
    const double span = static_cast<double>(count - 1) * dx;
    xs[n.number] = width / 2 - span / 2 + static_cast<double>(idx) * dx;
    ys[n.number] = margin + n.level * dy;
  }

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const RenderNode& n : nodes)
    if (n.father != 0)
      out << "  <line x1=\"" << xs[n.father] << "\" y1=\"" << ys[n.father]
          << "\" x2=\"" << xs[n.number] << "\" y2=\"" << ys[n.number]
          << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const RenderNode& n : nodes) {
    out << "  <circle cx=\"" << xs[n.number] << "\" cy=\"" << ys[n.number]
        << "\" r=\"" << radius << "\" fill=\"" << n.fill << "\" stroke=\""
        << (n.marked ? kMark : kBorder) << "\" stroke-width=\""
        << (n.marked ? 2.5 : 1.0) << "\"><title>#" << n.number << " "
        << n.label << "</title></circle>\n";
    out << "  <text x=\"" << xs[n.number] << "\" y=\"" << ys[n.number] + 3.5
        << "\" font-size=\"8\" font-family=\"monospace\" text-anchor=\"middle\">"
        << n.label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace metallic
