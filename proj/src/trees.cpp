/**
 * @file trees.cpp
 * @brief Node taxonomy of the white and black spanning trees.
 */
#include "metallic/trees.hpp"

#include <stdexcept>

#include "metallic/detail/shape.hpp"
#include "metallic/detail/walk.hpp"

namespace metallic {

std::string to_string(TreeKind kind) {
  return kind == TreeKind::white ? "white" : "black";
}

TreeKind tree_kind_from_string(const std::string& s) {
  if (s == "white") return TreeKind::white;
  if (s == "black") return TreeKind::black;
  throw std::invalid_argument("unknown tree kind: " + s);
}

std::string to_string(const NodeClass& cls) {
  switch (cls.kind) {
    case NodeClass::B0: return "b0";
    case NodeClass::B1: return "b1";
    case NodeClass::B2: return "b2";
    case NodeClass::W:  return "w" + std::to_string(cls.alpha);
  }
  throw std::logic_error("bad node class");
}

namespace {

void require_node(const MetallicCode& code) {
  if (code.is_zero())
    throw std::invalid_argument("zero is not a tree node");
}

}  // namespace

int level_of(TreeKind kind, const MetallicCode& code) {
  require_node(code);
  const auto& ds = code.digits;
  const int len = code.length();
  if (kind == TreeKind::white) {
    // Level n holds (M_{n-1}, M_n]; the last code of level n is 1^{n+1}, so
    // a code belongs one level down exactly when it is <= 1^len lexically.
    int i = 0;
    while (i < len && ds[i] == 1) ++i;
    const bool below_ones = (i == len) || (ds[i] < 1);
    return len - (below_ones ? 1 : 0);
  }
  // Level n holds (m_{n-1}, m_n]; only the code 1 0^{len-1} of length len
  // (the number m_{len-1}) belongs one level down.
  return len - (detail::is_pow(code) ? 1 : 0);
}

NodeClass classify(TreeKind kind, const MetallicCode& code) {
  require_node(code);
  if (kind == TreeKind::white)
    return detail::white_walk(code).final_class;

  // Black tree: the class is visible in the digit shape alone.
  if (code.length() == 1 && code.digits[0] == 1) {
    NodeClass cls = NodeClass::black0();
    cls.root = true;
    return cls;
  }
  if (detail::is_pow(code)) return NodeClass::white(0);      // nu = m_n
  if (code.length() == 1 && code.digits[0] == 2)
    return NodeClass::black1();                              // node 2
  if (detail::is_pow_one(code)) return NodeClass::black1();  // leftmost
  if (code.digits.back() == 0) return NodeClass::black0();   // other 0-sons
  return NodeClass::white(code.digits.back());
}

std::vector<SonEntry> sons_signature_word(const Grade& g, TreeKind kind,
                                          const NodeClass& cls) {
  const int d = g.d();
  const int c = g.c();
  std::vector<SonEntry> w;
  if (kind == TreeKind::white) {
    if (cls.root) {
      w.push_back({NodeClass::black2(), 2});
      for (int a = 3; a <= d; ++a) w.push_back({NodeClass::white(a), a});
      w.push_back({NodeClass::white(0), 0});
      w.push_back({NodeClass::white(1), 1});
      return w;
    }
    switch (cls.kind) {
      case NodeClass::B1:
      case NodeClass::B2:
        w.push_back({NodeClass::black2(), 2});
        for (int a = 3; a <= d; ++a) w.push_back({NodeClass::white(a), a});
        w.push_back({NodeClass::white(0), 0});
        return w;
      case NodeClass::W:
        if (cls.alpha == 0) {
          w.push_back({NodeClass::black1(), 1});
          for (int a = 2; a <= c; ++a) w.push_back({NodeClass::white(a), a});
          w.push_back({NodeClass::white(0), 0});
          w.push_back({NodeClass::white(1), 1});
        } else if (cls.alpha == 1) {
          w.push_back({NodeClass::black2(), 2});
          for (int a = 3; a <= d; ++a) w.push_back({NodeClass::white(a), a});
          w.push_back({NodeClass::white(0), 0});
          w.push_back({NodeClass::white(1), 1});
        } else {
          w.push_back({NodeClass::black1(), 1});
          for (int a = 2; a <= d; ++a) w.push_back({NodeClass::white(a), a});
          w.push_back({NodeClass::white(0), 0});
        }
        return w;
      case NodeClass::B0:
        break;
    }
    throw std::invalid_argument("white tree has no class " + to_string(cls));
  }

  if (cls.root) {
    w.push_back({NodeClass::black1(), 2});
    for (int a = 3; a <= d; ++a) w.push_back({NodeClass::white(a), a});
    w.push_back({NodeClass::white(0), 0});
    return w;
  }
  switch (cls.kind) {
    case NodeClass::B0:
      w.push_back({NodeClass::black0(), 0});
      for (int a = 1; a <= c; ++a) w.push_back({NodeClass::white(a), a});
      return w;
    case NodeClass::B1:
      w.push_back({NodeClass::black1(), 1});
      for (int a = 2; a <= d; ++a) w.push_back({NodeClass::white(a), a});
      return w;
    case NodeClass::W:
      if (cls.alpha == 0) {
        w.push_back({NodeClass::black0(), 0});
        for (int a = 1; a <= c; ++a) w.push_back({NodeClass::white(a), a});
        w.push_back({NodeClass::white(0), 0});
      } else {
        w.push_back({NodeClass::black0(), 0});
        for (int a = 1; a <= d; ++a) w.push_back({NodeClass::white(a), a});
      }
      return w;
    case NodeClass::B2:
      break;
  }
  throw std::invalid_argument("black tree has no class " + to_string(cls));
}

std::string to_string(const std::vector<SonEntry>& word) {
  std::string out;
  for (const SonEntry& e : word) {
    if (!out.empty()) out += ' ';
    out += to_string(e.cls);
    out += ':';
    out += std::to_string(e.signature);
  }
  return out;
}

PreferredSon preferred_son(const MetallicCode& code) {
  const NodeClass cls = classify(TreeKind::white, code);
  const int count = cls.is_black() ? code.grade.p - 3 : code.grade.p - 2;
  const int position =
      (cls.root || cls.is_white_special()) ? count - 1 : count;
  return {position, zero_branch(code, 1)};
}

Successor successor(const MetallicCode& code) {
  require_node(code);
  return {detail::is_pow(code), zero_branch(code, 1)};
}

BigInt black_to_white_number(const Grade& g, const BigInt& nu_b) {
  if (nu_b < 1)
    throw std::domain_error("node numbers start at 1");
  SequenceTable table(g);
  int n = 0;
  while (table.m(n) < nu_b) ++n;
  if (n <= 1) return nu_b;
  return nu_b + table.M(n - 2);
}

std::vector<MetallicCode> decomposition_vectors(const Grade& g, TreeKind kind,
                                                int n) {
  if (n < 1)
    throw std::invalid_argument("decomposition vectors exist for levels >= 1");
  const int d = g.d();
  const int c = g.c();
  std::vector<MetallicCode> out;
  if (kind == TreeKind::white) {
    for (int a = 2; a <= d; ++a) {
      std::vector<int> v{a, 0};
      v.insert(v.end(), n - 1, 1);
      out.emplace_back(g, std::move(v));
    }
    std::vector<int> mid{1, 0};
    mid.insert(mid.end(), n, 1);
    out.emplace_back(g, std::move(mid));
    out.emplace_back(g, std::vector<int>(n + 2, 1));
  } else {
    for (int a = 1; a <= c; ++a) {
      std::vector<int> v{a};
      v.insert(v.end(), n - 1, c);
      v.push_back(d);
      out.emplace_back(g, std::move(v));
    }
    std::vector<int> last{1};
    last.insert(last.end(), n + 1, 0);
    out.emplace_back(g, std::move(last));
  }
  return out;
}

MetallicCode zero_branch(const MetallicCode& code, int h) {
  require_node(code);
  if (h < 0)
    throw std::invalid_argument("zero branch length must be >= 0");
  MetallicCode out = code;
  out.digits.insert(out.digits.end(), h, 0);
  if (!is_canonical(out))
    throw std::logic_error("appending zeros must preserve canonicity");
  return out;
}

}  // namespace metallic
