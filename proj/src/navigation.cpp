/**
 * @file navigation.cpp
 * @brief Fathers, neighbours and the four root-path algorithms.
 */
#include "metallic/navigation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "metallic/detail/shape.hpp"
#include "metallic/detail/walk.hpp"

namespace metallic {

namespace {

void require_node(const MetallicCode& code) {
  if (code.is_zero())
    throw std::invalid_argument("zero is not a tree node");
  if (!is_canonical(code))
    throw std::invalid_argument("code must be canonical: " + to_text(code));
}

bool is_root(const MetallicCode& code) {
  return code.length() == 1 && code.digits[0] == 1;
}

MetallicCode append_digit(const MetallicCode& x, int a) {
  std::vector<int> v = x.digits;
  v.push_back(a);
  return MetallicCode(x.grade, std::move(v));
}

MetallicCode ones_code(const Grade& g, int n) {
  return MetallicCode(g, std::vector<int>(n, 1));
}

MetallicCode pow_code(const Grade& g, int zeros) {
  std::vector<int> v{1};
  v.insert(v.end(), zeros, 0);
  return MetallicCode(g, std::move(v));
}

MetallicCode ones_two_code(const Grade& g, int ones) {
  std::vector<int> v(ones, 1);
  v.push_back(2);
  return MetallicCode(g, std::move(v));
}

NodeClass white_root_class() {
  NodeClass cls = NodeClass::white(1);
  cls.root = true;
  return cls;
}

NodeClass black_root_class() {
  NodeClass cls = NodeClass::black0();
  cls.root = true;
  return cls;
}

}  // namespace

namespace detail {

WalkResult white_walk(const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  const int d = g.d();
  const int c = g.c();
  const auto& ds = code.digits;
  const int len = code.length();

  WalkResult out;
  if (is_root(code)) {
    out.final_class = white_root_class();
    out.digit_visits = 1;
    return out;
  }

  // The walk keeps two candidate ancestors per consumed prefix P: the node
  // (P) itself ("minus") and (P)+1 ("plus").  Which of the two the real
  // ancestor chain goes through is decided by a later digit; until then both
  // candidates' entries stay pending.
  std::vector<WalkEntry> resolved, minus_pend, plus_pend;
  auto resolve = [&](std::vector<WalkEntry>& chosen) {
    for (const WalkEntry& e : chosen) {
      resolved.push_back(e);
      ++out.digit_visits;
    }
    minus_pend.clear();
    plus_pend.clear();
  };

  // A = class of (P), B = class of (P)+1.
  NodeClass A, B;
  const int a0 = ds[0];
  ++out.digit_visits;
  if (a0 == 1) {
    A = white_root_class();
    B = NodeClass::black2();  // node 2
  } else if (a0 == d) {
    A = (d == 2) ? NodeClass::black2() : NodeClass::white(d);
    B = NodeClass::white(0);  // (d)+1 is the code 10
  } else {
    A = (a0 == 2) ? NodeClass::black2() : NodeClass::white(a0);
    B = NodeClass::white(a0 + 1);
  }
  minus_pend.push_back({a0, A, 1, 0});
  plus_pend.push_back({a0 == d ? 0 : a0 + 1, B, 1, 1});

  auto in_start_at_two = [](const NodeClass& x) {
    // Classes whose first son takes signature 2: b1, b2, w1 and the root.
    return x.root || x.is_black() || (x.kind == NodeClass::W && x.alpha == 1);
  };
  auto special = [](const NodeClass& x) {
    return x.root || x.is_white_special();
  };

  for (int t = 1; t < len; ++t) {
    const int a = ds[t];
    ++out.digit_visits;
    NodeClass nA, nB;
    int sigB;
    if (a >= 2) {
      // [P]a is a son of (P)+1; the old plus candidate wins.
      resolve(plus_pend);
      nA = (a == 2 && in_start_at_two(B)) ? NodeClass::black2()
                                          : NodeClass::white(a);
      if (a == d || (B.kind == NodeClass::W && B.alpha == 0 && a == c)) {
        nB = NodeClass::white(0);
        sigB = 0;
      } else {
        nB = NodeClass::white(a + 1);
        sigB = a + 1;
      }
    } else if (a == 0) {
      if (special(A)) {
        // [P]0 hangs under (P): the minus candidate wins.
        resolve(minus_pend);
        nA = NodeClass::white(0);
        nB = NodeClass::white(1);
        sigB = 1;
      } else {
        // [P]0 hangs under (P)+1 while [P]0+1 = [P]1 hangs under (P)+2:
        // the split survives, both pending lists stay open.
        assert(B.kind == NodeClass::W && B.alpha != 1);
        nA = NodeClass::white(0);
        nB = NodeClass::black1();
        sigB = 1;
      }
    } else {  // a == 1
      if (special(A)) {
        // [P]1 stays under (P), [P]2 under (P)+1: still unresolved.
        nA = NodeClass::white(1);
        nB = NodeClass::black2();
        sigB = 2;
      } else {
        // [P]1 is the first son of (P)+1.
        resolve(plus_pend);
        assert(B.kind == NodeClass::W && B.alpha != 1);
        nA = NodeClass::black1();
        if (B.alpha == 0 && c == 1) {
          nB = NodeClass::white(0);
          sigB = 0;
        } else {
          nB = NodeClass::white(2);
          sigB = 2;
        }
      }
    }
    A = nA;
    B = nB;
    minus_pend.push_back({a, A, t + 1, 0});
    plus_pend.push_back({sigB, B, t + 1, 1});
  }

  resolve(minus_pend);  // the node itself is the last minus candidate
  out.final_class = resolved.back().cls;
  if (!resolved.empty() && resolved.front().cls.root)
    resolved.erase(resolved.begin());
  out.entries = std::move(resolved);
  return out;
}

WalkResult black_walk(const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  const int d = g.d();
  const int c = g.c();
  const auto& ds = code.digits;
  const int len = code.length();
  const int k = len - 1;

  WalkResult out;
  if (is_root(code)) {
    out.final_class = black_root_class();
    out.digit_visits = 1;
    return out;
  }

  // pow_prefix[j]: the first j+1 digits read 1 0^j.
  std::vector<char> pow_prefix(len);
  pow_prefix[0] = (ds[0] == 1);
  for (int j = 1; j < len; ++j)
    pow_prefix[j] = pow_prefix[j - 1] && ds[j] == 0;
  // prev_non_c[j]: largest t <= j with ds[t] != c (-1 if none); gives the
  // stop position of any carry scan in O(1).
  std::vector<int> prev_non_c(len);
  for (int j = 0; j < len; ++j)
    prev_non_c[j] = (ds[j] != c) ? j : (j > 0 ? prev_non_c[j - 1] : -1);
  out.digit_visits += 2 * len;

  // Symbolic form of inc^delta(P_j) where P_j is the first j+1 digits:
  //   kPrefix  the prefix itself
  //   kBump    prefix with its low digit replaced by `aux` (one low bump)
  //   kCarry   digits 0..aux-1 with the low one raised, then zeros
  //   kCarry1  like kCarry but with final digit 1 (second increment)
  //   kBump0   digits 0..j-1 with the low one raised, then a single 0
  enum Form { kPrefix, kBump, kCarry, kCarry1, kBump0 };
  struct Sym {
    Form form;
    int aux;
  };
  struct Fact {
    bool first_son;
    int sig;
    NodeClass cls;
  };

  auto advance = [&](int j, Sym s) -> Sym {
    switch (s.form) {
      case kPrefix: {
        const int a = ds[j];
        if (a < c) return {kBump, a + 1};
        if (a == d) return {kCarry, j};
        const int t = (j >= 1) ? prev_non_c[j - 1] : -1;
        if (t >= 0 && ds[t] == d) return {kCarry, t};
        return {kBump, d};
      }
      case kBump: {
        const int last = s.aux;
        if (last < c) return {kBump, last + 1};
        if (last == c) {
          const int t = (j >= 1) ? prev_non_c[j - 1] : -1;
          if (t >= 0 && ds[t] == d) return {kCarry, t};
          return {kBump, d};
        }
        // last == d: bump the digit above, zero the low place.
        return {kBump0, 0};
      }
      case kCarry:
        return {kCarry1, s.aux};
      default:
        throw std::logic_error("ancestor offset exceeded 2");
    }
  };

  auto facts = [&](int j, Sym s) -> Fact {
    switch (s.form) {
      case kPrefix: {
        const int a = ds[j];
        const bool pow_plus = (j >= 1) && pow_prefix[j];
        const bool pow_one = (j >= 1) && pow_prefix[j - 1] && a == 1;
        const bool two = (j == 0) && a == 2;
        if (pow_plus) return {false, 0, NodeClass::white(0)};
        if (pow_one || two) return {true, a, NodeClass::black1()};
        if (a == 0) return {true, 0, NodeClass::black0()};
        return {false, a, NodeClass::white(a)};
      }
      case kBump: {
        const int last = s.aux;
        const bool pow_one = (last == 1) && (j >= 1) && pow_prefix[j - 1];
        const bool two = (j == 0) && last == 2;
        if (pow_one || two) return {true, last, NodeClass::black1()};
        return {false, last, NodeClass::white(last)};
      }
      case kCarry: {
        // 1 0^{j+1} when the carry rolled over the whole prefix.
        if (s.aux == 0) return {false, 0, NodeClass::white(0)};
        return {true, 0, NodeClass::black0()};
      }
      case kCarry1:
        if (s.aux == 0) return {true, 1, NodeClass::black1()};
        return {false, 1, NodeClass::white(1)};
      case kBump0:
        if (j == 0) return {false, 0, NodeClass::white(0)};  // the code 10
        return {true, 0, NodeClass::black0()};
    }
    throw std::logic_error("bad symbolic form");
  };

  // Offsets of the true ancestors over the prefix values, low end first:
  // eps[k] = 0 and, one prefix up,
  //   eps[j-1] = [father((P_j)) = (P_{j-1}) + 1]
  //              + #{delta in 1..eps[j] : (P_j)+delta is a first son}.
  std::vector<int> eps(len, 0);
  for (int j = k; j >= 1; --j) {
    ++out.digit_visits;
    int next = (ds[j] == 0 && pow_prefix[j - 1]) ? 0 : 1;
    Sym s{kPrefix, 0};
    for (int delta = 1; delta <= eps[j]; ++delta) {
      s = advance(j, s);
      ++out.digit_visits;
      if (facts(j, s).first_son) ++next;
    }
    if (next > 2)
      throw std::logic_error("ancestor offset exceeded 2");
    eps[j - 1] = next;
  }

  for (int j = 0; j <= k; ++j) {
    if (j == 0 && ds[0] == 1 && eps[0] == 0)
      continue;  // that ancestor is the root
    Sym s{kPrefix, 0};
    for (int delta = 1; delta <= eps[j]; ++delta) s = advance(j, s);
    const Fact f = facts(j, s);
    ++out.digit_visits;
    out.entries.push_back({f.sig, f.cls, j + 1, eps[j]});
  }
  out.final_class = out.entries.back().cls;
  return out;
}

}  // namespace detail

std::string to_string(Tiling t) {
  return t == Tiling::P4 ? "p4" : "p23";
}

Tiling tiling_from_string(const std::string& s) {
  if (s == "p4") return Tiling::P4;
  if (s == "p23") return Tiling::P23;
  throw std::invalid_argument("unknown tiling: " + s);
}

std::optional<MetallicCode> father(TreeKind kind, const MetallicCode& code) {
  require_node(code);
  if (is_root(code)) return std::nullopt;
  const Grade& g = code.grade;
  const auto& ds = code.digits;
  const int len = code.length();
  const int a0 = ds.back();
  if (len == 1) return MetallicCode(g, {1});  // sons of the root
  MetallicCode q(g, std::vector<int>(ds.begin(), ds.end() - 1));

  if (kind == TreeKind::black)
    return (a0 == 0 && detail::is_pow(q)) ? q : increment(q);

  if (a0 == 0) return q;
  if (a0 >= 2) return increment(q);
  // a0 == 1: the father is (Q) when the run of 1s above the low digit ends
  // in a 0 or runs off the code, and (Q)+1 when it ends on a digit >= 2.
  int i = len - 2;
  while (i >= 0 && ds[i] == 1) --i;
  if (i < 0 || ds[i] == 0) return q;
  return increment(q);
}

namespace {

struct NeighborBuilder {
  std::vector<NeighborEntry> entries;

  void in_sector(const MetallicCode& code) {
    entries.push_back({next(), NeighborEntry::in_sector, code, 0});
  }
  void father_tile(const MetallicCode& code) {
    entries.push_back({next(), NeighborEntry::father_tile, code, 0});
  }
  void central() {
    entries.push_back({next(), NeighborEntry::central, std::nullopt, 0});
  }
  void cross_sector(int delta, std::optional<MetallicCode> code) {
    entries.push_back(
        {next(), NeighborEntry::cross_sector, std::move(code), delta});
  }
  void cross_strip(int delta, const MetallicCode& code) {
    entries.push_back({next(), NeighborEntry::cross_strip, code, delta});
  }
  void strip_father(int delta, const MetallicCode& code) {
    entries.push_back({next(), NeighborEntry::strip_father, code, delta});
  }

 private:
  int next() const { return static_cast<int>(entries.size()) + 1; }
};

/// Every tile of a tiling has the same number of sides; a mismatch here is
/// a table bug, not a caller error.
void check_sides(const NeighborBuilder& b, int sides) {
  if (static_cast<int>(b.entries.size()) != sides)
    throw std::logic_error("neighbour table has the wrong number of sides");
}

}  // namespace

std::vector<NeighborEntry> neighbors_white(Tiling tiling,
                                           const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  const int p = g.p;
  const int d = g.d();
  const int c = g.c();
  const int sides = (tiling == Tiling::P4) ? p : p + 2;
  NeighborBuilder b;

  if (is_root(code)) {
    b.central();
    if (tiling == Tiling::P23) b.cross_sector(-1, MetallicCode(g, {1}));
    for (int a = 2; a <= d; ++a) b.in_sector(MetallicCode(g, {a}));
    b.in_sector(pow_code(g, 1));   // the son 10
    b.in_sector(ones_code(g, 2));  // the son 11
    b.cross_sector(+1, MetallicCode(g, {2}));
    if (tiling == Tiling::P23) b.cross_sector(+1, MetallicCode(g, {1}));
    check_sides(b, sides);
    return b.entries;
  }

  const NodeClass cls = classify(TreeKind::white, code);
  const MetallicCode f = *father(TreeKind::white, code);
  const int len = code.length();
  b.father_tile(f);

  if (cls.is_black()) {
    if (detail::is_ones_then_two(code)) {
      b.cross_sector(-1, ones_code(g, len));
      if (tiling == Tiling::P23) b.cross_sector(-1, ones_code(g, len + 1));
    } else {
      b.in_sector(decrement(f));
      if (tiling == Tiling::P23) b.in_sector(decrement(code));
    }
    const MetallicCode below = decrement(code);
    for (int a = 2; a <= d; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    b.in_sector(append_digit(code, 1));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  } else if (cls.alpha >= 2) {
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 1; a <= d; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    b.in_sector(append_digit(code, 1));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  } else if (cls.alpha == 0) {
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 1; a <= c; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    b.in_sector(append_digit(code, 1));
    b.in_sector(append_digit(code, 2));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  } else {  // w1
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 2; a <= d; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    b.in_sector(append_digit(code, 1));
    if (detail::is_all_ones(code)) {
      b.cross_sector(+1, ones_two_code(g, len - 1));
      if (tiling == Tiling::P23) b.cross_sector(+1, ones_two_code(g, len - 2));
    } else {
      b.in_sector(append_digit(code, 2));
      if (tiling == Tiling::P23) b.in_sector(increment(code));
    }
  }
  check_sides(b, sides);
  return b.entries;
}

std::vector<NeighborEntry> neighbors_black(Tiling tiling,
                                           const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  const int p = g.p;
  const int d = g.d();
  const int c = g.c();
  const int sides = (tiling == Tiling::P4) ? p : p + 2;
  NeighborBuilder b;

  if (is_root(code)) {
    b.strip_father(-1, MetallicCode(g, {1}));
    if (tiling == Tiling::P23) b.cross_strip(-1, pow_code(g, 1));
    for (int a = 2; a <= d; ++a) b.in_sector(MetallicCode(g, {a}));
    b.in_sector(pow_code(g, 1));  // the son 10
    b.cross_strip(+1, MetallicCode(g, {1}));
    b.cross_sector(+1, std::nullopt);
    if (tiling == Tiling::P23) b.cross_sector(+1, std::nullopt);
    check_sides(b, sides);
    return b.entries;
  }

  const NodeClass cls = classify(TreeKind::black, code);
  const MetallicCode f = *father(TreeKind::black, code);
  b.father_tile(f);

  if (cls.kind == NodeClass::B1) {
    const int n = level_of(TreeKind::black, code);
    b.cross_strip(-1, pow_code(g, n));
    if (tiling == Tiling::P23) b.cross_strip(-1, pow_code(g, n + 1));
    const MetallicCode below = decrement(code);
    for (int a = 1; a <= d; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  } else if (cls.kind == NodeClass::B0) {
    b.in_sector(decrement(f));
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 0; a <= c; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  } else if (cls.alpha == 0) {  // the node m_n
    const int n = code.length() - 1;
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 0; a <= c; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    b.cross_strip(+1, increment(f));
    if (tiling == Tiling::P23)
      b.cross_strip(+1, n >= 2 ? increment(pow_code(g, n - 2))
                               : MetallicCode(g, {1}));
  } else {  // generic white
    if (tiling == Tiling::P23) b.in_sector(decrement(code));
    const MetallicCode below = decrement(code);
    for (int a = 0; a <= d; ++a) b.in_sector(append_digit(below, a));
    b.in_sector(append_digit(code, 0));
    if (tiling == Tiling::P23) b.in_sector(increment(code));
  }
  check_sides(b, sides);
  return b.entries;
}

std::string to_string(const NeighborEntry& e) {
  const std::string code = e.code ? to_text(*e.code) : "-";
  const std::string delta =
      (e.delta >= 0 ? "+" : "") + std::to_string(e.delta);
  switch (e.kind) {
    case NeighborEntry::in_sector:    return code;
    case NeighborEntry::father_tile:  return "father " + code;
    case NeighborEntry::central:      return "central";
    case NeighborEntry::cross_sector: return "sector" + delta + " " + code;
    case NeighborEntry::cross_strip:  return "strip" + delta + " " + code;
    case NeighborEntry::strip_father: return "strip" + delta + " father " + code;
  }
  throw std::logic_error("bad neighbour kind");
}

namespace {

/// Resolve a walk entry to its code: the stated prefix of the walked code,
/// incremented `offset` times.
MetallicCode resolve_entry_code(const MetallicCode& code,
                                const detail::WalkEntry& e) {
  MetallicCode prefix(code.grade,
                      std::vector<int>(code.digits.begin(),
                                       code.digits.begin() + e.prefix_len));
  for (int i = 0; i < e.offset; ++i) prefix = increment(prefix);
  return prefix;
}

PathTrace trace_from_walk(TreeKind kind, const MetallicCode& code,
                          const detail::WalkResult& walk,
                          const PathOptions& opts) {
  PathTrace tr{kind, {}, walk.digit_visits};
  int level = 1;
  for (const detail::WalkEntry& e : walk.entries) {
    PathStep step{level++, e.signature, e.cls.is_black(), std::nullopt,
                  std::nullopt};
    if (opts.resolve_codes) {
      step.code = resolve_entry_code(code, e);
      step.number = decode(*step.code);
    }
    tr.steps.push_back(std::move(step));
  }
  return tr;
}

}  // namespace

PathTrace path_top_down(const MetallicCode& code, const PathOptions& opts) {
  return trace_from_walk(TreeKind::white, code, detail::white_walk(code), opts);
}

PathTrace path_black(const MetallicCode& code, const PathOptions& opts) {
  return trace_from_walk(TreeKind::black, code, detail::black_walk(code), opts);
}

PathTrace path_bottom_up(TreeKind kind, const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  const int c = g.c();
  PathTrace tr{kind, {}, 0};

  // Climb to the root by repeated father(), charging every digit looked at.
  std::vector<MetallicCode> chain;
  MetallicCode cur = code;
  while (!is_root(cur)) {
    chain.push_back(cur);
    const auto& ds = cur.digits;
    const int len = cur.length();
    const int a0 = ds.back();
    ++tr.digit_visits;  // the signature digit
    if (len == 1) {
      cur = MetallicCode(g, {1});
      continue;
    }
    MetallicCode q(g, std::vector<int>(ds.begin(), ds.end() - 1));
    bool bump;
    if (kind == TreeKind::black) {
      if (a0 == 0) {
        // pow test on the remainder
        int i = 0;
        ++tr.digit_visits;
        bool pow = ds[0] == 1;
        for (i = 1; pow && i < len - 1; ++i) {
          ++tr.digit_visits;
          pow = ds[i] == 0;
        }
        bump = !pow;
      } else {
        bump = true;
      }
    } else {
      if (a0 == 0) {
        bump = false;
      } else if (a0 >= 2) {
        bump = true;
      } else {
        int i = len - 2;
        while (i >= 0 && ds[i] == 1) {
          ++tr.digit_visits;
          --i;
        }
        if (i >= 0) ++tr.digit_visits;
        bump = (i >= 0 && ds[i] >= 2);
      }
    }
    if (bump) {
      // charge the carry scan the increment performs
      ++tr.digit_visits;
      if (!q.is_zero() && q.digits.back() == c) {
        int i = q.length() - 2;
        while (i >= 0 && q.digits[i] == c) {
          ++tr.digit_visits;
          --i;
        }
        if (i >= 0) ++tr.digit_visits;
      }
      cur = increment(q);
    } else {
      cur = q;
    }
  }
  std::reverse(chain.begin(), chain.end());

  // Assign classes top-down along the chain using the son words.
  NodeClass parent_cls =
      (kind == TreeKind::white) ? white_root_class() : black_root_class();
  MetallicCode parent_storage(g, {1});
  int level = 1;
  for (const MetallicCode& node : chain) {
    const int sig = node.digits.back();
    const bool own_prefix =
        node.length() == parent_storage.length() + 1 &&
        std::equal(parent_storage.digits.begin(), parent_storage.digits.end(),
                   node.digits.begin());
    NodeClass cls;
    if (own_prefix) {
      cls = (sig == 0) ? NodeClass::white(0) : NodeClass::white(1);
      assert(sig <= 1);
    } else {
      const auto word = sons_signature_word(g, kind, parent_cls);
      cls = (sig == word.front().signature) ? word.front().cls
                                            : NodeClass::white(sig);
    }
    tr.steps.push_back(
        {level++, sig, cls.is_black(), node, std::nullopt});
    parent_cls = cls;
    parent_storage = node;
  }
  return tr;
}

PathTrace path_via_strips(const MetallicCode& code) {
  require_node(code);
  const Grade& g = code.grade;
  PathTrace tr{TreeKind::white, {}, 0};
  if (is_root(code)) return tr;
  SequenceTable table(g);

  // Peel enclosing strips: while nu lies beyond strip 0 of its level's
  // coordinates, subtract the level weight and descend one level.
  BigInt nu = decode(code);
  int ell = level_of(TreeKind::white, code);
  int strip = 0;
  while (ell >= 1 && nu > table.M(ell - 2) + table.m(ell)) {
    nu -= table.m(ell);
    --ell;
    ++strip;
    ++tr.digit_visits;
  }

  // The strip's leading tiles are the ancestors M_1 .. M_strip.
  for (int t = 1; t <= strip; ++t)
    tr.steps.push_back({t, 1, false, ones_code(g, t + 1), table.M(t)});

  if (ell == 0) return tr;  // the node itself is a leading tile

  // Local path inside the strip's black tree, then map back.
  const BigInt nu_black = nu - table.M(ell - 2);
  const MetallicCode local = encode(g, nu_black);
  PathOptions resolve;
  resolve.resolve_codes = true;
  const PathTrace black_part = path_black(local, resolve);
  tr.digit_visits += black_part.digit_visits;
  for (const PathStep& step : black_part.steps) {
    const int lam = step.level;
    BigInt white_nu = *step.number + table.M(lam - 2);
    for (int s = 1; s <= strip; ++s) white_nu += table.m(lam + s);
    const MetallicCode white_code = encode(g, white_nu);
    tr.steps.push_back({lam + strip, white_code.digits.back(),
                        classify(TreeKind::white, white_code).is_black(),
                        white_code, white_nu});
  }
  return tr;
}

}  // namespace metallic
