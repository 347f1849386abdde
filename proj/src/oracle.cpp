/**
 * @file oracle.cpp
 * @brief Reference trees by explicit production and the cross-check battery.
 */
#include "metallic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "metallic/arithmetic.hpp"
#include "metallic/detail/shape.hpp"
#include "metallic/navigation.hpp"

namespace metallic {

namespace {

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

NodeClass root_class(TreeKind kind) {
  NodeClass cls =
      (kind == TreeKind::white) ? NodeClass::white(1) : NodeClass::black0();
  cls.root = true;
  return cls;
}

}  // namespace

std::int64_t TreeSnapshot::level_last(int l) const {
  if (l < 0 || l > max_level) throw std::out_of_range("level out of range");
  if (l == max_level) return size();
  return level_first[l + 1] - 1;
}

TreeSnapshot build(const Grade& g, TreeKind kind, int max_level) {
  if (max_level < 0) throw std::invalid_argument("max_level must be >= 0");
  SequenceTable table(g);
  const BigInt total_big =
      (kind == TreeKind::white) ? table.M(max_level) : table.m(max_level);
  if (total_big > 10'000'000)
    throw std::invalid_argument("refusing to build more than 10^7 nodes");
  const std::int64_t total = to_i64(total_big);

  TreeSnapshot t{g, kind, max_level, {}, {}, {}, {}, {}, {}};
  t.black.assign(total + 1, 0);
  t.father.assign(total + 1, 0);
  t.first_son.assign(total + 1, 0);
  t.son_count.assign(total + 1, 0);
  t.level.assign(total + 1, 0);
  t.level_first.assign(max_level + 1, 0);

  t.black[1] = (kind == TreeKind::black);
  t.level[1] = 0;
  t.level_first[0] = 1;
  std::int64_t next = 2;
  for (std::int64_t v = 1; v <= total && next <= total; ++v) {
    if (t.level[v] >= max_level) break;
    const int sons = t.black[v] ? g.p - 3 : g.p - 2;
    t.first_son[v] = next;
    t.son_count[v] = sons;
    for (int i = 0; i < sons; ++i) {
      const std::int64_t s = next + i;
      if (s > total) throw std::logic_error("production overran the level sum");
      t.father[s] = v;
      t.black[s] = (i == 0);
      t.level[s] = t.level[v] + 1;
      if (t.level_first[t.level[s]] == 0) t.level_first[t.level[s]] = s;
    }
    next += sons;
  }
  if (next != total + 1)
    throw std::logic_error("production undershot the level sum");
  return t;
}

std::vector<MetallicCode> codes_by_chain(const Grade& g, std::int64_t count) {
  std::vector<MetallicCode> codes;
  codes.reserve(count + 1);
  codes.emplace_back(g, std::vector<int>{0});
  for (std::int64_t k = 1; k <= count; ++k)
    codes.push_back(increment(codes.back()));
  return codes;
}

MetallicCode code_by_greedy_backtracking(const Grade& g, std::int64_t value) {
  if (value < 0) throw std::invalid_argument("value must be >= 0");
  if (value == 0) return MetallicCode(g, {0});
  SequenceTable table(g);
  // Canonical codes of length k cover [m_{k-1}, m_k): fix the length first.
  int len = 1;
  while (table.m(len) <= value) ++len;
  std::vector<std::int64_t> m(len + 1), cap(len + 1);
  for (int i = 0; i <= len; ++i) m[i] = to_i64(table.m(i));
  // cap[i]: largest value the places 0..i-1 can still absorb.
  cap[0] = 0;
  for (int i = 1; i <= len; ++i) cap[i] = cap[i - 1] + g.d() * m[i - 1];

  std::vector<int> digits(len, 0);  // most-significant first
  // Depth-first search over digit choices, high digit first, pruning both
  // by remaining capacity and by the forbidden factor d c^* d.  Within a
  // fixed length the factor-free strings are value-unique, so the first
  // complete assignment is the canonical code.
  std::function<bool(int, std::int64_t, int)> dfs =
      [&](int pos, std::int64_t rest, int open) -> bool {
    if (pos < 0) return rest == 0;
    if (rest > cap[pos + 1]) return false;
    const int hi = static_cast<int>(std::min<std::int64_t>(
        g.d(), rest / m[pos]));
    for (int q = hi; q >= 0; --q) {
      const std::int64_t next_rest = rest - q * m[pos];
      if (next_rest > cap[pos]) continue;
      if (pos == len - 1 && q == 0) continue;  // leading digit must be nonzero
      // forbidden factor tracking: `open` is 1 while the digits read so far
      // end in d c^j (a factor candidate); a d then closes it.
      int next_open;
      if (q == g.d()) {
        if (open == 1) continue;  // would complete d c^* d
        next_open = 1;
      } else if (q == g.c()) {
        next_open = open;
      } else {
        next_open = 0;
      }
      if (dfs(pos - 1, next_rest, next_open)) {
        digits[len - 1 - pos] = q;
        return true;
      }
    }
    return false;
  };
  if (!dfs(len - 1, value, 0))
    throw std::logic_error("no canonical code found by backtracking");
  return MetallicCode(g, digits);
}

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << "CHECK " << c.name << " p=" << grade.p << " levels=" << levels
        << (c.pass ? " PASS" : " FAIL");
    if (!c.pass && !c.witness.empty()) out << " " << c.witness;
    out << "\n";
  }
  return out.str();
}

namespace {

struct ClassTable {
  std::vector<NodeClass> cls;  // by node number
  std::vector<int> sig;        // expected signature (root: low digit of "1")
};

/// Assign classes recursively by the son words, fathers before sons.
ClassTable assign_classes(const TreeSnapshot& t) {
  ClassTable out;
  out.cls.assign(t.size() + 1, NodeClass::white(-1));
  out.sig.assign(t.size() + 1, -1);
  out.cls[1] = root_class(t.kind);
  out.sig[1] = 1;
  for (std::int64_t v = 2; v <= t.size(); ++v) {
    const std::int64_t f = t.father[v];
    const auto word = sons_signature_word(t.grade, t.kind, out.cls[f]);
    const std::int64_t pos = v - t.first_son[f];
    if (pos < 0 || pos >= static_cast<std::int64_t>(word.size()))
      throw std::logic_error("son outside its father's word");
    out.cls[v] = word[pos].cls;
    out.sig[v] = word[pos].signature;
  }
  return out;
}

struct Checker {
  Report& rep;
  void add(const std::string& name, bool pass, const std::string& witness) {
    rep.checks.push_back({name, pass, pass ? "" : witness});
  }
};

std::string ntext(const MetallicCode& code) { return to_text(code); }

}  // namespace

Report verify_all(const Grade& g, int max_level) {
  Report rep{g, max_level, {}};
  Checker ck{rep};
  SequenceTable table(g);
  const TreeSnapshot wt = build(g, TreeKind::white, max_level);
  const TreeSnapshot bt = build(g, TreeKind::black, max_level);
  const auto codes = codes_by_chain(g, wt.size());
  const ClassTable wcls = assign_classes(wt);
  const ClassTable bcls = assign_classes(bt);

  // --- levels: boundaries from the sequences, level_of from the digits.
  {
    bool pass = true;
    std::string wit;
    for (int l = 0; pass && l <= max_level; ++l) {
      const std::int64_t wf = (l == 0) ? 1 : to_i64(table.M(l - 1)) + 1;
      const std::int64_t bf = (l == 0) ? 1 : to_i64(table.m(l - 1)) + 1;
      if (wt.level_first[l] != wf || bt.level_first[l] != bf) {
        pass = false;
        wit = "level " + std::to_string(l) + " boundary";
      }
    }
    for (std::int64_t v = 1; pass && v <= wt.size(); ++v)
      if (level_of(TreeKind::white, codes[v]) != wt.level[v]) {
        pass = false;
        wit = "white level_of(" + ntext(codes[v]) + ")";
      }
    for (std::int64_t v = 1; pass && v <= bt.size(); ++v)
      if (level_of(TreeKind::black, codes[v]) != bt.level[v]) {
        pass = false;
        wit = "black level_of(" + ntext(codes[v]) + ")";
      }
    ck.add("levels", pass, wit);
  }

  // --- chain_codes: encode == increment chain == greedy backtracking.
  {
    bool pass = true;
    std::string wit;
    for (std::int64_t v = 1; pass && v <= wt.size(); ++v) {
      if (encode(g, BigInt(v)) != codes[v]) {
        pass = false;
        wit = "encode(" + std::to_string(v) + ") != chain";
      } else if (decode(codes[v]) != v) {
        pass = false;
        wit = "decode(chain " + std::to_string(v) + ")";
      }
    }
    const std::int64_t greedy_cap = std::min<std::int64_t>(wt.size(), 5000);
    for (std::int64_t v = 1; pass && v <= greedy_cap; ++v)
      if (code_by_greedy_backtracking(g, v) != codes[v]) {
        pass = false;
        wit = "backtracking(" + std::to_string(v) + ")";
      }
    ck.add("chain_codes", pass, wit);
  }

  // --- code_tables: the three closed families, plus the non-canonical
  //     d c^{k-2} d reading of m_k.
  {
    bool pass = true;
    std::string wit;
    for (int n = 0; pass; ++n) {
      const BigInt M = table.M(n);
      if (M > wt.size()) break;
      std::vector<int> ones(n + 1, 1);
      if (codes[to_i64(M)].digits != ones) {
        pass = false;
        wit = "M_" + std::to_string(n);
      }
    }
    for (int n = 0; pass; ++n) {
      const BigInt m = table.m(n);
      if (m > wt.size()) break;
      std::vector<int> pow{1};
      pow.insert(pow.end(), n, 0);
      if (codes[to_i64(m)].digits != pow) {
        pass = false;
        wit = "m_" + std::to_string(n);
      }
    }
    for (int n = 1; pass; ++n) {
      const BigInt b = table.b(n);
      if (b > wt.size()) break;
      std::vector<int> v(n - 1, g.c());
      v.push_back(g.d());
      if (codes[to_i64(b)].digits != v) {
        pass = false;
        wit = "b_" + std::to_string(n);
      }
    }
    for (int k = 2; pass && k <= max_level; ++k) {
      // d c^{k-2} d, read as raw weights, must equal m_k.
      BigInt sum = BigInt(g.d()) * table.m(k - 1) + g.d();
      for (int i = 1; i <= k - 2; ++i) sum += BigInt(g.c()) * table.m(i);
      if (sum != table.m(k)) {
        pass = false;
        wit = "d c^* d reading of m_" + std::to_string(k);
      }
    }
    ck.add("code_tables", pass, wit);
  }

  // --- classification: recursive word assignment vs digit-scan classify,
  //     colour production, and signatures.
  {
    bool pass = true;
    std::string wit;
    auto run = [&](const TreeSnapshot& t, const ClassTable& ct) {
      for (std::int64_t v = 1; pass && v <= t.size(); ++v) {
        const NodeClass got = classify(t.kind, codes[v]);
        if (got != ct.cls[v]) {
          pass = false;
          wit = to_string(t.kind) + " classify(" + ntext(codes[v]) +
                ") = " + to_string(got) + " want " + to_string(ct.cls[v]);
        } else if (ct.cls[v].is_black() != static_cast<bool>(t.black[v])) {
          pass = false;
          wit = to_string(t.kind) + " colour of " + std::to_string(v);
        } else if (codes[v].digits.back() != ct.sig[v]) {
          pass = false;
          wit = to_string(t.kind) + " signature of " + std::to_string(v);
        }
      }
    };
    run(wt, wcls);
    run(bt, bcls);
    ck.add("classification", pass, wit);
  }

  // --- son_words: word sizes match the production, colours match.
  {
    bool pass = true;
    std::string wit;
    auto run = [&](const TreeSnapshot& t, const ClassTable& ct) {
      for (std::int64_t v = 1; pass && v <= t.size(); ++v) {
        if (t.first_son[v] == 0) continue;
        const auto word = sons_signature_word(t.grade, t.kind, ct.cls[v]);
        if (static_cast<std::int64_t>(word.size()) != t.son_count[v]) {
          pass = false;
          wit = to_string(t.kind) + " word size at " + std::to_string(v);
          return;
        }
        for (std::size_t i = 0; pass && i < word.size(); ++i) {
          const std::int64_t s = t.first_son[v] + static_cast<std::int64_t>(i);
          if (word[i].cls.is_black() != static_cast<bool>(t.black[s])) {
            pass = false;
            wit = to_string(t.kind) + " son colour at " + std::to_string(s);
          }
        }
      }
    };
    run(wt, wcls);
    run(bt, bcls);
    ck.add("son_words", pass, wit);
  }

  // --- preferred_son: position among the father's materialized sons.
  {
    bool pass = true;
    std::string wit;
    for (std::int64_t v = 1; pass && v <= wt.size(); ++v) {
      if (wt.first_son[v] == 0) continue;
      const PreferredSon ps = preferred_son(codes[v]);
      const std::int64_t n = to_i64(decode(ps.code));
      if (n < wt.first_son[v] || n >= wt.first_son[v] + wt.son_count[v] ||
          ps.position != n - wt.first_son[v] + 1) {
        pass = false;
        wit = "preferred son of " + std::to_string(v);
      }
    }
    ck.add("preferred_son", pass, wit);
  }

  // --- successor: [nu]*0 sits where the black tree says it must.
  {
    bool pass = true;
    std::string wit;
    for (std::int64_t v = 1; pass && v <= bt.size(); ++v) {
      if (bt.level[v] >= max_level) continue;
      const Successor s = successor(codes[v]);
      const std::int64_t n = to_i64(decode(s.code));
      if (s.rightmost) {
        if (n != to_i64(table.m(bt.level[v] + 1))) {
          pass = false;
          wit = "successor of rightmost " + std::to_string(v);
        }
      } else {
        if (v + 1 > bt.size() || bt.first_son[v + 1] == 0 ||
            n != bt.first_son[v + 1]) {
          pass = false;
          wit = "successor of " + std::to_string(v);
        }
      }
    }
    ck.add("successor", pass, wit);
  }

  // --- leftmost/rightmost branches of the black tree carry b1 / w0.
  {
    bool pass = true;
    std::string wit;
    for (std::int64_t v = 2; pass && v <= bt.size(); ++v) {
      const int n = bt.level[v];
      const bool leftmost = (v == to_i64(table.m(n - 1)) + 1);
      const bool rightmost = (v == to_i64(table.m(n)));
      if ((bcls.cls[v].kind == NodeClass::B1) != leftmost) {
        pass = false;
        wit = "b1 vs leftmost at " + std::to_string(v);
      } else if ((bcls.cls[v].kind == NodeClass::W && bcls.cls[v].alpha == 0) !=
                 rightmost) {
        pass = false;
        wit = "w0 vs rightmost at " + std::to_string(v);
      }
    }
    ck.add("leftmost_rightmost", pass, wit);
  }

  // --- numbering_shift: the black tree embeds into the white tree at the
  //     shift M_{n-2}, commuting with fathers and preserving colour; and the
  //     shifted rightmost nodes read d e^{n-2} c.
  {
    bool pass = true;
    std::string wit;
    for (std::int64_t v = 2; pass && v <= bt.size(); ++v) {
      const std::int64_t sv = to_i64(black_to_white_number(g, BigInt(v)));
      const std::int64_t sf =
          to_i64(black_to_white_number(g, BigInt(bt.father[v])));
      if (sv > wt.size() || wt.father[sv] != sf) {
        pass = false;
        wit = "father shift at " + std::to_string(v);
      } else if (wt.black[sv] != bt.black[v]) {
        pass = false;
        wit = "colour shift at " + std::to_string(v);
      } else if (wt.level[sv] != bt.level[v]) {
        pass = false;
        wit = "level shift at " + std::to_string(v);
      }
    }
    for (int n = 2; pass && n <= max_level; ++n) {
      const MetallicCode got = encode(g, table.m(n) - table.M(n - 2));
      std::vector<int> want{g.d()};
      want.insert(want.end(), n - 2, g.e());
      want.push_back(g.c());
      if (got.digits != want) {
        pass = false;
        wit = "shift code at level " + std::to_string(n);
      }
    }
    ck.add("numbering_shift", pass, wit);
  }

  // --- decomposition vectors: counts, canonicity, closed-form values.
  {
    bool pass = true;
    std::string wit;
    for (int n = 1; pass && n <= std::min(max_level - 1, 10); ++n) {
      const auto wv = decomposition_vectors(g, TreeKind::white, n);
      if (static_cast<int>(wv.size()) != g.p - 2) {
        pass = false;
        wit = "white vector count at " + std::to_string(n);
        break;
      }
      for (std::size_t i = 0; pass && i < wv.size(); ++i) {
        const BigInt want =
            table.M(n + 1) - BigInt(g.p - 3 - static_cast<int>(i)) * table.m(n);
        if (!is_canonical(wv[i]) || decode(wv[i]) != want) {
          pass = false;
          wit = "white vector " + ntext(wv[i]);
        }
      }
      const auto bv = decomposition_vectors(g, TreeKind::black, n);
      if (static_cast<int>(bv.size()) != g.p - 3) {
        pass = false;
        wit = "black vector count at " + std::to_string(n);
        break;
      }
      for (std::size_t i = 0; pass && i < bv.size(); ++i) {
        const BigInt want =
            table.m(n + 1) - BigInt(g.p - 4 - static_cast<int>(i)) * table.m(n);
        if (!is_canonical(bv[i]) || decode(bv[i]) != want) {
          pass = false;
          wit = "black vector " + ntext(bv[i]);
        }
      }
    }
    ck.add("decomposition", pass, wit);
  }

  // --- strips: every white node peels to a unique strip whose local number
  //     lies in the right black level, the map back is the identity, and the
  //     strip widths per level are the b sequence.
  {
    bool pass = true;
    std::string wit;
    std::map<std::pair<int, int>, std::int64_t> width;  // (level, strip)
    for (std::int64_t v = 2; pass && v <= wt.size(); ++v) {
      BigInt nu = v;
      int ell = wt.level[v];
      int strip = 0;
      while (ell >= 1 && nu > table.M(ell - 2) + table.m(ell)) {
        nu -= table.m(ell);
        --ell;
        ++strip;
      }
      if (ell == 0) {
        // leading tile: must be exactly M_strip
        if (BigInt(v) != table.M(strip)) {
          pass = false;
          wit = "leading tile at " + std::to_string(v);
        }
        continue;
      }
      const BigInt local = nu - table.M(ell - 2);
      if (local <= table.m(ell - 1) || local > table.m(ell)) {
        pass = false;
        wit = "local level at " + std::to_string(v);
        break;
      }
      BigInt back = local + table.M(ell - 2);
      for (int s = 1; s <= strip; ++s) back += table.m(ell + s);
      if (back != v) {
        pass = false;
        wit = "peel inverse at " + std::to_string(v);
      }
      ++width[{wt.level[v], strip}];
    }
    for (auto& [key, count] : width) {
      if (!pass) break;
      const auto [ell, strip] = key;
      if (count != to_i64(table.b(ell - strip))) {
        pass = false;
        wit = "strip width at level " + std::to_string(ell) + " strip " +
              std::to_string(strip);
      }
    }
    ck.add("strips", pass, wit);
  }

  // --- neighbours, four combinations of tiling and tree.
  for (Tiling tiling : {Tiling::P4, Tiling::P23}) {
    for (TreeKind kind : {TreeKind::white, TreeKind::black}) {
      const TreeSnapshot& t = (kind == TreeKind::white) ? wt : bt;
      const int sides = (tiling == Tiling::P4) ? g.p : g.p + 2;
      bool pass = true;
      std::string wit;
      auto list_of = [&](const MetallicCode& code) {
        return (kind == TreeKind::white) ? neighbors_white(tiling, code)
                                         : neighbors_black(tiling, code);
      };
      for (std::int64_t v = 1; pass && v <= t.size(); ++v) {
        if (t.level[v] >= max_level) continue;  // need sons materialized
        const auto entries = list_of(codes[v]);
        if (static_cast<int>(entries.size()) != sides) {
          pass = false;
          wit = "side count at " + std::to_string(v);
          break;
        }
        std::vector<std::int64_t> in_numbers;
        std::vector<std::int64_t> son_numbers;
        for (int i = 0; pass && i < sides; ++i) {
          const NeighborEntry& e = entries[i];
          if (e.side != i + 1) {
            pass = false;
            wit = "side numbering at " + std::to_string(v);
            break;
          }
          if (e.kind == NeighborEntry::in_sector ||
              e.kind == NeighborEntry::father_tile) {
            const std::int64_t n = to_i64(decode(*e.code));
            if (n < 1 || n > t.size() || n == v) {
              pass = false;
              wit = "partner range at " + std::to_string(v) + " side " +
                    std::to_string(e.side);
              break;
            }
            in_numbers.push_back(n);
            if (n >= t.first_son[v] &&
                n < t.first_son[v] + t.son_count[v])
              son_numbers.push_back(n);
          }
        }
        if (!pass) break;
        // side 1: father (or the root's crossing, checked by kind)
        if (v == 1) {
          const auto want_kind = (kind == TreeKind::white)
                                     ? NeighborEntry::central
                                     : NeighborEntry::strip_father;
          if (entries[0].kind != want_kind) {
            pass = false;
            wit = "root side 1";
            break;
          }
        } else {
          if (entries[0].kind != NeighborEntry::father_tile ||
              to_i64(decode(*entries[0].code)) != t.father[v]) {
            pass = false;
            wit = "side 1 father at " + std::to_string(v);
            break;
          }
        }
        // sons appear exactly once each, in order
        std::vector<std::int64_t> want_sons;
        for (int i = 0; i < t.son_count[v]; ++i)
          want_sons.push_back(t.first_son[v] + i);
        if (son_numbers != want_sons) {
          pass = false;
          wit = "son order at " + std::to_string(v);
          break;
        }
        // partners are pairwise distinct
        std::vector<std::int64_t> sorted = in_numbers;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
          pass = false;
          wit = "duplicate partner at " + std::to_string(v);
          break;
        }
        // symmetry for in-sector partners
        for (const NeighborEntry& e : entries) {
          if (!pass) break;
          if (e.kind != NeighborEntry::in_sector &&
              e.kind != NeighborEntry::father_tile)
            continue;
          const std::int64_t n = to_i64(decode(*e.code));
          if (t.level[n] >= max_level) continue;
          bool found = false;
          for (const NeighborEntry& back : list_of(*e.code)) {
            if ((back.kind == NeighborEntry::in_sector ||
                 back.kind == NeighborEntry::father_tile) &&
                to_i64(decode(*back.code)) == v) {
              found = true;
              break;
            }
          }
          if (!found) {
            pass = false;
            wit = "asymmetric edge " + std::to_string(v) + " ~ " +
                  std::to_string(n);
          }
        }
        // marker mutuality: a crossing (delta, X) must be answered by a
        // crossing (-delta, v) in X's own list of the same kind family.
        for (const NeighborEntry& e : entries) {
          if (!pass) break;
          const bool crossing = e.kind == NeighborEntry::cross_sector ||
                                e.kind == NeighborEntry::cross_strip ||
                                e.kind == NeighborEntry::strip_father;
          if (!crossing || !e.code) continue;
          const std::int64_t n = to_i64(decode(*e.code));
          if (n < 1 || n > t.size() || t.level[n] >= max_level) continue;
          bool found = false;
          for (const NeighborEntry& back : list_of(*e.code)) {
            const bool back_crossing =
                back.kind == NeighborEntry::cross_sector ||
                back.kind == NeighborEntry::cross_strip ||
                back.kind == NeighborEntry::strip_father;
            if (back_crossing && back.code && back.delta == -e.delta &&
                to_i64(decode(*back.code)) == v) {
              found = true;
              break;
            }
          }
          if (!found) {
            pass = false;
            wit = "unanswered marker at " + std::to_string(v) + " side " +
                  std::to_string(e.side);
          }
        }
      }
      ck.add("neighbors_" + to_string(tiling) + "_" + to_string(kind), pass,
             wit);
    }
  }

  // --- paths: all four algorithms agree with the snapshot father chains.
  {
    bool pass = true;
    std::string wit;
    PathOptions resolve;
    resolve.resolve_codes = true;
    auto chain_of = [](const TreeSnapshot& t, std::int64_t v) {
      std::vector<std::int64_t> chain;
      for (std::int64_t x = v; x != 1; x = t.father[x]) chain.push_back(x);
      std::reverse(chain.begin(), chain.end());
      return chain;
    };
    auto check_steps = [&](const PathTrace& tr,
                           const std::vector<std::int64_t>& chain,
                           const TreeSnapshot& t, const ClassTable& ct,
                           bool check_codes, const char* tag,
                           std::int64_t v) {
      if (!pass) return;
      if (tr.steps.size() != chain.size()) {
        pass = false;
        wit = std::string(tag) + " length at " + std::to_string(v);
        return;
      }
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const PathStep& s = tr.steps[i];
        const std::int64_t x = chain[i];
        if (s.level != t.level[x] || s.black != static_cast<bool>(t.black[x]) ||
            s.signature != ct.sig[x] ||
            (s.number && *s.number != x) ||
            (check_codes && (!s.code || *s.code != codes[x]))) {
          pass = false;
          wit = std::string(tag) + " step " + std::to_string(i + 1) + " at " +
                std::to_string(v);
          return;
        }
      }
    };
    for (std::int64_t v = 1; pass && v <= wt.size(); ++v) {
      const auto chain = chain_of(wt, v);
      check_steps(path_bottom_up(TreeKind::white, codes[v]), chain, wt, wcls,
                  true, "bottom_up", v);
      check_steps(path_top_down(codes[v], resolve), chain, wt, wcls, true,
                  "top_down", v);
      check_steps(path_via_strips(codes[v]), chain, wt, wcls, true, "strips",
                  v);
    }
    for (std::int64_t v = 1; pass && v <= bt.size(); ++v) {
      const auto chain = chain_of(bt, v);
      check_steps(path_bottom_up(TreeKind::black, codes[v]), chain, bt, bcls,
                  true, "bottom_up_black", v);
      check_steps(path_black(codes[v], resolve), chain, bt, bcls, true,
                  "black", v);
    }
    ck.add("paths", pass, wit);
  }

  return rep;
}

}  // namespace metallic
