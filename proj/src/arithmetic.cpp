/**
 * @file arithmetic.cpp
 * @brief Digitwise arithmetic: canonicalization, add, compare, increment,
 *        decrement, complement, subtract.
 */
#include "metallic/arithmetic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace metallic {

CarryTable::CarryTable(const Grade& g) : grade(g) {
  const int bound = g.carry_bound();
  const int top = 2 * bound;  // covers any sum of two in-range digits + carries
  reduced.resize(static_cast<std::size_t>(top) + 1);
  fires.resize(static_cast<std::size_t>(top) + 1);
  for (int v = 0; v <= top; ++v) {
    fires[static_cast<std::size_t>(v)] = v >= bound ? 1 : 0;
    reduced[static_cast<std::size_t>(v)] = v >= bound ? v - bound : v;
  }
}

Representation::Representation(const Grade& g, const MetallicCode& code)
    : grade(g) {
  digits.assign(code.digits.rbegin(), code.digits.rend());
}

MetallicCode Representation::to_code() const {
  std::size_t top = digits.size();
  while (top > 1 && digits[top - 1] == 0) --top;
  std::vector<int> out;
  out.reserve(top);
  for (std::size_t i = top; i-- > 0;) {
    out.push_back(static_cast<int>(digits[i]));
  }
  if (out.empty()) out.push_back(0);
  return MetallicCode(grade, std::move(out));
}

namespace detail {

void canonicalize(Representation& rep) {
  auto& a = rep.digits;
  const Grade& g = rep.grade;
  const long long bound = g.carry_bound();
  const long long dd = g.d();
  const long long cc = g.c();
  if (a.empty()) a.push_back(0);
  long long mass = 0;
  for (long long v : a) {
    if (v < 0) throw std::logic_error("negative digit in representation");
    mass += v;
  }
  // Each rewrite strictly lowers the total digit mass (carry: by p-4, or
  // p-3 at place 0; pattern: by at least 2), so the initial mass bounds the
  // number of rewrites.
  long long budget = mass + 8;
  for (;;) {
    bool changed = false;
    // Carry sweep: a_i >= p-2 -> subtract p-2 here, +1 above and below.
    for (std::size_t i = 0; i < a.size(); ++i) {
      while (a[i] >= bound) {
        if (--budget < 0) {
          throw std::logic_error("canonicalization exceeded its rewrite budget");
        }
        a[i] -= bound;
        if (i + 1 == a.size()) a.push_back(0);
        a[i + 1] += 1;
        if (i >= 1) a[i - 1] += 1;
        changed = true;
      }
    }
    // Pattern sweep: erase one factor d c^j d (places h..h+j+1), then loop
    // so the carries it may trigger are resolved before the next erase.
    for (std::size_t h = 0; h + 1 < a.size(); ++h) {
      if (a[h] != dd) continue;
      std::size_t j = h + 1;
      while (j < a.size() && a[j] == cc) ++j;
      if (j < a.size() && a[j] == dd) {
        if (--budget < 0) {
          throw std::logic_error("canonicalization exceeded its rewrite budget");
        }
        for (std::size_t t = h; t <= j; ++t) a[t] = 0;
        if (j + 1 == a.size()) a.push_back(0);
        a[j + 1] += 1;
        if (h >= 1) a[h - 1] += 1;
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
}

}  // namespace detail

namespace {

MetallicCode make_code_trimmed(const Grade& g, std::vector<int> digits) {
  std::size_t lead = 0;
  while (lead + 1 < digits.size() && digits[lead] == 0) ++lead;
  digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
  if (digits.empty()) digits.push_back(0);
  return MetallicCode(g, std::move(digits));
}

void require_same_grade(const MetallicCode& a, const MetallicCode& b) {
  if (a.grade != b.grade) {
    throw std::invalid_argument("operands belong to different grades");
  }
}

}  // namespace

MetallicCode add(const MetallicCode& a, const MetallicCode& b) {
  require_same_grade(a, b);
  const Grade& g = a.grade;
  CarryTable table(g);
  Representation r(g, a);
  if (r.digits.size() < b.digits.size()) r.digits.resize(b.digits.size(), 0);
  for (int i = 0; i < b.length(); ++i) {
    r.digits[static_cast<std::size_t>(i)] += b.place(i);
  }
  // Table-assisted first carry pass; the fixpoint finishes whatever the
  // back-carries reopen and erases forbidden factors.
  for (std::size_t i = 0; i < r.digits.size(); ++i) {
    long long v = r.digits[i];
    if (v >= 0 && v < static_cast<long long>(table.fires.size()) &&
        table.fires[static_cast<std::size_t>(v)]) {
      r.digits[i] = table.reduced[static_cast<std::size_t>(v)];
      if (i + 1 == r.digits.size()) r.digits.push_back(0);
      r.digits[i + 1] += 1;
      if (i >= 1) r.digits[i - 1] += 1;
    }
  }
  detail::canonicalize(r);
  return r.to_code();
}

Ordering compare(const MetallicCode& a, const MetallicCode& b) {
  require_same_grade(a, b);
  if (!is_canonical(a) || !is_canonical(b)) {
    throw std::invalid_argument("compare requires canonical operands");
  }
  const std::size_t la = a.digits.size();
  const std::size_t lb = b.digits.size();
  const std::size_t n = std::max(la, lb);
  for (std::size_t i = 0; i < n; ++i) {
    int da = (i + la >= n) ? a.digits[i - (n - la)] : 0;
    int db = (i + lb >= n) ? b.digits[i - (n - lb)] : 0;
    if (da != db) return da < db ? Ordering::less : Ordering::greater;
  }
  return Ordering::equal;
}

MetallicCode increment(const MetallicCode& a) {
  const Grade& g = a.grade;
  if (!is_canonical(a)) throw std::invalid_argument("increment requires a canonical code");
  const int d = g.d();
  const int c = g.c();
  std::vector<int> ds = a.digits;  // most-significant first
  const int len = static_cast<int>(ds.size());
  auto at_place = [&](int i) -> int& { return ds[static_cast<std::size_t>(len - 1 - i)]; };
  const int a0 = a.is_zero() ? 0 : at_place(0);

  if (a0 < c || a.is_zero()) {
    at_place(0) += 1;
    return MetallicCode(g, std::move(ds));
  }
  if (a0 == d) {
    // [Q]d + 1 = [Q+1]0 via a carry at place 1.
    Representation r(g, a);
    r.digits[0] = 0;
    if (r.digits.size() < 2) r.digits.push_back(0);
    r.digits[1] += 1;
    detail::canonicalize(r);
    return r.to_code();
  }
  // a0 == c: scan the run of c's above place 0.
  int i = 1;
  while (i < len && at_place(i) == c) ++i;
  if (i == len || at_place(i) < d) {
    // No closing d above the run: the low place simply saturates.
    at_place(0) = d;
    return MetallicCode(g, std::move(ds));
  }
  // Closing d at place i: the whole block c^i under it rolls over.
  Representation r(g, a);
  for (int t = 0; t <= i; ++t) r.digits[static_cast<std::size_t>(t)] = 0;
  if (static_cast<int>(r.digits.size()) < i + 2) r.digits.push_back(0);
  r.digits[static_cast<std::size_t>(i + 1)] += 1;
  detail::canonicalize(r);
  return r.to_code();
}

MetallicCode decrement(const MetallicCode& a) {
  const Grade& g = a.grade;
  if (!is_canonical(a)) throw std::invalid_argument("decrement requires a canonical code");
  if (a.is_zero()) throw std::domain_error("decrement of zero");
  std::vector<int> ds = a.digits;
  const int len = static_cast<int>(ds.size());
  auto at_place = [&](int i) -> int& { return ds[static_cast<std::size_t>(len - 1 - i)]; };
  int i = 0;
  while (at_place(i) == 0) ++i;
  at_place(i) -= 1;
  if (i >= 1) {
    at_place(i - 1) = g.d();
    for (int t = 0; t <= i - 2; ++t) at_place(t) = g.c();
  }
  return make_code_trimmed(g, std::move(ds));
}

MetallicCode complement(const MetallicCode& b, int k) {
  const Grade& g = b.grade;
  if (k < 0) throw std::invalid_argument("complement requires k >= 0");
  if (!is_canonical(b)) throw std::invalid_argument("complement requires a canonical code");
  const int d = g.d();
  const int c = g.c();

  // Precondition value(b) <= m_k, checked digitwise against the code 10^k.
  {
    std::vector<int> mk(static_cast<std::size_t>(k) + 1, 0);
    mk[0] = 1;
    Ordering ord = compare(b, MetallicCode(g, std::move(mk)));
    if (ord == Ordering::greater) {
      throw std::domain_error("complement requires value(b) <= m_k");
    }
    if (ord == Ordering::equal) return MetallicCode(g, {0});
  }
  if (k == 0) {
    // m_0 = 1 and value(b) < 1: the complement is 1 itself.
    return MetallicCode(g, {1});
  }
  if (k == 1) {
    // m_1 = p-2; value(b) < p-2 means b is a single digit.
    int r = (g.p - 2) - (b.is_zero() ? 0 : b.place(0));
    if (r == g.p - 2) return MetallicCode(g, {1, 0});
    return MetallicCode(g, {r});
  }

  // General case: a starts as the k-digit string d c^{k-2} d, whose value is
  // exactly m_k.  Work least-significant first.
  std::vector<int> avec(static_cast<std::size_t>(k), c);
  avec[0] = d;
  avec[static_cast<std::size_t>(k - 1)] = d;
  std::vector<int> bvec(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < b.length(); ++i) bvec[static_cast<std::size_t>(i)] = b.place(i);

  MetallicCode aux(g, {0});
  int guard = 16 * k + 64;
  for (;;) {
    if (--guard < 0) {
      throw std::logic_error("complement exceeded its lifting budget");
    }
    // Most significant place where b exceeds a.
    int inv = -1;
    for (int i = k - 1; i >= 0; --i) {
      if (bvec[static_cast<std::size_t>(i)] > avec[static_cast<std::size_t>(i)]) {
        inv = i;
        break;
      }
    }
    if (inv < 0) break;
    // Lifting: move the low block of a (places 0..inv) into the side sum,
    // borrow one unit from place inv+1, and respread the block as the
    // pattern d c^{inv-1} d, which restores a and keeps value(a)+value(aux)
    // constant.  Place 0 of a is always d, so inv >= 1; place k-1 stays d,
    // so inv <= k-2 and the borrow place exists.
    assert(inv >= 1 && inv <= k - 2);
    assert(avec[static_cast<std::size_t>(inv) + 1] >= 1);
    std::vector<int> block;
    block.reserve(static_cast<std::size_t>(inv) + 1);
    for (int i = inv; i >= 0; --i) block.push_back(avec[static_cast<std::size_t>(i)]);
    aux = add(aux, make_code_trimmed(g, std::move(block)));
    avec[static_cast<std::size_t>(inv) + 1] -= 1;
    avec[0] = d;
    for (int t = 1; t < inv; ++t) avec[static_cast<std::size_t>(t)] = c;
    avec[static_cast<std::size_t>(inv)] = d;
  }
  // No inversions left: the digitwise difference needs no borrows.
  Representation diff(g);
  diff.digits.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    diff.digits[static_cast<std::size_t>(i)] =
        avec[static_cast<std::size_t>(i)] - bvec[static_cast<std::size_t>(i)];
  }
  detail::canonicalize(diff);
  return add(diff.to_code(), aux);
}

MetallicCode subtract(const MetallicCode& a, const MetallicCode& b) {
  require_same_grade(a, b);
  const Grade& g = a.grade;
  Ordering ord = compare(a, b);  // also enforces canonical operands
  if (ord == Ordering::less) throw std::domain_error("subtract requires a >= b");
  if (ord == Ordering::equal) return MetallicCode(g, {0});

  const int la = a.length();
  const int lb = b.length();
  // Most significant place where the (zero-padded) operands differ; since
  // a > b the first difference satisfies alpha > beta.
  int kp = -1, alpha = 0, beta = 0;
  for (int i = 0; i < la; ++i) {
    int da = a.digits[static_cast<std::size_t>(i)];
    int db = (i >= la - lb) ? b.digits[static_cast<std::size_t>(i - (la - lb))] : 0;
    if (da != db) {
      kp = la - 1 - i;
      alpha = da;
      beta = db;
      break;
    }
  }
  assert(kp >= 0 && alpha > beta);

  // result = (alpha-1-beta) * m_kp + (m_kp - b_low) + a_low, all digitwise.
  MetallicCode result(g, {0});
  if (alpha - 1 - beta > 0) {
    std::vector<int> unit(static_cast<std::size_t>(kp) + 1, 0);
    unit[0] = 1;
    MetallicCode mk(g, std::move(unit));
    for (int t = 0; t < alpha - 1 - beta; ++t) result = add(result, mk);
  }
  // Low kp digits of b (everything below the difference place).
  std::vector<int> blow;
  for (int i = kp - 1; i >= 0; --i) {
    blow.push_back(i < lb ? b.place(i) : 0);
  }
  if (blow.empty()) blow.push_back(0);
  result = add(result, complement(make_code_trimmed(g, std::move(blow)), kp));
  std::vector<int> alow;
  for (int i = kp - 1; i >= 0; --i) alow.push_back(a.place(i));
  if (alow.empty()) alow.push_back(0);
  result = add(result, make_code_trimmed(g, std::move(alow)));
  return result;
}

}  // namespace metallic
