#include "upalg/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "upalg/error.hpp"

namespace upalg {

std::string FiniteExpandedLattice::label(int a) const {
  if (labels.empty()) return std::to_string(a);
  return labels[static_cast<std::size_t>(a)];
}

namespace {

// Each helper scans tuples in lexicographic order and records violations of
// `holds`; in FirstWitness mode it stops at the first one.
template <typename Pred>
void law1(Report& r, CheckMode mode, int n, const char* law, Pred holds) {
  for (int a = 0; a < n; ++a)
    if (!holds(a)) {
      r.add(law, {a});
      if (mode == CheckMode::FirstWitness) return;
    }
}

template <typename Pred>
void law2(Report& r, CheckMode mode, int n, const char* law, Pred holds) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!holds(a, b)) {
        r.add(law, {a, b});
        if (mode == CheckMode::FirstWitness) return;
      }
}

template <typename Pred>
void law3(Report& r, CheckMode mode, int n, const char* law, Pred holds) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!holds(a, b, c)) {
          r.add(law, {a, b, c});
          if (mode == CheckMode::FirstWitness) return;
        }
}

void require_negations(const FiniteExpandedLattice& a) {
  if (!a.has_negations()) throw Error(Errc::SignatureMismatch, "algebra has no linear negations");
}

void require_neg(const FiniteExpandedLattice& a) {
  require_negations(a);
  if (!a.neg) throw Error(Errc::SignatureMismatch, "algebra has no ¬");
}

int join_all(const FiniteExpandedLattice& a, const std::vector<int>& xs) {
  int acc = bottom(a);
  for (int x : xs) acc = a.join(acc, x);
  return acc;
}

}  // namespace

Report check_lattice(const FiniteExpandedLattice& a, CheckMode mode) {
  Report r;
  r.subject = "lattice";
  const int n = a.size;
  law2(r, mode, n, "meet-commutative", [&](int x, int y) { return a.meet(x, y) == a.meet(y, x); });
  law2(r, mode, n, "join-commutative", [&](int x, int y) { return a.join(x, y) == a.join(y, x); });
  law3(r, mode, n, "meet-associative",
       [&](int x, int y, int z) { return a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z)); });
  law3(r, mode, n, "join-associative",
       [&](int x, int y, int z) { return a.join(a.join(x, y), z) == a.join(x, a.join(y, z)); });
  law2(r, mode, n, "absorption",
       [&](int x, int y) { return a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x; });
  return r;
}

Report check_monoid(const FiniteExpandedLattice& a, CheckMode mode) {
  Report r;
  r.subject = "monoid";
  const int n = a.size;
  law3(r, mode, n, "fusion-associative",
       [&](int x, int y, int z) { return a.mul(a.mul(x, y), z) == a.mul(x, a.mul(y, z)); });
  law1(r, mode, n, "unit", [&](int x) { return a.mul(a.unit, x) == x && a.mul(x, a.unit) == x; });
  return r;
}

int bottom(const FiniteExpandedLattice& a) {
  int acc = 0;
  for (int x = 1; x < a.size; ++x) acc = a.meet(acc, x);
  return acc;
}

int top(const FiniteExpandedLattice& a) {
  int acc = 0;
  for (int x = 1; x < a.size; ++x) acc = a.join(acc, x);
  return acc;
}

Table2 right_residuals(const FiniteExpandedLattice& a) {
  const int n = a.size;
  Table2 t(n);
  std::vector<int> below;
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      below.clear();
      for (int x = 0; x < n; ++x)
        if (a.leq(a.mul(x, b), c)) below.push_back(x);
      t.at(c, b) = join_all(a, below);
    }
  return t;
}

Table2 left_residuals(const FiniteExpandedLattice& a) {
  const int n = a.size;
  Table2 t(n);
  std::vector<int> below;
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c) {
      below.clear();
      for (int y = 0; y < n; ++y)
        if (a.leq(a.mul(x, y), c)) below.push_back(y);
      t.at(x, c) = join_all(a, below);
    }
  return t;
}

Report check_rl(const FiniteExpandedLattice& a, CheckMode mode) {
  Report r = check_lattice(a, mode);
  r.merge(check_monoid(a, mode));
  r.subject = "rl";
  if (!r.ok()) return r;
  Table2 rr = right_residuals(a);
  Table2 lr = left_residuals(a);
  law3(r, mode, a.size, "residuation", [&](int x, int y, int z) {
    bool le = a.leq(a.mul(x, y), z);
    return le == a.leq(x, rr(z, y)) && le == a.leq(y, lr(x, z));
  });
  return r;
}

Report check_distributive(const FiniteExpandedLattice& a, CheckMode mode) {
  Report r;
  r.subject = "distributive";
  law3(r, mode, a.size, "distributivity", [&](int x, int y, int z) {
    return a.meet(x, a.join(y, z)) == a.join(a.meet(x, y), a.meet(x, z));
  });
  return r;
}

Report check_in(const FiniteExpandedLattice& a, CheckMode mode) {
  require_negations(a);
  Report r;
  r.subject = "In";
  law1(r, mode, a.size, "In", [&](int x) { return a.t(a.m(x)) == x && a.m(a.t(x)) == x; });
  if (a.m(a.unit) != a.t(a.unit) && (r.ok() || mode == CheckMode::CollectAll))
    r.add("In", {a.unit}, "-1 differs from ~1");
  return r;
}

Report check_infl(const FiniteExpandedLattice& a, CheckMode mode) {
  require_negations(a);
  Report r = check_lattice(a, mode);
  r.merge(check_monoid(a, mode));
  r.subject = "infl";
  law3(r, mode, a.size, "eq2", [&](int x, int y, int z) {
    bool le = a.leq(a.mul(x, y), z);
    return le == a.leq(x, a.m(a.mul(y, a.t(z)))) && le == a.leq(y, a.t(a.mul(a.m(z), x)));
  });
  r.merge(check_in(a, mode));
  return r;
}

Report check_dinfl(const FiniteExpandedLattice& a, CheckMode mode) {
  Report r = check_infl(a, mode);
  r.merge(check_distributive(a, mode));
  r.subject = "dinfl";
  return r;
}

Report check_cyclic(const FiniteExpandedLattice& a, CheckMode mode) {
  require_negations(a);
  Report r;
  r.subject = "cyclic";
  law1(r, mode, a.size, "cyclic", [&](int x) { return a.m(x) == a.t(x); });
  return r;
}

Report check_dm(const FiniteExpandedLattice& a, CheckMode mode) {
  require_neg(a);
  Report r;
  r.subject = "Dm";
  law2(r, mode, a.size, "Dm", [&](int x, int y) { return a.ng(a.join(x, y)) == a.meet(a.ng(x), a.ng(y)); });
  return r;
}

Report check_dp(const FiniteExpandedLattice& a, CheckMode mode) {
  require_neg(a);
  Report r;
  r.subject = "Dp";
  law2(r, mode, a.size, "Dp",
       [&](int x, int y) { return a.ng(a.mul(x, y)) == a.t(a.mul(a.m(a.ng(y)), a.m(a.ng(x)))); });
  return r;
}

Report check_di(const FiniteExpandedLattice& a, CheckMode mode) {
  require_neg(a);
  Report r;
  r.subject = "Di";
  law1(r, mode, a.size, "Di", [&](int x) { return a.ng(a.t(x)) == a.m(a.ng(x)); });
  return r;
}

Report check_dqra(const FiniteExpandedLattice& a, CheckMode mode) {
  require_neg(a);
  Report r = check_dinfl(a, mode);
  r.subject = "dqra";
  law1(r, mode, a.size, "neg-involution", [&](int x) { return a.ng(a.ng(x)) == x; });
  r.merge(check_dm(a, mode));
  r.merge(check_dp(a, mode));
  r.merge(check_di(a, mode));
  const int one = a.unit;
  if (!(a.ng(one) == a.m(one) && a.m(one) == a.t(one))) r.add("neg-unit", {one}, "¬1 = -1 = ~1");
  return r;
}

FinitePoset lattice_order(const FiniteExpandedLattice& a) {
  BoolMatrix m(static_cast<std::size_t>(a.size), std::vector<bool>(static_cast<std::size_t>(a.size)));
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.leq(x, y);
  return FinitePoset(m, a.labels);
}

std::vector<int> idempotents(const FiniteExpandedLattice& a) {
  std::vector<int> out;
  for (int x = 0; x < a.size; ++x)
    if (a.mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> order_isomorphisms(const FiniteExpandedLattice& a, const FiniteExpandedLattice& b) {
  std::vector<std::vector<int>> out;
  if (a.size != b.size) return out;
  const int n = a.size;
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(f);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        int fz = f[static_cast<std::size_t>(z)];
        ok = a.leq(z, x) == b.leq(fz, y) && a.leq(x, z) == b.leq(y, fz);
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      self(self, x + 1);
      used[static_cast<std::size_t>(y)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace upalg
