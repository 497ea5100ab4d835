#include "upalg/relations.hpp"

#include <algorithm>
#include <numeric>

#include "upalg/error.hpp"

namespace upalg {

Relation::Relation(int n, BitVec bits) : n_(n), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(n * n)) throw Error(Errc::BaseMismatch, "relation width is not n²");
}

Relation Relation::identity(int n) {
  Relation r(n);
  for (int x = 0; x < n; ++x) r.set(x, x);
  return r;
}

Relation Relation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw Error(Errc::InvalidInput, "relation pair out of range");
    r.set(x, y);
  }
  return r;
}

Relation Relation::graph(const std::vector<int>& f) {
  const int n = static_cast<int>(f.size());
  Relation r(n);
  for (int x = 0; x < n; ++x) r.set(x, f[static_cast<std::size_t>(x)]);
  return r;
}

Relation Relation::order(const FinitePoset& p) {
  Relation r(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) r.set(x, y);
  return r;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  bits_.for_each([&](int i) { out.emplace_back(i / n_, i % n_); });
  return out;
}

namespace {

void same_base(const Relation& a, const Relation& b) {
  if (a.base_size() != b.base_size()) throw Error(Errc::BaseMismatch, "relations over different base sets");
}

void same_base(const FinitePoset& x, const Relation& r) {
  if (x.size() != r.base_size()) throw Error(Errc::BaseMismatch, "relation base differs from poset");
}

void require_upset(const FinitePoset& x, const Relation& r, const char* what) {
  if (!is_rel_upset(x, r)) throw Error(Errc::NotUpClosed, std::string(what) + " is not ≼-up-closed");
}

}  // namespace

Relation operator&(const Relation& a, const Relation& b) {
  same_base(a, b);
  return Relation(a.n_, a.bits_ & b.bits_);
}

Relation operator|(const Relation& a, const Relation& b) {
  same_base(a, b);
  return Relation(a.n_, a.bits_ | b.bits_);
}

Relation rel_compose(const Relation& r, const Relation& s) {
  same_base(r, s);
  const int n = r.base_size();
  Relation out(n);
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (!r.test(x, z)) continue;
      for (int y = 0; y < n; ++y)
        if (s.test(z, y)) out.set(x, y);
    }
  return out;
}

Relation rel_converse(const Relation& r) {
  const int n = r.base_size();
  Relation out(n);
  for (auto [x, y] : r.pairs()) out.set(y, x);
  return out;
}

Relation rel_complement(const Relation& r) { return Relation(r.base_size(), r.bits().complement()); }

bool is_rel_upset(const FinitePoset& x, const Relation& r) {
  same_base(x, r);
  const int n = x.size();
  for (auto [a, b] : r.pairs())
    for (int u = 0; u < n; ++u) {
      if (!x.leq(u, a)) continue;
      for (int v = 0; v < n; ++v)
        if (x.leq(b, v) && !r.test(u, v)) return false;
    }
  return true;
}

namespace {

bool is_permutation_of_carrier(const std::vector<int>& f) {
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  return true;
}

int at(const std::vector<int>& f, int x) { return f[static_cast<std::size_t>(x)]; }

}  // namespace

OrderAutomorphism OrderAutomorphism::make(const FinitePoset& p, std::vector<int> map) {
  if (static_cast<int>(map.size()) != p.size() || !is_permutation_of_carrier(map))
    throw Error(Errc::AutomorphismContractViolation, "α is not a bijection of the carrier");
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != p.leq(at(map, x), at(map, y)))
        throw Error(Errc::AutomorphismContractViolation, "α does not preserve and reflect the order");
  return OrderAutomorphism{std::move(map)};
}

OrderAutomorphism OrderAutomorphism::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return OrderAutomorphism{id};
}

DualAutomorphism DualAutomorphism::make(const FinitePoset& p, std::vector<int> map) {
  if (static_cast<int>(map.size()) != p.size() || !is_permutation_of_carrier(map))
    throw Error(Errc::AutomorphismContractViolation, "β is not a bijection of the carrier");
  for (int x = 0; x < p.size(); ++x) {
    if (at(map, at(map, x)) != x) throw Error(Errc::AutomorphismContractViolation, "β is not self-inverse");
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != p.leq(at(map, y), at(map, x)))
        throw Error(Errc::AutomorphismContractViolation, "β does not reverse the order");
  }
  return DualAutomorphism{std::move(map)};
}

Relation rel_tilde(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha) {
  same_base(x, r);
  require_upset(x, r, "argument of ~");
  Relation out = rel_compose(rel_converse(rel_complement(r)), Relation::graph(alpha.map));
  require_upset(x, out, "~R");
  return out;
}

Relation rel_minus(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha) {
  same_base(x, r);
  require_upset(x, r, "argument of -");
  Relation out = rel_compose(Relation::graph(alpha.map), rel_converse(rel_complement(r)));
  require_upset(x, out, "-R");
  return out;
}

Relation rel_neg(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha,
                 const DualAutomorphism& beta) {
  same_base(x, r);
  require_upset(x, r, "argument of ¬");
  const Relation a = Relation::graph(alpha.map);
  const Relation b = Relation::graph(beta.map);
  if (b != rel_compose(rel_compose(a, b), a))
    throw Error(Errc::AutomorphismContractViolation, "β differs from α;β;α");
  Relation out = rel_compose(rel_compose(rel_compose(a, b), rel_complement(r)), b);
  require_upset(x, out, "¬R");
  return out;
}

int FullAlgebra::index_of(const Relation& r) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), r,
                             [](const Relation& a, const Relation& b) { return a.bits() < b.bits(); });
  if (it == elements.end() || *it != r) return -1;
  return static_cast<int>(it - elements.begin());
}

namespace {

FullAlgebra full_base(const FinitePoset& x, std::size_t cap) {
  const int n = x.size();
  FullAlgebra out;
  for (const auto& u : enumerate_upsets(twisted_square(x), cap)) out.elements.emplace_back(n, u.members());
  const int m = static_cast<int>(out.elements.size());
  auto& a = out.algebra;
  a.size = m;
  a.meet = Table2(m);
  a.join = Table2(m);
  a.fusion = Table2(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto& r = out.elements[static_cast<std::size_t>(i)];
      const auto& s = out.elements[static_cast<std::size_t>(j)];
      a.meet.at(i, j) = out.index_of(r & s);
      a.join.at(i, j) = out.index_of(r | s);
      int f = out.index_of(rel_compose(r, s));
      if (f < 0) throw Error(Errc::NotUpClosed, "composite of up-closed relations is not up-closed");
      a.fusion.at(i, j) = f;
    }
  a.unit = out.index_of(Relation::order(x));
  return out;
}

UnaryTable lift(const FullAlgebra& alg, auto&& op) {
  UnaryTable t;
  t.reserve(alg.elements.size());
  for (const auto& r : alg.elements) t.push_back(alg.index_of(op(r)));
  return t;
}

}  // namespace

FullAlgebra build_full_dinfl(const FinitePoset& x, const OrderAutomorphism& alpha, std::size_t cap) {
  OrderAutomorphism::make(x, alpha.map);
  FullAlgebra out = full_base(x, cap);
  out.algebra.minus = lift(out, [&](const Relation& r) { return rel_minus(x, r, alpha); });
  out.algebra.tilde = lift(out, [&](const Relation& r) { return rel_tilde(x, r, alpha); });
  out.algebra.provenance = "Up(X²,≼)";
  return out;
}

FullAlgebra build_full_dqra(const FinitePoset& x, const OrderAutomorphism& alpha, const DualAutomorphism& beta,
                            std::size_t cap) {
  DualAutomorphism::make(x, beta.map);
  FullAlgebra out = build_full_dinfl(x, alpha, cap);
  out.algebra.neg = lift(out, [&](const Relation& r) { return rel_neg(x, r, alpha, beta); });
  return out;
}

bool lemma2_holds(const Relation& gamma, const Relation& r) {
  same_base(gamma, r);
  const Relation id = Relation::identity(gamma.base_size());
  const Relation conv = rel_converse(gamma);
  if (rel_compose(conv, gamma) != id || rel_compose(gamma, conv) != id)
    throw Error(Errc::NotABijection, "γ is not a bijection");
  const Relation rc = rel_complement(r);
  return rel_complement(rel_compose(gamma, r)) == rel_compose(gamma, rc) &&
         rel_complement(rel_compose(r, gamma)) == rel_compose(rc, gamma);
}

bool lemma2_holds(const std::vector<int>& gamma, const Relation& r) {
  for (int v : gamma)
    if (v < 0 || v >= static_cast<int>(gamma.size())) throw Error(Errc::NotABijection, "γ leaves the carrier");
  return lemma2_holds(Relation::graph(gamma), r);
}

}  // namespace upalg
