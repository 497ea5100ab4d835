#include "upalg/representation.hpp"

#include "upalg/error.hpp"

namespace upalg {

Relation sigma(const Pomonoid& p, const UpSet& u) {
  const int n = p.size();
  if (u.width() != static_cast<std::size_t>(n)) throw Error(Errc::PosetMismatch, "up-set width differs from carrier");
  Relation out(n);
  const auto us = u.elements();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int w : us)
        if (p.leq(p.mul(x, w), y)) {
          out.set(x, y);
          break;
        }
  return out;
}

ConditionW condition_w(const Pomonoid& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int y = 0; y < n; ++y) {
          if (!p.leq(p.mul(x, u), y) || !p.leq(p.mul(x, v), y)) continue;
          bool found = false;
          for (int w = 0; w < n && !found; ++w) found = p.leq(u, w) && p.leq(v, w) && p.leq(p.mul(x, w), y);
          if (!found) return ConditionW{false, std::array<int, 4>{x, u, v, y}};
        }
  return {};
}

std::string embedding_kind_name(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::None: return "not-an-embedding";
    case EmbeddingKind::RL: return "RL-embedding";
    case EmbeddingKind::DInFL: return "DInFL-embedding";
    case EmbeddingKind::DqRA: return "DqRA-embedding";
  }
  return "?";
}

std::vector<std::pair<std::string, const OpCheck*>> EmbeddingReport::ops() const {
  return {{"meet", &meet},   {"join", &join},   {"fusion", &fusion}, {"unit", &unit},
          {"tilde", &tilde}, {"minus", &minus}, {"neg", &neg}};
}

void EmbeddingReport::conclude() {
  auto yes = [](const OpCheck& c) { return c.ok.value_or(false); };
  conclusion = EmbeddingKind::None;
  if (!injective || !yes(meet) || !yes(join) || !yes(fusion) || !yes(unit)) return;
  conclusion = EmbeddingKind::RL;
  if (!yes(tilde) || !yes(minus)) return;
  conclusion = EmbeddingKind::DInFL;
  if (yes(neg)) conclusion = EmbeddingKind::DqRA;
}

OrderAutomorphism sigma_alpha(const IpoMonoid& m) {
  std::vector<int> a(static_cast<std::size_t>(m.size()));
  for (int x = 0; x < m.size(); ++x) a[static_cast<std::size_t>(x)] = m.t(m.t(x));
  return OrderAutomorphism::make(m.base.order, a);
}

DualAutomorphism sigma_beta(const OrthoIpoMonoid& m) { return DualAutomorphism::make(m.base.base.order, m.neg); }

namespace {

// Records the first index tuple at which `holds` fails.
template <typename Pred>
void sweep_unary(OpCheck& c, int n, Pred holds) {
  c.ok = true;
  for (int i = 0; i < n; ++i)
    if (!holds(i)) {
      c.ok = false;
      c.witness = {i};
      return;
    }
}

template <typename Pred>
void sweep_binary(OpCheck& c, int n, Pred holds) {
  c.ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!holds(i, j)) {
        c.ok = false;
        c.witness = {i, j};
        return;
      }
}

struct SigmaImages {
  const Pomonoid& p;
  std::vector<UpSet> ups;
  std::vector<Relation> images;

  SigmaImages(const Pomonoid& pm, std::size_t cap) : p(pm), ups(enumerate_upsets(pm.order, cap)) {
    images.reserve(ups.size());
    for (const auto& u : ups) images.push_back(sigma(p, u));
  }
  int size() const { return static_cast<int>(ups.size()); }
  const UpSet& up(int i) const { return ups[static_cast<std::size_t>(i)]; }
  const Relation& img(int i) const { return images[static_cast<std::size_t>(i)]; }
  const Relation& img_of(const UpSet& u) const {
    return images[static_cast<std::size_t>(upset_index(ups, u))];
  }
};

EmbeddingReport lattice_part(const SigmaImages& s) {
  EmbeddingReport r;
  const int n = s.size();
  for (int i = 0; i < n && r.injective; ++i)
    for (int j = i + 1; j < n; ++j)
      if (s.img(i) == s.img(j)) {
        r.injective = false;
        r.injective_witness = {i, j};
        break;
      }
  auto trusted = [](BitVec b) { return UpSetAccess::trusted(std::move(b)); };
  sweep_binary(r.meet, n, [&](int i, int j) {
    return s.img_of(trusted(s.up(i).members() & s.up(j).members())) == (s.img(i) & s.img(j));
  });
  sweep_binary(r.join, n, [&](int i, int j) {
    return s.img_of(trusted(s.up(i).members() | s.up(j).members())) == (s.img(i) | s.img(j));
  });
  sweep_binary(r.fusion, n, [&](int i, int j) {
    return s.img_of(fuse(s.p, s.up(i), s.up(j))) == rel_compose(s.img(i), s.img(j));
  });
  r.unit.ok = s.img_of(UpSet::principal(s.p.order, s.p.unit)) == Relation::order(s.p.order);
  return r;
}

void negation_part(EmbeddingReport& r, const SigmaImages& s, const IpoMonoid& m) {
  const auto alpha = sigma_alpha(m);
  const auto& x = m.base.order;
  sweep_unary(r.tilde, s.size(),
              [&](int i) { return s.img_of(upset_tilde(m, s.up(i))) == rel_tilde(x, s.img(i), alpha); });
  sweep_unary(r.minus, s.size(),
              [&](int i) { return s.img_of(upset_minus(m, s.up(i))) == rel_minus(x, s.img(i), alpha); });
}

void neg_part(EmbeddingReport& r, const SigmaImages& s, const OrthoIpoMonoid& m) {
  const auto alpha = sigma_alpha(m.base);
  const auto beta = sigma_beta(m);
  const auto& x = m.base.base.order;
  sweep_unary(r.neg, s.size(),
              [&](int i) { return s.img_of(upset_neg(m, s.up(i))) == rel_neg(x, s.img(i), alpha, beta); });
}

}  // namespace

EmbeddingReport verify_sigma_embedding(const Pomonoid& p, std::size_t cap) {
  SigmaImages s(p, cap);
  EmbeddingReport r = lattice_part(s);
  r.conclude();
  return r;
}

EmbeddingReport verify_sigma_embedding(const IpoMonoid& m, std::size_t cap) {
  SigmaImages s(m.base, cap);
  EmbeddingReport r = lattice_part(s);
  negation_part(r, s, m);
  r.conclude();
  return r;
}

EmbeddingReport verify_sigma_embedding(const OrthoIpoMonoid& m, std::size_t cap) {
  SigmaImages s(m.base.base, cap);
  EmbeddingReport r = lattice_part(s);
  negation_part(r, s, m.base);
  neg_part(r, s, m);
  r.conclude();
  return r;
}

EmbeddingReport verify_sigma_embedding(const OrthoPregroup& m, std::size_t cap) {
  return verify_sigma_embedding(OrthoIpoMonoid{IpoMonoid{m.base.base, m.base.ell, m.base.r}, m.neg}, cap);
}

EmbeddingReport verify_sigma_embedding(const AnyStructure& st, std::size_t cap) {
  return std::visit(
      [&](const auto& v) -> EmbeddingReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Pregroup>)
          return verify_sigma_embedding(IpoMonoid{v.base, v.ell, v.r}, cap);
        else
          return verify_sigma_embedding(v, cap);
      },
      st);
}

std::optional<Prop6Witness> prop6_witness(const IpoMonoid& m) {
  const auto& p = m.base;
  const auto& order = p.order;
  const int n = m.size();
  const int one = p.unit;
  const auto alpha = sigma_alpha(m);
  auto fails = [&](int c, int x) {
    switch (c) {
      case 1: return !p.leq(p.mul(m.m(x), x), one);
      case 2: return !p.leq(one, p.mul(x, m.m(x)));
      case 3: return !p.leq(p.mul(x, m.t(x)), one);
      default: return !p.leq(one, p.mul(m.t(x), x));
    }
  };
  for (int c = 1; c <= 4; ++c)
    for (int x = 0; x < n; ++x) {
      if (!fails(c, x)) continue;
      Prop6Witness w;
      w.case_no = c;
      w.x = x;
      if (c == 1 || c == 3) {
        int e = c == 1 ? p.mul(m.m(x), x) : p.mul(x, m.t(x));
        w.u = UpSet::principal(order, e);
        w.pair = {one, one};
        Relation lhs = rel_minus(order, sigma(p, w.u), alpha);
        Relation rhs = sigma(p, upset_minus(m, w.u));
        w.confirmed = lhs.test(one, one) && !rhs.test(one, one);
      } else {
        int e = c == 2 ? p.mul(x, m.m(x)) : p.mul(m.t(x), x);
        w.u = UpSet(order, order.down(e).complement());
        w.pair = c == 2 ? std::pair{m.m(x), m.t(x)} : std::pair{x, m.t(m.t(x))};
        Relation lhs = sigma(p, upset_tilde(m, w.u));
        Relation rhs = rel_tilde(order, sigma(p, w.u), alpha);
        w.confirmed = lhs.test(w.pair.first, w.pair.second) && !rhs.test(w.pair.first, w.pair.second);
      }
      return w;
    }
  return std::nullopt;
}

EmbeddingReport verify_hom_embedding(const FiniteExpandedLattice& src, const FiniteExpandedLattice& dst,
                                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != src.size) throw Error(Errc::InvalidInput, "map is not total on the source");
  for (int v : map)
    if (v < 0 || v >= dst.size) throw Error(Errc::InvalidInput, "map leaves the target carrier");
  if ((src.minus && !dst.minus) || (src.tilde && !dst.tilde) || (src.neg && !dst.neg))
    throw Error(Errc::SignatureMismatch, "source has an operation the target lacks");

  auto f = [&](int a) { return map[static_cast<std::size_t>(a)]; };
  const int n = src.size;
  EmbeddingReport r;
  for (int i = 0; i < n && r.injective; ++i)
    for (int j = i + 1; j < n; ++j)
      if (f(i) == f(j)) {
        r.injective = false;
        r.injective_witness = {i, j};
        break;
      }
  sweep_binary(r.meet, n, [&](int a, int b) { return f(src.meet(a, b)) == dst.meet(f(a), f(b)); });
  sweep_binary(r.join, n, [&](int a, int b) { return f(src.join(a, b)) == dst.join(f(a), f(b)); });
  sweep_binary(r.fusion, n, [&](int a, int b) { return f(src.mul(a, b)) == dst.mul(f(a), f(b)); });
  r.unit.ok = f(src.unit) == dst.unit;
  if (src.tilde) sweep_unary(r.tilde, n, [&](int a) { return f(src.t(a)) == dst.t(f(a)); });
  if (src.minus) sweep_unary(r.minus, n, [&](int a) { return f(src.m(a)) == dst.m(f(a)); });
  if (src.neg) sweep_unary(r.neg, n, [&](int a) { return f(src.ng(a)) == dst.ng(f(a)); });
  r.conclude();
  return r;
}

}  // namespace upalg
