#include "upalg/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "upalg/algebra.hpp"
#include "upalg/error.hpp"
#include "upalg/representation.hpp"
#include "upalg/upsets.hpp"

namespace upalg {

namespace {

// Every structure kind flattened to one shape: order, table, unit and the
// kind's unary tables in declaration order (minus, tilde | ell, r | ..., neg).
struct Flat {
  StructureKind kind{};
  int n = 0;
  BoolMatrix leq;
  Table2 table;
  int unit = 0;
  std::vector<UnaryTable> unary;
};

Flat flatten(const AnyStructure& s) {
  const Pomonoid& p = pomonoid_of(s);
  Flat f{kind_of(s), p.size(), p.order.matrix(), p.table, p.unit, {}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IpoMonoid>) {
          f.unary = {v.minus, v.tilde};
        } else if constexpr (std::is_same_v<T, Pregroup>) {
          f.unary = {v.ell, v.r};
        } else if constexpr (std::is_same_v<T, OrthoIpoMonoid>) {
          f.unary = {v.base.minus, v.base.tilde, v.neg};
        } else if constexpr (std::is_same_v<T, OrthoPregroup>) {
          f.unary = {v.base.ell, v.base.r, v.neg};
        }
      },
      s);
  return f;
}

AnyStructure unflatten(const Flat& f, const std::vector<std::string>& labels = {}) {
  Pomonoid p{FinitePoset(f.leq, labels), f.table, f.unit};
  switch (f.kind) {
    case StructureKind::Pomonoid: return p;
    case StructureKind::Ipo: return IpoMonoid{p, f.unary[0], f.unary[1]};
    case StructureKind::Pregroup: return Pregroup{p, f.unary[0], f.unary[1]};
    case StructureKind::OrthoIpo: return OrthoIpoMonoid{IpoMonoid{p, f.unary[0], f.unary[1]}, f.unary[2]};
    case StructureKind::OrthoPregroup: return OrthoPregroup{Pregroup{p, f.unary[0], f.unary[1]}, f.unary[2]};
  }
  throw Error(Errc::InvalidInput, "unknown kind");
}

// Byte string of the structure after relabelling x as perm[x].
std::string encode(const Flat& f, const std::vector<int>& perm, const std::vector<int>& inv) {
  const int n = f.n;
  auto P = [&](int x) { return static_cast<char>(perm[static_cast<std::size_t>(x)]); };
  auto I = [&](int i) { return inv[static_cast<std::size_t>(i)]; };
  std::string s;
  s.reserve(static_cast<std::size_t>(2 + n * n * 2 + 1 + n * 3));
  s.push_back(static_cast<char>(f.kind));
  s.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.push_back(f.leq[static_cast<std::size_t>(I(i))][static_cast<std::size_t>(I(j))] ? 1 : 0);
  s.push_back(P(f.unit));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.push_back(P(f.table(I(i), I(j))));
  for (const auto& u : f.unary)
    for (int i = 0; i < n; ++i) s.push_back(P(u[static_cast<std::size_t>(I(i))]));
  return s;
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t x = 0; x < perm.size(); ++x) inv[static_cast<std::size_t>(perm[x])] = static_cast<int>(x);
  return inv;
}

Flat permute_flat(const Flat& f, const std::vector<int>& perm) {
  const auto inv = inverse_perm(perm);
  const int n = f.n;
  auto P = [&](int x) { return perm[static_cast<std::size_t>(x)]; };
  auto I = [&](int i) { return inv[static_cast<std::size_t>(i)]; };
  Flat g = f;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          f.leq[static_cast<std::size_t>(I(i))][static_cast<std::size_t>(I(j))];
      g.table.at(i, j) = P(f.table(I(i), I(j)));
    }
  g.unit = P(f.unit);
  for (std::size_t k = 0; k < f.unary.size(); ++k)
    for (int i = 0; i < n; ++i) g.unary[k][static_cast<std::size_t>(i)] = P(f.unary[k][static_cast<std::size_t>(I(i))]);
  return g;
}

std::pair<std::string, std::vector<int>> canonical(const Flat& f) {
  std::vector<int> perm(static_cast<std::size_t>(f.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::vector<int> best_perm;
  do {
    std::string e = encode(f, perm, inverse_perm(perm));
    if (best_perm.empty() || e < best) {
      best = std::move(e);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, best_perm};
}

// Smallest relabelled order matrix; equal iff the posets are isomorphic.
std::string poset_code(const BoolMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    const auto inv = inverse_perm(perm);
    std::string e;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e.push_back(m[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])][static_cast<std::size_t>(inv[static_cast<std::size_t>(j)])] ? '1' : '0');
    if (best.empty() || e < best) best = std::move(e);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Order-reversing bijections, optionally restricted to involutions.
std::vector<UnaryTable> antitone_bijections(const FinitePoset& p, bool involutive) {
  std::vector<UnaryTable> out;
  UnaryTable f(static_cast<std::size_t>(p.size()));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x) {
      if (involutive && f[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] != x) ok = false;
      for (int y = 0; y < p.size() && ok; ++y)
        ok = p.leq(x, y) == p.leq(f[static_cast<std::size_t>(y)], f[static_cast<std::size_t>(x)]);
    }
    if (ok) out.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

// Depth-first completion of the multiplication table with unit 0; partial
// tables are pruned on every associativity or compatibility instance whose
// products are already known.
void fill_tables(const FinitePoset& order, const std::function<void(const Pomonoid&)>& emit) {
  const int n = order.size();
  Table2 t(n, -1);
  for (int x = 0; x < n; ++x) {
    t.at(0, x) = x;
    t.at(x, 0) = x;
  }
  std::vector<std::pair<int, int>> cells;
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) cells.emplace_back(x, y);

  auto consistent = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = t(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          int bc = t(b, c);
          if (bc < 0) continue;
          int l = t(ab, c), r = t(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || !order.leq(a, b)) continue;
        for (int z = 0; z < n; ++z) {
          int az = t(a, z), bz = t(b, z), za = t(z, a), zb = t(z, b);
          if (az >= 0 && bz >= 0 && !order.leq(az, bz)) return false;
          if (za >= 0 && zb >= 0 && !order.leq(za, zb)) return false;
        }
      }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      emit(Pomonoid{order, t, 0});
      return;
    }
    auto [x, y] = cells[k];
    for (int v = 0; v < n; ++v) {
      t.at(x, y) = v;
      if (consistent()) self(self, k + 1);
    }
    t.at(x, y) = -1;
  };
  rec(rec, 0);
}

// Every pomonoid (not yet up to isomorphism) on posets of size n.
void each_pomonoid(int n, OrderMode mode, const std::function<void(const Pomonoid&)>& emit) {
  for (const auto& order : enumerate_posets(n, mode))
    for (int u = 0; u < n; ++u) {
      // Swap u into position 0 so the unit is always element 0.
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[0], perm[static_cast<std::size_t>(u)]);
      Flat f{StructureKind::Pomonoid, n, order.matrix(), Table2(n), 0, {}};
      Flat g = permute_flat(f, perm);
      fill_tables(FinitePoset(g.leq), emit);
    }
}

std::vector<UnaryTable> adjoint_candidates(const Pomonoid& p, bool left) {
  // left: a with ax <= 1 <= xa; right: a with xa <= 1 <= ax.
  std::vector<UnaryTable> per(static_cast<std::size_t>(p.size()));
  for (int x = 0; x < p.size(); ++x)
    for (int a = 0; a < p.size(); ++a) {
      int below = left ? p.mul(a, x) : p.mul(x, a);
      int above = left ? p.mul(x, a) : p.mul(a, x);
      if (p.leq(below, p.unit) && p.leq(p.unit, above)) per[static_cast<std::size_t>(x)].push_back(a);
    }
  std::vector<UnaryTable> out{{}};
  for (const auto& options : per) {
    std::vector<UnaryTable> next;
    for (const auto& partial : out)
      for (int a : options) {
        next.push_back(partial);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n, OrderMode mode) {
  if (mode == OrderMode::Discrete) return {FinitePoset::discrete(n)};
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::map<std::string, BoolMatrix> seen;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    BoolMatrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1u) m[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = true;
    if (!validate_poset(m).ok()) continue;
    seen.try_emplace(poset_code(m), m);
  }
  std::vector<FinitePoset> out;
  for (const auto& [code, m] : seen) out.emplace_back(m);
  return out;
}

std::string canonical_form(const AnyStructure& s) { return canonical(flatten(s)).first; }

AnyStructure permute(const AnyStructure& s, const std::vector<int>& perm) {
  const Pomonoid& p = pomonoid_of(s);
  std::vector<std::string> labels;
  if (!p.order.labels().empty()) {
    labels.resize(static_cast<std::size_t>(p.size()));
    for (int x = 0; x < p.size(); ++x) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = p.order.label(x);
  }
  return unflatten(permute_flat(flatten(s), perm), labels);
}

AnyStructure canonical_representative(const AnyStructure& s) {
  Flat f = flatten(s);
  return unflatten(permute_flat(f, canonical(f).second));
}

std::vector<AnyStructure> enumerate_models(const SearchSpec& spec) {
  if (spec.size < 1) throw Error(Errc::ParameterOutOfRange, "size must be at least 1");
  if (spec.size > kSearchSizeCap)
    throw Error(Errc::SizeCapExceeded, "model search is capped at size " + std::to_string(kSearchSizeCap));

  std::map<std::string, AnyStructure> found;
  auto keep = [&](AnyStructure s) {
    Flat f = flatten(s);
    auto [code, perm] = canonical(f);
    if (!found.count(code)) found.emplace(code, unflatten(permute_flat(f, perm)));
  };

  each_pomonoid(spec.size, spec.order_mode, [&](const Pomonoid& p) {
    switch (spec.kind) {
      case StructureKind::Pomonoid:
        keep(p);
        break;
      case StructureKind::Ipo:
      case StructureKind::OrthoIpo:
        for (const auto& minus : antitone_bijections(p.order, false)) {
          IpoMonoid m{p, minus, inverse_perm(minus)};
          if (!validate_ipo(m, spec.axiom_mode).ok()) continue;
          if (spec.kind == StructureKind::Ipo) {
            keep(m);
            continue;
          }
          for (const auto& neg : antitone_bijections(p.order, true)) {
            OrthoIpoMonoid o{m, neg};
            if (validate_ortho(o).ok()) keep(o);
          }
        }
        break;
      case StructureKind::Pregroup:
      case StructureKind::OrthoPregroup:
        for (const auto& ell : adjoint_candidates(p, true))
          for (const auto& r : adjoint_candidates(p, false)) {
            Pregroup g{p, ell, r};
            if (!validate_pregroup(g).ok()) continue;
            if (spec.kind == StructureKind::Pregroup) {
              keep(g);
              continue;
            }
            for (const auto& neg : antitone_bijections(p.order, true)) {
              OrthoPregroup o{g, neg};
              if (validate_ortho(o).ok()) keep(o);
            }
          }
        break;
    }
  });

  std::vector<AnyStructure> out;
  for (auto& [code, s] : found) {
    if (spec.limit && out.size() >= *spec.limit) break;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AnyStructure> enumerate_models_up_to(const SearchSpec& spec) {
  std::vector<AnyStructure> out;
  for (int n = 1; n <= spec.size; ++n) {
    SearchSpec s = spec;
    s.size = n;
    for (auto& m : enumerate_models(s)) out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool is_ipo_kind(StructureKind k) { return k != StructureKind::Pomonoid; }
bool is_pregroup_kind(StructureKind k) { return k == StructureKind::Pregroup || k == StructureKind::OrthoPregroup; }
bool is_ortho_kind(StructureKind k) { return k == StructureKind::OrthoIpo || k == StructureKind::OrthoPregroup; }

IpoMonoid as_ipo(const AnyStructure& s) {
  return std::visit(
      [](const auto& v) -> IpoMonoid {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IpoMonoid>)
          return v;
        else if constexpr (std::is_same_v<T, Pregroup>)
          return IpoMonoid{v.base, v.ell, v.r};
        else if constexpr (std::is_same_v<T, OrthoIpoMonoid>)
          return v.base;
        else if constexpr (std::is_same_v<T, OrthoPregroup>)
          return IpoMonoid{v.base.base, v.base.ell, v.base.r};
        else
          throw Error(Errc::KindMismatch, "not an ipo-monoid");
      },
      s);
}

OrthoIpoMonoid as_ortho(const AnyStructure& s) {
  if (const auto* o = std::get_if<OrthoIpoMonoid>(&s)) return *o;
  if (const auto* o = std::get_if<OrthoPregroup>(&s))
    return OrthoIpoMonoid{IpoMonoid{o->base.base, o->base.ell, o->base.r}, o->neg};
  throw Error(Errc::KindMismatch, "not an ortho structure");
}

Pregroup as_pregroup(const AnyStructure& s) {
  if (const auto* g = std::get_if<Pregroup>(&s)) return *g;
  if (const auto* g = std::get_if<OrthoPregroup>(&s)) return g->base;
  throw Error(Errc::KindMismatch, "not a pregroup");
}

bool lattice_ordered(const Pomonoid& p) {
  if (!p.order.is_lattice()) return false;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      int j = *p.order.join(x, y);
      for (int z = 0; z < p.size(); ++z) {
        if (p.mul(z, j) != *p.order.join(p.mul(z, x), p.mul(z, y))) return false;
        if (p.mul(j, z) != *p.order.join(p.mul(x, z), p.mul(y, z))) return false;
      }
    }
  return true;
}

struct Property {
  std::function<bool(StructureKind)> applies;
  std::function<std::optional<bool>(const AnyStructure&)> test;  // empty: outside hypothesis
};

const std::map<std::string, Property>& registry() {
  static const std::map<std::string, Property> props = {
      {"condition_w",
       {[](StructureKind) { return true; },
        [](const AnyStructure& s) -> std::optional<bool> { return condition_w(pomonoid_of(s)).holds; }}},
      {"condition_w_lattice_ordered",
       {[](StructureKind) { return true; },
        [](const AnyStructure& s) -> std::optional<bool> {
          const auto& p = pomonoid_of(s);
          if (!lattice_ordered(p)) return std::nullopt;
          return condition_w(p).holds;
        }}},
      {"prop5_meet",
       {[](StructureKind) { return true; },
        [](const AnyStructure& s) -> std::optional<bool> {
          const auto& p = pomonoid_of(s);
          return condition_w(p).holds == verify_sigma_embedding(p).meet.ok.value();
        }}},
      {"sigma_joins",
       {[](StructureKind) { return true; },
        [](const AnyStructure& s) -> std::optional<bool> {
          auto r = verify_sigma_embedding(pomonoid_of(s));
          return r.join.ok.value() && r.injective && r.fusion.ok.value() && r.unit.ok.value();
        }}},
      {"prop4_rl",
       {[](StructureKind) { return true; },
        [](const AnyStructure& s) -> std::optional<bool> {
          auto a = build_upset_rl(pomonoid_of(s)).algebra;
          return check_rl(a).ok() && check_distributive(a).ok();
        }}},
      {"lemma1",
       {is_ipo_kind, [](const AnyStructure& s) -> std::optional<bool> { return ipo_consequences(as_ipo(s)).ok(); }}},
      {"prop1_agreement",
       {is_ipo_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto m = as_ipo(s);
          return validate_ipo(m, IpoAxioms::Definitional).ok() == validate_ipo(m, IpoAxioms::Alternative).ok();
        }}},
      {"theorem3_dinfl",
       {is_ipo_kind, [](const AnyStructure& s) -> std::optional<bool> { return check_dinfl(build_D(as_ipo(s)).algebra).ok(); }}},
      {"theorem3_cyclic",
       {is_ipo_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto m = as_ipo(s);
          return check_cyclic(build_D(m).algebra).ok() == is_cyclic(m);
        }}},
      {"theorem6_dqra",
       {is_ortho_kind, [](const AnyStructure& s) -> std::optional<bool> { return check_dqra(build_Q(as_ortho(s)).algebra).ok(); }}},
      {"prop6_frontier",
       {is_ipo_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto m = as_ipo(s);
          auto r = verify_sigma_embedding(m);
          bool preserves = r.tilde.ok.value() && r.minus.ok.value();
          bool pregroup = validate_pregroup(ipo_as_pregroup_candidate(m)).ok();
          if (preserves != pregroup) return false;
          auto w = prop6_witness(m);
          if (pregroup) return !w.has_value();
          return w.has_value() && w->confirmed;
        }}},
      {"prop2",
       {is_pregroup_kind, [](const AnyStructure& s) -> std::optional<bool> { return validate_pregroup(as_pregroup(s)).ok(); }}},
      {"prop3",
       {is_pregroup_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto m = pregroup_to_ipo(as_pregroup(s));
          return validate_ipo(m, IpoAxioms::Definitional).ok() && validate_ipo(m, IpoAxioms::Alternative).ok();
        }}},
      {"pregroup_discrete",
       {is_pregroup_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto g = as_pregroup(s);
          const auto& p = g.base;
          if (!p.order.is_discrete() || g.ell != g.r) return false;
          for (int x = 0; x < p.size(); ++x) {
            int inv = g.ell[static_cast<std::size_t>(x)];
            if (p.mul(x, inv) != p.unit || p.mul(inv, x) != p.unit) return false;
          }
          return true;
        }}},
      {"theorem5_sigma",
       {is_pregroup_kind,
        [](const AnyStructure& s) -> std::optional<bool> {
          auto g = as_pregroup(s);
          auto c = verify_sigma_embedding(IpoMonoid{g.base, g.ell, g.r}).conclusion;
          return c == EmbeddingKind::DInFL;
        }}},
      {"theorem8_sigma",
       {[](StructureKind k) { return k == StructureKind::OrthoPregroup; },
        [](const AnyStructure& s) -> std::optional<bool> {
          return verify_sigma_embedding(s).conclusion == EmbeddingKind::DqRA;
        }}},
  };
  return props;
}

}  // namespace

std::vector<std::string> sweep_properties() {
  std::vector<std::string> out;
  for (const auto& [name, p] : registry()) out.push_back(name);
  return out;
}

SweepResult sweep(const std::string& property, const SearchSpec& spec) {
  auto it = registry().find(property);
  if (it == registry().end()) throw Error(Errc::UnknownProperty, "no property named '" + property + "'");
  if (!it->second.applies(spec.kind))
    throw Error(Errc::KindMismatch, property + " does not apply to " + kind_name(spec.kind));
  SweepResult r;
  r.property = property;
  for (const auto& s : enumerate_models_up_to(spec)) {
    ++r.total;
    auto v = it->second.test(s);
    if (!v)
      ++r.skipped;
    else if (*v)
      ++r.holds;
    else {
      ++r.fails;
      r.counterexamples.push_back(s);
    }
  }
  return r;
}

}  // namespace upalg
