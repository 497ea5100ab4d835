#include "upalg/monoids.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "upalg/error.hpp"

namespace upalg {

Table2::Table2(const std::vector<std::vector<int>>& rows) : n_(static_cast<int>(rows.size())) {
  cells_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(Errc::TableOutOfRange, "operation table is not square");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<int>> Table2::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) out[static_cast<std::size_t>(x)].push_back((*this)(x, y));
  return out;
}

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Pomonoid: return "pomonoid";
    case StructureKind::Ipo: return "ipo";
    case StructureKind::Pregroup: return "pregroup";
    case StructureKind::OrthoIpo: return "ortho_ipo";
    case StructureKind::OrthoPregroup: return "ortho_pregroup";
  }
  return "?";
}

StructureKind parse_kind(const std::string& s) {
  for (auto k : {StructureKind::Pomonoid, StructureKind::Ipo, StructureKind::Pregroup, StructureKind::OrthoIpo,
                 StructureKind::OrthoPregroup})
    if (kind_name(k) == s) return k;
  throw Error(Errc::InvalidInput, "unknown structure kind '" + s + "'");
}

StructureKind kind_of(const AnyStructure& s) { return static_cast<StructureKind>(s.index()); }

const Pomonoid& pomonoid_of(const AnyStructure& s) {
  return std::visit(
      [](const auto& v) -> const Pomonoid& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Pomonoid>)
          return v;
        else if constexpr (std::is_same_v<T, IpoMonoid> || std::is_same_v<T, Pregroup>)
          return v.base;
        else
          return v.base.base;
      },
      s);
}

namespace {

void check_unary_range(const UnaryTable& t, int n, const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw Error(Errc::TableOutOfRange, std::string(name) + " table has wrong length");
  for (int v : t)
    if (v < 0 || v >= n) throw Error(Errc::TableOutOfRange, std::string(name) + " table entry out of range");
}

int at(const UnaryTable& t, int x) { return t[static_cast<std::size_t>(x)]; }

void require_base(const Report& base, const char* what) {
  if (!base.ok())
    throw Error(Errc::InvalidBase, std::string(what) + " fails: " + base.violations.front().law);
}

// Order reversal and the De Morgan style laws of an ortho enrichment, with
// minus/tilde taken from `m` (for pregroups: ell/r).
void ortho_laws(const IpoMonoid& m, const UnaryTable& neg, Report& r) {
  const int n = m.size();
  const auto& P = m.base;
  auto ng = [&](int x) { return at(neg, x); };
  for (int x = 0; x < n; ++x)
    if (ng(ng(x)) != x) {
      r.add("def4-i", {x}, "x¬¬ = x");
      break;
    }
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          bool lhs = P.leq(P.mul(x, y), m.m(z));
          bool rhs = P.leq(P.mul(ng(m.t(y)), ng(m.t(x))), ng(z));
          if (lhs != rhs) {
            r.add("def4-ii", {x, y, z}, "xy <= z- iff y~¬ x~¬ <= z¬");
            return;
          }
        }
  }();
  if (!r.ok()) return;
  const int one = P.unit;
  if (!(ng(one) == m.m(one) && m.m(one) == m.t(one))) r.add("derived:unit-negations", {one}, "1¬ = 1- = 1~");
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (P.leq(x, y) != P.leq(ng(y), ng(x))) {
          r.add("derived:neg-antitone", {x, y});
          return;
        }
  }();
  for (int x = 0; x < n; ++x)
    if (ng(m.t(x)) != m.m(ng(x))) {
      r.add("derived:neg-tilde", {x}, "x~¬ = x¬-");
      break;
    }
}

}  // namespace

Report validate_pomonoid(const Pomonoid& p) {
  const int n = p.size();
  if (p.table.size() != n) throw Error(Errc::TableOutOfRange, "multiplication table size differs from carrier");
  for (int v : p.table.cells())
    if (v < 0 || v >= n) throw Error(Errc::TableOutOfRange, "multiplication entry out of range");
  if (p.unit < 0 || p.unit >= n) throw Error(Errc::TableOutOfRange, "unit out of range");

  Report r;
  r.subject = "pomonoid";
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (p.mul(p.mul(x, y), z) != p.mul(x, p.mul(y, z))) {
            r.add("associativity", {x, y, z});
            return;
          }
  }();
  for (int x = 0; x < n; ++x)
    if (p.mul(p.unit, x) != x) {
      r.add("left-unit", {x});
      break;
    }
  for (int x = 0; x < n; ++x)
    if (p.mul(x, p.unit) != x) {
      r.add("right-unit", {x});
      break;
    }
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (p.leq(x, y) && !p.leq(p.mul(x, z), p.mul(y, z))) {
            r.add("right-compatibility", {x, y, z}, "x <= y implies xz <= yz");
            return;
          }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (p.leq(x, y) && !p.leq(p.mul(z, x), p.mul(z, y))) {
            r.add("left-compatibility", {x, y, z}, "x <= y implies zx <= zy");
            return;
          }
  }();
  return r;
}

Report validate_ipo(const IpoMonoid& m, IpoAxioms mode) {
  const int n = m.size();
  require_base(validate_pomonoid(m.base), "pomonoid");
  check_unary_range(m.minus, n, "minus");
  check_unary_range(m.tilde, n, "tilde");
  const auto& P = m.base;

  Report r;
  r.subject = "ipo";
  if (mode == IpoAxioms::Definitional) {
    const int zero = m.zero();
    [&] {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (P.leq(x, y) != P.leq(P.mul(x, m.t(y)), zero)) {
            r.add("eq3-first", {x, y}, "x <= y iff x*y~ <= 1-");
            return;
          }
    }();
    [&] {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (P.leq(x, y) != P.leq(P.mul(m.m(y), x), zero)) {
            r.add("eq3-second", {x, y}, "x <= y iff y-*x <= 1-");
            return;
          }
    }();
  } else {
    for (int x = 0; x < n; ++x)
      if (!P.leq(m.t(m.m(x)), x) || !P.leq(m.m(m.t(x)), x)) {
        r.add("prop1-i", {x}, "x-~ <= x and x~- <= x");
        break;
      }
    [&] {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (P.leq(P.mul(x, y), m.t(z)) != P.leq(P.mul(z, x), m.m(y))) {
              r.add("prop1-ii", {x, y, z}, "xy <= z~ iff zx <= y-");
              return;
            }
    }();
  }
  return r;
}

Report ipo_consequences(const IpoMonoid& m) {
  const int n = m.size();
  const auto& P = m.base;
  Report r;
  r.subject = "ipo-consequences";
  for (int x = 0; x < n; ++x)
    if (m.t(m.m(x)) != x || m.m(m.t(x)) != x) {
      r.add("lemma1-i", {x}, "x-~ = x = x~-");
      break;
    }
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool le = P.leq(x, y);
        if (le != P.leq(m.m(y), m.m(x)) || le != P.leq(m.t(y), m.t(x))) {
          r.add("lemma1-ii", {x, y}, "negations reverse order");
          return;
        }
      }
  }();
  const int one = P.unit;
  const int zero = m.zero();
  if (zero != m.t(one) || m.t(zero) != one || m.m(zero) != one) r.add("lemma1-iii", {one}, "0 = 1~, 0~ = 1, 0- = 1");
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          bool a = P.leq(P.mul(x, y), z);
          bool b = P.leq(x, m.m(P.mul(y, m.t(z))));
          bool c = P.leq(y, m.t(P.mul(m.m(z), x)));
          if (a != b || a != c) {
            r.add("lemma1-iv", {x, y, z}, "xy <= z iff x <= (yz~)- iff y <= (z-x)~");
            return;
          }
        }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (P.leq(x, y) && (!P.leq(P.mul(x, z), P.mul(y, z)) || !P.leq(P.mul(z, x), P.mul(z, y)))) {
            r.add("lemma1-v", {x, y, z});
            return;
          }
  }();
  return r;
}

Report validate_pregroup(const Pregroup& p) {
  const int n = p.size();
  require_base(validate_pomonoid(p.base), "pomonoid");
  check_unary_range(p.ell, n, "ell");
  check_unary_range(p.r, n, "r");
  const auto& P = p.base;
  const int one = P.unit;
  auto l = [&](int x) { return at(p.ell, x); };
  auto rr = [&](int x) { return at(p.r, x); };

  Report rep;
  rep.subject = "pregroup";
  auto per_element = [&](const char* law, const char* note, auto pred) {
    for (int x = 0; x < n; ++x)
      if (!pred(x)) {
        rep.add(law, {x}, note);
        return;
      }
  };
  per_element("eq4-ell-lower", "xℓx <= 1", [&](int x) { return P.leq(P.mul(l(x), x), one); });
  per_element("eq4-ell-upper", "1 <= xxℓ", [&](int x) { return P.leq(one, P.mul(x, l(x))); });
  per_element("eq4-r-lower", "xx^r <= 1", [&](int x) { return P.leq(P.mul(x, rr(x)), one); });
  per_element("eq4-r-upper", "1 <= x^r x", [&](int x) { return P.leq(one, P.mul(rr(x), x)); });
  if (!rep.ok()) return rep;

  per_element("derived:adjoint-inverse", "xℓr = x = xrℓ", [&](int x) { return rr(l(x)) == x && l(rr(x)) == x; });
  if (l(one) != one || rr(one) != one) rep.add("derived:unit-adjoint", {one}, "1ℓ = 1 = 1r");
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (l(P.mul(x, y)) != P.mul(l(y), l(x))) {
          rep.add("derived:ell-antihom", {x, y}, "(xy)ℓ = yℓxℓ");
          return;
        }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rr(P.mul(x, y)) != P.mul(rr(y), rr(x))) {
          rep.add("derived:r-antihom", {x, y}, "(xy)r = yrxr");
          return;
        }
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        bool le = P.leq(x, y);
        if (le != P.leq(l(y), l(x)) || le != P.leq(rr(y), rr(x))) {
          rep.add("derived:adjoint-antitone", {x, y});
          return;
        }
      }
  }();
  return rep;
}

Report validate_ortho(const OrthoIpoMonoid& m) {
  require_base(validate_ipo(m.base), "ipo-monoid");
  check_unary_range(m.neg, m.size(), "neg");
  Report r;
  r.subject = "ortho_ipo";
  ortho_laws(m.base, m.neg, r);
  return r;
}

Report validate_ortho(const OrthoPregroup& m) {
  require_base(validate_pregroup(m.base), "pregroup");
  check_unary_range(m.neg, m.size(), "neg");
  Report r;
  r.subject = "ortho_pregroup";
  ortho_laws(IpoMonoid{m.base.base, m.base.ell, m.base.r}, m.neg, r);
  return r;
}

Report validate_structure(const AnyStructure& s, IpoAxioms mode) {
  return std::visit(
      [&](const auto& v) -> Report {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Pomonoid>)
          return validate_pomonoid(v);
        else if constexpr (std::is_same_v<T, IpoMonoid>)
          return validate_ipo(v, mode);
        else if constexpr (std::is_same_v<T, Pregroup>)
          return validate_pregroup(v);
        else
          return validate_ortho(v);
      },
      s);
}

IpoMonoid pregroup_to_ipo(const Pregroup& p) {
  Report r = validate_pregroup(p);
  if (!r.ok()) throw Error(Errc::InvalidInput, "not a pregroup: " + r.violations.front().law);
  return IpoMonoid{p.base, p.ell, p.r};
}

OrthoIpoMonoid ortho_pregroup_to_ortho_ipo(const OrthoPregroup& p) {
  Report r = validate_ortho(p);
  if (!r.ok()) throw Error(Errc::InvalidInput, "not an ortho pregroup: " + r.violations.front().law);
  return OrthoIpoMonoid{IpoMonoid{p.base.base, p.base.ell, p.base.r}, p.neg};
}

Pregroup ipo_as_pregroup_candidate(const IpoMonoid& m) { return Pregroup{m.base, m.minus, m.tilde}; }

bool is_cyclic(const IpoMonoid& m) { return m.minus == m.tilde; }

bool is_commutative(const Pomonoid& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (p.mul(x, y) != p.mul(y, x)) return false;
  return true;
}

OrthoPregroup group_to_ortho_pregroup(const std::vector<std::vector<int>>& cayley, int unit,
                                      const UnaryTable& inverse, NegChoice neg_choice) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) throw Error(Errc::NotAGroup, "empty carrier");
  for (const auto& row : cayley) {
    if (static_cast<int>(row.size()) != n) throw Error(Errc::NotAGroup, "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error(Errc::NotAGroup, "Cayley entry out of range");
  }
  if (unit < 0 || unit >= n) throw Error(Errc::NotAGroup, "unit out of range");
  if (static_cast<int>(inverse.size()) != n) throw Error(Errc::NotAGroup, "inverse table has wrong length");
  Table2 t(cayley);
  for (int x = 0; x < n; ++x) {
    if (t(unit, x) != x || t(x, unit) != x) throw Error(Errc::NotAGroup, "unit law fails");
    int inv = inverse[static_cast<std::size_t>(x)];
    if (inv < 0 || inv >= n || t(x, inv) != unit || t(inv, x) != unit)
      throw Error(Errc::NotAGroup, "inverse law fails at " + std::to_string(x));
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) throw Error(Errc::NotAGroup, "associativity fails");
  }
  Pomonoid base{FinitePoset::discrete(n), t, unit};
  UnaryTable neg(static_cast<std::size_t>(n));
  if (neg_choice == NegChoice::Inverse) {
    if (!is_commutative(base)) throw Error(Errc::NotAbelian, "negation by inverse needs an Abelian group");
    neg = inverse;
  } else {
    std::iota(neg.begin(), neg.end(), 0);
  }
  return OrthoPregroup{Pregroup{base, inverse, inverse}, neg};
}

OrthoPregroup cyclic_group(int n, NegChoice neg_choice) {
  if (n < 1) throw Error(Errc::ParameterOutOfRange, "cyclic group order must be positive");
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  UnaryTable inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    inv[static_cast<std::size_t>(x)] = (n - x) % n;
    for (int y = 0; y < n; ++y) c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  }
  return group_to_ortho_pregroup(c, 0, inv, neg_choice);
}

OrthoPregroup symmetric_group_s3(NegChoice neg_choice) {
  // Permutations of {0,1,2} in lexicographic order; index 0 is the identity.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> c(6, std::vector<int>(6));
  UnaryTable inv(6);
  for (int a = 0; a < 6; ++a) {
    std::array<int, 3> ia{};
    for (int i = 0; i < 3; ++i) ia[static_cast<std::size_t>(perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)])] = i;
    inv[static_cast<std::size_t>(a)] = index_of(ia);
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      // (a*b)(i) = a(b(i))
      for (int i = 0; i < 3; ++i)
        ab[static_cast<std::size_t>(i)] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])];
      c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(ab);
    }
  }
  return group_to_ortho_pregroup(c, 0, inv, neg_choice);
}

FinitePoset product_order(const FinitePoset& a, const FinitePoset& b) {
  const int na = a.size(), nb = b.size();
  BoolMatrix m(static_cast<std::size_t>(na * nb), std::vector<bool>(static_cast<std::size_t>(na * nb), false));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v)
          m[static_cast<std::size_t>(x * nb + y)][static_cast<std::size_t>(u * nb + v)] = a.leq(x, u) && b.leq(y, v);
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty())
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  return FinitePoset(m, labels);
}

namespace {

UnaryTable product_unary(const UnaryTable& a, const UnaryTable& b) {
  const int nb = static_cast<int>(b.size());
  UnaryTable out;
  out.reserve(a.size() * b.size());
  for (int x : a)
    for (int y : b) out.push_back(x * nb + y);
  return out;
}

}  // namespace

Pomonoid direct_product(const Pomonoid& a, const Pomonoid& b) {
  const int na = a.size(), nb = b.size();
  Table2 t(na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) t.at(x * nb + y, u * nb + v) = a.mul(x, u) * nb + b.mul(y, v);
  return Pomonoid{product_order(a.order, b.order), t, a.unit * nb + b.unit};
}

IpoMonoid direct_product(const IpoMonoid& a, const IpoMonoid& b) {
  return IpoMonoid{direct_product(a.base, b.base), product_unary(a.minus, b.minus), product_unary(a.tilde, b.tilde)};
}

Pregroup direct_product(const Pregroup& a, const Pregroup& b) {
  return Pregroup{direct_product(a.base, b.base), product_unary(a.ell, b.ell), product_unary(a.r, b.r)};
}

OrthoIpoMonoid direct_product(const OrthoIpoMonoid& a, const OrthoIpoMonoid& b) {
  return OrthoIpoMonoid{direct_product(a.base, b.base), product_unary(a.neg, b.neg)};
}

OrthoPregroup direct_product(const OrthoPregroup& a, const OrthoPregroup& b) {
  return OrthoPregroup{direct_product(a.base, b.base), product_unary(a.neg, b.neg)};
}

AnyStructure direct_product(const AnyStructure& a, const AnyStructure& b) {
  if (a.index() != b.index())
    throw Error(Errc::KindMismatch, kind_name(kind_of(a)) + " vs " + kind_name(kind_of(b)));
  return std::visit(
      [&](const auto& x) -> AnyStructure {
        using T = std::decay_t<decltype(x)>;
        return direct_product(x, std::get<T>(b));
      },
      a);
}

}  // namespace upalg
