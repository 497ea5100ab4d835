#include "upalg/upsets.hpp"

#include <sstream>

#include "upalg/error.hpp"

namespace upalg {

namespace {

void check_width(const Pomonoid& p, const UpSet& u) {
  if (u.width() != static_cast<std::size_t>(p.size()))
    throw Error(Errc::PosetMismatch, "up-set width differs from carrier size");
}

std::string set_label(const FinitePoset& p, const UpSet& u) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  u.members().for_each([&](int x) {
    os << (first ? "" : ",") << p.label(x);
    first = false;
  });
  os << "}";
  return os.str();
}

}  // namespace

BitVec fuse_bits(const Pomonoid& p, const BitVec& u, const BitVec& v) {
  BitVec out(static_cast<std::size_t>(p.size()));
  u.for_each([&](int x) { v.for_each([&](int y) { out |= p.order.up(p.mul(x, y)); }); });
  return out;
}

BitVec image_of_complement(const UnaryTable& op, const BitVec& u) {
  BitVec out(u.size());
  u.complement().for_each([&](int x) { out.set(static_cast<std::size_t>(op[static_cast<std::size_t>(x)])); });
  return out;
}

UpSet fuse(const Pomonoid& p, const UpSet& u, const UpSet& v) {
  check_width(p, u);
  check_width(p, v);
  return UpSetAccess::trusted(fuse_bits(p, u.members(), v.members()));
}

std::pair<UpSet, UpSet> residuals(const Pomonoid& p, const UpSet& u, const UpSet& v) {
  check_width(p, u);
  check_width(p, v);
  // U is up-closed, so {z}•V ⊆ U reduces to zv ∈ U for every v ∈ V.
  const auto n = static_cast<std::size_t>(p.size());
  BitVec right(n), left(n);
  const auto vs = v.elements();
  for (int z = 0; z < p.size(); ++z) {
    bool r_ok = true, l_ok = true;
    for (int y : vs) {
      r_ok = r_ok && u.contains(p.mul(z, y));
      l_ok = l_ok && u.contains(p.mul(y, z));
    }
    if (r_ok) right.set(static_cast<std::size_t>(z));
    if (l_ok) left.set(static_cast<std::size_t>(z));
  }
  return {UpSet(p.order, right), UpSet(p.order, left)};
}

UpSet upset_minus(const IpoMonoid& m, const UpSet& u) {
  check_width(m.base, u);
  return UpSet(m.base.order, image_of_complement(m.minus, u.members()));
}

UpSet upset_tilde(const IpoMonoid& m, const UpSet& u) {
  check_width(m.base, u);
  return UpSet(m.base.order, image_of_complement(m.tilde, u.members()));
}

UpSet upset_neg(const OrthoIpoMonoid& m, const UpSet& u) {
  check_width(m.base.base, u);
  return UpSet(m.base.base.order, image_of_complement(m.neg, u.members()));
}

UpsetAlgebra build_upset_rl(const Pomonoid& p, std::size_t cap) {
  UpsetAlgebra out;
  out.upsets = enumerate_upsets(p.order, cap);
  const auto& ups = out.upsets;
  const int n = static_cast<int>(ups.size());
  auto& a = out.algebra;
  a.size = n;
  a.meet = Table2(n);
  a.join = Table2(n);
  a.fusion = Table2(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& u = ups[static_cast<std::size_t>(i)].members();
      const auto& v = ups[static_cast<std::size_t>(j)].members();
      a.meet.at(i, j) = out.index_of(UpSetAccess::trusted(u & v));
      a.join.at(i, j) = out.index_of(UpSetAccess::trusted(u | v));
      a.fusion.at(i, j) = out.index_of(UpSetAccess::trusted(fuse_bits(p, u, v)));
    }
  a.unit = out.index_of(UpSet::principal(p.order, p.unit));
  a.provenance = "Up(P)";
  for (const auto& u : ups) a.labels.push_back(set_label(p.order, u));
  return out;
}

namespace {

UnaryTable lift(const UpsetAlgebra& alg, const UnaryTable& op) {
  UnaryTable t;
  t.reserve(alg.upsets.size());
  for (const auto& u : alg.upsets) {
    int idx = alg.index_of(UpSetAccess::trusted(image_of_complement(op, u.members())));
    if (idx < 0) throw Error(Errc::NotUpClosed, "negation of an up-set is not up-closed");
    t.push_back(idx);
  }
  return t;
}

}  // namespace

UpsetAlgebra build_D(const IpoMonoid& m, std::size_t cap) {
  UpsetAlgebra out = build_upset_rl(m.base, cap);
  out.algebra.minus = lift(out, m.minus);
  out.algebra.tilde = lift(out, m.tilde);
  out.algebra.provenance = "D(P)";
  return out;
}

UpsetAlgebra build_Q(const OrthoIpoMonoid& m, std::size_t cap) {
  UpsetAlgebra out = build_D(m.base, cap);
  out.algebra.neg = lift(out, m.neg);
  out.algebra.provenance = "Q(P)";
  return out;
}

}  // namespace upalg
