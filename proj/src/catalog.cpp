#include "upalg/catalog.hpp"

#include <algorithm>

#include "upalg/error.hpp"
#include "upalg/upsets.hpp"

namespace upalg {

bool AnAlgebra::has_value(int i) const { return std::find(values.begin(), values.end(), i) != values.end(); }

int AnAlgebra::position(int i) const {
  auto it = std::find(values.begin(), values.end(), i);
  if (it == values.end()) throw Error(Errc::ParameterOutOfRange, "A_" + std::to_string(n) + " has no index " + std::to_string(i));
  return static_cast<int>(it - values.begin());
}

namespace {

void require_n(int n) {
  if (n < 3) throw Error(Errc::ParameterOutOfRange, "A_n needs n >= 3");
}

struct Elem {
  bool is_a;
  int v;
};

Elem elem(const AnAlgebra& A, int pos) {
  if (pos < A.n) return {true, A.values[static_cast<std::size_t>(pos)]};
  return {false, A.values[static_cast<std::size_t>(pos - A.n)]};
}

int pos_of(const AnAlgebra& A, Elem e) { return e.is_a ? A.a(e.v) : A.b(e.v); }

Elem join_of(Elem x, Elem y) {
  if (x.is_a == y.is_a) return {x.is_a, std::max(x.v, y.v)};
  const Elem& a = x.is_a ? x : y;
  const Elem& b = x.is_a ? y : x;
  return {true, b.v > a.v ? b.v : a.v};
}

Elem meet_of(Elem x, Elem y) {
  if (x.is_a == y.is_a) return {x.is_a, std::min(x.v, y.v)};
  const Elem& a = x.is_a ? x : y;
  const Elem& b = x.is_a ? y : x;
  return {false, b.v > a.v ? a.v : b.v};
}

// Fusion used by build_An. The a·a table is taken as printed. For the mixed
// and b·b cells the index sum decides: a_i = b_i ∨ 1 and fusion distributes
// over joins, so the value at (i, j) depends on whether i + j <= 0. This
// agrees with every identity annotated on the Hasse diagrams of A_3 and A_4.
Elem fusion_of(int k, Elem x, Elem y) {
  if (x.is_a && y.is_a) {
    if (y.v == -k) return x;
    if (x.v == -k) return y;
    return {true, k};
  }
  if (!x.is_a && !y.is_a) {
    if (x.v == -k || y.v == -k) return {false, -k};
    if (x.v + y.v <= 0) return {false, k};
    return {true, k};
  }
  const Elem& a = x.is_a ? x : y;
  const Elem& b = x.is_a ? y : x;
  if (a.v == -k || b.v == -k) return b;
  if (a.v + b.v <= 0) return {false, k};
  return {true, k};
}

Elem printed_fusion_of(int k, Elem x, Elem y) {
  if (x.is_a && y.is_a) return fusion_of(k, x, y);
  if (!x.is_a && !y.is_a) {
    const int i = x.v, j = y.v;
    if (i == -k || j == -k) return {false, -k};
    if (-k < i && i <= 0 && -k < j && j <= 0) return {false, k};
    return {true, k};
  }
  const int i = x.is_a ? x.v : y.v;
  const Elem& b = x.is_a ? y : x;
  const int j = b.v;
  if (i == -k || j == -k) return b;
  if ((-k < i && i <= 0) || (-k < j && j <= 0)) return {false, k};
  return {true, k};
}

std::string elem_label(Elem e) { return std::string(e.is_a ? "a_" : "b_") + std::to_string(e.v); }

}  // namespace

AnAlgebra build_An(int n) {
  require_n(n);
  AnAlgebra A;
  A.n = n;
  A.k = n / 2;
  for (int i = -A.k; i <= A.k; ++i)
    if (i != 0 || n % 2 == 1) A.values.push_back(i);

  const int size = 2 * n;
  auto& alg = A.algebra;
  alg.size = size;
  alg.meet = Table2(size);
  alg.join = Table2(size);
  alg.fusion = Table2(size);
  UnaryTable neg(static_cast<std::size_t>(size));
  for (int p = 0; p < size; ++p) {
    Elem x = elem(A, p);
    alg.labels.push_back(elem_label(x));
    neg[static_cast<std::size_t>(p)] = pos_of(A, Elem{!x.is_a, -x.v});
    for (int q = 0; q < size; ++q) {
      Elem y = elem(A, q);
      alg.meet.at(p, q) = pos_of(A, meet_of(x, y));
      alg.join.at(p, q) = pos_of(A, join_of(x, y));
      alg.fusion.at(p, q) = pos_of(A, fusion_of(A.k, x, y));
    }
  }
  alg.unit = A.a(-A.k);
  alg.minus = neg;
  alg.tilde = neg;
  alg.neg = neg;
  alg.provenance = "A_" + std::to_string(n);
  return A;
}

Table2 an_printed_fusion(const AnAlgebra& A) {
  const int size = 2 * A.n;
  Table2 t(size);
  for (int p = 0; p < size; ++p)
    for (int q = 0; q < size; ++q) t.at(p, q) = pos_of(A, printed_fusion_of(A.k, elem(A, p), elem(A, q)));
  return t;
}

std::vector<FusionDiscrepancy> an_printed_discrepancies(const AnAlgebra& A) {
  const Table2 printed = an_printed_fusion(A);
  std::vector<FusionDiscrepancy> out;
  for (int p = 0; p < A.algebra.size; ++p)
    for (int q = 0; q < A.algebra.size; ++q)
      if (printed(p, q) != A.algebra.fusion(p, q)) out.push_back({p, q, printed(p, q), A.algebra.fusion(p, q)});
  return out;
}

std::vector<BitVec> psi_sets(int n) {
  require_n(n);
  const int k = n / 2;
  AnAlgebra A;
  A.n = n;
  for (int i = -k; i <= k; ++i)
    if (i != 0 || n % 2 == 1) A.values.push_back(i);

  const int N = n == 3 ? 7 : 7 * (n - 2);
  auto idx = [](int m, int l) { return 7 * m + l; };
  std::map<int, BitVec> V;
  if (n == 3) {
    V[-1] = BitVec(7);
    V[0] = BitVec::from_indices(7, {1, 2, 4});
    V[1] = BitVec::full(7);
    V[1].reset(0);
  } else {
    BitVec T(static_cast<std::size_t>(N));
    for (int l : {1, 2, 4}) T.set(static_cast<std::size_t>(idx(0, l)));
    for (int m = 1; m <= n - 3; ++m)
      for (int l : {3, 5, 6}) T.set(static_cast<std::size_t>(idx(m, l)));
    auto with_zeros = [&](BitVec base, int lo, int hi) {
      for (int m = lo; m <= hi; ++m) base.set(static_cast<std::size_t>(idx(m, 0)));
      return base;
    };
    BitVec everything_but_unit = BitVec::full(static_cast<std::size_t>(N));
    everything_but_unit.reset(0);
    // The lower half is shared by both parities; j runs to k-1 (even) or k (odd).
    const int lower_top = n % 2 == 0 ? k - 1 : k;
    for (int j = 0; j <= lower_top; ++j) {
      if (j == 0)
        V[-k] = BitVec(static_cast<std::size_t>(N));
      else if (j == 1)
        V[-k + 1] = T;
      else
        V[-k + j] = with_zeros(V[-k + 1], 1, j - 1);
    }
    for (int j = k - 1; j >= 0; --j) {
      if (j == 0)
        V[k] = everything_but_unit;
      else if (n % 2 == 0)
        V[k - j] = with_zeros(V[-1], k - 1, 2 * k - 2 - j);
      else
        V[k - j] = with_zeros(V[0], k, 2 * k - 1 - j);
    }
  }
  std::vector<BitVec> out(static_cast<std::size_t>(2 * n));
  for (int v : A.values) {
    BitVec u = V.at(v);
    u.set(0);
    out[static_cast<std::size_t>(A.position(v))] = u;
    out[static_cast<std::size_t>(n + A.position(v))] = V.at(v);
  }
  return out;
}

namespace {

template <typename Pred>
void check_unary(OpCheck& c, int n, Pred holds) {
  c.ok = true;
  for (int i = 0; i < n; ++i)
    if (!holds(i)) {
      c.ok = false;
      c.witness = {i};
      return;
    }
}

template <typename Pred>
void check_binary(OpCheck& c, int n, Pred holds) {
  c.ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!holds(i, j)) {
        c.ok = false;
        c.witness = {i, j};
        return;
      }
}

// Preservation of every DqRA operation, computed on the image sets alone.
EmbeddingReport verify_on_image(const FiniteExpandedLattice& src, const OrthoIpoMonoid& tgt,
                                const std::vector<BitVec>& img) {
  const Pomonoid& p = tgt.base.base;
  const int n = src.size;
  auto I = [&](int a) -> const BitVec& { return img[static_cast<std::size_t>(a)]; };
  EmbeddingReport r;
  for (int i = 0; i < n && r.injective; ++i)
    for (int j = i + 1; j < n; ++j)
      if (I(i) == I(j)) {
        r.injective = false;
        r.injective_witness = {i, j};
        break;
      }
  check_binary(r.meet, n, [&](int a, int b) { return I(src.meet(a, b)) == (I(a) & I(b)); });
  check_binary(r.join, n, [&](int a, int b) { return I(src.join(a, b)) == (I(a) | I(b)); });
  check_binary(r.fusion, n, [&](int a, int b) { return I(src.mul(a, b)) == fuse_bits(p, I(a), I(b)); });
  r.unit.ok = I(src.unit) == p.order.up(p.unit);
  check_unary(r.tilde, n, [&](int a) { return I(src.t(a)) == image_of_complement(tgt.base.tilde, I(a)); });
  check_unary(r.minus, n, [&](int a) { return I(src.m(a)) == image_of_complement(tgt.base.minus, I(a)); });
  check_unary(r.neg, n, [&](int a) { return I(src.ng(a)) == image_of_complement(tgt.neg, I(a)); });
  r.conclude();
  return r;
}

}  // namespace

PsiCertificate build_psi(int n, bool check_target) {
  require_n(n);
  PsiCertificate c;
  c.n = n;
  c.source = build_An(n);
  c.images = psi_sets(n);
  for (int p = 0; p < 2 * n; ++p) {
    std::string name = (p < n ? "U_" : "V_") + std::to_string(c.source.values[static_cast<std::size_t>(p % n)]);
    c.named_sets[name] = c.images[static_cast<std::size_t>(p)].indices();
  }
  if (n == 3) {
    c.target = cyclic_group(7, NegChoice::Inverse);
    const auto q = build_Q(ortho_pregroup_to_ortho_ipo(c.target));
    std::vector<int> map;
    for (const auto& img : c.images) map.push_back(q.index_of(UpSet(c.target.base.base.order, img)));
    c.report = verify_hom_embedding(c.source.algebra, q.algebra, map);
    if (check_target) c.target_dqra = check_dqra(q.algebra);
  } else {
    c.target = direct_product(cyclic_group(n - 2, NegChoice::Inverse), cyclic_group(7, NegChoice::Inverse));
    c.image_only = true;
    OrthoIpoMonoid t{IpoMonoid{c.target.base.base, c.target.base.ell, c.target.base.r}, c.target.neg};
    c.report = verify_on_image(c.source.algebra, t, c.images);
  }
  return c;
}

std::vector<KnownStructure> known_structures() {
  std::vector<KnownStructure> out;

  Pomonoid d01{FinitePoset::discrete(2), Table2({{0, 0}, {0, 1}}), 1};
  out.push_back({"discrete-01-pomonoid", "discrete {0,1} with 0·0 = 0 and unit 1; σ fails to preserve meets", d01});

  BoolMatrix chain{{true, true}, {false, true}};
  Pomonoid two{FinitePoset(chain, {"z", "e"}), Table2({{0, 0}, {0, 1}}), 1};
  out.push_back({"two-chain-ipo", "z < e, z·z = z, unit e, z- = z~ = e, e- = e~ = z", IpoMonoid{two, {1, 0}, {1, 0}}});

  out.push_back({"Z_7-ortho-pregroup", "Z_7 with equality order and ¬ = - = ~ = inverse",
                 cyclic_group(7, NegChoice::Inverse)});
  out.push_back({"S3-group-ortho", "symmetric group S_3 with ¬ = identity", symmetric_group_s3(NegChoice::Identity)});

  out.push_back({"A_3", "D^6_{4,8}", build_An(3).algebra});
  out.push_back({"A_4", "D^8_{7,21}", build_An(4).algebra});

  // Sugihara chain -1 < 0 < 1: product is the factor of larger absolute
  // value, the smaller one on ties; both negations are x -> -x.
  FiniteExpandedLattice s3;
  s3.size = 3;
  s3.meet = Table2({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  s3.join = Table2({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  s3.fusion = Table2({{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
  s3.unit = 1;
  s3.minus = UnaryTable{2, 1, 0};
  s3.tilde = UnaryTable{2, 1, 0};
  s3.provenance = "sugihara-3";
  s3.labels = {"-1", "0", "1"};
  out.push_back({"sugihara-3", "three-element Sugihara chain", s3});
  return out;
}

std::optional<KnownStructure> find_known(const std::string& name) {
  for (auto& s : known_structures())
    if (s.name == name) return s;
  return std::nullopt;
}

}  // namespace upalg
