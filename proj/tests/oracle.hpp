#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except the adapters at the bottom, which only copy plain tables into
// library structs.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upalg/monoids.hpp"

namespace oracle {

using Mat = std::vector<std::vector<bool>>;
using Tab = std::vector<std::vector<int>>;
using Map = std::vector<int>;

inline bool is_partial_order(const Mat& m) {
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x) {
    if (!m[x][x]) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && m[x][y] && m[y][x]) return false;
      for (int z = 0; z < n; ++z)
        if (m[x][y] && m[y][z] && !m[x][z]) return false;
    }
  }
  return true;
}

// Every labelled partial order on n points.
inline std::vector<Mat> partial_orders(int n) {
  std::vector<std::pair<int, int>> off;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) off.emplace_back(x, y);
  std::vector<Mat> out;
  for (unsigned long mask = 0; mask < (1UL << off.size()); ++mask) {
    Mat m(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x) m[x][x] = true;
    for (std::size_t i = 0; i < off.size(); ++i)
      if (mask >> i & 1) m[off[i].first][off[i].second] = true;
    if (is_partial_order(m)) out.push_back(m);
  }
  return out;
}

inline Mat discrete(int n) {
  Mat m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) m[x][x] = true;
  return m;
}

inline Mat chain(int n) {
  Mat m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) m[x][y] = true;
  return m;
}

inline bool up_closed(const Mat& m, unsigned s) {
  const int n = static_cast<int>(m.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((s >> x & 1) && m[x][y] && !(s >> y & 1)) return false;
  return true;
}

// Up-sets as masks, ascending.
inline std::vector<unsigned> upsets(const Mat& m) {
  std::vector<unsigned> out;
  for (unsigned s = 0; s < (1u << m.size()); ++s)
    if (up_closed(m, s)) out.push_back(s);
  return out;
}

// Intersection of all up-sets containing the seed.
inline unsigned closure(const Mat& m, unsigned seed) {
  unsigned best = (1u << m.size()) - 1;
  for (unsigned s : upsets(m))
    if ((s & seed) == seed) best &= s;
  return best;
}

struct Pomonoid {
  Mat leq;
  Tab t;
  int unit = 0;
  int size() const { return static_cast<int>(leq.size()); }
  bool le(int x, int y) const { return leq[x][y]; }
  int mul(int x, int y) const { return t[x][y]; }
};

inline bool is_pomonoid(const Pomonoid& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    if (p.mul(p.unit, x) != x || p.mul(x, p.unit) != x) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (p.mul(p.mul(x, y), z) != p.mul(x, p.mul(y, z))) return false;
        if (p.le(x, y) && (!p.le(p.mul(x, z), p.mul(y, z)) || !p.le(p.mul(z, x), p.mul(z, y)))) return false;
      }
  return true;
}

// Calls f on every n^k map from k points to n values.
inline void each_map(int k, int n, const std::function<void(const Map&)>& f) {
  Map v(static_cast<std::size_t>(k), 0);
  while (true) {
    f(v);
    int i = 0;
    while (i < k && ++v[i] == n) v[i++] = 0;
    if (i == k) return;
  }
}

// Every labelled pomonoid on n <= 3 points, over the given orders.
inline std::vector<Pomonoid> pomonoids(int n, const std::vector<Mat>& orders) {
  std::vector<Pomonoid> out;
  for (const auto& leq : orders)
    for (int unit = 0; unit < n; ++unit)
      each_map(n * n, n, [&](const Map& cells) {
        Pomonoid p{leq, Tab(n, std::vector<int>(n)), unit};
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) p.t[x][y] = cells[x * n + y];
        if (is_pomonoid(p)) out.push_back(p);
      });
  return out;
}

inline std::vector<Pomonoid> pomonoids(int n) { return pomonoids(n, partial_orders(n)); }

// x <= y iff x y~ <= 1- iff y- x <= 1-
inline bool ipo_definitional(const Pomonoid& p, const Map& minus, const Map& tilde) {
  const int n = p.size();
  const int zero = minus[p.unit];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool a = p.le(x, y);
      if (a != p.le(p.mul(x, tilde[y]), zero) || a != p.le(p.mul(minus[y], x), zero)) return false;
    }
  return true;
}

// x-~ <= x, x~- <= x, and xy <= z~ iff zx <= y-
inline bool ipo_alternative(const Pomonoid& p, const Map& minus, const Map& tilde) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    if (!p.le(tilde[minus[x]], x) || !p.le(minus[tilde[x]], x)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.le(p.mul(x, y), tilde[z]) != p.le(p.mul(z, x), minus[y])) return false;
  return true;
}

inline bool pregroup_laws(const Pomonoid& p, const Map& ell, const Map& r) {
  const int n = p.size(), e = p.unit;
  for (int x = 0; x < n; ++x) {
    if (!p.le(p.mul(ell[x], x), e) || !p.le(e, p.mul(x, ell[x]))) return false;
    if (!p.le(p.mul(x, r[x]), e) || !p.le(e, p.mul(r[x], x))) return false;
  }
  return true;
}

// x¬¬ = x and xy <= z- iff y~¬ x~¬ <= z¬
inline bool ortho_laws(const Pomonoid& p, const Map& minus, const Map& tilde, const Map& neg) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    if (neg[neg[x]] != x) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (p.le(p.mul(x, y), minus[z]) != p.le(p.mul(neg[tilde[y]], neg[tilde[x]]), neg[z])) return false;
  return true;
}

// A pomonoid plus up to three unary maps, all given as plain tables.
struct Raw {
  Pomonoid p;
  std::vector<Map> unary;
};

// Smallest encoding over all relabellings; equal iff isomorphic.
inline std::string canon(const Raw& s) {
  const int n = s.p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    // perm[x] is the new label of x
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;
    std::string e;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) e += s.p.le(inv[a], inv[b]) ? '1' : '0';
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) e += static_cast<char>('0' + perm[s.p.mul(inv[a], inv[b])]);
    e += static_cast<char>('0' + perm[s.p.unit]);
    for (const auto& u : s.unary)
      for (int a = 0; a < n; ++a) e += static_cast<char>('0' + perm[u[inv[a]]]);
    if (first || e < best) best = e;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::size_t count_classes(const std::vector<Raw>& v) {
  std::set<std::string> s;
  for (const auto& r : v) s.insert(canon(r));
  return s.size();
}

// Labelled structures of each kind on n points, built from the pomonoids.
inline std::vector<Raw> all_pomonoids(int n) {
  std::vector<Raw> out;
  for (auto& p : pomonoids(n)) out.push_back({p, {}});
  return out;
}

inline std::vector<Raw> all_ipo(int n) {
  std::vector<Raw> out;
  for (auto& p : pomonoids(n))
    each_map(n, n, [&](const Map& mi) {
      each_map(n, n, [&](const Map& ti) {
        if (ipo_definitional(p, mi, ti)) out.push_back({p, {mi, ti}});
      });
    });
  return out;
}

inline std::vector<Raw> all_pregroups(int n) {
  std::vector<Raw> out;
  for (auto& p : pomonoids(n))
    each_map(n, n, [&](const Map& l) {
      each_map(n, n, [&](const Map& r) {
        if (pregroup_laws(p, l, r)) out.push_back({p, {l, r}});
      });
    });
  return out;
}

inline std::vector<Raw> all_ortho_ipo(int n) {
  std::vector<Raw> out;
  for (auto& s : all_ipo(n))
    each_map(n, n, [&](const Map& ng) {
      if (ortho_laws(s.p, s.unary[0], s.unary[1], ng)) out.push_back({s.p, {s.unary[0], s.unary[1], ng}});
    });
  return out;
}

// σ(U) as a set of pairs, straight from the definition.
inline std::set<std::pair<int, int>> sigma(const Pomonoid& p, unsigned u) {
  std::set<std::pair<int, int>> out;
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < n; ++a)
        if ((u >> a & 1) && p.le(p.mul(x, a), y)) out.insert({x, y});
  return out;
}

inline bool condition_w(const Pomonoid& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int y = 0; y < n; ++y) {
          if (!p.le(p.mul(x, u), y) || !p.le(p.mul(x, v), y)) continue;
          bool found = false;
          for (int w = 0; w < n && !found; ++w) found = p.le(u, w) && p.le(v, w) && p.le(p.mul(x, w), y);
          if (!found) return false;
        }
  return true;
}

// σ preserves meets iff σ(U ∩ V) = σ(U) ∩ σ(V) for all up-sets.
inline bool sigma_preserves_meets(const Pomonoid& p) {
  const auto ups = upsets(p.leq);
  for (unsigned u : ups)
    for (unsigned v : ups) {
      auto su = sigma(p, u), sv = sigma(p, v), both = sigma(p, u & v);
      std::set<std::pair<int, int>> inter;
      for (const auto& q : su)
        if (sv.count(q)) inter.insert(q);
      if (inter != both) return false;
    }
  return true;
}

using Rel = std::set<std::pair<int, int>>;

inline Rel compose(const Rel& r, const Rel& s) {
  Rel out;
  for (auto [x, y] : r)
    for (auto [y2, z] : s)
      if (y == y2) out.insert({x, z});
  return out;
}

inline Rel complement(int n, const Rel& r) {
  Rel out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!r.count({x, y})) out.insert({x, y});
  return out;
}

// Adapters into library types.
inline upalg::FinitePoset to_poset(const Mat& m) { return upalg::FinitePoset(m); }

inline upalg::Pomonoid to_lib(const Pomonoid& p) {
  return upalg::Pomonoid{to_poset(p.leq), upalg::Table2(p.t), p.unit};
}

inline upalg::IpoMonoid to_lib_ipo(const Raw& r) { return upalg::IpoMonoid{to_lib(r.p), r.unary[0], r.unary[1]}; }

inline Pomonoid from_lib(const upalg::Pomonoid& p) {
  return Pomonoid{p.order.matrix(), p.table.rows(), p.unit};
}

}  // namespace oracle
