#include "upalg/poset.hpp"

#include <algorithm>
#include <sstream>

#include "upalg/error.hpp"

namespace upalg {

Report validate_poset(const BoolMatrix& leq) {
  const std::size_t n = leq.size();
  for (const auto& row : leq)
    if (row.size() != n) throw Error(Errc::NonSquareMatrix, "order matrix is not square");

  Report r;
  r.subject = "poset";
  for (std::size_t x = 0; x < n; ++x)
    if (!leq[x][x]) {
      r.add("reflexivity", {static_cast<int>(x)});
      break;
    }
  for (std::size_t x = 0; x < n && !r.violates("antisymmetry"); ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && leq[x][y] && leq[y][x]) {
        r.add("antisymmetry", {static_cast<int>(x), static_cast<int>(y)});
        break;
      }
  for (std::size_t x = 0; x < n && !r.violates("transitivity"); ++x)
    for (std::size_t y = 0; y < n && !r.violates("transitivity"); ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z] && !leq[x][z]) {
          r.add("transitivity", {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)});
          break;
        }
  return r;
}

FinitePoset::FinitePoset(const BoolMatrix& leq, std::vector<std::string> labels)
    : n_(static_cast<int>(leq.size())), labels_(std::move(labels)) {
  Report r = validate_poset(leq);
  if (!r.ok()) {
    const auto& v = r.violations.front();
    std::ostringstream os;
    os << v.law << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
    throw Error(Errc::InvalidPoset, os.str());
  }
  if (!labels_.empty() && labels_.size() != leq.size())
    throw Error(Errc::InvalidInput, "label table length differs from poset size");
  const auto n = static_cast<std::size_t>(n_);
  up_.assign(n, BitVec(n));
  down_.assign(n, BitVec(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) {
        up_[x].set(y);
        down_[y].set(x);
      }
}

FinitePoset FinitePoset::discrete(int n) {
  BoolMatrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  return FinitePoset(m);
}

FinitePoset FinitePoset::chain(int n) {
  BoolMatrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  return FinitePoset(m);
}

BoolMatrix FinitePoset::matrix() const {
  BoolMatrix m(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_), false));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = leq(x, y);
  return m;
}

std::string FinitePoset::label(int x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[static_cast<std::size_t>(x)];
}

std::size_t FinitePoset::order_pair_count() const {
  std::size_t c = 0;
  for (const auto& u : up_) c += u.count();
  return c;
}

bool FinitePoset::is_discrete() const { return order_pair_count() == static_cast<std::size_t>(n_); }

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool between = false;
      for (int z = 0; z < n_ && !between; ++z)
        between = z != x && z != y && leq(x, z) && leq(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

std::vector<int> FinitePoset::linear_extension() const {
  std::vector<int> order(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
  // Sorting by down-set size is a linear extension: x < y implies |down x| < |down y|.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down(a).count() < down(b).count(); });
  return order;
}

std::optional<int> FinitePoset::join(int x, int y) const {
  BitVec ub = up(x) & up(y);
  std::optional<int> best;
  ub.for_each([&](int z) {
    if (!best && ub.is_subset_of(up(z))) best = z;
  });
  return best;
}

std::optional<int> FinitePoset::meet(int x, int y) const {
  BitVec lb = down(x) & down(y);
  std::optional<int> best;
  lb.for_each([&](int z) {
    if (!best && lb.is_subset_of(down(z))) best = z;
  });
  return best;
}

bool FinitePoset::is_lattice() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (!join(x, y) || !meet(x, y)) return false;
  return true;
}

UpSet::UpSet(const FinitePoset& p, BitVec members) : members_(std::move(members)) {
  if (members_.size() != static_cast<std::size_t>(p.size()))
    throw Error(Errc::PosetMismatch, "set width differs from poset size");
  if (!is_up_closed(p, members_)) throw Error(Errc::NotUpClosed, "set is not an up-set");
}

bool is_up_closed(const FinitePoset& p, const BitVec& s) {
  bool ok = true;
  s.for_each([&](int x) {
    if (ok && !p.up(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

UpSet up_closure(const FinitePoset& p, const BitVec& seed) {
  if (seed.size() != static_cast<std::size_t>(p.size()))
    throw Error(Errc::PosetMismatch, "seed width differs from poset size");
  BitVec out(seed.size());
  seed.for_each([&](int x) { out |= p.up(x); });
  return UpSet(std::move(out));
}

std::vector<UpSet> enumerate_upsets(const FinitePoset& p, std::size_t cap) {
  // Decide elements from the top of a linear extension downwards: x may join
  // the current set only when everything strictly above it already has, so
  // every leaf of the search is an up-set and no branch dead-ends.
  std::vector<int> order = p.linear_extension();
  std::reverse(order.begin(), order.end());
  const auto n = static_cast<std::size_t>(p.size());

  std::vector<UpSet> out;
  BitVec cur(n);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      if (out.size() >= cap)
        throw Error(Errc::SizeLimitExceeded, "more than " + std::to_string(cap) + " up-sets");
      out.push_back(UpSetAccess::trusted(cur));
      return;
    }
    const int x = order[depth];
    self(self, depth + 1);
    BitVec strictly_above = p.up(x);
    strictly_above.reset(static_cast<std::size_t>(x));
    if (strictly_above.is_subset_of(cur)) {
      cur.set(static_cast<std::size_t>(x));
      self(self, depth + 1);
      cur.reset(static_cast<std::size_t>(x));
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

int upset_index(const std::vector<UpSet>& sorted, const UpSet& u) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
  if (it == sorted.end() || !(*it == u)) return -1;
  return static_cast<int>(it - sorted.begin());
}

FinitePoset twisted_square(const FinitePoset& p) {
  const int n = p.size();
  const auto nn = static_cast<std::size_t>(n * n);
  BoolMatrix m(nn, std::vector<bool>(nn, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (p.leq(u, x) && p.leq(y, v))
            m[static_cast<std::size_t>(pair_index(n, x, y))][static_cast<std::size_t>(pair_index(n, u, v))] = true;
  std::vector<std::string> labels;
  if (!p.labels().empty())
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) labels.push_back("(" + p.label(x) + "," + p.label(y) + ")");
  return FinitePoset(m, labels);
}

}  // namespace upalg
