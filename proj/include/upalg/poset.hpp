#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upalg/bitvec.hpp"
#include "upalg/report.hpp"

namespace upalg {

using BoolMatrix = std::vector<std::vector<bool>>;

// Checks reflexivity, antisymmetry and transitivity. Throws NonSquareMatrix.
Report validate_poset(const BoolMatrix& leq);

// Finite poset on 0..n-1. Construction validates the order axioms.
class FinitePoset {
 public:
  FinitePoset() = default;
  // Throws InvalidPoset (or NonSquareMatrix) when `leq` is not a partial order.
  explicit FinitePoset(const BoolMatrix& leq, std::vector<std::string> labels = {});

  static FinitePoset discrete(int n);
  static FinitePoset chain(int n);  // 0 < 1 < ... < n-1

  int size() const { return n_; }
  bool leq(int x, int y) const { return up_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }
  const BitVec& up(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const BitVec& down(int x) const { return down_[static_cast<std::size_t>(x)]; }

  BoolMatrix matrix() const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int x) const;

  // Number of pairs (x,y) with x <= y.
  std::size_t order_pair_count() const;
  bool is_discrete() const;
  // Cover pairs (x,y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  // A linear extension: x <= y implies x appears no later than y.
  std::vector<int> linear_extension() const;

  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;
  bool is_lattice() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  int n_ = 0;
  std::vector<BitVec> up_;
  std::vector<BitVec> down_;
  std::vector<std::string> labels_;
};

// An up-closed subset of a poset. The members vector has the poset's width.
class UpSet {
 public:
  UpSet() = default;
  // Throws PosetMismatch on width mismatch and NotUpClosed otherwise.
  UpSet(const FinitePoset& p, BitVec members);

  static UpSet empty(const FinitePoset& p) { return UpSet(BitVec(static_cast<std::size_t>(p.size()))); }
  static UpSet full(const FinitePoset& p) { return UpSet(BitVec::full(static_cast<std::size_t>(p.size()))); }
  static UpSet principal(const FinitePoset& p, int x) { return UpSet(p.up(x)); }

  const BitVec& members() const { return members_; }
  bool contains(int x) const { return members_.test(static_cast<std::size_t>(x)); }
  std::size_t width() const { return members_.size(); }
  std::vector<int> elements() const { return members_.indices(); }

  friend bool operator==(const UpSet&, const UpSet&) = default;
  friend auto operator<=>(const UpSet& a, const UpSet& b) { return a.members_ <=> b.members_; }

 private:
  friend UpSet up_closure(const FinitePoset&, const BitVec&);
  friend class UpSetAccess;
  explicit UpSet(BitVec m) : members_(std::move(m)) {}
  BitVec members_;
};

// Constructs UpSet values without re-checking closure; for callers that
// produced the set by an operation already known to be up-closed.
class UpSetAccess {
 public:
  static UpSet trusted(BitVec m) { return UpSet(std::move(m)); }
};

bool is_up_closed(const FinitePoset& p, const BitVec& s);

// Smallest up-set containing `seed`.
UpSet up_closure(const FinitePoset& p, const BitVec& seed);

inline constexpr std::size_t kDefaultUpsetCap = std::size_t{1} << 20;

// All up-sets, ascending as bit vectors (element i has weight 2^i).
// Throws SizeLimitExceeded when more than `cap` up-sets exist.
std::vector<UpSet> enumerate_upsets(const FinitePoset& p, std::size_t cap = kDefaultUpsetCap);

// Position of `u` in a list produced by enumerate_upsets, or -1.
int upset_index(const std::vector<UpSet>& sorted, const UpSet& u);

// (P^2, twisted order): (x,y) <= (u,v) iff u <= x and y <= v. Pair (x,y)
// has index x*n + y.
FinitePoset twisted_square(const FinitePoset& p);

inline int pair_index(int n, int x, int y) { return x * n + y; }

}  // namespace upalg
