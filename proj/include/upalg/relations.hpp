#pragma once

#include <vector>

#include "upalg/algebra.hpp"
#include "upalg/bitvec.hpp"
#include "upalg/poset.hpp"

namespace upalg {

// Binary relation on 0..n-1; pair (x,y) is bit x*n + y, matching
// twisted_square. Intermediate results need not be up-closed.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), bits_(static_cast<std::size_t>(n * n)) {}
  Relation(int n, BitVec bits);

  static Relation identity(int n);
  static Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // {(x, f(x))}
  static Relation graph(const std::vector<int>& f);
  static Relation order(const FinitePoset& p);

  int base_size() const { return n_; }
  bool test(int x, int y) const { return bits_.test(static_cast<std::size_t>(x * n_ + y)); }
  void set(int x, int y, bool v = true) { bits_.set(static_cast<std::size_t>(x * n_ + y), v); }
  const BitVec& bits() const { return bits_; }
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator|(const Relation& a, const Relation& b);

 private:
  int n_ = 0;
  BitVec bits_;
};

// All three throw BaseMismatch when base sets differ.
Relation rel_compose(const Relation& r, const Relation& s);
Relation rel_converse(const Relation& r);
Relation rel_complement(const Relation& r);

// Membership is downward-closed in the first coordinate and upward-closed in
// the second, i.e. the relation is an up-set of (X², ≼).
bool is_rel_upset(const FinitePoset& x, const Relation& r);

struct OrderAutomorphism {
  std::vector<int> map;
  // Throws AutomorphismContractViolation unless `map` is an order automorphism.
  static OrderAutomorphism make(const FinitePoset& p, std::vector<int> map);
  static OrderAutomorphism identity(int n);
};

struct DualAutomorphism {
  std::vector<int> map;
  // Throws AutomorphismContractViolation unless self-inverse and order-reversing.
  static DualAutomorphism make(const FinitePoset& p, std::vector<int> map);
};

// ~R = R^c⌣ ; α and -R = α ; R^c⌣. Throw NotUpClosed if R or the result is
// not an up-set of (X², ≼), BaseMismatch on size mismatch.
Relation rel_tilde(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha);
Relation rel_minus(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha);
// ¬R = α ; β ; R^c ; β. Throws AutomorphismContractViolation unless β = α;β;α.
Relation rel_neg(const FinitePoset& x, const Relation& r, const OrderAutomorphism& alpha,
                 const DualAutomorphism& beta);

struct FullAlgebra {
  FiniteExpandedLattice algebra;
  std::vector<Relation> elements;  // index -> relation, ascending as bit vectors

  int index_of(const Relation& r) const;
};

// ⟨Up(X², ≼), ∩, ∪, ;, ⩽, -, ~⟩ and its ¬-expansion.
FullAlgebra build_full_dinfl(const FinitePoset& x, const OrderAutomorphism& alpha,
                             std::size_t cap = kDefaultUpsetCap);
FullAlgebra build_full_dqra(const FinitePoset& x, const OrderAutomorphism& alpha, const DualAutomorphism& beta,
                            std::size_t cap = kDefaultUpsetCap);

// (γ;R)^c = γ;R^c and (R;γ)^c = R^c;γ. Throws NotABijection.
bool lemma2_holds(const Relation& gamma, const Relation& r);
bool lemma2_holds(const std::vector<int>& gamma, const Relation& r);

}  // namespace upalg
