#pragma once

#include <utility>
#include <vector>

#include "upalg/algebra.hpp"
#include "upalg/monoids.hpp"
#include "upalg/poset.hpp"

namespace upalg {

// U • V = up-closure of {xy | x in U, y in V}. Throws PosetMismatch.
UpSet fuse(const Pomonoid& p, const UpSet& u, const UpSet& v);
// {U/V, V\U} with U/V = {z | {z}•V ⊆ U} and V\U = {z | V•{z} ⊆ U}.
std::pair<UpSet, UpSet> residuals(const Pomonoid& p, const UpSet& u, const UpSet& v);

// -U = {x- | x ∉ U}, ~U = {x~ | x ∉ U}, ¬U = {x¬ | x ∉ U}.
UpSet upset_minus(const IpoMonoid& m, const UpSet& u);
UpSet upset_tilde(const IpoMonoid& m, const UpSet& u);
UpSet upset_neg(const OrthoIpoMonoid& m, const UpSet& u);

// Raw bit-vector forms of the same operations, for callers that work on a
// handful of up-sets of a large carrier without enumerating all of them.
BitVec fuse_bits(const Pomonoid& p, const BitVec& u, const BitVec& v);
BitVec image_of_complement(const UnaryTable& op, const BitVec& u);

// An up-set algebra together with the up-set behind each element index.
struct UpsetAlgebra {
  FiniteExpandedLattice algebra;
  std::vector<UpSet> upsets;

  int index_of(const UpSet& u) const { return upset_index(upsets, u); }
};

// ⟨Up(P), ∩, ∪, •, ↑1⟩ with no negations; its residuals are recovered by
// right_residuals/left_residuals.
UpsetAlgebra build_upset_rl(const Pomonoid& p, std::size_t cap = kDefaultUpsetCap);
// D(P): adds -U and ~U. Throws SizeLimitExceeded past `cap` up-sets.
UpsetAlgebra build_D(const IpoMonoid& m, std::size_t cap = kDefaultUpsetCap);
// Q(P): adds ¬U.
UpsetAlgebra build_Q(const OrthoIpoMonoid& m, std::size_t cap = kDefaultUpsetCap);

}  // namespace upalg
