#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "upalg/algebra.hpp"
#include "upalg/monoids.hpp"
#include "upalg/relations.hpp"
#include "upalg/upsets.hpp"

namespace upalg {

// σ(U) = {(x,y) | ∃u ∈ U: xu <= y}. Throws PosetMismatch.
Relation sigma(const Pomonoid& p, const UpSet& u);

struct ConditionW {
  bool holds = true;
  std::optional<std::array<int, 4>> witness;  // (x, u, v, y)
};

// For all x,u,v,y with xu <= y and xv <= y, some w >= u,v has xw <= y.
ConditionW condition_w(const Pomonoid& p);

struct OpCheck {
  std::optional<bool> ok;  // empty when the operation is not part of the check
  std::vector<int> witness;
};

enum class EmbeddingKind { None, RL, DInFL, DqRA };
std::string embedding_kind_name(EmbeddingKind k);

struct EmbeddingReport {
  bool injective = true;
  std::vector<int> injective_witness;
  OpCheck meet, join, fusion, unit, tilde, minus, neg;
  EmbeddingKind conclusion = EmbeddingKind::None;

  // Sets `conclusion` to the strongest label the flags justify.
  void conclude();
  std::vector<std::pair<std::string, const OpCheck*>> ops() const;
};

// Witnesses are indices into enumerate_upsets(P). Relation-side negations use
// α(x) = x~~ and β(x) = x¬. Throws SizeLimitExceeded past `cap` up-sets.
EmbeddingReport verify_sigma_embedding(const Pomonoid& p, std::size_t cap = kDefaultUpsetCap);
EmbeddingReport verify_sigma_embedding(const IpoMonoid& m, std::size_t cap = kDefaultUpsetCap);
EmbeddingReport verify_sigma_embedding(const OrthoIpoMonoid& m, std::size_t cap = kDefaultUpsetCap);
EmbeddingReport verify_sigma_embedding(const OrthoPregroup& m, std::size_t cap = kDefaultUpsetCap);
EmbeddingReport verify_sigma_embedding(const AnyStructure& s, std::size_t cap = kDefaultUpsetCap);

OrderAutomorphism sigma_alpha(const IpoMonoid& m);
DualAutomorphism sigma_beta(const OrthoIpoMonoid& m);

// The failing case of the pregroup axioms (with ℓ := -, r := ~) and the
// concrete σ discrepancy its construction predicts.
struct Prop6Witness {
  int case_no = 0;  // 1..4
  int x = 0;
  UpSet u;
  std::pair<int, int> pair;
  bool confirmed = false;  // pair lies in exactly the side the case predicts
};

// Empty when m satisfies the pregroup axioms.
std::optional<Prop6Witness> prop6_witness(const IpoMonoid& m);

// Checks injectivity and every operation present in both signatures. Throws
// SignatureMismatch when the source has an operation the target lacks.
EmbeddingReport verify_hom_embedding(const FiniteExpandedLattice& source, const FiniteExpandedLattice& target,
                                     const std::vector<int>& map);

}  // namespace upalg
