#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "upalg/monoids.hpp"

namespace upalg {

enum class OrderMode { Discrete, All };

inline constexpr int kSearchSizeCap = 6;

struct SearchSpec {
  StructureKind kind = StructureKind::Ipo;
  int size = 1;
  OrderMode order_mode = OrderMode::All;
  IpoAxioms axiom_mode = IpoAxioms::Alternative;
  std::optional<std::size_t> limit;
};

// One structure per isomorphism class of the given kind and exact size,
// relabelled to its canonical representative and sorted by canonical form.
// Throws SizeCapExceeded above kSearchSizeCap, ParameterOutOfRange below 1.
std::vector<AnyStructure> enumerate_models(const SearchSpec& spec);
// The same for every size 1..spec.size, concatenated in size order.
std::vector<AnyStructure> enumerate_models_up_to(const SearchSpec& spec);

// Posets on n elements, one per isomorphism class.
std::vector<FinitePoset> enumerate_posets(int n, OrderMode mode);

// Equal iff the structures are isomorphic (kind included).
std::string canonical_form(const AnyStructure& s);
// The structure relabelled by the permutation that realizes canonical_form.
AnyStructure canonical_representative(const AnyStructure& s);
// Relabel element x as perm[x].
AnyStructure permute(const AnyStructure& s, const std::vector<int>& perm);

struct SweepResult {
  std::string property;
  std::size_t total = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skipped = 0;  // structures outside the property's hypothesis
  std::vector<AnyStructure> counterexamples;
};

std::vector<std::string> sweep_properties();
// Runs the named property on every structure enumerate_models_up_to(spec)
// yields. Throws UnknownProperty, or KindMismatch when the property does not
// apply to spec.kind.
SweepResult sweep(const std::string& property, const SearchSpec& spec);

}  // namespace upalg
