#pragma once

#include <json.hpp>

#include "upalg/algebra.hpp"
#include "upalg/catalog.hpp"
#include "upalg/monoids.hpp"
#include "upalg/relations.hpp"
#include "upalg/representation.hpp"
#include "upalg/search.hpp"

namespace upalg {

using nlohmann::json;

// Readers throw ParseError on malformed documents; the order axioms are
// enforced by FinitePoset (InvalidPoset), table ranges are left to the
// validators.
json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

json structure_to_json(const AnyStructure& s);
AnyStructure structure_from_json(const json& j);

json algebra_to_json(const FiniteExpandedLattice& a);
FiniteExpandedLattice algebra_from_json(const json& j);

// Canonical output is a list of pairs; input also accepts {"rows": [hex...]}
// with bit y of row x (least significant first) meaning (x,y).
json relation_to_json(const Relation& r);
Relation relation_from_json(int n, const json& j);

json report_to_json(const Report& r);
json embedding_report_to_json(const EmbeddingReport& r);
json sweep_result_to_json(const SweepResult& r);

// {"structure", "map", "report", "theorem"}: map lists each up-set with its
// σ-image.
json sigma_certificate(const AnyStructure& s, const EmbeddingReport& r, std::size_t cap = kDefaultUpsetCap);
json psi_certificate(const PsiCertificate& c);

}  // namespace upalg
