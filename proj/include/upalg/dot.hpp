#pragma once

#include <string>
#include <vector>

#include "upalg/algebra.hpp"
#include "upalg/monoids.hpp"

namespace upalg {

// Hasse diagram (cover edges only, drawn bottom to top); the listed elements
// are drawn as filled nodes.
std::string hasse_dot(const FinitePoset& p, const std::vector<int>& filled, const std::string& name = "hasse");

// Idempotents are filled.
std::string to_dot(const FiniteExpandedLattice& a);
std::string to_dot(const AnyStructure& s);

}  // namespace upalg
