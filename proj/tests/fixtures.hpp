#pragma once

#include "upalg/catalog.hpp"
#include "upalg/monoids.hpp"

namespace fx {

// Discrete {0,1}, 0·0 = 0, unit 1.
inline upalg::Pomonoid discrete01() { return std::get<upalg::Pomonoid>(std::get<upalg::AnyStructure>(upalg::find_known("discrete-01-pomonoid")->value)); }

// z = 0 < e = 1, z·z = z, z- = z~ = e.
inline upalg::IpoMonoid two_chain() { return std::get<upalg::IpoMonoid>(std::get<upalg::AnyStructure>(upalg::find_known("two-chain-ipo")->value)); }

inline upalg::IpoMonoid z7_ipo() { return upalg::pregroup_to_ipo(upalg::cyclic_group(7).base); }

inline upalg::OrthoIpoMonoid z7_ortho() { return upalg::ortho_pregroup_to_ortho_ipo(upalg::cyclic_group(7)); }

inline upalg::FiniteExpandedLattice sugihara() { return std::get<upalg::FiniteExpandedLattice>(upalg::find_known("sugihara-3")->value); }

}  // namespace fx
