#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "upalg/algebra.hpp"
#include "upalg/monoids.hpp"
#include "upalg/representation.hpp"

namespace upalg {

// A_n: elements a_i at positions 0..n-1 and b_j at n..2n-1, both in ascending
// order of the index value; values run over -k..-1,1..k (n = 2k) or -k..k
// (n = 2k+1). The unit is a_{-k}.
struct AnAlgebra {
  int n = 0;
  int k = 0;
  std::vector<int> values;  // position -> index value
  FiniteExpandedLattice algebra;

  int a(int i) const { return position(i); }
  int b(int j) const { return n + position(j); }
  bool has_value(int i) const;
  int position(int i) const;  // throws ParameterOutOfRange
};

// Throws ParameterOutOfRange for n < 3.
AnAlgebra build_An(int n);

// The fusion obtained by reading the three printed case tables first-match,
// top to bottom.
Table2 an_printed_fusion(const AnAlgebra& a);

struct FusionDiscrepancy {
  int left = 0, right = 0;  // element positions
  int printed = 0;          // first-match value of the printed tables
  int used = 0;             // value in build_An
};
// Cells where the printed tables and build_An's fusion disagree.
std::vector<FusionDiscrepancy> an_printed_discrepancies(const AnAlgebra& a);

// ψ(a_i) = U_i, ψ(b_j) = V_j into the up-sets of the discrete ortho pregroup
// Z_7 (n = 3) or Z_{n-2} × Z_7 (n >= 4, element (m,l) at index 7m + l).
struct PsiCertificate {
  int n = 0;
  AnAlgebra source;
  OrthoPregroup target;
  std::vector<BitVec> images;                          // per source position
  std::map<std::string, std::vector<int>> named_sets;  // "U_{-1}", "V_0", ...
  EmbeddingReport report;
  bool image_only = false;
  std::optional<Report> target_dqra;  // check_dqra on Q(Z_7), n = 3 only
};

// Throws ParameterOutOfRange for n < 3.
std::vector<BitVec> psi_sets(int n);
// n = 3 materializes Q(Z_7) and verifies ψ as a homomorphism into it (and,
// with check_target, runs check_dqra on the target). n >= 4 verifies every
// operation on the ψ-image directly.
PsiCertificate build_psi(int n, bool check_target = true);

struct KnownStructure {
  std::string name;
  std::string note;
  std::variant<AnyStructure, FiniteExpandedLattice> value;
};

std::vector<KnownStructure> known_structures();
std::optional<KnownStructure> find_known(const std::string& name);

}  // namespace upalg
