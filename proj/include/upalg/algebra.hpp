#pragma once

#include <optional>
#include <string>
#include <vector>

#include "upalg/monoids.hpp"
#include "upalg/report.hpp"

namespace upalg {

// Explicit operation tables over 0..size-1. minus/tilde are absent for the
// plain residuated lattices of up-sets; neg is present only for qRA-shaped
// algebras. The constant 0 is derived as -1.
struct FiniteExpandedLattice {
  int size = 0;
  Table2 meet;
  Table2 join;
  Table2 fusion;
  int unit = 0;
  std::optional<UnaryTable> minus;
  std::optional<UnaryTable> tilde;
  std::optional<UnaryTable> neg;
  std::string provenance;
  std::vector<std::string> labels;

  bool leq(int a, int b) const { return meet(a, b) == a; }
  int mul(int a, int b) const { return fusion(a, b); }
  int m(int a) const { return (*minus)[static_cast<std::size_t>(a)]; }
  int t(int a) const { return (*tilde)[static_cast<std::size_t>(a)]; }
  int ng(int a) const { return (*neg)[static_cast<std::size_t>(a)]; }
  bool has_negations() const { return minus.has_value() && tilde.has_value(); }
  std::string label(int a) const;
};

enum class CheckMode { FirstWitness, CollectAll };

// Lattice axioms for meet/join: commutativity, associativity, absorption.
Report check_lattice(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_monoid(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
// Lattice + monoid + existence of both residuals (computed as joins).
Report check_rl(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_distributive(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
// Lattice + monoid + ab <= c iff a <= -(b~c) iff b <= ~(-c a), + check_in.
Report check_infl(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
// ~-a = a = -~a; a mismatch between -1 and ~1 is reported under the same law.
Report check_in(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_dinfl(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_cyclic(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
// The remaining checkers need neg and throw SignatureMismatch without it.
Report check_dm(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_dp(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_di(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);
Report check_dqra(const FiniteExpandedLattice& a, CheckMode mode = CheckMode::FirstWitness);

int bottom(const FiniteExpandedLattice& a);
int top(const FiniteExpandedLattice& a);
// c/b and a\c as lattice joins of {a : ab <= c} and {b : ab <= c}. These are
// the residuals whenever any exist; check_rl confirms that they do.
Table2 right_residuals(const FiniteExpandedLattice& a);  // (c, b) -> c/b
Table2 left_residuals(const FiniteExpandedLattice& a);   // (a, c) -> a\c

FinitePoset lattice_order(const FiniteExpandedLattice& a);
std::vector<int> idempotents(const FiniteExpandedLattice& a);

// Bijections f with a <= b iff f(a) <= f(b), in lexicographic order.
std::vector<std::vector<int>> order_isomorphisms(const FiniteExpandedLattice& a, const FiniteExpandedLattice& b);

}  // namespace upalg
