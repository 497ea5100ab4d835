#pragma once

#include <string>
#include <variant>
#include <vector>

#include "upalg/poset.hpp"
#include "upalg/report.hpp"

namespace upalg {

using UnaryTable = std::vector<int>;

// Square table of a binary operation on 0..n-1.
class Table2 {
 public:
  Table2() = default;
  explicit Table2(int n, int fill = 0) : n_(n), cells_(static_cast<std::size_t>(n * n), fill) {}
  explicit Table2(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int operator()(int x, int y) const { return cells_[static_cast<std::size_t>(x * n_ + y)]; }
  int& at(int x, int y) { return cells_[static_cast<std::size_t>(x * n_ + y)]; }
  const std::vector<int>& cells() const { return cells_; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Table2&, const Table2&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

struct Pomonoid {
  FinitePoset order;
  Table2 table;
  int unit = 0;

  int size() const { return order.size(); }
  int mul(int x, int y) const { return table(x, y); }
  bool leq(int x, int y) const { return order.leq(x, y); }
};

// Involutive pomonoid: x <= y iff x*y~ <= 1- iff y-*x <= 1-.
struct IpoMonoid {
  Pomonoid base;
  UnaryTable minus;
  UnaryTable tilde;

  int size() const { return base.size(); }
  int zero() const { return minus[static_cast<std::size_t>(base.unit)]; }
  int m(int x) const { return minus[static_cast<std::size_t>(x)]; }
  int t(int x) const { return tilde[static_cast<std::size_t>(x)]; }
};

struct Pregroup {
  Pomonoid base;
  UnaryTable ell;
  UnaryTable r;

  int size() const { return base.size(); }
};

struct OrthoIpoMonoid {
  IpoMonoid base;
  UnaryTable neg;

  int size() const { return base.size(); }
};

struct OrthoPregroup {
  Pregroup base;
  UnaryTable neg;

  int size() const { return base.size(); }
};

using AnyStructure = std::variant<Pomonoid, IpoMonoid, Pregroup, OrthoIpoMonoid, OrthoPregroup>;

enum class StructureKind { Pomonoid, Ipo, Pregroup, OrthoIpo, OrthoPregroup };

std::string kind_name(StructureKind k);
StructureKind parse_kind(const std::string& s);  // throws InvalidInput
StructureKind kind_of(const AnyStructure& s);
const Pomonoid& pomonoid_of(const AnyStructure& s);

enum class IpoAxioms { Definitional, Alternative };

// Laws are checked in a fixed order; each violated law carries its
// lexicographically first witness. Table entries outside 0..n-1 throw
// TableOutOfRange.
Report validate_pomonoid(const Pomonoid& p);
// Throws InvalidBase when the pomonoid layer fails.
Report validate_ipo(const IpoMonoid& m, IpoAxioms mode = IpoAxioms::Definitional);
// Also reports the derived pregroup laws (prefixed "derived:").
Report validate_pregroup(const Pregroup& p);
Report validate_ortho(const OrthoIpoMonoid& m);
Report validate_ortho(const OrthoPregroup& m);
// Dispatches to the validator matching the structure's kind.
Report validate_structure(const AnyStructure& s, IpoAxioms mode = IpoAxioms::Definitional);

// Every lemma-level consequence of the ipo axioms; used as a cross-check.
Report ipo_consequences(const IpoMonoid& m);

// minus := ell, tilde := r. Throws InvalidInput when `p` is not a pregroup.
IpoMonoid pregroup_to_ipo(const Pregroup& p);
OrthoIpoMonoid ortho_pregroup_to_ortho_ipo(const OrthoPregroup& p);
// ell := minus, r := tilde, with no validation.
Pregroup ipo_as_pregroup_candidate(const IpoMonoid& m);

bool is_cyclic(const IpoMonoid& m);
bool is_commutative(const Pomonoid& p);

enum class NegChoice { Identity, Inverse };

// Discretely ordered ortho pregroup from a group given by its Cayley table.
// Throws NotAGroup, or NotAbelian when NegChoice::Inverse is asked of a
// non-commutative group.
OrthoPregroup group_to_ortho_pregroup(const std::vector<std::vector<int>>& cayley, int unit,
                                      const UnaryTable& inverse, NegChoice neg_choice);

OrthoPregroup cyclic_group(int n, NegChoice neg_choice = NegChoice::Inverse);
OrthoPregroup symmetric_group_s3(NegChoice neg_choice = NegChoice::Identity);

// Componentwise product; element (a,b) has index a*|B| + b.
Pomonoid direct_product(const Pomonoid& a, const Pomonoid& b);
IpoMonoid direct_product(const IpoMonoid& a, const IpoMonoid& b);
Pregroup direct_product(const Pregroup& a, const Pregroup& b);
OrthoIpoMonoid direct_product(const OrthoIpoMonoid& a, const OrthoIpoMonoid& b);
OrthoPregroup direct_product(const OrthoPregroup& a, const OrthoPregroup& b);
// Throws KindMismatch when the kinds differ.
AnyStructure direct_product(const AnyStructure& a, const AnyStructure& b);

FinitePoset product_order(const FinitePoset& a, const FinitePoset& b);

}  // namespace upalg
