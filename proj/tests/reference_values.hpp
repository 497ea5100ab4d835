#pragma once

// Hand-transcribed values for A_3 and A_4: Hasse covers, idempotents and the
// fusion identities annotated on the diagrams.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upalg/catalog.hpp"

namespace refv {

using Cover = std::pair<std::string, std::string>;

struct Identity {
  std::string left, right, value;  // left·right = value
};

struct Diagram {
  int n;
  std::set<Cover> covers;
  std::set<std::string> idempotents;
  std::vector<Identity> identities;
};

inline const std::vector<Diagram>& diagrams() {
  static const std::vector<Diagram> d = {
      {3,
       {{"b_-1", "a_-1"}, {"b_-1", "b_0"}, {"a_-1", "a_0"}, {"b_0", "a_0"}, {"b_0", "b_1"}, {"b_1", "a_1"},
        {"a_0", "a_1"}},
       {"b_-1", "a_-1", "a_1"},
       {{"a_0", "a_0", "a_1"}, {"a_0", "b_1", "a_1"}, {"b_1", "b_0", "a_1"}, {"b_0", "b_0", "b_1"},
        {"a_0", "b_0", "b_1"}}},
      {4,
       {{"b_-2", "a_-2"}, {"b_-2", "b_-1"}, {"a_-2", "a_-1"}, {"b_-1", "a_-1"}, {"b_-1", "b_1"}, {"b_1", "b_2"},
        {"b_1", "a_1"}, {"b_2", "a_2"}, {"a_-1", "a_1"}, {"a_1", "a_2"}},
       {"b_-2", "a_-2", "a_2"},
       {{"a_-1", "a_-1", "a_2"}, {"b_1", "b_1", "a_2"}, {"b_2", "b_-1", "a_2"}, {"b_-1", "b_-1", "b_2"},
        {"a_-1", "b_1", "b_2"}, {"a_1", "b_-1", "b_2"}}},
  };
  return d;
}

inline int by_label(const upalg::FiniteExpandedLattice& a, const std::string& l) {
  for (int i = 0; i < a.size; ++i)
    if (a.label(i) == l) return i;
  return -1;
}

// Empty when the algebra reproduces the diagram; otherwise a description of
// the first mismatch.
inline std::string compare(const upalg::FiniteExpandedLattice& a, const Diagram& d) {
  std::set<Cover> covers;
  for (auto [x, y] : upalg::lattice_order(a).covers()) covers.insert({a.label(x), a.label(y)});
  if (covers != d.covers) return "cover relation differs";
  std::set<std::string> idem;
  for (int x : upalg::idempotents(a)) idem.insert(a.label(x));
  if (idem != d.idempotents) return "idempotent set differs";
  if (a.label(a.unit) != (d.n == 3 ? "a_-1" : "a_-2")) return "unit differs";
  for (const auto& id : d.identities)
    if (a.label(a.mul(by_label(a, id.left), by_label(a, id.right))) != id.value)
      return id.left + "*" + id.right + " != " + id.value;
  return {};
}

}  // namespace refv
