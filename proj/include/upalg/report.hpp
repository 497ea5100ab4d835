#pragma once

#include <string>
#include <vector>

namespace upalg {

// One violated law together with its lexicographically first witness tuple
// (or every witness, in collect-all mode).
struct Violation {
  std::string law;
  std::vector<int> witness;
  std::string note;
};

struct Report {
  std::string subject;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(const std::string& law) const { return find(law) != nullptr; }
  const Violation* find(const std::string& law) const {
    for (const auto& v : violations)
      if (v.law == law) return &v;
    return nullptr;
  }
  void add(std::string law, std::vector<int> witness, std::string note = {}) {
    violations.push_back({std::move(law), std::move(witness), std::move(note)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace upalg
