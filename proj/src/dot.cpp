#include "upalg/dot.hpp"

#include <algorithm>
#include <sstream>

namespace upalg {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string hasse_dot(const FinitePoset& p, const std::vector<int>& filled, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) {
    bool f = std::find(filled.begin(), filled.end(), x) != filled.end();
    os << "  n" << x << " [label=" << quoted(p.label(x)) << (f ? ", style=filled, fillcolor=black, fontcolor=white" : "")
       << "];\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -- n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const FiniteExpandedLattice& a) {
  return hasse_dot(lattice_order(a), idempotents(a), a.provenance.empty() ? "algebra" : a.provenance);
}

std::string to_dot(const AnyStructure& s) {
  const Pomonoid& p = pomonoid_of(s);
  std::vector<int> idem;
  for (int x = 0; x < p.size(); ++x)
    if (p.mul(x, x) == x) idem.push_back(x);
  return hasse_dot(p.order, idem, kind_name(kind_of(s)));
}

}  // namespace upalg
