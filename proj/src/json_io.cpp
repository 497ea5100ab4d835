#include "upalg/json_io.hpp"

#include "upalg/error.hpp"

namespace upalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

int get_int(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field '") + name + "' is not an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const char* name) {
  if (!v.is_array()) bad(std::string("field '") + name + "' is not an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(std::string("field '") + name + "' has a non-integer entry");
    out.push_back(e.get<int>());
  }
  return out;
}

UnaryTable unary(const json& j, const char* name) { return int_list(field(j, name), name); }

Table2 table(const json& v, const char* name) {
  if (!v.is_array()) bad(std::string("field '") + name + "' is not an array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : v) rows.push_back(int_list(row, name));
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw Error(Errc::TableOutOfRange, std::string(name) + " table is not square");
  return Table2(rows);
}

json table_json(const Table2& t) { return t.rows(); }

}  // namespace

json poset_to_json(const FinitePoset& p) {
  json j;
  j["size"] = p.size();
  j["leq"] = p.matrix();
  if (!p.labels().empty()) j["labels"] = p.labels();
  return j;
}

FinitePoset poset_from_json(const json& j) {
  const int n = get_int(j, "size");
  const json& leq = field(j, "leq");
  if (!leq.is_array()) bad("field 'leq' is not an array");
  BoolMatrix m;
  for (const auto& row : leq) {
    if (!row.is_array()) bad("field 'leq' has a non-array row");
    std::vector<bool> r;
    for (const auto& e : row) {
      if (e.is_boolean())
        r.push_back(e.get<bool>());
      else if (e.is_number_integer())
        r.push_back(e.get<int>() != 0);
      else
        bad("field 'leq' has a non-boolean entry");
    }
    m.push_back(std::move(r));
  }
  if (static_cast<int>(m.size()) != n) throw Error(Errc::NonSquareMatrix, "'leq' row count differs from size");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FinitePoset(m, labels);
}

json structure_to_json(const AnyStructure& s) {
  const Pomonoid& p = pomonoid_of(s);
  json j = poset_to_json(p.order);
  j["kind"] = kind_name(kind_of(s));
  j["table"] = table_json(p.table);
  j["unit"] = p.unit;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IpoMonoid>) {
          j["minus"] = v.minus;
          j["tilde"] = v.tilde;
        } else if constexpr (std::is_same_v<T, Pregroup>) {
          j["ell"] = v.ell;
          j["r"] = v.r;
        } else if constexpr (std::is_same_v<T, OrthoIpoMonoid>) {
          j["minus"] = v.base.minus;
          j["tilde"] = v.base.tilde;
          j["neg"] = v.neg;
        } else if constexpr (std::is_same_v<T, OrthoPregroup>) {
          j["ell"] = v.base.ell;
          j["r"] = v.base.r;
          j["neg"] = v.neg;
        }
      },
      s);
  return j;
}

AnyStructure structure_from_json(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) bad("field 'kind' is not a string");
  StructureKind kind;
  try {
    kind = parse_kind(k.get<std::string>());
  } catch (const Error& e) {
    bad(e.what());
  }
  Pomonoid p{poset_from_json(j), table(field(j, "table"), "table"), get_int(j, "unit")};
  switch (kind) {
    case StructureKind::Pomonoid: return p;
    case StructureKind::Ipo: return IpoMonoid{p, unary(j, "minus"), unary(j, "tilde")};
    case StructureKind::Pregroup: return Pregroup{p, unary(j, "ell"), unary(j, "r")};
    case StructureKind::OrthoIpo: return OrthoIpoMonoid{IpoMonoid{p, unary(j, "minus"), unary(j, "tilde")}, unary(j, "neg")};
    case StructureKind::OrthoPregroup: return OrthoPregroup{Pregroup{p, unary(j, "ell"), unary(j, "r")}, unary(j, "neg")};
  }
  bad("unknown kind");
}

json algebra_to_json(const FiniteExpandedLattice& a) {
  json j;
  j["size"] = a.size;
  j["meet"] = table_json(a.meet);
  j["join"] = table_json(a.join);
  j["fusion"] = table_json(a.fusion);
  j["unit"] = a.unit;
  j["minus"] = a.minus ? json(*a.minus) : json(nullptr);
  j["tilde"] = a.tilde ? json(*a.tilde) : json(nullptr);
  j["neg"] = a.neg ? json(*a.neg) : json(nullptr);
  j["provenance"] = a.provenance;
  if (!a.labels.empty()) j["labels"] = a.labels;
  return j;
}

FiniteExpandedLattice algebra_from_json(const json& j) {
  FiniteExpandedLattice a;
  a.size = get_int(j, "size");
  a.meet = table(field(j, "meet"), "meet");
  a.join = table(field(j, "join"), "join");
  a.fusion = table(field(j, "fusion"), "fusion");
  a.unit = get_int(j, "unit");
  auto opt = [&](const char* name) -> std::optional<UnaryTable> {
    if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
    return unary(j, name);
  };
  a.minus = opt("minus");
  a.tilde = opt("tilde");
  a.neg = opt("neg");
  if (j.contains("provenance") && j.at("provenance").is_string()) a.provenance = j.at("provenance").get<std::string>();
  if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();

  const int n = a.size;
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  for (const Table2* t : {&a.meet, &a.join, &a.fusion}) {
    if (t->size() != n) throw Error(Errc::TableOutOfRange, "table size differs from 'size'");
    for (int v : t->cells())
      if (!in_range(v)) throw Error(Errc::TableOutOfRange, "table entry out of range");
  }
  if (!in_range(a.unit)) throw Error(Errc::TableOutOfRange, "unit out of range");
  for (const auto* u : {&a.minus, &a.tilde, &a.neg})
    if (*u) {
      if (static_cast<int>((*u)->size()) != n) throw Error(Errc::TableOutOfRange, "unary table has wrong length");
      for (int v : **u)
        if (!in_range(v)) throw Error(Errc::TableOutOfRange, "unary entry out of range");
    }
  return a;
}

json relation_to_json(const Relation& r) {
  json out = json::array();
  for (auto [x, y] : r.pairs()) out.push_back({x, y});
  return out;
}

Relation relation_from_json(int n, const json& j) {
  if (j.is_object() && j.contains("rows")) {
    Relation r(n);
    const auto& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) bad("'rows' must list one hex row per element");
    for (int x = 0; x < n; ++x) {
      auto s = rows[static_cast<std::size_t>(x)].get<std::string>();
      unsigned long long bits = 0;
      try {
        bits = std::stoull(s, nullptr, 16);
      } catch (const std::exception&) {
        bad("row '" + s + "' is not hexadecimal");
      }
      for (int y = 0; y < n; ++y)
        if (bits >> y & 1ULL) r.set(x, y);
    }
    return r;
  }
  if (!j.is_array()) bad("relation must be a list of pairs or {\"rows\": [...]}");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) bad("relation pair must have two entries");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return Relation::from_pairs(n, pairs);
}

json report_to_json(const Report& r) {
  json j;
  j["subject"] = r.subject;
  j["ok"] = r.ok();
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    json e{{"law", v.law}, {"witness", v.witness}};
    if (!v.note.empty()) e["note"] = v.note;
    j["violations"].push_back(e);
  }
  return j;
}

json embedding_report_to_json(const EmbeddingReport& r) {
  json j;
  j["injective"] = r.injective;
  if (!r.injective) j["injective_witness"] = r.injective_witness;
  json pres = json::object();
  for (const auto& [name, op] : r.ops()) {
    if (!op->ok) continue;
    json e{{"ok", *op->ok}};
    if (!*op->ok && !op->witness.empty()) e["witness"] = op->witness;
    pres[name] = e;
  }
  j["preserves"] = pres;
  j["conclusion"] = embedding_kind_name(r.conclusion);
  return j;
}

json sweep_result_to_json(const SweepResult& r) {
  json j{{"property", r.property}, {"total", r.total},   {"holds", r.holds},
         {"fails", r.fails},       {"skipped", r.skipped}, {"counterexamples", json::array()}};
  for (const auto& s : r.counterexamples) j["counterexamples"].push_back(structure_to_json(s));
  return j;
}

json sigma_certificate(const AnyStructure& s, const EmbeddingReport& r, std::size_t cap) {
  const Pomonoid& p = pomonoid_of(s);
  json map = json::array();
  for (const auto& u : enumerate_upsets(p.order, cap))
    map.push_back({{"upset", u.elements()}, {"image", relation_to_json(sigma(p, u))}});
  const StructureKind k = kind_of(s);
  std::string theorem = "custom";
  if (k == StructureKind::Pregroup && r.conclusion == EmbeddingKind::DInFL) theorem = "Thm5";
  if (k == StructureKind::OrthoPregroup && r.conclusion == EmbeddingKind::DqRA) theorem = "Thm8";
  return json{{"structure", structure_to_json(s)}, {"map", map}, {"report", embedding_report_to_json(r)}, {"theorem", theorem}};
}

json psi_certificate(const PsiCertificate& c) {
  json map = json::array();
  for (int p = 0; p < 2 * c.n; ++p)
    map.push_back({{"element", c.source.algebra.label(p)}, {"image", c.images[static_cast<std::size_t>(p)].indices()}});
  json j{{"structure", structure_to_json(c.target)},
         {"source", algebra_to_json(c.source.algebra)},
         {"map", map},
         {"report", embedding_report_to_json(c.report)},
         {"theorem", "Thm8"},
         {"image_only", c.image_only}};
  for (const auto& [name, elems] : c.named_sets) j[name] = elems;
  if (c.n >= 4) j["element_encoding"] = "(m,l) -> 7*m + l";
  if (c.target_dqra) j["target_check"] = report_to_json(*c.target_dqra);
  return j;
}

}  // namespace upalg
