// upalg: command-line front end. JSON goes to stdout, prose to stderr.
// Exit status: 0 success, 1 validation failure (report still printed),
// 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "upalg/algebra.hpp"
#include "upalg/catalog.hpp"
#include "upalg/dot.hpp"
#include "upalg/error.hpp"
#include "upalg/json_io.hpp"
#include "upalg/representation.hpp"
#include "upalg/search.hpp"
#include "upalg/upsets.hpp"

using namespace upalg;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "known:NAME" reads from the built-in registry, "-" from stdin.
json load_json(const std::string& path) {
  if (path.rfind("known:", 0) == 0) {
    auto k = find_known(path.substr(6));
    if (!k) throw UsageError("no known structure named '" + path.substr(6) + "'");
    if (const auto* s = std::get_if<AnyStructure>(&k->value)) return structure_to_json(*s);
    return algebra_to_json(std::get<FiniteExpandedLattice>(k->value));
  }
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

IpoAxioms parse_mode(const std::string& m) {
  return m == "alternative" ? IpoAxioms::Alternative : IpoAxioms::Definitional;
}

// Pomonoid layer first, then the kind's own axioms, so a failure is reported
// at the first layer that breaks.
json layered_validation(const AnyStructure& s, IpoAxioms mode, bool& ok) {
  json layers = json::array();
  ok = true;
  auto push = [&](const std::string& layer, const Report& r) {
    json l = report_to_json(r);
    l["layer"] = layer;
    layers.push_back(l);
    ok = ok && r.ok();
  };
  try {
    Report base = validate_pomonoid(pomonoid_of(s));
    push("pomonoid", base);
    if (base.ok() && kind_of(s) != StructureKind::Pomonoid) {
      if (const auto* o = std::get_if<OrthoIpoMonoid>(&s)) {
        Report ipo = validate_ipo(o->base, mode);
        push("ipo", ipo);
        if (ipo.ok()) push("ortho_ipo", validate_ortho(*o));
      } else if (const auto* o = std::get_if<OrthoPregroup>(&s)) {
        Report pg = validate_pregroup(o->base);
        push("pregroup", pg);
        if (pg.ok()) push("ortho_pregroup", validate_ortho(*o));
      } else {
        push(kind_name(kind_of(s)), validate_structure(s, mode));
      }
    }
  } catch (const Error& e) {
    if (e.code() != Errc::TableOutOfRange) throw;
    layers.push_back({{"layer", "tables"}, {"ok", false}, {"error", e.what()}});
    ok = false;
  }
  return layers;
}

// Reads a structure; an order matrix that is not a partial order becomes a
// validation report instead of an exception.
std::optional<AnyStructure> read_structure(const json& j, json& failure) {
  try {
    return structure_from_json(j);
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidPoset) throw;
    BoolMatrix m = j.at("leq").get<BoolMatrix>();
    json l = report_to_json(validate_poset(m));
    l["layer"] = "poset";
    failure = {{"kind", j.value("kind", "")}, {"ok", false}, {"layers", json::array({l})}};
    return std::nullopt;
  }
}

int fail_invalid(const json& report) {
  emit(report);
  std::cerr << "structure does not validate\n";
  return 1;
}

std::optional<AnyStructure> load_valid_structure(const std::string& path, IpoAxioms mode, int& status) {
  json j = load_json(path), failure;
  auto s = read_structure(j, failure);
  if (!s) {
    status = fail_invalid(failure);
    return std::nullopt;
  }
  bool ok = false;
  json layers = layered_validation(*s, mode, ok);
  if (!ok) {
    status = fail_invalid({{"kind", kind_name(kind_of(*s))}, {"ok", false}, {"layers", layers}});
    return std::nullopt;
  }
  return s;
}

IpoMonoid ipo_view(const AnyStructure& s) {
  if (const auto* m = std::get_if<IpoMonoid>(&s)) return *m;
  if (const auto* m = std::get_if<OrthoIpoMonoid>(&s)) return m->base;
  if (const auto* m = std::get_if<Pregroup>(&s)) return IpoMonoid{m->base, m->ell, m->r};
  if (const auto* m = std::get_if<OrthoPregroup>(&s)) return IpoMonoid{m->base.base, m->base.ell, m->base.r};
  throw UsageError("this command needs an ipo-monoid or richer structure");
}

OrthoIpoMonoid ortho_view(const AnyStructure& s) {
  if (const auto* m = std::get_if<OrthoIpoMonoid>(&s)) return *m;
  if (const auto* m = std::get_if<OrthoPregroup>(&s)) return OrthoIpoMonoid{IpoMonoid{m->base.base, m->base.ell, m->base.r}, m->neg};
  throw UsageError("this command needs an ortho structure");
}

EmbeddingKind expected_embedding(StructureKind k) {
  switch (k) {
    case StructureKind::Pomonoid: return EmbeddingKind::RL;
    case StructureKind::Ipo:
    case StructureKind::Pregroup: return EmbeddingKind::DInFL;
    default: return EmbeddingKind::DqRA;
  }
}

json upset_list(const std::vector<UpSet>& ups) {
  json out = json::array();
  for (const auto& u : ups) out.push_back(u.elements());
  return out;
}

Report run_law(const std::string& law, const FiniteExpandedLattice& a, CheckMode mode) {
  if (law == "lattice") return check_lattice(a, mode);
  if (law == "monoid") return check_monoid(a, mode);
  if (law == "rl") return check_rl(a, mode);
  if (law == "distributive") return check_distributive(a, mode);
  if (law == "infl") return check_infl(a, mode);
  if (law == "in") return check_in(a, mode);
  if (law == "dinfl") return check_dinfl(a, mode);
  if (law == "cyclic") return check_cyclic(a, mode);
  if (law == "dm") return check_dm(a, mode);
  if (law == "dp") return check_dp(a, mode);
  if (law == "di") return check_di(a, mode);
  if (law == "dqra") return check_dqra(a, mode);
  throw UsageError("unknown law set '" + law + "'");
}

SearchSpec make_spec(const std::string& kind, int size, const std::string& order, const std::string& mode,
                     std::optional<std::size_t> limit) {
  SearchSpec s;
  try {
    s.kind = parse_kind(kind);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  s.size = size;
  s.order_mode = order == "discrete" ? OrderMode::Discrete : OrderMode::All;
  s.axiom_mode = parse_mode(mode);
  s.limit = limit;
  return s;
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::ParameterOutOfRange:
    case Errc::SizeCapExceeded:
    case Errc::SizeLimitExceeded:
    case Errc::UnknownProperty:
    case Errc::KindMismatch:
    case Errc::SignatureMismatch:
    case Errc::InvalidInput:
    case Errc::NonSquareMatrix: return true;
    default: return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Up-set algebras, relation algebras and pregroup representations"};
  app.require_subcommand(1);

  std::string mode = "definitional";
  std::size_t cap = kDefaultUpsetCap;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--mode", mode, "ipo axiomatization")->check(CLI::IsMember({"definitional", "alternative"}));
    c->add_option("--cap", cap, "up-set enumeration limit");
  };

  std::string file, file2, file3, what;

  auto* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("file", file)->required();
  add_common(validate);

  auto* build = app.add_subcommand("build", "build Up(P), D(P) or Q(P) from a structure");
  build->add_option("algebra", what)->required()->check(CLI::IsMember({"rl", "d", "q"}));
  build->add_option("file", file)->required();
  add_common(build);

  std::vector<std::string> laws;
  bool collect_all = false;
  auto* check = app.add_subcommand("check", "run axiom checkers on an algebra file");
  check->add_option("file", file)->required();
  check->add_option("--laws", laws, "lattice|monoid|rl|distributive|infl|in|dinfl|cyclic|dm|dp|di|dqra");
  check->add_flag("--all", collect_all, "collect every witness");

  auto* represent = app.add_subcommand("represent", "σ-representation and embedding checks");
  represent->add_option("what", what)->required()->check(CLI::IsMember({"sigma", "condition-w", "prop6", "hom"}));
  represent->add_option("file", file)->required();
  represent->add_option("target", file2, "target algebra (hom)");
  represent->add_option("map", file3, "JSON array map (hom)");
  add_common(represent);

  std::string kind = "ipo", order = "all";
  int size = 1;
  bool up_to = false;
  std::optional<std::size_t> limit;
  auto add_search = [&](CLI::App* c) {
    c->add_option("--kind", kind)->check(CLI::IsMember({"pomonoid", "ipo", "pregroup", "ortho_ipo", "ortho_pregroup"}));
    c->add_option("--size", size)->required();
    c->add_option("--order", order)->check(CLI::IsMember({"discrete", "all"}));
    c->add_option("--mode", mode)->check(CLI::IsMember({"definitional", "alternative"}));
  };
  auto* enumerate = app.add_subcommand("enumerate", "list structures up to isomorphism as JSON lines");
  add_search(enumerate);
  enumerate->add_flag("--up-to", up_to, "every size from 1 to --size");
  enumerate->add_option("--limit", limit);

  std::string property;
  auto* sweep_cmd = app.add_subcommand("sweep", "tally a registered property over enumerated structures");
  sweep_cmd->add_option("property", property)->required();
  add_search(sweep_cmd);

  int n = 3;
  bool do_check = false, no_target_check = false;
  std::string cert_out, name;
  auto* catalog = app.add_subcommand("catalog", "built-in constructions");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "names in the registry");
  auto* an = catalog->add_subcommand("an", "the algebra A_n");
  an->add_option("--n", n)->required();
  an->add_flag("--check", do_check, "run the DqRA checkers and compare with the printed tables");
  auto* psi = catalog->add_subcommand("psi", "the ψ embedding of A_n");
  psi->add_option("--n", n)->required();
  psi->add_option("--emit-certificate", cert_out, "also write the certificate here");
  psi->add_flag("--no-target-check", no_target_check, "skip check_dqra on Q(Z_7)");
  auto* show = catalog->add_subcommand("show", "print a registry entry");
  show->add_option("name", name)->required();

  auto* export_cmd = app.add_subcommand("export", "write a structure or algebra as DOT or JSON");
  export_cmd->add_option("format", what)->required()->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const IpoAxioms axioms = parse_mode(mode);
  const CheckMode check_mode = collect_all ? CheckMode::CollectAll : CheckMode::FirstWitness;

  try {
    if (*validate) {
      json j = load_json(file), failure;
      auto s = read_structure(j, failure);
      if (!s) return fail_invalid(failure);
      bool ok = false;
      json layers = layered_validation(*s, axioms, ok);
      emit({{"kind", kind_name(kind_of(*s))}, {"mode", mode}, {"ok", ok}, {"layers", layers}});
      std::cerr << kind_name(kind_of(*s)) << (ok ? ": all axioms hold\n" : ": violations found\n");
      return ok ? 0 : 1;
    }

    if (*build) {
      int status = 0;
      auto s = load_valid_structure(file, axioms, status);
      if (!s) return status;
      UpsetAlgebra a;
      if (what == "rl")
        a = build_upset_rl(pomonoid_of(*s), cap);
      else if (what == "d")
        a = build_D(ipo_view(*s), cap);
      else
        a = build_Q(ortho_view(*s), cap);
      json out = algebra_to_json(a.algebra);
      out["upsets"] = upset_list(a.upsets);
      emit(out);
      std::cerr << a.algebra.provenance << " has " << a.algebra.size << " elements\n";
      return 0;
    }

    if (*check) {
      FiniteExpandedLattice a = algebra_from_json(load_json(file));
      if (laws.empty()) {
        if (a.neg)
          laws = {"dqra"};
        else if (a.has_negations())
          laws = {"dinfl"};
        else
          laws = {"rl", "distributive"};
      }
      json reports = json::array();
      bool ok = true;
      for (const auto& law : laws) {
        Report r = run_law(law, a, check_mode);
        ok = ok && r.ok();
        reports.push_back(report_to_json(r));
      }
      emit({{"ok", ok}, {"checks", reports}});
      std::cerr << (ok ? "all requested laws hold\n" : "violations found\n");
      return ok ? 0 : 1;
    }

    if (*represent) {
      if (what == "hom") {
        if (file2.empty() || file3.empty()) throw UsageError("represent hom needs SOURCE TARGET MAP");
        auto src = algebra_from_json(load_json(file));
        auto dst = algebra_from_json(load_json(file2));
        auto map = load_json(file3).get<std::vector<int>>();
        auto r = verify_hom_embedding(src, dst, map);
        emit(embedding_report_to_json(r));
        std::cerr << embedding_kind_name(r.conclusion) << "\n";
        return r.conclusion == EmbeddingKind::None ? 1 : 0;
      }
      int status = 0;
      auto s = load_valid_structure(file, axioms, status);
      if (!s) return status;
      if (what == "sigma") {
        auto r = verify_sigma_embedding(*s, cap);
        emit(sigma_certificate(*s, r, cap));
        std::cerr << "σ: " << embedding_kind_name(r.conclusion) << "\n";
        return r.conclusion == expected_embedding(kind_of(*s)) ? 0 : 1;
      }
      if (what == "condition-w") {
        auto w = condition_w(pomonoid_of(*s));
        json out{{"holds", w.holds}};
        if (w.witness) {
          auto [x, u, v, y] = *w.witness;
          out["witness"] = {{"x", x}, {"u", u}, {"v", v}, {"y", y}};
        }
        emit(out);
        return w.holds ? 0 : 1;
      }
      auto w = prop6_witness(ipo_view(*s));
      if (!w) {
        emit({{"result", "NotApplicable"}});
        std::cerr << "the structure is a pregroup\n";
        return 0;
      }
      emit({{"result", "case"},
            {"case", w->case_no},
            {"x", w->x},
            {"upset", w->u.elements()},
            {"pair", {w->pair.first, w->pair.second}},
            {"confirmed", w->confirmed}});
      return w->confirmed ? 0 : 1;
    }

    if (*enumerate) {
      SearchSpec spec = make_spec(kind, size, order, mode, limit);
      auto models = up_to ? enumerate_models_up_to(spec) : enumerate_models(spec);
      for (const auto& m : models) std::cout << structure_to_json(m).dump() << "\n";
      std::cerr << models.size() << " structures\n";
      return 0;
    }

    if (*sweep_cmd) {
      SearchSpec spec = make_spec(kind, size, order, mode, std::nullopt);
      auto r = sweep(property, spec);
      emit(sweep_result_to_json(r));
      std::cerr << property << ": " << r.holds << " hold, " << r.fails << " fail, " << r.skipped << " skipped\n";
      return r.fails == 0 ? 0 : 1;
    }

    if (*catalog) {
      if (*catalog->get_subcommand("list")) {
        json out = json::array();
        for (const auto& k : known_structures()) {
          std::string type = std::holds_alternative<AnyStructure>(k.value)
                                 ? kind_name(kind_of(std::get<AnyStructure>(k.value)))
                                 : "algebra";
          out.push_back({{"name", k.name}, {"type", type}, {"note", k.note}});
        }
        emit(out);
        return 0;
      }
      if (*an) {
        AnAlgebra A = build_An(n);
        json out = algebra_to_json(A.algebra);
        if (!do_check) {
          emit(out);
          return 0;
        }
        Report dqra = check_dqra(A.algebra);
        Report cyc = check_cyclic(A.algebra);
        json disc = json::array();
        for (const auto& d : an_printed_discrepancies(A))
          disc.push_back({{"product", A.algebra.label(d.left) + "·" + A.algebra.label(d.right)},
                          {"printed", A.algebra.label(d.printed)},
                          {"used", A.algebra.label(d.used)}});
        FiniteExpandedLattice printed = A.algebra;
        printed.fusion = an_printed_fusion(A);
        json result{{"algebra", out},
                    {"ok", dqra.ok() && cyc.ok()},
                    {"checks", {report_to_json(dqra), report_to_json(cyc)}},
                    {"printed_table_discrepancies", disc},
                    {"printed_table_checks", report_to_json(check_dqra(printed))}};
        emit(result);
        if (!disc.empty())
          std::cerr << disc.size() << " cells of the printed fusion tables differ from the fusion used\n";
        return dqra.ok() && cyc.ok() ? 0 : 1;
      }
      if (*psi) {
        PsiCertificate c = build_psi(n, !no_target_check);
        json cert = psi_certificate(c);
        if (!cert_out.empty()) {
          std::ofstream f(cert_out);
          if (!f) throw UsageError("cannot write '" + cert_out + "'");
          f << cert.dump(2) << "\n";
        }
        emit(cert);
        bool ok = c.report.conclusion == EmbeddingKind::DqRA && (!c.target_dqra || c.target_dqra->ok());
        std::cerr << "ψ: " << embedding_kind_name(c.report.conclusion) << (c.image_only ? " (image-only check)\n" : "\n");
        return ok ? 0 : 1;
      }
      if (*show) {
        emit(load_json("known:" + name));
        return 0;
      }
    }

    if (*export_cmd) {
      json j = load_json(file);
      const bool is_structure = j.is_object() && j.contains("kind");
      if (what == "json") {
        emit(is_structure ? structure_to_json(structure_from_json(j)) : algebra_to_json(algebra_from_json(j)));
      } else {
        std::cout << (is_structure ? to_dot(structure_from_json(j)) : to_dot(algebra_from_json(j)));
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (is_usage(e.code())) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    emit({{"ok", false}, {"error", errc_name(e.code())}, {"message", e.what()}});
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
