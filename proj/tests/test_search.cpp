#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "upalg/error.hpp"
#include "upalg/search.hpp"

using namespace upalg;

namespace {

SearchSpec spec(StructureKind k, int n, OrderMode mode = OrderMode::All) {
  SearchSpec s;
  s.kind = k;
  s.size = n;
  s.order_mode = mode;
  return s;
}

oracle::Raw to_raw(const AnyStructure& s) {
  oracle::Raw r{oracle::from_lib(pomonoid_of(s)), {}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IpoMonoid>) r.unary = {v.minus, v.tilde};
        if constexpr (std::is_same_v<T, Pregroup>) r.unary = {v.ell, v.r};
        if constexpr (std::is_same_v<T, OrthoIpoMonoid>) r.unary = {v.base.minus, v.base.tilde, v.neg};
        if constexpr (std::is_same_v<T, OrthoPregroup>) r.unary = {v.base.ell, v.base.r, v.neg};
      },
      s);
  return r;
}

std::vector<oracle::Raw> oracle_models(StructureKind k, int n) {
  switch (k) {
    case StructureKind::Pomonoid: return oracle::all_pomonoids(n);
    case StructureKind::Ipo: return oracle::all_ipo(n);
    case StructureKind::Pregroup: return oracle::all_pregroups(n);
    case StructureKind::OrthoIpo: return oracle::all_ortho_ipo(n);
    case StructureKind::OrthoPregroup: {
      std::vector<oracle::Raw> out;
      for (const auto& s : oracle::all_pregroups(n))
        oracle::each_map(n, n, [&](const oracle::Map& ng) {
          if (oracle::ortho_laws(s.p, s.unary[0], s.unary[1], ng)) out.push_back({s.p, {s.unary[0], s.unary[1], ng}});
        });
      return out;
    }
  }
  return {};
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidInput;
}

}  // namespace

TEST_SUITE("model-search") {
  TEST_CASE("enumeration agrees with the brute-force oracle for n <= 3") {
    for (auto k : {StructureKind::Pomonoid, StructureKind::Ipo, StructureKind::Pregroup, StructureKind::OrthoIpo,
                   StructureKind::OrthoPregroup})
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(kind_name(k));
        CAPTURE(n);
        std::set<std::string> expect;
        for (const auto& r : oracle_models(k, n)) expect.insert(oracle::canon(r));
        std::set<std::string> got;
        auto models = enumerate_models(spec(k, n));
        for (const auto& s : models) got.insert(oracle::canon(to_raw(s)));
        CHECK(models.size() == expect.size());
        CHECK(got == expect);
      }
  }

  TEST_CASE("size-2 ipo-monoids include the 2-chain and the 2-element group") {
    auto models = enumerate_models(spec(StructureKind::Ipo, 2));
    std::set<std::string> forms;
    for (const auto& s : models) forms.insert(canonical_form(s));
    CHECK(forms.count(canonical_form(fx::two_chain())));
    CHECK(forms.count(canonical_form(pregroup_to_ipo(cyclic_group(2).base))));
    CHECK(models.size() == 3);
    CHECK(enumerate_models(spec(StructureKind::Ipo, 1)).size() == 1);
  }

  TEST_CASE("emitted structures validate in both axiom modes") {
    for (auto k : {StructureKind::Pomonoid, StructureKind::Ipo, StructureKind::OrthoIpo})
      for (const auto& s : enumerate_models_up_to(spec(k, 4))) {
        CHECK(validate_structure(s, IpoAxioms::Definitional).ok());
        CHECK(validate_structure(s, IpoAxioms::Alternative).ok());
      }
  }

  TEST_CASE("finite pregroups are discretely ordered groups") {
    for (const auto& s : enumerate_models_up_to(spec(StructureKind::Pregroup, 5))) {
      const auto& p = std::get<Pregroup>(s);
      CHECK(p.base.order.is_discrete());
      CHECK(p.ell == p.r);
      for (int x = 0; x < p.size(); ++x) CHECK(p.base.mul(x, p.ell[x]) == p.base.unit);
    }
  }

  TEST_CASE("census") {
    // No published reference; these are the search's own counts, already
    // cross-checked against the oracle up to size 3.
    CHECK(enumerate_models(spec(StructureKind::Pomonoid, 4)).size() == 549);
    CHECK(enumerate_models(spec(StructureKind::Ipo, 4)).size() == 20);
    CHECK(enumerate_models(spec(StructureKind::Pregroup, 4)).size() == 2);
    CHECK(enumerate_models(spec(StructureKind::OrthoIpo, 4)).size() == 26);
    CHECK(enumerate_models(spec(StructureKind::OrthoPregroup, 4)).size() == 4);
    for (const auto& s : enumerate_models_up_to(spec(StructureKind::Ipo, 4))) CHECK(is_cyclic(std::get<IpoMonoid>(s)));
  }

  TEST_CASE("order modes and limits") {
    for (const auto& s : enumerate_models(spec(StructureKind::Pomonoid, 3, OrderMode::Discrete)))
      CHECK(pomonoid_of(s).order.is_discrete());
    auto s = spec(StructureKind::Pomonoid, 3);
    s.limit = 5;
    CHECK(enumerate_models(s).size() == 5);
    CHECK(enumerate_posets(4, OrderMode::All).size() == 16);
    CHECK(enumerate_posets(3, OrderMode::All).size() == 5);
    CHECK(enumerate_posets(4, OrderMode::Discrete).size() == 1);
    CHECK(code_of([] { enumerate_models(spec(StructureKind::Ipo, 7)); }) == Errc::SizeCapExceeded);
    CHECK(code_of([] { enumerate_models(spec(StructureKind::Ipo, 0)); }) == Errc::ParameterOutOfRange);
  }

  TEST_CASE("canonical_form") {
    AnyStructure m = fx::two_chain();
    CHECK(canonical_form(permute(m, {1, 0})) == canonical_form(m));
    CHECK(canonical_form(m) != canonical_form(pregroup_to_ipo(cyclic_group(2).base)));
    AnyStructure s3 = symmetric_group_s3();
    CHECK(canonical_form(permute(s3, {0, 3, 5, 1, 2, 4})) == canonical_form(s3));
    CHECK(canonical_form(canonical_representative(s3)) == canonical_form(s3));
    auto labelled = std::get<IpoMonoid>(m);
    labelled.base.order = FinitePoset(labelled.base.order.matrix(), {"bottom", "top"});
    CHECK(canonical_form(labelled) == canonical_form(m));
  }

  TEST_CASE("enumeration is deterministic") {
    auto a = enumerate_models_up_to(spec(StructureKind::Ipo, 4));
    auto b = enumerate_models_up_to(spec(StructureKind::Ipo, 4));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_form(a[i]) == canonical_form(b[i]));
  }

  TEST_CASE("sweeps") {
    auto w = sweep("condition_w", spec(StructureKind::Ipo, 4));
    CHECK(w.total == 29);
    CHECK(w.fails == 0);
    auto f = sweep("prop6_frontier", spec(StructureKind::Ipo, 3));
    CHECK(f.fails == 0);
    auto p = sweep("condition_w", spec(StructureKind::Pomonoid, 2));
    CHECK(p.fails >= 1);
    bool found = false;
    for (const auto& s : p.counterexamples) found = found || canonical_form(s) == canonical_form(fx::discrete01());
    CHECK(found);
    auto t3 = sweep("theorem3_cyclic", spec(StructureKind::Ipo, 4));
    CHECK(t3.fails == 0);
    CHECK(t3.holds == 29);
    CHECK(code_of([] { sweep("no-such-property", spec(StructureKind::Ipo, 2)); }) == Errc::UnknownProperty);
    CHECK(code_of([] { sweep("theorem8_sigma", spec(StructureKind::Pomonoid, 2)); }) == Errc::KindMismatch);
  }

  TEST_CASE("every registered property runs cleanly on small structures") {
    for (const auto& name : sweep_properties()) {
      CAPTURE(name);
      bool ran = false;
      for (auto k : {StructureKind::Pomonoid, StructureKind::Ipo, StructureKind::Pregroup, StructureKind::OrthoIpo,
                     StructureKind::OrthoPregroup}) {
        SweepResult r;
        try {
          r = sweep(name, spec(k, 3));
        } catch (const Error& e) {
          CHECK(e.code() == Errc::KindMismatch);
          continue;
        }
        ran = true;
        if (name != "condition_w") CHECK(r.fails == 0);
        CHECK(r.holds + r.fails + r.skipped == r.total);
      }
      CHECK(ran);
    }
  }
}
