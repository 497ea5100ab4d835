#include <doctest.h>

#include "fixtures.hpp"
#include "upalg/dot.hpp"
#include "upalg/error.hpp"
#include "upalg/json_io.hpp"
#include "upalg/upsets.hpp"

using namespace upalg;

namespace {

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

TEST_SUITE("io") {
  TEST_CASE("structures round-trip through JSON") {
    std::vector<AnyStructure> all = {fx::discrete01(), fx::two_chain(), cyclic_group(7).base, fx::z7_ortho(),
                                     symmetric_group_s3()};
    for (const auto& s : all) {
      json j = structure_to_json(s);
      AnyStructure back = structure_from_json(json::parse(j.dump()));
      CHECK(kind_of(back) == kind_of(s));
      CHECK(structure_to_json(back) == j);
    }
    json p = poset_to_json(FinitePoset::chain(2));
    CHECK(p["leq"] == json::parse("[[true,true],[false,true]]"));
    CHECK(poset_from_json(json::parse(R"({"size":2,"leq":[[1,0],[0,1]]})")).is_discrete());
  }

  TEST_CASE("algebras round-trip through JSON") {
    for (const auto& a : {build_An(3).algebra, fx::sugihara(), build_D(fx::two_chain()).algebra}) {
      json j = algebra_to_json(a);
      auto back = algebra_from_json(json::parse(j.dump()));
      CHECK(back.fusion == a.fusion);
      CHECK(back.neg == a.neg);
      CHECK(algebra_to_json(back) == j);
    }
  }

  TEST_CASE("malformed input") {
    CHECK(code_of([] { structure_from_json(json::parse(R"({"size":1})")); }) == Errc::ParseError);
    CHECK(code_of([] { structure_from_json(json::parse(R"({"kind":"monoid","size":1,"leq":[[true]],"table":[[0]],"unit":0})")); }) == Errc::ParseError);
    CHECK(code_of([] { poset_from_json(json::parse(R"({"size":2,"leq":[[true,true],[true,true]]})")); }) == Errc::InvalidPoset);
    CHECK(code_of([] { poset_from_json(json::parse(R"({"size":3,"leq":[[true]]})")); }) == Errc::NonSquareMatrix);
    json a = algebra_to_json(fx::sugihara());
    a["fusion"][0][0] = 5;
    CHECK(code_of([&] { algebra_from_json(a); }) == Errc::TableOutOfRange);
    CHECK(code_of([] { relation_from_json(2, json::parse(R"({"rows":["zz","1"]})")); }) == Errc::ParseError);
  }

  TEST_CASE("relations") {
    auto r = Relation::from_pairs(3, {{0, 1}, {2, 2}});
    CHECK(relation_from_json(3, relation_to_json(r)) == r);
    CHECK(relation_from_json(3, json::parse(R"({"rows":["2","0","4"]})")) == r);
  }

  TEST_CASE("certificates") {
    AnyStructure z7 = cyclic_group(7);
    auto rep = verify_sigma_embedding(z7);
    json c = sigma_certificate(z7, rep);
    CHECK(c["theorem"] == "Thm8");
    CHECK(c["map"].size() == 128);
    CHECK(c["report"]["conclusion"] == "DqRA-embedding");
    json d = sigma_certificate(fx::discrete01(), verify_sigma_embedding(fx::discrete01()));
    CHECK(d["theorem"] == "custom");
    CHECK(d["report"]["preserves"]["meet"]["ok"] == false);
    CHECK(d["report"]["preserves"]["meet"]["witness"] == json::parse("[1,2]"));

    json p = psi_certificate(build_psi(3));
    CHECK(p["V_0"] == json::parse("[1,2,4]"));
    CHECK(p["U_-1"] == json::parse("[0]"));
    CHECK(p["target_check"]["ok"] == true);
  }

  TEST_CASE("DOT export") {
    std::string dot = to_dot(build_An(3).algebra);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("label=\"a_1\", style=filled") != std::string::npos);
    CHECK(dot.find("label=\"a_0\"]") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
    CHECK(edges == 7);
    std::string h = hasse_dot(FinitePoset::chain(3), {}, "c3");
    CHECK(h.find("n0 -- n1") != std::string::npos);
    CHECK(h.find("n0 -- n2") == std::string::npos);
  }
}
