#include <doctest.h>

#include "fixtures.hpp"
#include "reference_values.hpp"
#include "upalg/error.hpp"
#include "upalg/representation.hpp"
#include "upalg/upsets.hpp"

using namespace upalg;

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("build_An reproduces the A_3 and A_4 diagrams") {
    for (const auto& d : refv::diagrams()) {
      CAPTURE(d.n);
      auto a = build_An(d.n);
      CHECK(a.algebra.size == 2 * d.n);
      CHECK(refv::compare(a.algebra, d) == "");
    }
  }

  TEST_CASE("build_An fusion identities") {
    auto a3 = build_An(3);
    const auto& A = a3.algebra;
    CHECK(A.mul(a3.a(0), a3.a(0)) == a3.a(1));
    CHECK(A.mul(a3.b(0), a3.b(0)) == a3.b(1));
    CHECK(A.mul(a3.a(0), a3.b(0)) == a3.b(1));
    auto a4 = build_An(4);
    CHECK(a4.algebra.mul(a4.a(-1), a4.a(-1)) == a4.a(2));
    CHECK(a4.algebra.mul(a4.b(-1), a4.b(-1)) == a4.b(2));
    CHECK_FALSE(a4.has_value(0));
    CHECK_THROWS_AS(a4.position(0), Error);
  }

  TEST_CASE("A_n is a cyclic DqRA for n = 3..8") {
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      auto a = build_An(n);
      CHECK(a.algebra.size == 2 * n);
      CHECK(check_dqra(a.algebra).ok());
      CHECK(check_cyclic(a.algebra).ok());
      CHECK(a.algebra.unit == a.a(-a.k));
      for (int p = 0; p < n; ++p) CHECK(a.algebra.ng(p) == a.b(-a.values[p]));
    }
    try {
      build_An(2);
      FAIL("expected ParameterOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParameterOutOfRange);
    }
  }

  TEST_CASE("the printed case tables, read first-match, are not associative") {
    const std::vector<std::size_t> expected = {4, 6, 14, 18, 30, 36};
    for (int n = 3; n <= 8; ++n) {
      CAPTURE(n);
      auto a = build_An(n);
      auto diffs = an_printed_discrepancies(a);
      CHECK(diffs.size() == expected[static_cast<std::size_t>(n - 3)]);
      for (const auto& d : diffs) {
        // the a·a table is used as printed
        CHECK_FALSE((d.left < n && d.right < n));
        CHECK(d.printed == an_printed_fusion(a)(d.left, d.right));
      }
      auto printed = a.algebra;
      printed.fusion = an_printed_fusion(a);
      CHECK(check_monoid(printed).violates("fusion-associative"));
    }
  }

  TEST_CASE("psi at n = 3") {
    auto c = build_psi(3);
    CHECK(c.report.conclusion == EmbeddingKind::DqRA);
    CHECK_FALSE(c.image_only);
    REQUIRE(c.target_dqra);
    CHECK(c.target_dqra->ok());
    CHECK(c.named_sets.at("V_-1").empty());
    CHECK(c.named_sets.at("V_0") == std::vector<int>{1, 2, 4});
    CHECK(c.named_sets.at("V_1") == range(1, 7));
    CHECK(c.named_sets.at("U_-1") == std::vector<int>{0});
    CHECK(c.named_sets.at("U_0") == std::vector<int>{0, 1, 2, 4});
    CHECK(c.named_sets.at("U_1") == range(0, 7));

    // ψ(b_0)•ψ(b_0) from the nine sums, and ¬ψ(b_0) from the complement
    std::set<int> sums;
    for (int x : {1, 2, 4})
      for (int y : {1, 2, 4}) sums.insert((x + y) % 7);
    CHECK(std::vector<int>(sums.begin(), sums.end()) == c.named_sets.at("V_1"));
    std::set<int> negs;
    for (int x : {0, 3, 5, 6}) negs.insert((7 - x) % 7);
    CHECK(std::vector<int>(negs.begin(), negs.end()) == c.named_sets.at("U_0"));

    auto z7 = fx::z7_ortho();
    const auto& s = c.source;
    auto img = [&](int p) { return UpSet(z7.base.base.order, c.images[static_cast<std::size_t>(p)]); };
    CHECK(fuse(z7.base.base, img(s.b(0)), img(s.b(0))) == img(s.b(1)));
    CHECK(upset_neg(z7, img(s.b(0))) == img(s.a(0)));
  }

  TEST_CASE("psi image-only verification for n = 4..8") {
    for (int n = 4; n <= 8; ++n) {
      CAPTURE(n);
      auto c = build_psi(n);
      CHECK(c.image_only);
      CHECK(c.target.size() == 7 * (n - 2));
      CHECK(c.report.conclusion == EmbeddingKind::DqRA);
      const int k = n / 2;
      // ψ(1) is the up-set of the identity; V_{-k} is empty and V_k misses only the identity
      CHECK(c.images[static_cast<std::size_t>(c.source.algebra.unit)].indices() == std::vector<int>{0});
      CHECK(c.named_sets.at("V_" + std::to_string(-k)).empty());
      CHECK(c.named_sets.at("V_" + std::to_string(k)) == range(1, 7 * (n - 2)));
      std::vector<int> t = {1, 2, 4};
      for (int m = 1; m <= n - 3; ++m)
        for (int l : {3, 5, 6}) t.push_back(7 * m + l);
      CHECK(c.named_sets.at("V_" + std::to_string(-k + 1)) == t);
      for (int v : c.source.values) {
        auto u = c.named_sets.at("U_" + std::to_string(v));
        auto w = c.named_sets.at("V_" + std::to_string(v));
        w.insert(w.begin(), 0);
        CHECK(u == w);
      }
    }
  }

  TEST_CASE("psi agrees with the full target check at n = 3") {
    auto full = build_psi(3, true);
    auto quick = build_psi(3, false);
    CHECK_FALSE(quick.target_dqra);
    CHECK(full.images == quick.images);
    CHECK(psi_sets(3) == full.images);
    CHECK_THROWS_AS(psi_sets(2), Error);
  }

  TEST_CASE("known structures") {
    std::set<std::string> names;
    for (const auto& k : known_structures()) names.insert(k.name);
    for (auto n : {"discrete-01-pomonoid", "two-chain-ipo", "Z_7-ortho-pregroup", "S3-group-ortho", "A_3", "A_4",
                   "sugihara-3"})
      CHECK(names.count(n));
    CHECK_FALSE(find_known("no-such-thing"));
    CHECK(find_known("A_3")->note == "D^6_{4,8}");
    CHECK(find_known("A_4")->note == "D^8_{7,21}");
    CHECK_FALSE(condition_w(fx::discrete01()).holds);
    for (const auto& k : known_structures())
      if (auto s = std::get_if<AnyStructure>(&k.value)) CHECK_MESSAGE(validate_structure(*s).ok(), k.name);
    auto sug = fx::sugihara();
    CHECK(check_dinfl(sug).ok());
    CHECK(check_cyclic(sug).ok());
    CHECK(idempotents(sug).size() == 3);
  }
}
