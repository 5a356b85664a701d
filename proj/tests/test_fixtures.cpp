#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "igcx/fixtures.hpp"

using namespace igcx;
using igcx_test::fixture;

TEST_CASE("load_cayley flags and witnesses", "[fixtures]") {
  auto LZ = load_cayley(2, {0, 0, 1, 1}, "LZ2");
  REQUIRE(LZ.associative);
  REQUIRE(LZ.regular);
  REQUIRE(LZ.idempotents == std::vector<int>{0, 1});

  auto T2 = fixture("full_transformation", {2});
  REQUIRE(T2.n == 4);
  REQUIRE(T2.regular);
  REQUIRE(T2.idempotents.size() == 3);

  try {
    load_cayley(2, {0, 1, 0, 0});
    FAIL("expected NotAssociative");
  } catch (IgcxError const& e) {
    REQUIRE(e.kind() == "NotAssociative");
    REQUIRE(e.witness().size() == 3);
  }
}

TEST_CASE("builtin registry", "[fixtures]") {
  REQUIRE(fixture("rect_band", {2, 2}).n == 4);
  REQUIRE(fixture("full_transformation", {2}).n == 4);
  REQUIRE(fixture("full_transformation", {3}).n == 27);
  REQUIRE(fixture("semilattice_chain", {1}).n == 1);
  REQUIRE(fixture("symmetric_inverse", {2}).n == 7);
  REQUIRE_THROWS_AS(builtin("enchilada"), IgcxError);
  REQUIRE_THROWS_AS(builtin("full_transformation", {4}), IgcxError);
  REQUIRE_THROWS_AS(builtin("symmetric_inverse", {3}), IgcxError);
}

TEST_CASE("idempotent biorders of the named fixtures", "[fixtures]") {
  auto SL = idempotent_biorder(fixture("semilattice_chain", {2}));
  REQUIRE(SL.n == 2);
  REQUIRE(SL.leq(0, 1));
  REQUIRE_FALSE(SL.leq(1, 0));

  auto S  = fixture("rect_band", {2, 2});
  auto RB = idempotent_biorder(S);
  REQUIRE(RB.n == 4);
  std::set<int> lreps, rreps;
  for (int e = 0; e < 4; ++e) {
    lreps.insert(RB.lmin(e));
    rreps.insert(RB.rmin(e));
  }
  REQUIRE(lreps.size() == 2);
  REQUIRE(rreps.size() == 2);

  auto B2 = fixture("brandt2");
  REQUIRE(B2.idempotents == std::vector<int>{0, 3, 4});
}

TEST_CASE("trace groupoid shapes", "[fixtures]") {
  auto c2 = load_cayley(2, {0, 1, 1, 0}, "C2");
  auto g  = trace_groupoid(c2);
  REQUIRE(g.g.num_objects == 1);
  REQUIRE(g.g.size() == 2);

  auto lz = trace_groupoid(fixture("left_zero", {2}));
  REQUIRE(lz.g.num_objects == 2);
  REQUIRE(lz.g.size() == 4);

  auto t2 = trace_groupoid(fixture("full_transformation", {2}));
  REQUIRE(t2.g.size() == 6);
  REQUIRE(check_inductive(t2).ok());

  auto t3 = trace_groupoid(fixture("full_transformation", {3}));
  REQUIRE(t3.g.num_objects == 10);
  REQUIRE(t3.g.size() == 87);
}

TEST_CASE("trace triples roundtrip", "[fixtures]") {
  auto S  = fixture("brandt2");
  auto g  = trace_groupoid(S);
  auto tr = trace_triples(g, S);
  REQUIRE(static_cast<int>(tr.size()) == g.g.size());
  for (int m = 0; m < g.g.size(); ++m) {
    auto [e, x, f] = tr[m];
    REQUIRE(S.green_r(e, x));
    REQUIRE(S.green_l(x, f));
  }
}

TEST_CASE("test morphisms are homomorphisms and induce functors",
          "[fixtures]") {
  for (auto const& name :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"left_zero", {2}},
           {"right_zero", {2}},
           {"rect_band", {2, 2}},
           {"semilattice_chain", {2}},
           {"brandt2", {}},
           {"full_transformation", {2}},
           {"full_transformation", {3}},
           {"symmetric_inverse", {2}}}) {
    auto S  = fixture(name.first, name.second);
    auto G  = trace_groupoid(S);
    auto tm = test_morphisms_into(S);
    REQUIRE_FALSE(tm.empty());
    for (auto const& [src, map] : tm) {
      auto G2 = trace_groupoid(src);
      auto F  = induced_functor(G2, src, G, S, map);
      auto r  = check_inductive_functor(F);
      INFO(src.name << " -> " << S.name << "\n" << r.summary());
      REQUIRE(r.ok());
    }
  }
}
