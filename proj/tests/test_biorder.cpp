#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "igcx/biorder.hpp"
#include "igcx/semigroup.hpp"

using namespace igcx;
using igcx_test::fixture;
using igcx_test::naive_sandwich;

namespace {

BiorderedSet lz2_biorder() {
  // left zero on {e, f}: every product defined, xy = x
  return load_biorder(2, {0, 0, 1, 1}, {"e", "f"}, "LZ2");
}

}  // namespace

TEST_CASE("left zero biorder loads with one L-class", "[biorder]") {
  auto E = lz2_biorder();
  REQUIRE(E.rel_l(0, 1));
  REQUIRE_FALSE(E.rel_r(0, 1));
  REQUIRE(E.lclass(0) == std::vector<int>{0, 1});
  REQUIRE(E.rclass(0) == std::vector<int>{0});
  REQUIRE(E.rclass(1) == std::vector<int>{1});
}

TEST_CASE("singleton biorder is trivial", "[biorder]") {
  auto E = load_biorder(1, {0});
  REQUIRE(E.leq(0, 0));
  REQUIRE(is_regular(E));
}

TEST_CASE("idempotents of T2 form a regular biordered set", "[biorder]") {
  // oracle route: restrict the T2 Cayley table to its idempotents by hand
  auto             S = fixture("full_transformation", {2});
  REQUIRE(S.idempotents == std::vector<int>{0, 2, 3});
  auto E = idempotent_biorder(S);
  REQUIRE(E.n == 3);
  REQUIRE(is_regular(E));
  // const0 and const1 are R-related, never L-related
  REQUIRE(E.rel_r(0, 2));
  REQUIRE_FALSE(E.rel_l(0, 2));
  // both constants sit below the identity
  REQUIRE(E.leq(0, 1));
  REQUIRE(E.leq(2, 1));
}

TEST_CASE("malformed and corrupted tables are rejected", "[biorder]") {
  REQUIRE_THROWS_AS(load_biorder(2, {0, 0, 1}), IgcxError);
  try {
    load_biorder(2, {0, 0, 9, 1});
    FAIL("expected MalformedTable");
  } catch (IgcxError const& e) {
    REQUIRE(e.kind() == "MalformedTable");
  }
  // break reflexivity: 0 * 0 = 1
  try {
    load_biorder(2, {1, 0, 1, 1});
    FAIL("expected AxiomViolation");
  } catch (IgcxError const& e) {
    REQUIRE(e.kind() == "AxiomViolation");
  }
  // non-throwing scan names the axiom with the least witness
  auto rep = check_biorder_table(2, {1, 0, 1, 1});
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.items[0].check == "B1.reflexive");
  REQUIRE(rep.items[0].witness == std::vector<int>{0});
}

TEST_CASE("sandwich sets match the quantified definition", "[biorder]") {
  auto RB = idempotent_biorder(fixture("rect_band", {2, 2}));
  // (0,1) and (1,0) sandwich to {(1,1)}; ids are row-major
  REQUIRE(sandwich_set(RB, 1, 2) == std::vector<int>{3});
  REQUIRE(sandwich_set(RB, 1, 2) == naive_sandwich(RB, 1, 2));

  auto SL = idempotent_biorder(fixture("semilattice_chain", {2}));
  for (int e = 0; e < SL.n; ++e) {
    REQUIRE(sandwich_set(SL, e, e) == std::vector<int>{e});
  }
  auto LZ = lz2_biorder();
  for (int e = 0; e < 2; ++e) {
    for (int f = 0; f < 2; ++f) {
      REQUIRE_FALSE(sandwich_set(LZ, e, f).empty());
      REQUIRE(sandwich_set(LZ, e, f) == naive_sandwich(LZ, e, f));
    }
  }
}

TEST_CASE("sandwich sets are L/R-class invariant", "[biorder]") {
  for (auto const& name : {std::string("rect_band"), std::string("brandt2"),
                           std::string("full_transformation")}) {
    auto S = name == "rect_band"  ? fixture(name, {2, 2})
             : name == "brandt2"  ? fixture(name)
                                  : fixture(name, {3});
    auto E = idempotent_biorder(S);
    for (int e = 0; e < E.n; ++e) {
      for (int f = 0; f < E.n; ++f) {
        auto base = sandwich_set(E, e, f);
        for (int e2 = 0; e2 < E.n; ++e2) {
          for (int f2 = 0; f2 < E.n; ++f2) {
            if (E.rel_l(e, e2) && E.rel_r(f, f2)) {
              REQUIRE(sandwich_set(E, e2, f2) == base);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("regularity of the fixture biorders", "[biorder]") {
  REQUIRE(is_regular(idempotent_biorder(fixture("full_transformation", {2}))));
  REQUIRE(is_regular(idempotent_biorder(fixture("brandt2"))));
  REQUIRE(is_regular(load_biorder(1, {0})));
}

TEST_CASE("bimorphism reports", "[biorder]") {
  auto E = idempotent_biorder(fixture("full_transformation", {2}));
  std::vector<int> id{0, 1, 2};
  REQUIRE(check_bimorphism(E, E, id).ok());
  // constant maps to a fixed idempotent satisfy BM1, BM2 and RBM
  for (int c = 0; c < E.n; ++c) {
    std::vector<int> cm(static_cast<size_t>(E.n), c);
    REQUIRE(check_bimorphism(E, E, cm).ok());
  }
  // collapsing the L-class of LZ2 to a point
  auto LZ = lz2_biorder();
  auto pt = load_biorder(1, {0});
  REQUIRE(check_bimorphism(LZ, pt, {0, 0}).ok());
  // a non-bimorphism: swap id with a constant in E(T2)
  std::vector<int> bad{1, 0, 2};
  auto             rep = check_bimorphism(E, E, bad);
  REQUIRE_FALSE(rep.ok());
  bool named = rep.has_failure("BM1") || rep.has_failure("BM2")
               || rep.has_failure("RBM");
  REQUIRE(named);
}

TEST_CASE("E-square enumeration and classification", "[biorder]") {
  auto SL = idempotent_biorder(fixture("semilattice_chain", {2}));
  for (auto const& sq : enumerate_e_squares(SL)) {
    // only degenerate squares with repeated entries
    auto [e, f, g, h] = sq.entries;
    REQUIRE(e == f);
    REQUIRE(g == h);
  }

  auto pt = load_biorder(1, {0});
  REQUIRE(enumerate_e_squares(pt).size() == 1);

  auto RB      = idempotent_biorder(fixture("rect_band", {2, 2}));
  bool has_big = false;
  for (auto const& sq : enumerate_e_squares(RB)) {
    if (sq.entries == std::array<int, 4>{0, 1, 2, 3}) {
      has_big = true;
      // relations of the band: rows R, columns L
      REQUIRE(RB.rel_r(0, 1));
      REQUIRE(RB.rel_l(1, 3));
      REQUIRE(RB.rel_r(2, 3));
      REQUIRE(RB.rel_l(0, 2));
    }
  }
  REQUIRE(has_big);
}

TEST_CASE("every fixture biorder passes the axiom scan", "[biorder]") {
  std::vector<FiniteSemigroup> fs;
  fs.push_back(fixture("left_zero", {2}));
  fs.push_back(fixture("right_zero", {2}));
  fs.push_back(fixture("rect_band", {2, 2}));
  fs.push_back(fixture("semilattice_chain", {2}));
  fs.push_back(fixture("brandt2"));
  fs.push_back(fixture("full_transformation", {2}));
  fs.push_back(fixture("full_transformation", {3}));
  fs.push_back(fixture("symmetric_inverse", {2}));
  for (auto const& S : fs) {
    auto E = idempotent_biorder(S);
    REQUIRE(check_biorder_table(E.n, E.product).ok());
    REQUIRE(is_regular(E));
  }
}
