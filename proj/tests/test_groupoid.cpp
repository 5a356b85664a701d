#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "igcx/echain.hpp"
#include "igcx/fixtures.hpp"
#include "igcx/groupoid.hpp"

using namespace igcx;
using igcx_test::fixture;

namespace {

// a group seen as a one-object groupoid with the discrete order
Groupoid group_groupoid(FiniteSemigroup const& G, int unit) {
  Groupoid g;
  g.num_objects = 1;
  g.identity    = {unit};
  g.dom.assign(G.n, 0);
  g.cod.assign(G.n, 0);
  g.inv.resize(G.n);
  g.init_tables();
  for (int x = 0; x < G.n; ++x) {
    for (int y = 0; y < G.n; ++y) {
      g.set_comp(x, y, G.at(x, y));
      if (G.at(x, y) == unit) {
        g.inv[x] = y;
      }
    }
    g.set_leq(x, x);
  }
  return g;
}

}  // namespace

TEST_CASE("chain groupoid of E(T2) passes the OG axioms", "[groupoid]") {
  auto cg = chain_groupoid(idempotent_biorder(fixture("full_transformation", {2})));
  auto g  = materialize_groupoid(cg);
  auto r  = check_ordered_groupoid(g);
  INFO(r.summary());
  REQUIRE(r.ok());
}

TEST_CASE("a group with the equality order is an ordered groupoid",
          "[groupoid]") {
  auto c2 = load_cayley(2, {0, 1, 1, 0}, "C2");
  auto g  = group_groupoid(c2, 0);
  REQUIRE(check_ordered_groupoid(g).ok());
}

TEST_CASE("corrupted tables produce named witnesses", "[groupoid]") {
  auto ig = trace_groupoid(fixture("full_transformation", {2}));
  SECTION("corrupted inverse table yields an OG2 witness") {
    Groupoid bad = ig.g;
    // swap the inverses of two distinct non-identity morphisms
    int a = -1, b = -1;
    for (int x = 0; x < bad.size() && a < 0; ++x) {
      for (int y = x + 1; y < bad.size() && a < 0; ++y) {
        if (bad.inv[x] == x && bad.inv[y] == y && bad.dom[x] != bad.dom[y]) {
          a = x;
          b = y;
        }
      }
    }
    REQUIRE(a >= 0);
    std::swap(bad.inv[a], bad.inv[b]);
    auto r = check_ordered_groupoid(bad);
    REQUIRE_FALSE(r.ok());
    REQUIRE((r.has_failure("OG2") || r.has_failure("MalformedComposition.inverse")));
  }
  SECTION("order pair removal breaks OG2 specifically") {
    Groupoid bad = ig.g;
    int      hit = -1;
    for (int x = 0; x < bad.size() && hit < 0; ++x) {
      for (int y = 0; y < bad.size() && hit < 0; ++y) {
        if (x == y || !bad.mor_leq(x, y)) {
          continue;
        }
        Groupoid t = bad;
        t.set_leq(t.inv[x], t.inv[y], false);
        auto r = check_ordered_groupoid(t);
        if (!r.ok() && r.has_failure("OG2")) {
          hit = x;
        }
      }
    }
    REQUIRE(hit >= 0);
  }
  SECTION("broken associativity is MalformedComposition") {
    Groupoid bad = ig.g;
    // retarget one composite to a distinct parallel morphism
    bool done = false;
    for (int a = 0; a < bad.size() && !done; ++a) {
      for (int b = 0; b < bad.size() && !done; ++b) {
        int ab = bad.compose(a, b);
        if (ab < 0) {
          continue;
        }
        for (int m = 0; m < bad.size() && !done; ++m) {
          if (m != ab && bad.dom[m] == bad.dom[ab]
              && bad.cod[m] == bad.cod[ab]) {
            bad.set_comp(a, b, m);
            done = true;
          }
        }
      }
    }
    REQUIRE(done);
    auto r = check_ordered_groupoid(bad);
    REQUIRE_FALSE(r.ok());
  }
}

TEST_CASE("restriction behaviour", "[groupoid]") {
  auto ig = trace_groupoid(fixture("full_transformation", {2}));
  for (int x = 0; x < ig.g.size(); ++x) {
    REQUIRE(ig.restrict_mor(ig.g.dom[x], x) == x);
  }
  // identities restrict to identities
  for (int e = 0; e < ig.E.n; ++e) {
    for (int f = 0; f < ig.E.n; ++f) {
      if (ig.E.leq(e, f)) {
        REQUIRE(ig.restrict_mor(e, ig.g.identity[f]) == ig.g.identity[e]);
      }
    }
  }
  // in G(E(T2)): restriction of an evaluated chain matches the h-recursion
  auto const& E = ig.E;
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (e == f || !E.adjacent(e, f)) {
        continue;
      }
      for (int e2 = 0; e2 < E.n; ++e2) {
        if (!E.leq(e2, e)) {
          continue;
        }
        auto rc = restrict_chain(E, e2, EChain{{e, f}});
        REQUIRE(ig.eval_chain(rc) == ig.restrict_mor(e2, ig.eval_pair(e, f)));
      }
    }
  }
}

TEST_CASE("trace groupoids are inductive", "[groupoid]") {
  for (auto const& S :
       {fixture("full_transformation", {2}), fixture("brandt2"),
        fixture("rect_band", {2, 2}), fixture("left_zero", {2}),
        fixture("semilattice_chain", {2})}) {
    auto ig = trace_groupoid(S);
    auto r  = check_inductive(ig);
    INFO(S.name << "\n" << r.summary());
    REQUIRE(r.ok());
  }
}

TEST_CASE("corrupting one eval generator is caught", "[groupoid]") {
  auto S  = fixture("full_transformation", {3});
  auto ig = trace_groupoid(S);
  REQUIRE(check_inductive(ig).ok());
  // find an L-pair generator with a parallel morphism to swap in
  bool corrupted = false;
  for (int e = 0; e < ig.E.n && !corrupted; ++e) {
    for (int f = 0; f < ig.E.n && !corrupted; ++f) {
      if (e == f || !ig.E.rel_l(e, f)) {
        continue;
      }
      int cur = ig.eval_pair(e, f);
      for (int m = 0; m < ig.g.size(); ++m) {
        if (m != cur && ig.g.dom[m] == e && ig.g.cod[m] == f) {
          auto bad = ig;
          bad.eval_gen[static_cast<size_t>(e) * ig.E.n + f] = m;
          bad.finalize();
          auto r = check_inductive(bad);
          REQUIRE_FALSE(r.ok());
          bool named = r.has_failure("IG2") || r.has_failure("eval.chain")
                       || r.has_failure("eval.order") || r.has_failure("IG1.r")
                       || r.has_failure("IG1.l");
          REQUIRE(named);
          corrupted = true;
          break;
        }
      }
    }
  }
  REQUIRE(corrupted);
}

TEST_CASE("inductive functors compose and are checked", "[groupoid]") {
  auto S  = fixture("full_transformation", {2});
  auto ig = trace_groupoid(S);
  auto id = identity_functor(ig);
  REQUIRE(check_inductive_functor(id).ok());

  for (auto const& [src, map] : test_morphisms_into(S)) {
    auto g2 = trace_groupoid(src);
    auto F  = induced_functor(g2, src, ig, S, map);
    auto r  = check_inductive_functor(F);
    INFO(src.name << " -> " << S.name << "\n" << r.summary());
    REQUIRE(r.ok());
    // functors form a category: composing with the identity passes too
    auto FF = compose_functors(F, id);
    REQUIRE(check_inductive_functor(FF).ok());
  }

  SECTION("non-bimorphism object maps propagate BM witnesses") {
    auto F = identity_functor(ig);
    // swap the identity with a constant in the object map only
    F.obj_map = {1, 0, 2};
    auto r    = check_inductive_functor(F);
    REQUIRE_FALSE(r.ok());
    bool bm = r.has_failure("vF.BM1") || r.has_failure("vF.BM2")
              || r.has_failure("vF.RBM") || r.has_failure("functor.typing");
    REQUIRE(bm);
  }
}

TEST_CASE("automorphism composition stays inductive", "[groupoid]") {
  auto S  = fixture("brandt2");
  auto ig = trace_groupoid(S);
  for (auto const& [src, map] : test_morphisms_into(S)) {
    if (src.n != S.n) {
      continue;  // only the automorphism here
    }
    auto F = induced_functor(ig, S, ig, S, map);
    auto G = compose_functors(F, F);
    REQUIRE(check_inductive_functor(F).ok());
    REQUIRE(check_inductive_functor(G).ok());
  }
}
