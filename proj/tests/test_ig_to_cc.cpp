#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "igcx/ig_to_cc.hpp"

using namespace igcx;
using igcx_test::fixture;

namespace {

std::vector<FiniteSemigroup> corpus() {
  std::vector<FiniteSemigroup> fs;
  fs.push_back(fixture("left_zero", {2}));
  fs.push_back(fixture("right_zero", {2}));
  fs.push_back(fixture("rect_band", {2, 2}));
  fs.push_back(fixture("semilattice_chain", {2}));
  fs.push_back(fixture("brandt2"));
  fs.push_back(fixture("full_transformation", {2}));
  return fs;
}

// conjugated members of the p-class of theta
std::vector<int> p_class_members(InductiveGroupoid const& G, int theta) {
  std::vector<int> out;
  int d = G.g.dom[theta], r = G.g.cod[theta];
  for (int v = 0; v < G.E.n; ++v) {
    if (!G.E.rel_r(v, d)) {
      continue;
    }
    for (int w = 0; w < G.E.n; ++w) {
      if (!G.E.rel_l(w, r)) {
        continue;
      }
      out.push_back(G.g.compose(G.g.compose(G.eval_pair(v, d), theta),
                                G.eval_pair(r, w)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("one-sided categories have the expected shapes", "[ig_to_cc]") {
  auto lz = trace_groupoid(fixture("left_zero", {2}));
  REQUIRE(left_category(lz).cat.num_objects == 1);
  auto rz = trace_groupoid(fixture("right_zero", {2}));
  REQUIRE(right_category(rz).cat.num_objects == 1);
  auto rb = trace_groupoid(fixture("rect_band", {2, 2}));
  auto L  = left_category(rb);
  auto R  = right_category(rb);
  REQUIRE(L.cat.num_objects == 2);
  REQUIRE(R.cat.num_objects == 2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      REQUIRE_FALSE(L.cat.homset(a, b).empty());
    }
  }
}

TEST_CASE("one-sided categories are normal", "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto G  = trace_groupoid(S);
    auto L  = left_category(G);
    auto R  = right_category(G);
    auto lc = ig_category_cones(G, L);
    auto rc = ig_category_cones(G, R);
    auto r1 = check_normal_category(L.cat, &lc);
    auto r2 = check_normal_category(R.cat, &rc);
    INFO(S.name << "\nL: " << r1.summary() << "R: " << r2.summary());
    REQUIRE(r1.ok());
    REQUIRE(r2.ok());
  }
}

TEST_CASE("the p relation partitions into classes with canonical reps",
          "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto G = trace_groupoid(S);
    for (int a = 0; a < G.g.size(); ++a) {
      int canon = p_canonical(G, a);
      REQUIRE(p_canonical(G, canon) == canon);
      for (int b : p_class_members(G, a)) {
        REQUIRE(p_canonical(G, b) == canon);
      }
    }
  }
}

TEST_CASE("sandwich independence over every sandwich element", "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto G = trace_groupoid(S);
    for (int a = 0; a < G.g.size(); ++a) {
      for (int b = 0; b < G.g.size(); ++b) {
        auto Sset = sandwich_set(G.E, G.g.cod[a], G.g.dom[b]);
        REQUIRE_FALSE(Sset.empty());
        int canon = p_canonical(G, sandwich_compose(G, a, b, Sset[0]));
        for (int h : Sset) {
          REQUIRE(p_canonical(G, sandwich_compose(G, a, b, h)) == canon);
        }
      }
    }
  }
}

TEST_CASE("composition is independent of representatives", "[ig_to_cc]") {
  for (auto const& S : {fixture("rect_band", {2, 2}),
                        fixture("full_transformation", {2})}) {
    auto G = trace_groupoid(S);
    auto L = left_category(G);
    for (int m1 = 0; m1 < L.cat.size(); ++m1) {
      for (int m2 = 0; m2 < L.cat.size(); ++m2) {
        if (L.cat.cod[m1] != L.cat.dom[m2]) {
          continue;
        }
        int expect = L.cat.compose(m1, m2);
        for (int a1 : p_class_members(G, L.mor_eaf[m1][1])) {
          for (int a2 : p_class_members(G, L.mor_eaf[m2][1])) {
            int th = sandwich_compose(G, a1, a2);
            REQUIRE(L.morphism_of(G, L.mor_eaf[m1][0], th, L.mor_eaf[m2][2])
                    == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("associativity via the bracket-shift identity", "[ig_to_cc]") {
  auto S = fixture("full_transformation", {2});
  auto G = trace_groupoid(S);
  for (int a = 0; a < G.g.size(); ++a) {
    for (int b = 0; b < G.g.size(); ++b) {
      for (int c = 0; c < G.g.size(); ++c) {
        int lhs =
            p_canonical(G, sandwich_compose(G, sandwich_compose(G, a, b), c));
        int rhs =
            p_canonical(G, sandwich_compose(G, a, sandwich_compose(G, b, c)));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("principal cones: identities, products, p-invariance",
          "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto G = trace_groupoid(S);
    auto L = left_category(G);
    for (int b = 0; b < L.cat.num_objects; ++b) {
      auto re = principal_cone(G, L, G.g.identity[L.obj_elem[b]]);
      REQUIRE(is_idempotent_cone(L.cat, re));
    }
    // r^alpha r^beta = r^{(alpha o beta)_h} for all pairs and all h
    for (int a = 0; a < G.g.size(); ++a) {
      for (int b = 0; b < G.g.size(); ++b) {
        Cone lhs = compose_cone(L.cat, principal_cone(G, L, a),
                                principal_cone(G, L, b));
        for (int h : sandwich_set(G.E, G.g.cod[a], G.g.dom[b])) {
          REQUIRE(lhs == principal_cone(G, L, sandwich_compose(G, a, b, h)));
        }
      }
    }
    // r^alpha depends only on the p-class
    for (int a = 0; a < G.g.size(); ++a) {
      auto ra = principal_cone(G, L, a);
      for (int b : p_class_members(G, a)) {
        REQUIRE(principal_cone(G, L, b) == ra);
      }
    }
  }
}

TEST_CASE("r^e r^f = r^{ef} on basic products", "[ig_to_cc]") {
  for (auto const& S : {fixture("rect_band", {2, 2}),
                        fixture("full_transformation", {2})}) {
    auto G = trace_groupoid(S);
    auto L = left_category(G);
    for (int e = 0; e < G.E.n; ++e) {
      for (int f = 0; f < G.E.n; ++f) {
        if (!G.E.defined(e, f)) {
          continue;
        }
        Cone lhs = compose_cone(L.cat, principal_cone(G, L, G.g.identity[e]),
                                principal_cone(G, L, G.g.identity[f]));
        REQUIRE(lhs == principal_cone(G, L, G.g.identity[G.E.at(e, f)]));
      }
    }
  }
}

TEST_CASE("normal factorization of every left-category morphism",
          "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto G = trace_groupoid(S);
    auto L = left_category(G);
    for (int m = 0; m < L.cat.size(); ++m) {
      int e  = L.mor_eaf[m][0];
      int f  = L.mor_eaf[m][2];
      int th = L.rebase(G, L.cat.dom[m], L.mor_eaf[m][1]);
      int d = G.g.dom[th], r = G.g.cod[th];
      int q = L.morphism_of(G, e, G.g.identity[d], d);
      int u = L.morphism_of(G, d, th, r);
      int j = L.morphism_of(G, r, G.g.identity[r], f);
      REQUIRE(q >= 0);
      REQUIRE(u >= 0);
      REQUIRE(j >= 0);
      REQUIRE(L.cat.compose3(q, u, j) == m);
      REQUIRE(L.cat.retr_flag[q]);
      REQUIRE(L.cat.is_iso(u));
      REQUIRE(L.cat.incl_flag[j]);
    }
  }
}

TEST_CASE("independent oracle: principal categories match the one-sided "
          "categories of the trace groupoid",
          "[ig_to_cc]") {
  std::vector<FiniteSemigroup> fs = corpus();
  fs.push_back(fixture("full_transformation", {3}));
  for (auto const& S : fs) {
    auto G  = trace_groupoid(S);
    auto tr = trace_triples(G, S);
    std::map<std::array<int, 3>, int> tidx;
    for (int m = 0; m < static_cast<int>(tr.size()); ++m) {
      tidx[tr[m]] = m;
    }
    auto P = principal_categories(S);
    auto L = left_category(G);
    auto R = right_category(G);
    auto eidx = [&](int e) {
      auto it = std::lower_bound(S.idempotents.begin(), S.idempotents.end(), e);
      return static_cast<int>(it - S.idempotents.begin());
    };

    // canonical candidate rho(e, w, f) -> [e, (ww', w, w'w), f>
    CatFunctor cand{&P.L.cat, &L.cat, {}, {}};
    cand.obj_map.resize(P.L.cat.num_objects);
    for (int a = 0; a < P.L.cat.num_objects; ++a) {
      cand.obj_map[a] = L.object_of(G, eidx(P.L.obj_e[a]));
    }
    cand.mor_map.resize(P.L.cat.size());
    for (int m = 0; m < P.L.cat.size(); ++m) {
      auto [e, w, f]  = P.L.mor_euf[m];
      int  wp         = some_inverse(S, w);
      int  alpha      = tidx.at({S.at(w, wp), w, S.at(wp, w)});
      cand.mor_map[m] = L.morphism_of(G, eidx(e), alpha, eidx(f));
      REQUIRE(cand.mor_map[m] >= 0);
    }
    auto iso = find_isomorphism(P.L.cat, L.cat, &cand);
    INFO("L_S vs L_G for " << S.name);
    REQUIRE(iso.has_value());

    CatFunctor cand2{&P.R.cat, &R.cat, {}, {}};
    cand2.obj_map.resize(P.R.cat.num_objects);
    for (int a = 0; a < P.R.cat.num_objects; ++a) {
      cand2.obj_map[a] = R.object_of(G, eidx(P.R.obj_e[a]));
    }
    cand2.mor_map.resize(P.R.cat.size());
    for (int m = 0; m < P.R.cat.size(); ++m) {
      auto [e, w, f]   = P.R.mor_euf[m];
      int  wp          = some_inverse(S, w);
      int  alpha       = tidx.at({S.at(w, wp), w, S.at(wp, w)});
      cand2.mor_map[m] = R.morphism_of(G, eidx(e), alpha, eidx(f));
      REQUIRE(cand2.mor_map[m] >= 0);
    }
    auto iso2 = find_isomorphism(P.R.cat, R.cat, &cand2);
    INFO("R_S vs R_G for " << S.name);
    REQUIRE(iso2.has_value());
  }
}

TEST_CASE("the category of the cone semigroup recovers the category",
          "[ig_to_cc]") {
  for (auto const& S :
       {fixture("left_zero", {2}), fixture("rect_band", {2, 2}),
        fixture("full_transformation", {2}), fixture("brandt2")}) {
    auto G   = trace_groupoid(S);
    auto L   = left_category(G);
    auto T   = all_cone_semigroup(L.cat);
    auto LT  = principal_left_category(T.sg);
    auto iso = find_isomorphism(LT.cat, L.cat);
    INFO("L_{TC} vs C for " << S.name << " (|TC| = " << T.cones.size() << ")");
    REQUIRE(iso.has_value());
  }
}

TEST_CASE("the principal-cone closure is a regular semigroup", "[ig_to_cc]") {
  auto G = trace_groupoid(fixture("left_zero", {2}));
  auto L = left_category(G);
  std::vector<Cone> seeds;
  for (int e = 0; e < G.E.n; ++e) {
    seeds.push_back(principal_cone(G, L, G.g.identity[e]));
  }
  for (int a = 0; a < G.g.size(); ++a) {
    seeds.push_back(principal_cone(G, L, a));
  }
  auto T = cone_semigroup(L.cat, seeds);
  REQUIRE(T.sg.regular);
  for (int e = 0; e < G.E.n; ++e) {
    int idx = T.index_of(principal_cone(G, L, G.g.identity[e]));
    REQUIRE(idx >= 0);
    REQUIRE(T.sg.is_idempotent(idx));
  }
}

TEST_CASE("the cross-connection of a groupoid validates", "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto cc = cross_connection_of(trace_groupoid(S));
    auto r  = validate_crossconnection(cc.x);
    INFO(S.name << "\n" << r.summary());
    REQUIRE(r.ok());
    REQUIRE(cc.x.e_gamma.size() == static_cast<size_t>(cc.G.E.n));
  }
}

TEST_CASE("biorder of the cross-connection is E itself", "[ig_to_cc]") {
  for (auto const& S : corpus()) {
    auto cc       = cross_connection_of(trace_groupoid(S));
    auto E2       = biorder_of(cc.x);
    auto const& E = cc.G.E;
    REQUIRE(E2.n == E.n);
    // e -> (<-e, ->e), table equality
    std::vector<int> map(E.n);
    for (int e = 0; e < E.n; ++e) {
      map[e] = cc.x.pair_of(cc.L.object_of(cc.G, e), cc.R.object_of(cc.G, e));
      REQUIRE(map[e] >= 0);
    }
    for (int e = 0; e < E.n; ++e) {
      for (int f = 0; f < E.n; ++f) {
        if (E.defined(e, f)) {
          REQUIRE(E2.at(map[e], map[f]) == map[E.at(e, f)]);
        } else {
          REQUIRE_FALSE(E2.defined(map[e], map[f]));
        }
      }
    }
  }
}

TEST_CASE("the idempotent embedding into the cone semigroup", "[ig_to_cc]") {
  // e -> r^e is a regular bimorphism that weakly reflects the quasiorder
  for (auto const& S : {fixture("rect_band", {2, 2}), fixture("brandt2"),
                        fixture("full_transformation", {2})}) {
    auto G          = trace_groupoid(S);
    auto L          = left_category(G);
    auto T          = all_cone_semigroup(L.cat);
    auto ET         = idempotent_biorder(T.sg);
    auto cone_index = [&](int e) {
      int t = T.index_of(principal_cone(G, L, G.g.identity[e]));
      auto it = std::lower_bound(T.sg.idempotents.begin(),
                                 T.sg.idempotents.end(), t);
      REQUIRE(*it == t);
      return static_cast<int>(it - T.sg.idempotents.begin());
    };
    std::vector<int> theta(G.E.n);
    for (int e = 0; e < G.E.n; ++e) {
      theta[e] = cone_index(e);
    }
    auto rep = check_bimorphism(G.E, ET, theta);
    INFO(S.name << "\n" << rep.summary());
    REQUIRE(rep.ok());
    for (int g = 0; g < G.E.n; ++g) {
      for (int e = 0; e < G.E.n; ++e) {
        for (int f = 0; f < G.E.n; ++f) {
          if (!G.E.leq_r(e, g) || !G.E.leq_r(f, g)
              || !ET.leq_r(theta[e], theta[f])) {
            continue;
          }
          bool found = false;
          for (int h = 0; h < G.E.n && !found; ++h) {
            found = theta[h] == theta[e] && G.E.leq_r(h, f);
          }
          REQUIRE(found);
        }
      }
    }
  }
}

TEST_CASE("induced cc-morphisms pass the axioms", "[ig_to_cc]") {
  auto S  = fixture("rect_band", {2, 2});
  auto G  = trace_groupoid(S);
  auto cc = cross_connection_of(G);
  auto id = identity_cc_morphism(cc.x);
  REQUIRE(check_cc_morphism(id, cc.x, cc.x).ok());
  for (auto const& [src, map] : test_morphisms_into(S)) {
    auto G2  = trace_groupoid(src);
    auto cc2 = cross_connection_of(G2);
    auto F   = induced_functor(G2, src, G, S, map);
    auto m   = cc_morphism_of(F, cc2, cc);
    auto rep = check_cc_morphism(m, cc2.x, cc.x);
    INFO(src.name << " -> " << S.name << "\n" << rep.summary());
    REQUIRE(rep.ok());
  }
}
