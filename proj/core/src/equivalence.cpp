#include "igcx/equivalence.hpp"

#include <algorithm>
#include <memory>

namespace igcx {

namespace {

// the canonical inductive functor F_G : G -> groupoid-of-ccn(G)
InductiveFunctor f_g_functor(InductiveGroupoid const& G,
                             IgCrossConnection const& cc, CCGroupoid const& GG,
                             Report& rep) {
  InductiveFunctor F;
  F.src = &G;
  F.dst = &GG.ig;
  F.obj_map.assign(G.E.n, -1);
  for (int e = 0; e < G.E.n; ++e) {
    int c        = cc.L.object_of(cc.G, e);
    int d        = cc.R.object_of(cc.G, e);
    F.obj_map[e] = cc.x.pair_of(c, d);
    if (F.obj_map[e] < 0) {
      rep.fail("F_G.object", {e}, "(<-e, ->e) is not in E_Gamma");
    }
  }
  F.mor_map.assign(G.g.size(), -1);
  for (int a = 0; a < G.g.size() && rep.ok(); ++a) {
    int da = G.g.dom[a], ra = G.g.cod[a];
    int fc = cc.L.morphism_of(cc.G, da, a, ra);
    int gc = cc.R.morphism_of(cc.G, da, G.g.inv[a], ra);
    if (fc < 0 || gc < 0) {
      rep.fail("F_G.triple", {a}, "one-sided triple missing");
      break;
    }
    int id = GG.morphism_of(F.obj_map[da], F.obj_map[ra], fc);
    if (id < 0) {
      rep.fail("F_G.pair", {a}, "([da,a,ra>, <da,a^-1,ra]) not a morphism");
      break;
    }
    if (GG.pair_mor[id][3] != gc) {
      rep.fail("F_G.transpose", {a},
               "second component is not <da,a^-1,ra]");
      break;
    }
    F.mor_map[a] = id;
  }
  return F;
}

void check_bijective(std::vector<int> const& map, int codomain_size,
                     std::string const& name, Report& rep) {
  std::vector<int> seen(codomain_size, 0);
  for (int v : map) {
    if (v < 0 || v >= codomain_size || seen[v]++) {
      rep.fail(name, {v}, "not a bijection");
      return;
    }
  }
  if (static_cast<int>(map.size()) != codomain_size) {
    rep.fail(name, {static_cast<int>(map.size()), codomain_size},
             "size mismatch");
  }
}

// the canonical cc-morphism (F_Gamma1, F_Gamma2) : x -> round.x
CCMorphism f_pair_morphism(CrossConnection const& x, CCGroupoid const& GG,
                           IgCrossConnection const& round, Report& rep) {
  CCMorphism m;
  auto pair_elem_c = [&](int c) { return x.pair_of(c, x.partner_of_c(c)); };
  auto pair_elem_d = [&](int d) { return x.pair_of(x.partner_of_d(d), d); };

  m.f1_obj.assign(x.C.num_objects, -1);
  for (int c = 0; c < x.C.num_objects; ++c) {
    int p = pair_elem_c(c);
    if (p < 0) {
      rep.fail("F_Gamma1.object", {c}, "no partner pair");
      continue;
    }
    m.f1_obj[c] = round.L.object_of(round.G, p);
  }
  m.f2_obj.assign(x.D.num_objects, -1);
  for (int d = 0; d < x.D.num_objects; ++d) {
    int p = pair_elem_d(d);
    if (p < 0) {
      rep.fail("F_Gamma2.object", {d}, "no partner pair");
      continue;
    }
    m.f2_obj[d] = round.R.object_of(round.G, p);
  }
  if (!rep.ok()) {
    return m;
  }
  // The middle of the image triple is the isomorphism part of the epi
  // component taken through the canonical cone retraction: the least pair
  // p* = (c*, d*) below the domain with gamma(c*,d*)(c) u* = f-epi where
  // u* = j(c*, c) f-epi is an isomorphism.  All admissible pairs give the
  // same triple; the downstream bijectivity checks would catch otherwise.
  m.f1_mor.assign(x.C.size(), -1);
  for (int f = 0; f < x.C.size() && rep.ok(); ++f) {
    int c   = x.C.dom[f];
    int epi = x.C.epi_of(f);
    int c0p = x.C.image_of(f);
    int au  = -1;
    for (size_t p = 0; p < x.e_gamma.size() && au < 0; ++p) {
      int cs = x.e_gamma[p].first;
      if (!x.C.subobj(cs, c)) {
        continue;
      }
      int u = x.C.compose(x.C.inclusion(cs, c), epi);
      if (!x.C.is_iso(u)) {
        continue;
      }
      if (x.C.compose(x.NC.T.cones[x.gamma_pair[p]].comp[c], u) != epi) {
        continue;
      }
      au = GG.morphism_of(static_cast<int>(p), pair_elem_c(c0p), u);
    }
    if (au < 0) {
      rep.fail("F_Gamma1.iso_pair", {f}, "no cone-retraction decomposition");
      break;
    }
    m.f1_mor[f] = round.L.morphism_of(round.G, pair_elem_c(c), au,
                                      pair_elem_c(x.C.cod[f]));
    if (m.f1_mor[f] < 0) {
      rep.fail("F_Gamma1.morphism", {f}, "triple missing");
      break;
    }
  }
  m.f2_mor.assign(x.D.size(), -1);
  for (int g = 0; g < x.D.size() && rep.ok(); ++g) {
    int d   = x.D.dom[g];
    int epi = x.D.epi_of(g);
    int d0p = x.D.image_of(g);
    int au  = -1;
    for (size_t p = 0; p < x.e_gamma.size() && au < 0; ++p) {
      int ds = x.e_gamma[p].second;
      if (!x.D.subobj(ds, d)) {
        continue;
      }
      int u = x.D.compose(x.D.inclusion(ds, d), epi);
      if (!x.D.is_iso(u)) {
        continue;
      }
      if (x.D.compose(x.ND.T.cones[x.delta_pair[p]].comp[d], u) != epi) {
        continue;
      }
      // the pair morphism whose D-component is u
      for (int mm = 0; mm < GG.ig.g.size() && au < 0; ++mm) {
        if (GG.pair_mor[mm][0] == static_cast<int>(p)
            && GG.pair_mor[mm][1] == pair_elem_d(d0p)
            && GG.pair_mor[mm][3] == u) {
          au = mm;
        }
      }
    }
    if (au < 0) {
      rep.fail("F_Gamma2.iso_pair", {g}, "no cone-retraction decomposition");
      break;
    }
    // the right-side triple attaches the middle by its codomain, so the pair
    // morphism enters inverted
    m.f2_mor[g] = round.R.morphism_of(round.G, pair_elem_d(d),
                                      GG.ig.g.inv[au], pair_elem_d(x.D.cod[g]));
    if (m.f2_mor[g] < 0) {
      rep.fail("F_Gamma2.morphism", {g}, "triple missing");
      break;
    }
  }
  return m;
}

void check_cat_isomorphism(CatFunctor const& F, std::string const& name,
                           Report& rep) {
  rep.merge(check_functor(F), name + ".");
  check_bijective(F.obj_map, F.dst->num_objects, name + ".obj_bijective", rep);
  check_bijective(F.mor_map, F.dst->size(), name + ".mor_bijective", rep);
  for (int a = 0; a < F.src->num_objects; ++a) {
    for (int b = 0; b < F.src->num_objects; ++b) {
      if (F.src->subobj(a, b)
          != F.dst->subobj(F.obj_map[a], F.obj_map[b])) {
        if (!rep.has_failure(name + ".subobj")) {
          rep.fail(name + ".subobj", {a, b}, "");
        }
      } else if (F.src->subobj(a, b)
                 && F.mor_map[F.src->inclusion(a, b)]
                        != F.dst->inclusion(F.obj_map[a], F.obj_map[b])) {
        if (!rep.has_failure(name + ".inclusions")) {
          rep.fail(name + ".inclusions", {a, b}, "");
        }
      }
    }
  }
}

}  // namespace

RoundTripReport iso_cr(CrossConnection const& x, CCGroupoid const& GG,
                       IgCrossConnection const& round,
                       std::vector<CCTest> const& tests) {
  RoundTripReport out;
  out.direction = "cr-side";
  Report& rep   = out.checks;

  CCMorphism pair = f_pair_morphism(x, GG, round, rep);
  if (!rep.ok()) {
    return out;
  }
  CatFunctor F1{&x.C, &round.x.C, pair.f1_obj, pair.f1_mor};
  CatFunctor F2{&x.D, &round.x.D, pair.f2_obj, pair.f2_mor};
  check_cat_isomorphism(F1, "F_Gamma1", rep);
  check_cat_isomorphism(F2, "F_Gamma2", rep);
  if (!rep.ok()) {
    return out;
  }
  rep.merge(check_cc_morphism(pair, x, round.x), "pair.");

  // the L-quotient of a pair morphism is its first component: two groupoid
  // morphisms with L-related frames give equal L-triples iff the first
  // components agree
  for (int m1 = 0; m1 < GG.ig.g.size(); ++m1) {
    for (int m2 = 0; m2 < GG.ig.g.size(); ++m2) {
      auto [p1, q1, fa, ga] = GG.pair_mor[m1];
      auto [p2, q2, fb, gb] = GG.pair_mor[m2];
      if (!GG.ig.E.rel_l(p1, p2) || !GG.ig.E.rel_l(q1, q2)) {
        continue;
      }
      int t1 = round.L.morphism_of(round.G, p1, m1, q1);
      int t2 = round.L.morphism_of(round.G, p2, m2, q2);
      if ((t1 == t2) != (fa == fb)) {
        if (!rep.has_failure("first_component_quotient")) {
          rep.fail("first_component_quotient", {m1, m2},
                   "L-quotient does not match the first components");
        }
      }
    }
  }

  for (auto const& t : tests) {
    // square: f_pair(src) then IC(m)  ==  m then f_pair(x)
    Report     side;
    CCMorphism src_pair = f_pair_morphism(*t.src, *t.src_g, *t.src_round, side);
    if (!side.ok()) {
      rep.merge(side, "naturality.src.");
      continue;
    }
    InductiveFunctor Im = inductive_functor_of(t.m, *t.src_g, GG, *t.src, x);
    CCMorphism       ICm = cc_morphism_of(Im, *t.src_round, round);
    CCMorphism lhs = compose_cc_morphisms(src_pair, ICm);
    CCMorphism rhs = compose_cc_morphisms(t.m, pair);
    if (lhs.f1_obj != rhs.f1_obj || lhs.f1_mor != rhs.f1_mor
        || lhs.f2_obj != rhs.f2_obj || lhs.f2_mor != rhs.f2_mor) {
      rep.fail("naturality", {out.naturality_squares},
               "cr-side square does not commute");
    }
    ++out.naturality_squares;
  }
  if (rep.ok()) {
    rep.pass("iso_cr");
  }
  return out;
}

RoundTripReport iso_ig(InductiveGroupoid const& G, IgCrossConnection const& cc,
                       CCGroupoid const& GG,
                       std::vector<IGTest> const& tests) {
  RoundTripReport out;
  out.direction = "ig-side";
  Report& rep   = out.checks;

  InductiveFunctor F = f_g_functor(G, cc, GG, rep);
  if (!rep.ok()) {
    return out;
  }
  rep.merge(check_inductive_functor(F), "F_G.");
  check_bijective(F.obj_map, GG.ig.E.n, "F_G.obj_bijective", rep);
  check_bijective(F.mor_map, GG.ig.g.size(), "F_G.mor_bijective", rep);
  // order reflection makes it an inductive isomorphism
  for (int a = 0; a < G.g.size() && rep.ok(); ++a) {
    for (int b = 0; b < G.g.size(); ++b) {
      if (G.g.mor_leq(a, b)
          != GG.ig.g.mor_leq(F.mor_map[a], F.mor_map[b])) {
        rep.fail("F_G.order_iso", {a, b}, "");
        break;
      }
    }
  }
  // the inverse object map is a bimorphism too (biorder isomorphism)
  if (rep.ok()) {
    std::vector<int> inv_obj(GG.ig.E.n, -1);
    for (int e = 0; e < G.E.n; ++e) {
      inv_obj[F.obj_map[e]] = e;
    }
    rep.merge(check_bimorphism(GG.ig.E, G.E, inv_obj), "F_G.obj_iso.");
  }

  for (auto const& t : tests) {
    Report           side;
    InductiveFunctor src_F = f_g_functor(*t.F.src, *t.src_cc, *t.src_g, side);
    if (!side.ok()) {
      rep.merge(side, "naturality.src.");
      continue;
    }
    CCMorphism       Cm  = cc_morphism_of(t.F, *t.src_cc, cc);
    InductiveFunctor ICF =
        inductive_functor_of(Cm, *t.src_g, GG, t.src_cc->x, cc.x);
    InductiveFunctor lhs = compose_functors(src_F, ICF);
    InductiveFunctor rhs = compose_functors(t.F, F);
    if (lhs.obj_map != rhs.obj_map || lhs.mor_map != rhs.mor_map) {
      rep.fail("naturality", {out.naturality_squares},
               "ig-side square does not commute");
    }
    ++out.naturality_squares;
  }
  if (rep.ok()) {
    rep.pass("iso_ig");
  }
  return out;
}

SemigroupRoundTrip roundtrip_semigroup(FiniteSemigroup const& S) {
  SemigroupRoundTrip rt;
  rt.name = S.name;

  InductiveGroupoid G = trace_groupoid(S);
  rt.preparation.merge(check_inductive(G), "trace.");

  IgCrossConnection cc = cross_connection_of(G);
  rt.preparation.merge(validate_crossconnection(cc.x), "ccn.");

  CCGroupoid GG = inductive_groupoid_of(cc.x);
  rt.preparation.merge(check_inductive(GG.ig), "groupoid_of_ccn.");
  if (!rt.preparation.ok()) {
    return rt;
  }

  IgCrossConnection round = cross_connection_of(GG.ig);

  // test morphisms: identity plus every registered fixture morphism
  struct Held {
    InductiveGroupoid G2;
    IgCrossConnection cc2;
    CCGroupoid        g2;
    InductiveFunctor  F;
  };
  std::vector<std::unique_ptr<Held>> held;
  {
    auto h = std::make_unique<Held>();
    h->G2  = G;
    h->cc2 = cross_connection_of(h->G2);
    h->g2  = inductive_groupoid_of(h->cc2.x);
    h->F   = identity_functor(h->G2);
    h->F.dst = &G;
    held.push_back(std::move(h));
  }
  for (auto const& [src, map] : test_morphisms_into(S)) {
    auto h = std::make_unique<Held>();
    h->G2  = trace_groupoid(src);
    h->F   = induced_functor(h->G2, src, G, S, map);
    h->cc2 = cross_connection_of(h->G2);
    h->g2  = inductive_groupoid_of(h->cc2.x);
    held.push_back(std::move(h));
  }
  std::vector<IGTest> ig_tests;
  std::vector<CCTest> cc_tests;
  for (auto const& h : held) {
    h->F.src = &h->G2;
    h->F.dst = &G;
    ig_tests.push_back({h->F, &h->cc2, &h->g2});
  }
  // the cr-side squares use the images of the same functors under the first
  // construction
  std::vector<std::unique_ptr<CCMorphism>>        cms;
  std::vector<std::unique_ptr<IgCrossConnection>> rounds2;
  for (auto const& h : held) {
    cms.push_back(std::make_unique<CCMorphism>(cc_morphism_of(h->F, h->cc2, cc)));
    rounds2.push_back(
        std::make_unique<IgCrossConnection>(cross_connection_of(h->g2.ig)));
    cc_tests.push_back({*cms.back(), &h->cc2.x, &h->g2, rounds2.back().get()});
  }

  rt.ig_side = iso_ig(G, cc, GG, ig_tests);
  rt.cr_side = iso_cr(cc.x, GG, round, cc_tests);
  return rt;
}

}  // namespace igcx
