#include "igcx/crossconn.hpp"

#include <algorithm>

namespace igcx {

namespace {

bool delta_mset_has(CrossConnection const& x, int c, int d) {
  Cone const& dc = x.ND.T.cones[x.delta[c]];
  return x.D.is_iso(dc.comp[d]);
}

// lambda-morphism cone adjusted to the representative idempotent of a pair
int lambda_cone_at(NormalDual const& N, int lambda_mor, int eps_rep) {
  int theta = N.R.mor_euf[lambda_mor][1];
  return N.T.sg.at(theta, eps_rep);
}

}  // namespace

void CrossConnection::derive() {
  e_gamma.clear();
  pair_index.assign(static_cast<size_t>(C.num_objects) * D.num_objects, -1);
  for (int c = 0; c < C.num_objects; ++c) {
    for (int d = 0; d < D.num_objects; ++d) {
      Cone const& g = NC.T.cones[gamma[d]];
      if (C.is_iso(g.comp[c])) {
        pair_index[static_cast<size_t>(c) * D.num_objects + d] =
            static_cast<int>(e_gamma.size());
        e_gamma.emplace_back(c, d);
      }
    }
  }
  gamma_pair.assign(e_gamma.size(), -1);
  delta_pair.assign(e_gamma.size(), -1);
  for (size_t i = 0; i < e_gamma.size(); ++i) {
    auto [c, d] = e_gamma[i];
    // gamma(c,d): the unique idempotent cone with apex c in the H-class of
    // gamma(d); concretely gamma_d * (gamma_d(c))^-1
    Cone const& gd = NC.T.cones[gamma[d]];
    gamma_pair[i]  = NC.T.index_of(cone_star(C, gd, C.inverse[gd.comp[c]]));
    Cone const& dc = ND.T.cones[delta[c]];
    if (D.is_iso(dc.comp[d])) {
      delta_pair[i] = ND.T.index_of(cone_star(D, dc, D.inverse[dc.comp[d]]));
    }
  }
}

CrossConnection assemble_crossconnection(Category C, Category D,
                                         std::vector<Cone> C_cones,
                                         std::vector<Cone> D_cones,
                                         std::vector<int>  gamma,
                                         std::vector<int>  delta,
                                         std::vector<int>  gamma_mor,
                                         std::vector<int>  delta_mor) {
  CrossConnection x;
  x.C         = std::move(C);
  x.D         = std::move(D);
  x.C_cones   = std::move(C_cones);
  x.D_cones   = std::move(D_cones);
  x.NC        = normal_dual(x.C);
  x.ND        = normal_dual(x.D);
  x.gamma     = std::move(gamma);
  x.delta     = std::move(delta);
  x.gamma_mor = std::move(gamma_mor);
  x.delta_mor = std::move(delta_mor);
  x.derive();
  return x;
}

namespace {

CatFunctor gamma_functor(CrossConnection const& x) {
  CatFunctor F;
  F.src = &x.D;
  F.dst = &x.NC.R.cat;
  F.obj_map.resize(x.D.num_objects);
  for (int d = 0; d < x.D.num_objects; ++d) {
    F.obj_map[d] = x.NC.object_of(x.gamma[d]);
  }
  F.mor_map = x.gamma_mor;
  return F;
}

CatFunctor delta_functor(CrossConnection const& x) {
  CatFunctor F;
  F.src = &x.C;
  F.dst = &x.ND.R.cat;
  F.obj_map.resize(x.C.num_objects);
  for (int c = 0; c < x.C.num_objects; ++c) {
    F.obj_map[c] = x.ND.object_of(x.delta[c]);
  }
  F.mor_map = x.delta_mor;
  return F;
}

}  // namespace

Report validate_crossconnection(CrossConnection const& x) {
  Report rep;
  rep.merge(check_normal_category(x.C, &x.C_cones), "C.");
  rep.merge(check_normal_category(x.D, &x.D_cones), "D.");
  if (!rep.ok()) {
    return rep;
  }
  if (static_cast<int>(x.gamma.size()) != x.D.num_objects
      || static_cast<int>(x.delta.size()) != x.C.num_objects
      || static_cast<int>(x.gamma_mor.size()) != x.D.size()
      || static_cast<int>(x.delta_mor.size()) != x.C.size()) {
    rep.fail("tables.shape", {}, "gamma/delta tables are not total");
    return rep;
  }
  for (int d = 0; d < x.D.num_objects; ++d) {
    int g = x.gamma[d];
    if (g < 0 || g >= static_cast<int>(x.NC.T.cones.size())
        || !is_idempotent_cone(x.C, x.NC.T.cones[g])) {
      rep.fail("gamma.idempotent", {d}, "gamma(d) is not an idempotent cone");
      return rep;
    }
  }
  for (int c = 0; c < x.C.num_objects; ++c) {
    int g = x.delta[c];
    if (g < 0 || g >= static_cast<int>(x.ND.T.cones.size())
        || !is_idempotent_cone(x.D, x.ND.T.cones[g])) {
      rep.fail("delta.idempotent", {c}, "delta(c) is not an idempotent cone");
      return rep;
    }
  }
  rep.merge(is_local_isomorphism(gamma_functor(x)), "Gamma.");
  rep.merge(is_local_isomorphism(delta_functor(x)), "Delta.");
  for (int c = 0; c < x.C.num_objects; ++c) {
    bool hit = false;
    for (int d = 0; d < x.D.num_objects && !hit; ++d) {
      hit = x.pair_of(c, d) >= 0;
    }
    if (!hit && !rep.has_failure("Gamma.msurjective")) {
      rep.fail("Gamma.msurjective", {c}, "no d with c in M Gamma(d)");
    }
  }
  for (int d = 0; d < x.D.num_objects; ++d) {
    bool hit = false;
    for (int c = 0; c < x.C.num_objects && !hit; ++c) {
      hit = delta_mset_has(x, c, d);
    }
    if (!hit && !rep.has_failure("Delta.msurjective")) {
      rep.fail("Delta.msurjective", {d}, "no c with d in M Delta(c)");
    }
  }
  // duality: (c,d) in E_Gamma iff (d,c) in E_Delta
  for (int c = 0; c < x.C.num_objects; ++c) {
    for (int d = 0; d < x.D.num_objects; ++d) {
      bool in_g = x.pair_of(c, d) >= 0;
      bool in_d = delta_mset_has(x, c, d);
      if (in_g != in_d && !rep.has_failure("duality.pairs")) {
        rep.fail("duality.pairs", {c, d}, "E_Gamma and E_Delta disagree");
      }
    }
  }
  // per-pair uniqueness of the idempotent cone in its H-class
  for (size_t i = 0; i < x.e_gamma.size(); ++i) {
    auto [c, d] = x.e_gamma[i];
    int found   = 0;
    for (int e : x.NC.idem) {
      if (x.NC.T.cones[e].apex == c && x.NC.T.sg.green_r(e, x.gamma[d])) {
        ++found;
        if (e != x.gamma_pair[i] && !rep.has_failure("gamma.pair_unique")) {
          rep.fail("gamma.pair_unique", {c, d, e}, "second cone in the class");
        }
      }
    }
    if (found != 1 && !rep.has_failure("gamma.pair_exists")) {
      rep.fail("gamma.pair_exists", {c, d, found}, "");
    }
    if (x.delta_pair[i] < 0 && !rep.has_failure("delta.pair_exists")) {
      rep.fail("delta.pair_exists", {c, d}, "(d,c) has no dual cone");
    }
  }
  if (rep.ok()) {
    rep.pass("cross_connection");
  }
  return rep;
}

BiorderedSet biorder_of(CrossConnection const& x) {
  int              n = static_cast<int>(x.e_gamma.size());
  std::vector<int> product(static_cast<size_t>(n) * n, -1);
  auto set_case = [&](int i, int j, int value, char const* which) {
    int& slot = product[static_cast<size_t>(i) * n + j];
    if (value < 0) {
      throw IgcxError("AxiomViolation",
                      detail::msg("basic product leaves E_Gamma (", which, ")"),
                      {i, j});
    }
    if (slot >= 0 && slot != value) {
      throw IgcxError(
          "AxiomViolation",
          detail::msg("overlapping product cases disagree (", which, ")"),
          {i, j, slot, value});
    }
    slot = value;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [c, d]   = x.e_gamma[i];
      auto [c2, d2] = x.e_gamma[j];
      if (x.C.subobj(c, c2)) {
        set_case(i, j, i, "c sub c'");
      }
      if (x.C.subobj(c2, c)) {
        int m = x.ND.T.cones[x.delta_pair[i]].comp[d2];
        set_case(i, j, x.pair_of(c2, x.D.image_of(m)), "c' sub c");
      }
      if (x.D.subobj(d2, d)) {
        set_case(i, j, j, "d' sub d");
      }
      if (x.D.subobj(d, d2)) {
        int m = x.NC.T.cones[x.gamma_pair[j]].comp[c];
        set_case(i, j, x.pair_of(x.C.image_of(m), d), "d sub d'");
      }
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = "(" + x.C.olabel(x.e_gamma[i].first) + ","
                + x.D.olabel(x.e_gamma[i].second) + ")";
  }
  BiorderedSet E = load_biorder(n, product, std::move(labels), "E_Gamma");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto [c, d]   = x.e_gamma[i];
      auto [c2, d2] = x.e_gamma[j];
      if (E.leq_l(i, j) != x.C.subobj(c, c2)
          || E.leq_r(i, j) != x.D.subobj(d, d2)) {
        throw IgcxError("AxiomViolation", "E_Gamma preorders disagree", {i, j});
      }
    }
  }
  if (!is_regular(E)) {
    throw IgcxError("AxiomViolation", "E_Gamma is not regular");
  }
  return E;
}

namespace {

// the diagram scan shared by both transpose directions: candidates g satisfy
// eta_2(Delta(f)(kappa)) = g . eta_1(kappa) for every object and H-element
int transpose_scan(Category const& A, ConeSemigroup const& T, int cone1,
                   int cone2, int formula, int from, int to) {
  HFunctor H1 = h_functor(A, T, cone1);
  HFunctor H2 = h_functor(A, T, cone2);
  if (!H1.report.ok() || !H2.report.ok()) {
    return -2;
  }
  int found = -1;
  for (int g : A.homset(from, to)) {
    bool ok = true;
    for (int b = 0; b < A.num_objects && ok; ++b) {
      for (size_t i = 0; i < H1.sets[b].size() && ok; ++i) {
        int lhs = A.compose(g, H1.eta[b][i]);
        int te  = A.epi_of(A.compose(formula, H1.eta[b][i]));
        if (te < 0) {
          ok = false;
          break;
        }
        Cone image = cone_star(A, T.cones[cone2], te);
        int  k2    = T.index_of(image);
        auto pos   = std::lower_bound(H2.sets[b].begin(), H2.sets[b].end(), k2);
        if (pos == H2.sets[b].end() || *pos != k2) {
          ok = false;
          break;
        }
        ok = lhs == H2.eta[b][static_cast<size_t>(pos - H2.sets[b].begin())];
      }
    }
    if (ok) {
      if (found >= 0) {
        return -3;  // not unique
      }
      found = g;
    }
  }
  return found;
}

}  // namespace

int transpose(CrossConnection const& x, int f, int p1, int p2, bool verify) {
  auto [c, d]   = x.e_gamma[p1];
  auto [c2, d2] = x.e_gamma[p2];
  if (x.C.dom[f] != c || x.C.cod[f] != c2) {
    throw IgcxError("NoTranspose", "morphism does not match the pairs",
                    {f, p1, p2});
  }
  int         lam   = x.delta_mor[f];
  int         th    = lambda_cone_at(x.ND, lam, x.delta_pair[p1]);
  Cone const& theta = x.ND.T.cones[th];
  int         comp  = theta.comp[d2];
  if (!x.D.subobj(theta.apex, d)) {
    throw IgcxError("NoTranspose", "transpose cone apex not below d",
                    {f, p1, p2});
  }
  int out = x.D.compose(comp, x.D.inclusion(theta.apex, d));
  if (verify) {
    int scan = transpose_scan(x.D, x.ND.T, x.delta_pair[p1], x.delta_pair[p2],
                              out, d2, d);
    if (scan == -3) {
      throw IgcxError("NonUniqueTranspose", "two commuting candidates",
                      {f, p1, p2});
    }
    if (scan != out) {
      throw IgcxError("NoTranspose", "diagram scan disagrees with the formula",
                      {f, p1, p2, out, scan});
    }
  }
  return out;
}

int transpose_dual(CrossConnection const& x, int g, int p1, int p2,
                   bool verify) {
  auto [c, d]   = x.e_gamma[p1];
  auto [c2, d2] = x.e_gamma[p2];
  if (x.D.dom[g] != d || x.D.cod[g] != d2) {
    throw IgcxError("NoTranspose", "morphism does not match the pairs",
                    {g, p1, p2});
  }
  int         lam   = x.gamma_mor[g];
  int         th    = lambda_cone_at(x.NC, lam, x.gamma_pair[p1]);
  Cone const& theta = x.NC.T.cones[th];
  int         comp  = theta.comp[c2];
  if (!x.C.subobj(theta.apex, c)) {
    throw IgcxError("NoTranspose", "transpose cone apex not below c",
                    {g, p1, p2});
  }
  int out = x.C.compose(comp, x.C.inclusion(theta.apex, c));
  if (verify) {
    int scan = transpose_scan(x.C, x.NC.T, x.gamma_pair[p1], x.gamma_pair[p2],
                              out, c2, c);
    if (scan == -3) {
      throw IgcxError("NonUniqueTranspose", "two commuting candidates",
                      {g, p1, p2});
    }
    if (scan != out) {
      throw IgcxError("NoTranspose", "diagram scan disagrees with the formula",
                      {g, p1, p2, out, scan});
    }
  }
  return out;
}

Report check_cc_morphism(CCMorphism const& m, CrossConnection const& x,
                         CrossConnection const& x2) {
  Report     rep;
  CatFunctor F1{&x.C, &x2.C, m.f1_obj, m.f1_mor};
  CatFunctor F2{&x.D, &x2.D, m.f2_obj, m.f2_mor};
  rep.merge(check_functor(F1), "F1.");
  rep.merge(check_functor(F2), "F2.");
  if (!rep.ok()) {
    return rep;
  }
  auto incl_preserving = [&](CatFunctor const& F, char const* name) {
    auto const& A = *F.src;
    auto const& B = *F.dst;
    for (int a = 0; a < A.num_objects; ++a) {
      for (int b = 0; b < A.num_objects; ++b) {
        if (!A.subobj(a, b)) {
          continue;
        }
        if (!B.subobj(F.obj_map[a], F.obj_map[b])
            || F.mor_map[A.inclusion(a, b)]
                   != B.inclusion(F.obj_map[a], F.obj_map[b])) {
          if (!rep.has_failure(std::string(name) + ".inclusions")) {
            rep.fail(std::string(name) + ".inclusions", {a, b}, "");
          }
        }
      }
    }
  };
  incl_preserving(F1, "M1.F1");
  incl_preserving(F2, "M1.F2");
  for (size_t i = 0; i < x.e_gamma.size() && rep.ok(); ++i) {
    auto [c, d] = x.e_gamma[i];
    int i2      = x2.pair_of(m.f1_obj[c], m.f2_obj[d]);
    if (i2 < 0) {
      rep.fail("M1.pairs", {c, d}, "image pair not in E_Gamma'");
      break;
    }
    Cone const& gcd = x.NC.T.cones[x.gamma_pair[i]];
    Cone const& im  = x2.NC.T.cones[x2.gamma_pair[i2]];
    for (int c2 = 0; c2 < x.C.num_objects; ++c2) {
      if (m.f1_mor[gcd.comp[c2]] != im.comp[m.f1_obj[c2]]) {
        rep.fail("M1.cones", {static_cast<int>(i), c2},
                 "F1(gamma(c,d)(c')) != gamma(F1 c, F2 d)(F1 c')");
        break;
      }
    }
  }
  for (size_t i = 0; i < x.e_gamma.size() && rep.ok(); ++i) {
    for (size_t j = 0; j < x.e_gamma.size() && rep.ok(); ++j) {
      auto [c, d]   = x.e_gamma[i];
      auto [c2, d2] = x.e_gamma[j];
      int i2        = x2.pair_of(m.f1_obj[c], m.f2_obj[d]);
      int j2        = x2.pair_of(m.f1_obj[c2], m.f2_obj[d2]);
      if (i2 < 0 || j2 < 0) {
        continue;  // reported by M1.pairs
      }
      for (int f : x.C.homset(c, c2)) {
        int ft  = transpose(x, f, static_cast<int>(i), static_cast<int>(j));
        int lhs = m.f2_mor[ft];
        int rhs = transpose(x2, m.f1_mor[f], i2, j2);
        if (lhs != rhs) {
          rep.fail("M2", {static_cast<int>(i), static_cast<int>(j), f},
                   "G(f*) is not the transpose of F(f)");
          break;
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("cc_morphism");
  }
  return rep;
}

CCMorphism identity_cc_morphism(CrossConnection const& x) {
  CCMorphism m;
  for (int c = 0; c < x.C.num_objects; ++c) {
    m.f1_obj.push_back(c);
  }
  for (int i = 0; i < x.C.size(); ++i) {
    m.f1_mor.push_back(i);
  }
  for (int d = 0; d < x.D.num_objects; ++d) {
    m.f2_obj.push_back(d);
  }
  for (int i = 0; i < x.D.size(); ++i) {
    m.f2_mor.push_back(i);
  }
  return m;
}

CCMorphism compose_cc_morphisms(CCMorphism const& m, CCMorphism const& m2) {
  CCMorphism out;
  auto apply = [](std::vector<int> const& first,
                  std::vector<int> const& then) {
    std::vector<int> r(first.size());
    for (size_t i = 0; i < first.size(); ++i) {
      r[i] = then[first[i]];
    }
    return r;
  };
  out.f1_obj = apply(m.f1_obj, m2.f1_obj);
  out.f1_mor = apply(m.f1_mor, m2.f1_mor);
  out.f2_obj = apply(m.f2_obj, m2.f2_obj);
  out.f2_mor = apply(m.f2_mor, m2.f2_mor);
  return out;
}

}  // namespace igcx
