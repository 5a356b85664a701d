#include "igcx/ig_to_cc.hpp"

#include <algorithm>

namespace igcx {

int sandwich_compose(InductiveGroupoid const& G, int x, int y, int h) {
  BiorderedSet const& E  = G.E;
  int                 f1 = G.g.cod[x];
  int                 v  = G.g.dom[y];
  if (h < 0) {
    auto S = sandwich_set(E, f1, v);
    if (S.empty()) {
      throw IgcxError("SandwichEmpty", "regularity violated", {f1, v});
    }
    h = S[0];
  }
  int f1h = E.at(f1, h);
  int hv  = E.at(h, v);
  int a   = G.corestrict_mor(f1h, x);
  int b   = G.eval_pair(f1h, h);
  int c   = G.eval_pair(h, hv);
  int d   = G.restrict_mor(hv, y);
  if (a < 0 || b < 0 || c < 0 || d < 0) {
    throw IgcxError("NoRestriction", "sandwich composition pieces missing",
                    {x, y, h});
  }
  int out = G.g.compose(G.g.compose(a, b), G.g.compose(c, d));
  if (out < 0) {
    throw IgcxError("MalformedComposition", "sandwich composite undefined",
                    {x, y, h});
  }
  return out;
}

int p_canonical(InductiveGroupoid const& G, int theta) {
  int d = G.g.dom[theta], r = G.g.cod[theta];
  int v = G.E.rmin(d), w = G.E.lmin(r);
  return G.g.compose(G.g.compose(G.eval_pair(v, d), theta), G.eval_pair(r, w));
}

int IgCategory::object_of(InductiveGroupoid const& G, int e) const {
  int rep = left ? G.E.lmin(e) : G.E.rmin(e);
  auto it = std::lower_bound(obj_elem.begin(), obj_elem.end(), rep);
  if (it != obj_elem.end() && *it == rep) {
    return static_cast<int>(it - obj_elem.begin());
  }
  return -1;
}

int IgCategory::rebase(InductiveGroupoid const& G, int obj, int alpha) const {
  int e = obj_elem[obj];
  return left ? sandwich_compose(G, G.g.identity[e], alpha)
              : sandwich_compose(G, alpha, G.g.identity[e]);
}

int IgCategory::morphism_of(InductiveGroupoid const& G, int e, int alpha,
                            int f) const {
  int a = object_of(G, e);
  int b = object_of(G, f);
  if (a < 0 || b < 0) {
    return -1;
  }
  int th = rebase(G, a, alpha);
  // target-side validity of the triple
  if (left ? !G.E.leq_l(G.g.cod[th], obj_elem[b])
           : !G.E.leq_r(G.g.dom[th], obj_elem[b])) {
    return -1;
  }
  auto it = index.find({a, p_canonical(G, th), b});
  return it == index.end() ? -1 : it->second;
}

namespace {

IgCategory build_ig_category(InductiveGroupoid const& G, bool left) {
  IgCategory P;
  P.left = left;
  BiorderedSet const& E = G.E;
  for (int e = 0; e < E.n; ++e) {
    int rep = left ? E.lmin(e) : E.rmin(e);
    if (rep == e) {
      P.obj_elem.push_back(e);
    }
  }
  int n             = static_cast<int>(P.obj_elem.size());
  P.cat.num_objects = n;
  P.cat.identity.assign(n, -1);
  P.cat.obj_label.resize(n);
  for (int a = 0; a < n; ++a) {
    P.cat.obj_label[a] =
        (left ? "<-" : "->") + E.label(P.obj_elem[a]);
  }
  // enumerate the rebased p-canonical triples
  for (int a = 0; a < n; ++a) {
    std::vector<std::pair<int, int>> keys;  // (theta_c, raw end element)
    std::vector<char> seen(static_cast<size_t>(G.g.size()), 0);
    for (int alpha = 0; alpha < G.g.size(); ++alpha) {
      int th = P.rebase(G, a, alpha);
      int tc = p_canonical(G, th);
      if (!seen[tc]) {
        seen[tc] = 1;
        keys.emplace_back(tc, left ? G.g.cod[th] : G.g.dom[th]);
      }
    }
    std::sort(keys.begin(), keys.end());
    for (int b = 0; b < n; ++b) {
      for (auto [tc, end] : keys) {
        bool valid = left ? E.leq_l(end, P.obj_elem[b])
                          : E.leq_r(end, P.obj_elem[b]);
        if (!valid) {
          continue;
        }
        P.cat.dom.push_back(a);
        P.cat.cod.push_back(b);
        P.mor_eaf.push_back({P.obj_elem[a], tc, P.obj_elem[b]});
        int id                                   = P.cat.size() - 1;
        P.index[{a, tc, b}]                      = id;
        std::string mid                          = G.g.mor_label.empty()
                                                       ? std::to_string(tc)
                                                       : G.g.mor_label[tc];
        P.cat.mor_label.push_back((left ? "[" : "<")
                                  + E.label(P.obj_elem[a]) + "," + mid + ","
                                  + E.label(P.obj_elem[b])
                                  + (left ? ">" : "]"));
      }
    }
  }
  // identities before composition: [e, 1_e, e>
  for (int a = 0; a < n; ++a) {
    int e  = P.obj_elem[a];
    int id = P.morphism_of(G, e, G.g.identity[e], e);
    if (id < 0) {
      throw IgcxError("MalformedComposition", "identity triple missing", {a});
    }
    P.cat.identity[a] = id;
  }
  P.cat.init_tables();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      bool sub = left ? E.leq_l(P.obj_elem[a], P.obj_elem[b])
                      : E.leq_r(P.obj_elem[a], P.obj_elem[b]);
      if (sub) {
        P.cat.obj_leq[static_cast<size_t>(a) * n + b] = 1;
      }
    }
  }
  for (int m1 = 0; m1 < P.cat.size(); ++m1) {
    for (int m2 = 0; m2 < P.cat.size(); ++m2) {
      if (P.cat.cod[m1] != P.cat.dom[m2]) {
        continue;
      }
      int th = left ? sandwich_compose(G, P.mor_eaf[m1][1], P.mor_eaf[m2][1])
                    : sandwich_compose(G, P.mor_eaf[m2][1], P.mor_eaf[m1][1]);
      int id = P.morphism_of(G, P.mor_eaf[m1][0], th, P.mor_eaf[m2][2]);
      if (id < 0) {
        throw IgcxError("MalformedComposition", "triple product escaped",
                        {m1, m2});
      }
      P.cat.set_comp(m1, m2, id);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (P.cat.obj_leq[static_cast<size_t>(a) * n + b]) {
        int e = P.obj_elem[a];
        P.cat.incl[static_cast<size_t>(a) * n + b] =
            P.morphism_of(G, e, G.g.identity[e], P.obj_elem[b]);
      }
    }
  }
  P.cat.finalize();
  return P;
}

}  // namespace

IgCategory left_category(InductiveGroupoid const& G) {
  return build_ig_category(G, true);
}

IgCategory right_category(InductiveGroupoid const& G) {
  return build_ig_category(G, false);
}

Cone principal_cone(InductiveGroupoid const& G, IgCategory const& P,
                    int alpha) {
  Cone out;
  int  target = P.left ? G.g.cod[alpha] : G.g.dom[alpha];
  out.apex    = P.object_of(G, target);
  out.comp.resize(P.cat.num_objects);
  for (int a = 0; a < P.cat.num_objects; ++a) {
    int e = P.obj_elem[a];
    int m = P.morphism_of(G, e, alpha, target);
    if (m < 0) {
      throw IgcxError("MalformedComposition", "principal cone component missing",
                      {alpha, a});
    }
    out.comp[a] = m;
  }
  return out;
}

std::vector<Cone> ig_category_cones(InductiveGroupoid const& G,
                                    IgCategory const& P) {
  std::vector<Cone> out;
  for (int b = 0; b < P.cat.num_objects; ++b) {
    out.push_back(principal_cone(G, P, G.g.identity[P.obj_elem[b]]));
  }
  return out;
}

IgCrossConnection cross_connection_of(InductiveGroupoid const& G) {
  IgCrossConnection cc;
  cc.G = G;
  cc.L = left_category(cc.G);
  cc.R = right_category(cc.G);

  auto L_cones = ig_category_cones(cc.G, cc.L);
  auto R_cones = ig_category_cones(cc.G, cc.R);

  NormalDual NC = normal_dual(cc.L.cat);
  NormalDual ND = normal_dual(cc.R.cat);

  // gamma(->e) = r^e, delta(<-e) = l^e
  std::vector<int> gamma(cc.R.cat.num_objects), delta(cc.L.cat.num_objects);
  for (int d = 0; d < cc.R.cat.num_objects; ++d) {
    gamma[d] = NC.T.index_of(
        principal_cone(cc.G, cc.L, cc.G.g.identity[cc.R.obj_elem[d]]));
    if (gamma[d] < 0) {
      throw IgcxError("MalformedComposition", "r^e escaped the cone semigroup",
                      {d});
    }
  }
  for (int c = 0; c < cc.L.cat.num_objects; ++c) {
    delta[c] = ND.T.index_of(
        principal_cone(cc.G, cc.R, cc.G.g.identity[cc.L.obj_elem[c]]));
    if (delta[c] < 0) {
      throw IgcxError("MalformedComposition", "l^e escaped the cone semigroup",
                      {c});
    }
  }
  // morphism actions through the lambda presentation:
  // Gamma(<e,a,f]) = lambda(r^e, r^a, r^f), Delta([e,a,f>) = lambda(l^e, l^a, l^f)
  std::vector<int> gamma_mor(cc.R.cat.size()), delta_mor(cc.L.cat.size());
  for (int m = 0; m < cc.R.cat.size(); ++m) {
    auto [e, alpha, f] = cc.R.mor_eaf[m];
    int re             = gamma[cc.R.cat.dom[m]];
    int rf             = gamma[cc.R.cat.cod[m]];
    int ra = NC.T.index_of(principal_cone(cc.G, cc.L, alpha));
    if (ra < 0) {
      throw IgcxError("MalformedComposition", "r^alpha escaped", {m});
    }
    gamma_mor[m] = NC.lambda_of(re, ra, rf);
    if (gamma_mor[m] < 0) {
      throw IgcxError("MalformedComposition", "lambda(r^e, r^a, r^f) invalid",
                      {m, re, ra, rf});
    }
  }
  for (int m = 0; m < cc.L.cat.size(); ++m) {
    auto [e, alpha, f] = cc.L.mor_eaf[m];
    int le             = delta[cc.L.cat.dom[m]];
    int lf             = delta[cc.L.cat.cod[m]];
    int la = ND.T.index_of(principal_cone(cc.G, cc.R, alpha));
    if (la < 0) {
      throw IgcxError("MalformedComposition", "l^alpha escaped", {m});
    }
    delta_mor[m] = ND.lambda_of(le, la, lf);
    if (delta_mor[m] < 0) {
      throw IgcxError("MalformedComposition", "lambda(l^e, l^a, l^f) invalid",
                      {m, le, la, lf});
    }
  }

  cc.x.C         = cc.L.cat;
  cc.x.D         = cc.R.cat;
  cc.x.C_cones   = std::move(L_cones);
  cc.x.D_cones   = std::move(R_cones);
  cc.x.NC        = std::move(NC);
  cc.x.ND        = std::move(ND);
  cc.x.gamma     = std::move(gamma);
  cc.x.delta     = std::move(delta);
  cc.x.gamma_mor = std::move(gamma_mor);
  cc.x.delta_mor = std::move(delta_mor);
  cc.x.derive();
  return cc;
}

CCMorphism cc_morphism_of(InductiveFunctor const& F,
                          IgCrossConnection const& src,
                          IgCrossConnection const& dst) {
  CCMorphism m;
  m.f1_obj.resize(src.L.cat.num_objects);
  for (int a = 0; a < src.L.cat.num_objects; ++a) {
    m.f1_obj[a] = dst.L.object_of(dst.G, F.obj_map[src.L.obj_elem[a]]);
  }
  m.f1_mor.resize(src.L.cat.size());
  for (int i = 0; i < src.L.cat.size(); ++i) {
    auto [e, alpha, f] = src.L.mor_eaf[i];
    m.f1_mor[i] = dst.L.morphism_of(dst.G, F.obj_map[e], F.mor_map[alpha],
                                    F.obj_map[f]);
    if (m.f1_mor[i] < 0) {
      throw IgcxError("MalformedComposition", "F1 image triple missing", {i});
    }
  }
  m.f2_obj.resize(src.R.cat.num_objects);
  for (int a = 0; a < src.R.cat.num_objects; ++a) {
    m.f2_obj[a] = dst.R.object_of(dst.G, F.obj_map[src.R.obj_elem[a]]);
  }
  m.f2_mor.resize(src.R.cat.size());
  for (int i = 0; i < src.R.cat.size(); ++i) {
    auto [e, alpha, f] = src.R.mor_eaf[i];
    m.f2_mor[i] = dst.R.morphism_of(dst.G, F.obj_map[e], F.mor_map[alpha],
                                    F.obj_map[f]);
    if (m.f2_mor[i] < 0) {
      throw IgcxError("MalformedComposition", "F2 image triple missing", {i});
    }
  }
  return m;
}

}  // namespace igcx
