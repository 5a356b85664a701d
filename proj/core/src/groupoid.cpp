#include "igcx/groupoid.hpp"

namespace igcx {

int Groupoid::restrict_search(int e, int x) const {
  int found = -1;
  for (int y = 0; y < size(); ++y) {
    if (dom[y] == e && mor_leq(y, x)) {
      if (found >= 0) {
        return -2;  // not unique
      }
      found = y;
    }
  }
  return found;
}

int Groupoid::corestrict_search(int f, int x) const {
  int found = -1;
  for (int y = 0; y < size(); ++y) {
    if (cod[y] == f && mor_leq(y, x)) {
      if (found >= 0) {
        return -2;
      }
      found = y;
    }
  }
  return found;
}

Report check_groupoid_tables(Groupoid const& g) {
  Report rep;
  int    M = g.size();
  if (static_cast<int>(g.identity.size()) != g.num_objects
      || g.cod.size() != g.dom.size() || g.inv.size() != g.dom.size()
      || g.comp.size() != static_cast<size_t>(M) * M
      || g.leq.size() != static_cast<size_t>(M) * M) {
    rep.fail("MalformedComposition.shape", {}, "table sizes disagree");
    return rep;
  }
  for (int e = 0; e < g.num_objects; ++e) {
    int i = g.identity[e];
    if (i < 0 || i >= M || g.dom[i] != e || g.cod[i] != e) {
      rep.fail("MalformedComposition.identity", {e}, "identity typing");
      return rep;
    }
  }
  for (int x = 0; x < M; ++x) {
    for (int y = 0; y < M; ++y) {
      int xy = g.compose(x, y);
      if ((xy >= 0) != (g.cod[x] == g.dom[y])) {
        rep.fail("MalformedComposition.domain", {x, y},
                 "composite defined iff cod(x) = dom(y)");
        return rep;
      }
      if (xy >= 0 && (g.dom[xy] != g.dom[x] || g.cod[xy] != g.cod[y])) {
        rep.fail("MalformedComposition.typing", {x, y}, "");
        return rep;
      }
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    if (g.compose(g.identity[g.dom[x]], x) != x
        || g.compose(x, g.identity[g.cod[x]]) != x) {
      rep.fail("MalformedComposition.unit", {x}, "");
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    for (int y = 0; y < M && rep.ok(); ++y) {
      if (g.cod[x] != g.dom[y]) {
        continue;
      }
      for (int z = 0; z < M; ++z) {
        if (g.cod[y] != g.dom[z]) {
          continue;
        }
        if (g.compose(g.compose(x, y), z) != g.compose(x, g.compose(y, z))) {
          rep.fail("MalformedComposition.assoc", {x, y, z}, "");
          break;
        }
      }
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    int xi = g.inv[x];
    if (xi < 0 || xi >= M || g.dom[xi] != g.cod[x] || g.cod[xi] != g.dom[x]
        || g.compose(x, xi) != g.identity[g.dom[x]]
        || g.compose(xi, x) != g.identity[g.cod[x]] || g.inv[xi] != x) {
      rep.fail("MalformedComposition.inverse", {x}, "");
    }
  }
  // order must be a partial order
  for (int x = 0; x < M && rep.ok(); ++x) {
    if (!g.mor_leq(x, x)) {
      rep.fail("MalformedOrder.reflexive", {x}, "");
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    for (int y = 0; y < M; ++y) {
      if (x != y && g.mor_leq(x, y) && g.mor_leq(y, x)) {
        rep.fail("MalformedOrder.antisymmetric", {x, y}, "");
        break;
      }
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    for (int y = 0; y < M; ++y) {
      if (!g.mor_leq(x, y)) {
        continue;
      }
      for (int z = 0; z < M; ++z) {
        if (g.mor_leq(y, z) && !g.mor_leq(x, z)) {
          rep.fail("MalformedOrder.transitive", {x, y, z}, "");
          break;
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("groupoid.tables");
  }
  return rep;
}

Report check_ordered_groupoid(Groupoid const& g) {
  Report rep = check_groupoid_tables(g);
  // inverse-law and order-law defects leave the composition tables usable, so
  // the OG scan still runs and names the axiom they break (OG2 for a corrupted
  // inverse table); anything else is fatal
  for (auto const& it : rep.items) {
    if (!it.pass && it.check != "MalformedComposition.inverse"
        && it.check.rfind("MalformedOrder.", 0) != 0) {
      return rep;
    }
  }
  int M = g.size();

  std::vector<std::pair<int, int>> below;  // (u, x) with u <= x
  for (int u = 0; u < M; ++u) {
    for (int x = 0; x < M; ++x) {
      if (g.mor_leq(u, x)) {
        below.emplace_back(u, x);
      }
    }
  }

  for (auto [u, x] : below) {
    for (auto [v, y] : below) {
      if (g.cod[u] == g.dom[v] && g.cod[x] == g.dom[y]
          && !g.mor_leq(g.compose(u, v), g.compose(x, y))) {
        if (!rep.has_failure("OG1")) {
          rep.fail("OG1", {u, x, v, y}, "uv !<= xy");
        }
      }
    }
  }
  for (auto [u, x] : below) {
    if (!g.mor_leq(g.inv[u], g.inv[x])) {
      if (!rep.has_failure("OG2")) {
        rep.fail("OG2", {u, x}, "inverse not monotone");
      }
    }
  }
  for (int x = 0; x < M; ++x) {
    for (int e = 0; e < g.num_objects; ++e) {
      if (g.obj_leq(e, g.dom[x])) {
        int r = g.restrict_search(e, x);
        if (r == -1 && !rep.has_failure("OG3.exists")) {
          rep.fail("OG3.exists", {e, x}, "no restriction");
        } else if (r == -2 && !rep.has_failure("OG3.unique")) {
          rep.fail("OG3.unique", {e, x}, "restriction not unique");
        }
      }
      if (g.obj_leq(e, g.cod[x])) {
        int r = g.corestrict_search(e, x);
        if (r == -1 && !rep.has_failure("OG3*.exists")) {
          rep.fail("OG3*.exists", {e, x}, "no corestriction");
        } else if (r == -2 && !rep.has_failure("OG3*.unique")) {
          rep.fail("OG3*.unique", {e, x}, "corestriction not unique");
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("OG1-OG3*");
  }
  return rep;
}

void InductiveGroupoid::finalize() {
  int M = g.size(), n = E.n;
  restr.assign(static_cast<size_t>(M) * n, -1);
  corestr.assign(static_cast<size_t>(M) * n, -1);
  for (int x = 0; x < M; ++x) {
    for (int e = 0; e < n; ++e) {
      if (g.obj_leq(e, g.dom[x])) {
        int r = g.restrict_search(e, x);
        restr[static_cast<size_t>(x) * n + e] = r >= 0 ? r : -1;
      }
      if (g.obj_leq(e, g.cod[x])) {
        int r = g.corestrict_search(e, x);
        corestr[static_cast<size_t>(x) * n + e] = r >= 0 ? r : -1;
      }
    }
  }
}

int InductiveGroupoid::eval_chain(EChain const& c) const {
  int m = g.identity[c.dom()];
  for (size_t i = 1; i < c.seq.size(); ++i) {
    int step = eval_pair(c.seq[i - 1], c.seq[i]);
    if (step < 0 || m < 0) {
      return -1;
    }
    m = g.compose(m, step);
  }
  return m;
}

namespace {

// IG1 in one of its four mechanically generated variants: mirror chooses the
// R-form (printed) or the L-form, inverted applies the statement to x^-1.
void check_ig1_variant(InductiveGroupoid const& ig, bool mirror, bool inverted,
                       Report& rep, std::string const& name) {
  auto const&         g = ig.g;
  BiorderedSet const& E = ig.E;
  for (int x0 = 0; x0 < g.size(); ++x0) {
    int x = inverted ? g.inv[x0] : x0;
    int D = g.dom[x];
    for (int e1 = 0; e1 < E.n; ++e1) {
      if (!E.leq(e1, D)) {
        continue;
      }
      for (int e2 = 0; e2 < E.n; ++e2) {
        if (!E.leq(e2, D) || e1 == e2) {
          continue;
        }
        bool hyp = mirror ? E.leq_l(e1, e2) : E.leq_r(e1, e2);
        if (!hyp) {
          continue;
        }
        int r1 = ig.restrict_mor(e1, x), r2 = ig.restrict_mor(e2, x);
        if (r1 < 0 || r2 < 0) {
          continue;  // reported by the OG3 scan
        }
        int f1 = g.cod[r1], f2 = g.cod[r2];
        bool concl = mirror ? E.leq_l(f1, f2) : E.leq_r(f1, f2);
        if (!concl) {
          if (!rep.has_failure(name + ".order")) {
            rep.fail(name + ".order", {x, e1, e2, f1, f2},
                     "f1 not below f2 on the required side");
          }
          continue;
        }
        int p = mirror ? E.at(e2, e1) : E.at(e1, e2);
        int q = mirror ? E.at(f2, f1) : E.at(f1, f2);
        if (p < 0 || q < 0) {
          rep.fail(name + ".product", {x, e1, e2}, "basic product missing");
          continue;
        }
        int rp  = ig.restrict_mor(p, x);
        int lhs = rp < 0 ? -1 : g.compose(ig.eval_pair(e1, p), rp);
        int rhs = g.compose(r1, ig.eval_pair(f1, q));
        if (lhs < 0 || rhs < 0 || lhs != rhs) {
          if (!rep.has_failure(name)) {
            rep.fail(name, {x, e1, e2}, "evaluation square of IG1 fails");
          }
        }
      }
    }
  }
}

}  // namespace

Report check_inductive(InductiveGroupoid const& ig) {
  Report rep = check_ordered_groupoid(ig.g);
  if (!rep.ok()) {
    return rep;
  }
  auto const&         g = ig.g;
  BiorderedSet const& E = ig.E;

  if (g.num_objects != E.n) {
    rep.fail("viso.objects", {g.num_objects, E.n},
             "object set must be the biordered set");
    return rep;
  }
  if (!is_regular(E)) {
    rep.fail("viso.regular", {}, "biordered set is not regular");
    return rep;
  }
  // object order of the groupoid = natural partial order of E
  for (int e = 0; e < E.n && rep.ok(); ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (g.obj_leq(e, f) != E.leq(e, f)) {
        rep.fail("viso.order", {e, f}, "object order disagrees with E");
        break;
      }
    }
  }
  // eval total and well-typed on basic pairs
  for (int e = 0; e < E.n && rep.ok(); ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (e == f || !E.adjacent(e, f)) {
        continue;
      }
      int m = ig.eval_pair(e, f);
      if (m < 0) {
        rep.fail("eval.total", {e, f}, "missing generator value");
        break;
      }
      if (g.dom[m] != e || g.cod[m] != f) {
        rep.fail("eval.typing", {e, f, m}, "");
        break;
      }
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  // well-definedness on chains: same-relation triples collapse
  for (int x = 0; x < E.n; ++x) {
    for (int z = 0; z < E.n; ++z) {
      for (int y = 0; y < E.n; ++y) {
        bool rr = E.rel_r(x, z) && E.rel_r(z, y);
        bool ll = E.rel_l(x, z) && E.rel_l(z, y);
        if (!rr && !ll) {
          continue;
        }
        if (g.compose(ig.eval_pair(x, z), ig.eval_pair(z, y))
            != ig.eval_pair(x, y)) {
          if (!rep.has_failure("eval.chain")) {
            rep.fail("eval.chain", {x, z, y},
                     "eval not invariant under inessential reduction");
          }
        }
      }
    }
  }
  // order preservation on generators: eval of the restricted chain is the
  // restriction of the evaluated generator
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (e == f || !E.adjacent(e, f)) {
        continue;
      }
      for (int e2 = 0; e2 < E.n; ++e2) {
        if (!E.leq(e2, e)) {
          continue;
        }
        EChain rc  = restrict_chain(E, e2, EChain{{e, f}});
        int    lhs = ig.eval_chain(rc);
        int    rhs = ig.restrict_mor(e2, ig.eval_pair(e, f));
        if (lhs < 0 || rhs < 0 || lhs != rhs) {
          if (!rep.has_failure("eval.order")) {
            rep.fail("eval.order", {e, f, e2},
                     "eval does not commute with restriction");
          }
        }
      }
    }
  }

  check_ig1_variant(ig, false, false, rep, "IG1.r");
  check_ig1_variant(ig, true, false, rep, "IG1.l");
  check_ig1_variant(ig, false, true, rep, "IG1.r.inv");
  check_ig1_variant(ig, true, true, rep, "IG1.l.inv");

  for (auto const& sq : enumerate_e_squares(E)) {
    if (!sq.singular()) {
      continue;
    }
    auto [e, f, gg, h] = sq.entries;
    int lhs = g.compose(ig.eval_pair(e, f), ig.eval_pair(f, h));
    int rhs = g.compose(ig.eval_pair(e, gg), ig.eval_pair(gg, h));
    if (lhs < 0 || rhs < 0 || lhs != rhs) {
      if (!rep.has_failure("IG2")) {
        rep.fail("IG2", {e, f, gg, h}, "singular square not eval-commutative");
      }
    }
  }

  if (rep.ok()) {
    rep.pass("IG1-IG2");
  }
  return rep;
}

Report check_inductive_functor(InductiveFunctor const& F) {
  Report rep;
  auto const& s = *F.src;
  auto const& d = *F.dst;
  if (static_cast<int>(F.obj_map.size()) != s.E.n
      || static_cast<int>(F.mor_map.size()) != s.g.size()) {
    rep.fail("functor.total", {}, "maps are not total");
    return rep;
  }
  rep.merge(check_bimorphism(s.E, d.E, F.obj_map, true), "vF.");
  for (int x = 0; x < s.g.size() && rep.ok(); ++x) {
    int fx = F.mor_map[x];
    if (fx < 0 || fx >= d.g.size() || d.g.dom[fx] != F.obj_map[s.g.dom[x]]
        || d.g.cod[fx] != F.obj_map[s.g.cod[x]]) {
      rep.fail("functor.typing", {x}, "");
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  for (int e = 0; e < s.E.n; ++e) {
    if (F.mor_map[s.g.identity[e]] != d.g.identity[F.obj_map[e]]) {
      rep.fail("functor.identity", {e}, "");
      break;
    }
  }
  for (int x = 0; x < s.g.size(); ++x) {
    for (int y = 0; y < s.g.size(); ++y) {
      int xy = s.g.compose(x, y);
      if (xy >= 0
          && F.mor_map[xy] != d.g.compose(F.mor_map[x], F.mor_map[y])) {
        if (!rep.has_failure("functor.compose")) {
          rep.fail("functor.compose", {x, y}, "");
        }
      }
    }
  }
  for (int x = 0; x < s.g.size(); ++x) {
    for (int y = 0; y < s.g.size(); ++y) {
      if (s.g.mor_leq(x, y) && !d.g.mor_leq(F.mor_map[x], F.mor_map[y])) {
        if (!rep.has_failure("functor.order")) {
          rep.fail("functor.order", {x, y}, "");
        }
      }
    }
  }
  // evaluation square on the generating chains; functoriality extends it to
  // every chain
  for (int e = 0; e < s.E.n; ++e) {
    for (int f = 0; f < s.E.n; ++f) {
      if (e == f || !s.E.adjacent(e, f)) {
        continue;
      }
      int lhs = F.mor_map[s.eval_pair(e, f)];
      int rhs = d.eval_pair(F.obj_map[e], F.obj_map[f]);
      if (lhs != rhs) {
        if (!rep.has_failure("functor.eval_square")) {
          rep.fail("functor.eval_square", {e, f},
                   "F(eval(e,f)) != eval'(vFe, vFf)");
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("inductive_functor");
  }
  return rep;
}

InductiveFunctor identity_functor(InductiveGroupoid const& ig) {
  InductiveFunctor F;
  F.src = &ig;
  F.dst = &ig;
  F.obj_map.resize(ig.E.n);
  F.mor_map.resize(ig.g.size());
  for (int e = 0; e < ig.E.n; ++e) {
    F.obj_map[e] = e;
  }
  for (int x = 0; x < ig.g.size(); ++x) {
    F.mor_map[x] = x;
  }
  return F;
}

InductiveFunctor compose_functors(InductiveFunctor const& F,
                                  InductiveFunctor const& G) {
  if (F.dst != G.src) {
    throw IgcxError("NotComposable", "functor codomain/domain mismatch");
  }
  InductiveFunctor H;
  H.src = F.src;
  H.dst = G.dst;
  H.obj_map.resize(F.obj_map.size());
  H.mor_map.resize(F.mor_map.size());
  for (size_t i = 0; i < F.obj_map.size(); ++i) {
    H.obj_map[i] = G.obj_map[F.obj_map[i]];
  }
  for (size_t i = 0; i < F.mor_map.size(); ++i) {
    H.mor_map[i] = G.mor_map[F.mor_map[i]];
  }
  return H;
}

}  // namespace igcx
