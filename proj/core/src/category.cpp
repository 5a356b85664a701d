#include "igcx/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace igcx {

std::string Category::mlabel(int m) const {
  if (m >= 0 && m < static_cast<int>(mor_label.size())
      && !mor_label[m].empty()) {
    return mor_label[m];
  }
  return "m" + std::to_string(m);
}

std::string Category::olabel(int c) const {
  if (c >= 0 && c < static_cast<int>(obj_label.size())
      && !obj_label[c].empty()) {
    return obj_label[c];
  }
  return "o" + std::to_string(c);
}

void Category::finalize() {
  int M = size(), n = num_objects;
  hom.assign(static_cast<size_t>(n) * n, {});
  for (int m = 0; m < M; ++m) {
    hom[static_cast<size_t>(dom[m]) * n + cod[m]].push_back(m);
  }
  inverse.assign(M, -1);
  for (int m = 0; m < M; ++m) {
    for (int m2 : homset(cod[m], dom[m])) {
      if (compose(m, m2) == identity[dom[m]]
          && compose(m2, m) == identity[cod[m]]) {
        inverse[m] = m2;
        break;
      }
    }
  }
  incl_flag.assign(M, 0);
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      int j = inclusion(c, d);
      if (j >= 0) {
        incl_flag[j] = 1;
      }
    }
  }
  retr_flag.assign(M, 0);
  retraction_of.assign(M, -1);
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      int j = inclusion(c, d);
      if (j < 0) {
        continue;
      }
      for (int q : homset(d, c)) {
        if (compose(j, q) == identity[c]) {
          retr_flag[q] = 1;
          if (retraction_of[j] < 0) {
            retraction_of[j] = q;
          }
        }
      }
    }
  }
  // normal factorizations, tolerant of holes
  epi.assign(M, -1);
  image.assign(M, -1);
  nf.assign(M, {-1, -1, -1});
  nf_unique.assign(M, 1);
  std::vector<std::vector<int>> retr_from(n), iso_from(n);
  for (int m = 0; m < M; ++m) {
    if (retr_flag[m]) {
      retr_from[dom[m]].push_back(m);
    }
    if (inverse[m] >= 0) {
      iso_from[dom[m]].push_back(m);
    }
  }
  for (int f = 0; f < M; ++f) {
    for (int q : retr_from[dom[f]]) {
      for (int u : iso_from[cod[q]]) {
        if (!subobj(cod[u], cod[f])) {
          continue;
        }
        int j = inclusion(cod[u], cod[f]);
        if (compose3(q, u, j) != f) {
          continue;
        }
        int e = compose(q, u);
        if (epi[f] < 0) {
          epi[f]   = e;
          image[f] = cod[u];
          nf[f]    = {q, u, j};
        } else if (epi[f] != e) {
          nf_unique[f] = 0;
        }
      }
    }
  }
}

Report check_category_with_subobjects(Category const& C) {
  Report rep;
  int    M = C.size(), n = C.num_objects;
  if (static_cast<int>(C.identity.size()) != n || C.cod.size() != C.dom.size()
      || C.comp.size() != static_cast<size_t>(M) * M
      || C.obj_leq.size() != static_cast<size_t>(n) * n
      || C.incl.size() != static_cast<size_t>(n) * n) {
    rep.fail("Malformed.shape", {}, "table sizes disagree");
    return rep;
  }
  for (int c = 0; c < n; ++c) {
    int i = C.identity[c];
    if (i < 0 || i >= M || C.dom[i] != c || C.cod[i] != c) {
      rep.fail("Malformed.identity", {c}, "");
      return rep;
    }
  }
  for (int x = 0; x < M; ++x) {
    for (int y = 0; y < M; ++y) {
      int xy = C.compose(x, y);
      if ((xy >= 0) != (C.cod[x] == C.dom[y])) {
        rep.fail("Malformed.domain", {x, y}, "");
        return rep;
      }
      if (xy >= 0 && (C.dom[xy] != C.dom[x] || C.cod[xy] != C.cod[y])) {
        rep.fail("Malformed.typing", {x, y}, "");
        return rep;
      }
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    if (C.compose(C.identity[C.dom[x]], x) != x
        || C.compose(x, C.identity[C.cod[x]]) != x) {
      rep.fail("Malformed.unit", {x}, "");
    }
  }
  for (int x = 0; x < M && rep.ok(); ++x) {
    for (int y = 0; y < M && rep.ok(); ++y) {
      if (C.cod[x] != C.dom[y]) {
        continue;
      }
      for (int z = 0; z < M; ++z) {
        if (C.cod[y] == C.dom[z]
            && C.compose(C.compose(x, y), z) != C.compose(x, C.compose(y, z))) {
          rep.fail("Malformed.assoc", {x, y, z}, "");
          break;
        }
      }
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  // subobject preorder: reflexive, transitive, antisymmetric; one designated
  // inclusion per comparable pair, closed under composition
  for (int c = 0; c < n; ++c) {
    if (!C.subobj(c, c) || C.inclusion(c, c) != C.identity[c]) {
      rep.fail("subobj.reflexive", {c}, "j(c,c) must be the identity");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && C.subobj(a, b) && C.subobj(b, a)) {
        if (!rep.has_failure("subobj.antisymmetric")) {
          rep.fail("subobj.antisymmetric", {a, b}, "");
        }
      }
      if ((C.inclusion(a, b) >= 0) != C.subobj(a, b)) {
        if (!rep.has_failure("subobj.inclusion_domain")) {
          rep.fail("subobj.inclusion_domain", {a, b}, "");
        }
      }
      if (C.subobj(a, b)) {
        int j = C.inclusion(a, b);
        if (C.dom[j] != a || C.cod[j] != b) {
          if (!rep.has_failure("subobj.inclusion_typing")) {
            rep.fail("subobj.inclusion_typing", {a, b}, "");
          }
        }
      }
      for (int c = 0; c < n; ++c) {
        if (C.subobj(a, b) && C.subobj(b, c)) {
          if (!C.subobj(a, c)
              || C.compose(C.inclusion(a, b), C.inclusion(b, c))
                     != C.inclusion(a, c)) {
            if (!rep.has_failure("subobj.transitive")) {
              rep.fail("subobj.transitive", {a, b, c}, "");
            }
          }
        }
      }
    }
  }
  // every inclusion is a monomorphism
  for (int a = 0; a < n && !rep.has_failure("subobj.mono"); ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !C.subobj(a, b)) {
        continue;
      }
      int j = C.inclusion(a, b);
      for (int c = 0; c < n; ++c) {
        for (int x : C.homset(c, a)) {
          for (int y : C.homset(c, a)) {
            if (x < y && C.compose(x, j) == C.compose(y, j)) {
              rep.fail("subobj.mono", {x, y, j}, "inclusion not mono");
            }
          }
        }
      }
    }
  }
  // f = h g with f, g inclusions forces h to be an inclusion
  for (int h = 0; h < C.size(); ++h) {
    for (int b = 0; b < n; ++b) {
      if (!C.subobj(C.cod[h], b)) {
        continue;
      }
      int g  = C.inclusion(C.cod[h], b);
      int hg = C.compose(h, g);
      bool hg_incl = C.subobj(C.dom[h], b) && C.inclusion(C.dom[h], b) == hg;
      bool h_incl =
          C.subobj(C.dom[h], C.cod[h]) && C.inclusion(C.dom[h], C.cod[h]) == h;
      if (hg_incl && !h_incl) {
        if (!rep.has_failure("subobj.left_division")) {
          rep.fail("subobj.left_division", {h, g}, "");
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("category_with_subobjects");
  }
  return rep;
}

NormalFactorization normal_factorize(Category const& C, int f) {
  if (C.epi[f] < 0) {
    throw IgcxError("NoFactorization", "morphism has no normal factorization",
                    {f});
  }
  if (!C.nf_unique[f]) {
    throw IgcxError("AmbiguousEpi",
                    "distinct factorizations give different epimorphic parts",
                    {f});
  }
  return {C.nf[f][0], C.nf[f][1], C.nf[f][2]};
}

Report check_cone(Category const& C, Cone const& g) {
  Report rep;
  if (g.apex < 0 || g.apex >= C.num_objects
      || static_cast<int>(g.comp.size()) != C.num_objects) {
    rep.fail("Ncone.shape", {g.apex}, "");
    return rep;
  }
  for (int c = 0; c < C.num_objects; ++c) {
    int m = g.comp[c];
    if (m < 0 || m >= C.size() || C.dom[m] != c || C.cod[m] != g.apex) {
      rep.fail("Ncone1", {c}, "component is not a morphism c -> apex");
      return rep;
    }
  }
  for (int c = 0; c < C.num_objects; ++c) {
    for (int d = 0; d < C.num_objects; ++d) {
      if (c != d && C.subobj(c, d)
          && C.compose(C.inclusion(c, d), g.comp[d]) != g.comp[c]) {
        if (!rep.has_failure("Ncone2")) {
          rep.fail("Ncone2", {c, d}, "j(c,d) gamma(d) != gamma(c)");
        }
      }
    }
  }
  bool iso = false;
  for (int c = 0; c < C.num_objects && !iso; ++c) {
    iso = C.is_iso(g.comp[c]);
  }
  if (!iso) {
    rep.fail("Ncone3", {g.apex}, "no component is an isomorphism");
  }
  if (rep.ok()) {
    rep.pass("cone");
  }
  return rep;
}

bool is_idempotent_cone(Category const& C, Cone const& g) {
  return g.comp[g.apex] == C.identity[g.apex];
}

Cone cone_star(Category const& C, Cone const& g, int f) {
  if (C.dom[f] != g.apex) {
    throw IgcxError("NotComposable", "cone_star needs dom(f) = apex", {f});
  }
  Cone out;
  out.apex = C.cod[f];
  out.comp.resize(C.num_objects);
  for (int c = 0; c < C.num_objects; ++c) {
    out.comp[c] = C.compose(g.comp[c], f);
  }
  return out;
}

Cone compose_cone(Category const& C, Cone const& g, Cone const& s) {
  int m = s.comp[g.apex];
  int e = C.epi_of(m);
  if (e < 0) {
    throw IgcxError("NoFactorization", "cone component has no epimorphic part",
                    {m});
  }
  return cone_star(C, g, e);
}

std::vector<int> m_set(Category const& C, Cone const& g) {
  std::vector<int> out;
  for (int c = 0; c < C.num_objects; ++c) {
    if (C.is_iso(g.comp[c])) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Cone> all_cones(Category const& C) {
  int              n = C.num_objects;
  std::vector<int> maximal;
  for (int c = 0; c < n; ++c) {
    bool is_max = true;
    for (int d = 0; d < n && is_max; ++d) {
      is_max = d == c || !C.subobj(c, d);
    }
    if (is_max) {
      maximal.push_back(c);
    }
  }
  // covering maximal object for each object
  std::vector<int> cover(n, -1);
  for (int c = 0; c < n; ++c) {
    for (int m : maximal) {
      if (C.subobj(c, m)) {
        cover[c] = m;
        break;
      }
    }
  }
  std::set<Cone> out;
  for (int apex = 0; apex < n; ++apex) {
    std::vector<std::vector<int> const*> choices;
    size_t                               total = 1;
    for (int m : maximal) {
      choices.push_back(&C.homset(m, apex));
      total *= std::max<size_t>(1, choices.back()->size());
      if (total > 2000000) {
        throw IgcxError("ClosureBoundExceeded", "cone search space too large",
                        {apex});
      }
    }
    std::vector<size_t> idx(maximal.size(), 0);
    bool                more = true;
    for (auto const* ch : choices) {
      if (ch->empty()) {
        more = false;  // no cone can reach this apex from some maximal object
      }
    }
    while (more) {
      Cone g;
      g.apex = apex;
      g.comp.assign(n, -1);
      for (size_t k = 0; k < maximal.size(); ++k) {
        g.comp[maximal[k]] = (*choices[k])[idx[k]];
      }
      for (int c = 0; c < n; ++c) {
        if (g.comp[c] < 0) {
          g.comp[c] = C.compose(C.inclusion(c, cover[c]), g.comp[cover[c]]);
        }
      }
      if (check_cone(C, g).ok()) {
        out.insert(g);
      }
      // next tuple
      size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k]->size()) {
        idx[k++] = 0;
      }
      more = k < idx.size();
    }
  }
  return {out.begin(), out.end()};
}

int ConeSemigroup::index_of(Cone const& g) const {
  auto it = std::lower_bound(cones.begin(), cones.end(), g);
  if (it != cones.end() && *it == g) {
    return static_cast<int>(it - cones.begin());
  }
  return -1;
}

ConeSemigroup cone_semigroup(Category const& C, std::vector<Cone> seeds,
                             size_t bound) {
  std::set<Cone> closed(seeds.begin(), seeds.end());
  std::vector<Cone> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (auto const& a : frontier) {
      for (auto const& b : closed) {
        for (Cone const& p : {compose_cone(C, a, b), compose_cone(C, b, a)}) {
          if (!closed.count(p)) {
            next.push_back(p);
          }
        }
      }
    }
    for (auto& p : next) {
      closed.insert(p);
    }
    if (closed.size() > bound) {
      throw IgcxError("ClosureBoundExceeded", "cone closure exceeds bound",
                      {static_cast<int>(bound)});
    }
    frontier = std::move(next);
  }
  ConeSemigroup T;
  T.cones.assign(closed.begin(), closed.end());
  int m = static_cast<int>(T.cones.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int k = T.index_of(compose_cone(C, T.cones[i], T.cones[j]));
      if (k < 0) {
        throw IgcxError("ClosureBoundExceeded", "cone set not closed", {i, j});
      }
      table[static_cast<size_t>(i) * m + j] = k;
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = "cone" + std::to_string(i) + "@" + C.olabel(T.cones[i].apex);
  }
  T.sg = load_cayley(m, table, "T(C)", false, std::move(labels));
  return T;
}

ConeSemigroup all_cone_semigroup(Category const& C) {
  return cone_semigroup(C, all_cones(C));
}

HFunctor h_functor(Category const& C, ConeSemigroup const& T, int cone_id) {
  HFunctor H;
  H.cone = cone_id;
  Cone const& g    = T.cones[cone_id];
  int         apex = g.apex;

  auto star_epi = [&](int f) {
    return T.index_of(cone_star(C, g, C.epi_of(f)));
  };

  H.sets.resize(C.num_objects);
  std::vector<std::vector<std::pair<int, int>>> reps(C.num_objects);
  for (int c = 0; c < C.num_objects; ++c) {
    for (int f : C.homset(apex, c)) {
      int k = star_epi(f);
      if (k < 0) {
        H.report.fail("H.closed", {f}, "gamma * f-epi escapes the cone set");
        return H;
      }
      reps[c].emplace_back(f, k);
      H.sets[c].push_back(k);
    }
    std::sort(H.sets[c].begin(), H.sets[c].end());
    H.sets[c].erase(std::unique(H.sets[c].begin(), H.sets[c].end()),
                    H.sets[c].end());
  }

  H.maps.assign(C.size(), {});
  for (int m = 0; m < C.size(); ++m) {
    int c = C.dom[m], d = C.cod[m];
    H.maps[m].assign(H.sets[c].size(), -1);
    for (auto [f, k] : reps[c]) {
      int fg = C.compose(f, m);
      int k2 = star_epi(fg);
      auto pos = std::lower_bound(H.sets[c].begin(), H.sets[c].end(), k)
                 - H.sets[c].begin();
      if (H.maps[m][pos] == -1) {
        H.maps[m][pos] = k2;
      } else if (H.maps[m][pos] != k2) {
        H.report.fail("H.welldefined", {m, k},
                      "H(gamma;g) depends on the representative");
      }
      if (!std::binary_search(H.sets[d].begin(), H.sets[d].end(), k2)) {
        H.report.fail("H.typing", {m, k2}, "");
      }
    }
  }

  // representability isomorphism via a chosen member of the M-set; any other
  // choice must give the same tables (ambiguity is reported, not patched)
  std::vector<int> ms = m_set(C, g);
  if (ms.empty()) {
    H.report.fail("H.mset", {cone_id}, "cone has empty M-set");
    return H;
  }
  auto eta_at = [&](int c0, int c, int kid) {
    int g0inv = C.inverse[g.comp[c0]];
    int kc0   = T.cones[kid].comp[c0];
    int kap   = T.cones[kid].apex;
    if (!C.subobj(kap, c)) {
      return -1;
    }
    return C.compose3(g0inv, kc0, C.inclusion(kap, c));
  };
  H.eta.resize(C.num_objects);
  for (int c = 0; c < C.num_objects; ++c) {
    H.eta[c].resize(H.sets[c].size());
    for (size_t i = 0; i < H.sets[c].size(); ++i) {
      int v = eta_at(ms[0], c, H.sets[c][i]);
      for (size_t a = 1; a < ms.size(); ++a) {
        if (eta_at(ms[a], c, H.sets[c][i]) != v) {
          H.report.fail("H.eta_ambiguous", {c, H.sets[c][i]},
                        "eta differs across M-set choices");
        }
      }
      if (v < 0 || C.dom[v] != apex || C.cod[v] != c) {
        H.report.fail("H.eta_typing", {c, H.sets[c][i]}, "");
        return H;
      }
      H.eta[c][i] = v;
    }
    // bijectivity onto the hom-set of the apex
    std::vector<int> img = H.eta[c];
    std::sort(img.begin(), img.end());
    std::vector<int> homs = C.homset(apex, c);
    std::sort(homs.begin(), homs.end());
    if (img != homs
        || std::adjacent_find(img.begin(), img.end()) != img.end()) {
      H.report.fail("H.eta_bijective", {c}, "");
    }
  }
  // naturality of eta
  for (int m = 0; m < C.size() && H.report.ok(); ++m) {
    int c = C.dom[m];
    for (size_t i = 0; i < H.sets[c].size(); ++i) {
      int k2  = H.maps[m][i];
      auto j2 = std::lower_bound(H.sets[C.cod[m]].begin(),
                                 H.sets[C.cod[m]].end(), k2)
                - H.sets[C.cod[m]].begin();
      if (H.eta[C.cod[m]][static_cast<size_t>(j2)]
          != C.compose(H.eta[c][i], m)) {
        H.report.fail("H.eta_natural", {m, static_cast<int>(i)}, "");
        break;
      }
    }
  }
  if (H.report.ok()) {
    H.report.pass("h_functor");
  }
  return H;
}

Report check_normal_category(Category const& C,
                             std::vector<Cone> const* supplied) {
  Report rep = check_category_with_subobjects(C);
  if (!rep.ok()) {
    return rep;
  }
  for (int f = 0; f < C.size(); ++f) {
    if (C.epi[f] < 0) {
      if (!rep.has_failure("NC1")) {
        rep.fail("NC1", {f}, "no normal factorization");
      }
    } else if (!C.nf_unique[f]) {
      if (!rep.has_failure("NC1.unique_epi")) {
        rep.fail("NC1.unique_epi", {f}, "epimorphic part not unique");
      }
    }
  }
  for (int c = 0; c < C.num_objects; ++c) {
    for (int d = 0; d < C.num_objects; ++d) {
      if (C.subobj(c, d) && C.retraction_of[C.inclusion(c, d)] < 0) {
        if (!rep.has_failure("NC2")) {
          rep.fail("NC2", {c, d}, "inclusion does not split");
        }
      }
    }
  }
  std::vector<char> covered(C.num_objects, 0);
  if (supplied != nullptr) {
    for (auto const& g : *supplied) {
      Report cr = check_cone(C, g);
      if (!cr.ok()) {
        rep.merge(cr, "NC3.supplied.");
      } else if (is_idempotent_cone(C, g)) {
        covered[g.apex] = 1;
      }
    }
  }
  bool all = true;
  for (int c = 0; c < C.num_objects; ++c) {
    all = all && covered[c];
  }
  if (!all) {
    try {
      for (auto const& g : all_cones(C)) {
        if (is_idempotent_cone(C, g)) {
          covered[g.apex] = 1;
        }
      }
    } catch (IgcxError const& e) {
      rep.fail("NC3.search", e.witness(), e.what());
    }
    for (int c = 0; c < C.num_objects; ++c) {
      if (!covered[c] && !rep.has_failure("NC3")) {
        rep.fail("NC3", {c}, "no idempotent cone with this apex");
      }
    }
  }
  if (rep.ok()) {
    rep.pass("NC1-NC3");
  }
  return rep;
}

namespace {

int canonical_rep(FiniteSemigroup const& S, int e, bool left) {
  int best = -1;
  for (int f : S.idempotents) {
    if ((left ? S.green_l(e, f) : S.green_r(e, f))) {
      best = best < 0 ? f : std::min(best, f);
    }
  }
  return best;
}

}  // namespace

int PrincipalCategory::object_of(FiniteSemigroup const& S, int e) const {
  int rep = canonical_rep(S, e, left);
  for (size_t i = 0; i < obj_e.size(); ++i) {
    if (obj_e[i] == rep) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

int PrincipalCategory::morphism_of(FiniteSemigroup const& S, int e, int u,
                                   int f) const {
  if (e < 0 || u < 0 || f < 0 || !S.is_idempotent(e) || !S.is_idempotent(f)) {
    return -1;
  }
  bool valid = left ? (S.at(e, u) == u && S.at(u, f) == u)
                    : (S.at(f, u) == u && S.at(u, e) == u);
  if (!valid) {
    return -1;
  }
  int eh = canonical_rep(S, e, left);
  int fh = canonical_rep(S, f, left);
  int uc = left ? S.at(eh, u) : S.at(u, eh);
  for (size_t m = 0; m < mor_euf.size(); ++m) {
    if (mor_euf[m] == std::array<int, 3>{eh, uc, fh}) {
      return static_cast<int>(m);
    }
  }
  return -1;
}

namespace {

PrincipalCategory build_principal(FiniteSemigroup const& S, bool left) {
  PrincipalCategory P;
  P.left = left;
  std::vector<int> reps;
  for (int e : S.idempotents) {
    int r = canonical_rep(S, e, left);
    if (r == e) {
      reps.push_back(e);
    }
  }
  std::sort(reps.begin(), reps.end());
  P.obj_e = reps;
  int n   = static_cast<int>(reps.size());

  Category& C  = P.cat;
  C.num_objects = n;
  C.identity.assign(n, -1);
  C.obj_label.resize(n);
  for (int i = 0; i < n; ++i) {
    C.obj_label[i] =
        left ? "S" + S.label(reps[i]) : S.label(reps[i]) + "S";
  }
  // morphisms: u in eSf (left) or fSe (right), canonical base pair
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int e = reps[a], f = reps[b];
      for (int u = 0; u < S.n; ++u) {
        bool in = left ? (S.at(e, u) == u && S.at(u, f) == u)
                       : (S.at(f, u) == u && S.at(u, e) == u);
        if (!in) {
          continue;
        }
        C.dom.push_back(a);
        C.cod.push_back(b);
        P.mor_euf.push_back({e, u, f});
        C.mor_label.push_back((left ? "rho(" : "lam(") + S.label(e) + ","
                              + S.label(u) + "," + S.label(f) + ")");
        if (u == e && a == b) {
          C.identity[a] = static_cast<int>(C.dom.size()) - 1;
        }
      }
    }
  }
  C.init_tables();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int e = reps[a], f = reps[b];
      bool sub = left ? S.at(e, f) == e : S.at(f, e) == e;
      if (sub) {
        C.obj_leq[static_cast<size_t>(a) * n + b] = 1;
      }
    }
  }
  // composition and inclusions through the canonical triples
  for (int m1 = 0; m1 < C.size(); ++m1) {
    for (int m2 = 0; m2 < C.size(); ++m2) {
      if (C.cod[m1] != C.dom[m2]) {
        continue;
      }
      auto [e1, u1, f1] = P.mor_euf[m1];
      auto [e2, u2, f2] = P.mor_euf[m2];
      int w  = left ? S.at(u1, u2) : S.at(u2, u1);
      int id = P.morphism_of(S, e1, w, f2);
      if (id < 0) {
        throw IgcxError("MalformedComposition",
                        "principal category product escaped", {m1, m2});
      }
      C.set_comp(m1, m2, id);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (C.obj_leq[static_cast<size_t>(a) * n + b]) {
        int j = P.morphism_of(S, reps[a], reps[a], reps[b]);
        C.incl[static_cast<size_t>(a) * n + b] = j;
      }
    }
  }
  C.finalize();
  return P;
}

}  // namespace

PrincipalCategory principal_left_category(FiniteSemigroup const& S) {
  if (!S.regular) {
    throw IgcxError("NotRegular", "principal categories need regularity");
  }
  return build_principal(S, true);
}

PrincipalCategory principal_right_category(FiniteSemigroup const& S) {
  if (!S.regular) {
    throw IgcxError("NotRegular", "principal categories need regularity");
  }
  return build_principal(S, false);
}

std::vector<Cone> principal_category_cones(FiniteSemigroup const& S,
                                           PrincipalCategory const& P) {
  std::vector<Cone> out;
  int               n = P.cat.num_objects;
  for (int b = 0; b < n; ++b) {
    int  e = P.obj_e[b];
    Cone g;
    g.apex = b;
    g.comp.resize(n);
    for (int a = 0; a < n; ++a) {
      int x = P.obj_e[a];
      int u = P.left ? S.at(x, e) : S.at(e, x);
      g.comp[a] = P.morphism_of(S, x, u, e);
    }
    out.push_back(std::move(g));
  }
  return out;
}

int NormalDual::object_of(int cone_id) const {
  if (!T.sg.is_idempotent(cone_id)) {
    return -1;
  }
  return R.object_of(T.sg, cone_id);
}

int NormalDual::lambda_of(int eps, int theta, int eps2) const {
  return R.morphism_of(T.sg, eps, theta, eps2);
}

NormalDual normal_dual(Category const& C) {
  NormalDual N;
  N.T = all_cone_semigroup(C);
  if (!N.T.sg.regular) {
    throw IgcxError("NotRegular", "semigroup of cones is not regular");
  }
  N.R    = principal_right_category(N.T.sg);
  N.idem = N.T.sg.idempotents;
  return N;
}

Report check_functor(CatFunctor const& F) {
  Report      rep;
  auto const& A = *F.src;
  auto const& B = *F.dst;
  if (static_cast<int>(F.obj_map.size()) != A.num_objects
      || static_cast<int>(F.mor_map.size()) != A.size()) {
    rep.fail("functor.total", {}, "");
    return rep;
  }
  for (int m = 0; m < A.size(); ++m) {
    int fm = F.mor_map[m];
    if (fm < 0 || fm >= B.size() || B.dom[fm] != F.obj_map[A.dom[m]]
        || B.cod[fm] != F.obj_map[A.cod[m]]) {
      rep.fail("functor.typing", {m}, "");
      return rep;
    }
  }
  for (int c = 0; c < A.num_objects; ++c) {
    if (F.mor_map[A.identity[c]] != B.identity[F.obj_map[c]]) {
      rep.fail("functor.identity", {c}, "");
      break;
    }
  }
  for (int x = 0; x < A.size(); ++x) {
    for (int y = 0; y < A.size(); ++y) {
      int xy = A.compose(x, y);
      if (xy >= 0 && F.mor_map[xy] != B.compose(F.mor_map[x], F.mor_map[y])) {
        if (!rep.has_failure("functor.compose")) {
          rep.fail("functor.compose", {x, y}, "");
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("functor");
  }
  return rep;
}

Report is_local_isomorphism(CatFunctor const& F) {
  Report rep = check_functor(F);
  if (!rep.ok()) {
    return rep;
  }
  auto const& A = *F.src;
  auto const& B = *F.dst;
  for (int c = 0; c < A.num_objects; ++c) {
    for (int d = 0; d < A.num_objects; ++d) {
      if (!A.subobj(c, d)) {
        continue;
      }
      if (!B.subobj(F.obj_map[c], F.obj_map[d])
          || F.mor_map[A.inclusion(c, d)]
                 != B.inclusion(F.obj_map[c], F.obj_map[d])) {
        if (!rep.has_failure("local_iso.inclusions")) {
          rep.fail("local_iso.inclusions", {c, d}, "");
        }
      }
    }
  }
  for (int c = 0; c < A.num_objects; ++c) {
    for (int d = 0; d < A.num_objects; ++d) {
      auto const&      ha = A.homset(c, d);
      std::vector<int> img;
      for (int m : ha) {
        img.push_back(F.mor_map[m]);
      }
      std::sort(img.begin(), img.end());
      if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
        if (!rep.has_failure("local_iso.faithful")) {
          rep.fail("local_iso.faithful", {c, d}, "");
        }
      }
      std::vector<int> hb = B.homset(F.obj_map[c], F.obj_map[d]);
      std::sort(hb.begin(), hb.end());
      if (img != hb) {
        if (!rep.has_failure("local_iso.full")) {
          rep.fail("local_iso.full", {c, d}, "");
        }
      }
    }
  }
  // ideal restrictions are isomorphisms onto the image ideals
  for (int c = 0; c < A.num_objects; ++c) {
    std::vector<int> ideal, image_ideal;
    for (int d = 0; d < A.num_objects; ++d) {
      if (A.subobj(d, c)) {
        ideal.push_back(d);
      }
    }
    for (int d2 = 0; d2 < B.num_objects; ++d2) {
      if (B.subobj(d2, F.obj_map[c])) {
        image_ideal.push_back(d2);
      }
    }
    std::vector<int> img;
    for (int d : ideal) {
      img.push_back(F.obj_map[d]);
    }
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()
        || img != image_ideal) {
      if (!rep.has_failure("local_iso.ideal")) {
        rep.fail("local_iso.ideal", {c}, "<c> not isomorphic onto <F(c)>");
      }
      continue;
    }
    for (int d1 : ideal) {
      for (int d2 : ideal) {
        if (A.subobj(d1, d2) != B.subobj(F.obj_map[d1], F.obj_map[d2])) {
          if (!rep.has_failure("local_iso.ideal_order")) {
            rep.fail("local_iso.ideal_order", {c, d1, d2}, "");
          }
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("local_isomorphism");
  }
  return rep;
}

namespace {

bool verify_isomorphism(CatFunctor const& F) {
  auto const& A = *F.src;
  auto const& B = *F.dst;
  if (A.num_objects != B.num_objects || A.size() != B.size()) {
    return false;
  }
  std::vector<int> oseen(B.num_objects, 0), mseen(B.size(), 0);
  for (int v : F.obj_map) {
    if (v < 0 || v >= B.num_objects || oseen[v]++) {
      return false;
    }
  }
  for (int v : F.mor_map) {
    if (v < 0 || v >= B.size() || mseen[v]++) {
      return false;
    }
  }
  if (!check_functor(F).ok()) {
    return false;
  }
  for (int c = 0; c < A.num_objects; ++c) {
    for (int d = 0; d < A.num_objects; ++d) {
      if (A.subobj(c, d) != B.subobj(F.obj_map[c], F.obj_map[d])) {
        return false;
      }
      if (A.subobj(c, d)
          && F.mor_map[A.inclusion(c, d)]
                 != B.inclusion(F.obj_map[c], F.obj_map[d])) {
        return false;
      }
    }
  }
  return true;
}

struct IsoSearch {
  Category const& A;
  Category const& B;
  std::vector<int> omap, mmap, oused, mused;

  bool objects_ok(int c, int d) const {
    // cheap invariants before committing c -> d
    for (int c2 = 0; c2 < A.num_objects; ++c2) {
      if (omap[c2] < 0) {
        continue;
      }
      if (A.subobj(c, c2) != B.subobj(d, omap[c2])
          || A.subobj(c2, c) != B.subobj(omap[c2], d)
          || A.homset(c, c2).size() != B.homset(d, omap[c2]).size()
          || A.homset(c2, c).size() != B.homset(omap[c2], d).size()) {
        return false;
      }
    }
    return A.homset(c, c).size() == B.homset(d, d).size();
  }

  bool assign_morphisms(size_t mi) {
    if (mi == static_cast<size_t>(A.size())) {
      CatFunctor F{&A, &B, omap, mmap};
      return verify_isomorphism(F);
    }
    int m = static_cast<int>(mi);
    if (mmap[m] >= 0) {
      return assign_morphisms(mi + 1);
    }
    for (int m2 : B.homset(omap[A.dom[m]], omap[A.cod[m]])) {
      if (mused[m2]) {
        continue;
      }
      bool ok = A.is_iso(m) == B.is_iso(m2)
                && (A.incl_flag[m] != 0) == (B.incl_flag[m2] != 0);
      // partial composition consistency
      for (int x = 0; x < A.size() && ok; ++x) {
        if (mmap[x] < 0) {
          continue;
        }
        int xm = A.compose(x, m);
        if (xm >= 0 && mmap[xm] >= 0
            && B.compose(mmap[x], m2) != mmap[xm]) {
          ok = false;
        }
        int mx = A.compose(m, x);
        if (mx >= 0 && mmap[mx] >= 0
            && B.compose(m2, mmap[x]) != mmap[mx]) {
          ok = false;
        }
      }
      if (!ok) {
        continue;
      }
      mmap[m]   = m2;
      mused[m2] = 1;
      if (assign_morphisms(mi + 1)) {
        return true;
      }
      mmap[m]   = -1;
      mused[m2] = 0;
    }
    return false;
  }

  bool assign_objects(int c) {
    if (c == A.num_objects) {
      for (int e = 0; e < A.num_objects; ++e) {
        mmap[A.identity[e]]        = B.identity[omap[e]];
        mused[B.identity[omap[e]]] = 1;
      }
      if (assign_morphisms(0)) {
        return true;
      }
      std::fill(mmap.begin(), mmap.end(), -1);
      std::fill(mused.begin(), mused.end(), 0);
      return false;
    }
    for (int d = 0; d < B.num_objects; ++d) {
      if (oused[d] || !objects_ok(c, d)) {
        continue;
      }
      omap[c]  = d;
      oused[d] = 1;
      if (assign_objects(c + 1)) {
        return true;
      }
      omap[c]  = -1;
      oused[d] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<CatFunctor> find_isomorphism(Category const& A,
                                           Category const& B,
                                           CatFunctor const* candidate) {
  if (candidate != nullptr && verify_isomorphism(*candidate)) {
    return *candidate;
  }
  if (A.num_objects != B.num_objects || A.size() != B.size()) {
    return std::nullopt;
  }
  IsoSearch s{A,
              B,
              std::vector<int>(A.num_objects, -1),
              std::vector<int>(A.size(), -1),
              std::vector<int>(B.num_objects, 0),
              std::vector<int>(B.size(), 0)};
  if (s.assign_objects(0)) {
    CatFunctor F{&A, &B, s.omap, s.mmap};
    return F;
  }
  return std::nullopt;
}

}  // namespace igcx
