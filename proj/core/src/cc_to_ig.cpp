#include "igcx/cc_to_ig.hpp"

#include <algorithm>

#include "igcx/echain.hpp"

namespace igcx {

int CCGroupoid::morphism_of(int p1, int p2, int f) const {
  auto it = index.find({p1, p2, f});
  return it == index.end() ? -1 : it->second;
}

CCGroupoid inductive_groupoid_of(CrossConnection const& x) {
  CCGroupoid GG;
  GG.ig.E = biorder_of(x);
  int np  = static_cast<int>(x.e_gamma.size());

  Groupoid& g   = GG.ig.g;
  g.num_objects = np;
  g.identity.assign(np, -1);
  g.obj_label.resize(np);
  for (int p = 0; p < np; ++p) {
    g.obj_label[p] = GG.ig.E.label(p);
  }
  for (int p1 = 0; p1 < np; ++p1) {
    auto [c, d] = x.e_gamma[p1];
    for (int p2 = 0; p2 < np; ++p2) {
      auto [c2, d2] = x.e_gamma[p2];
      for (int f : x.C.homset(c, c2)) {
        if (!x.C.is_iso(f)) {
          continue;
        }
        // g := transpose of f^-1 relative to the pairs; exclude the pair when
        // it fails to be an isomorphism
        int gm = transpose(x, x.C.inverse[f], p2, p1);
        if (!x.D.is_iso(gm) || x.D.dom[gm] != d || x.D.cod[gm] != d2) {
          continue;
        }
        g.dom.push_back(p1);
        g.cod.push_back(p2);
        GG.pair_mor.push_back({p1, p2, f, gm});
        GG.index[{p1, p2, f}] = g.size() - 1;
        g.mor_label.push_back("(" + x.C.mlabel(f) + "," + x.D.mlabel(gm) + ")");
        if (p1 == p2 && f == x.C.identity[c]) {
          g.identity[p1] = g.size() - 1;
        }
      }
    }
  }
  for (int p = 0; p < np; ++p) {
    if (g.identity[p] < 0) {
      throw IgcxError("MalformedComposition", "identity pair missing", {p});
    }
  }
  g.inv.assign(g.size(), -1);
  g.init_tables();
  for (int m1 = 0; m1 < g.size(); ++m1) {
    auto [p1, p2, f, gm] = GG.pair_mor[m1];
    int fi               = x.C.inverse[f];
    int minv             = GG.morphism_of(p2, p1, fi);
    if (minv < 0 || GG.pair_mor[minv][3] != x.D.inverse[gm]) {
      throw IgcxError("MalformedComposition",
                      "inverse pair missing or transpose-inconsistent", {m1});
    }
    g.inv[m1] = minv;
    for (int m2 = 0; m2 < g.size(); ++m2) {
      auto [q1, q2, f2, gm2] = GG.pair_mor[m2];
      if (p2 == q1) {
        int ff = x.C.compose(f, f2);
        int id = GG.morphism_of(p1, q2, ff);
        if (id < 0 || GG.pair_mor[id][3] != x.D.compose(gm, gm2)) {
          // componentwise composition must stay transpose-consistent
          throw IgcxError("MalformedComposition",
                          "(ff', gg') is not a groupoid morphism", {m1, m2});
        }
        g.set_comp(m1, m2, id);
      }
    }
  }
  // the order <=_Gamma via epimorphic parts of inclusion precompositions
  for (int m1 = 0; m1 < g.size(); ++m1) {
    auto [p1, p2, f, gm] = GG.pair_mor[m1];
    auto [c, d]          = x.e_gamma[p1];
    auto [c2, d2]        = x.e_gamma[p2];
    for (int m2 = 0; m2 < g.size(); ++m2) {
      auto [q1, q2, f2, gm2] = GG.pair_mor[m2];
      auto [cb, db]          = x.e_gamma[q1];
      auto [cb2, db2]        = x.e_gamma[q2];
      bool below = x.C.subobj(c, cb) && x.D.subobj(d, db)
                   && x.C.subobj(c2, cb2) && x.D.subobj(d2, db2);
      if (!below) {
        continue;
      }
      int fe = x.C.epi_of(x.C.compose(x.C.inclusion(c, cb), f2));
      int ge = x.D.epi_of(x.D.compose(x.D.inclusion(d, db), gm2));
      if (fe == f && ge == gm) {
        g.set_leq(m1, m2);
      }
    }
  }
  // evaluation on basic pairs: the cone components of the target pair
  GG.ig.eval_gen.assign(static_cast<size_t>(np) * np, -1);
  for (int p1 = 0; p1 < np; ++p1) {
    for (int p2 = 0; p2 < np; ++p2) {
      if (p1 == p2 || !GG.ig.E.adjacent(p1, p2)) {
        continue;
      }
      auto [c, d]   = x.e_gamma[p1];
      int  fc       = x.NC.T.cones[x.gamma_pair[p2]].comp[c];
      int  gd       = x.ND.T.cones[x.delta_pair[p2]].comp[d];
      int  id       = GG.morphism_of(p1, p2, fc);
      if (id < 0 || GG.pair_mor[id][3] != gd) {
        throw IgcxError("MalformedComposition",
                        "eval generator is not a transpose-consistent pair",
                        {p1, p2});
      }
      GG.ig.eval_gen[static_cast<size_t>(p1) * np + p2] = id;
    }
  }
  GG.ig.finalize();
  return GG;
}

Report check_cc_groupoid_contracts(CrossConnection const& x,
                                   CCGroupoid const& GG, int chain_len_cap) {
  Report              rep;
  BiorderedSet const& E = GG.ig.E;

  // restriction identity: (f,g)(gamma'_1(c'), delta'_1(d')) =
  // (gamma_1(c), delta_1(d))(f1, g1) for all restriction instances
  for (int m = 0; m < GG.ig.g.size(); ++m) {
    auto [p1, p2, f, gm] = GG.pair_mor[m];
    auto [c, d]          = x.e_gamma[p1];
    for (int q1 = 0; q1 < static_cast<int>(x.e_gamma.size()); ++q1) {
      if (!E.leq(q1, p1)) {
        continue;
      }
      int r = GG.ig.restrict_mor(q1, m);
      if (r < 0) {
        rep.fail("restriction.exists", {q1, m}, "");
        continue;
      }
      auto [r1, r2, f1, g1] = GG.pair_mor[r];
      // f . gamma(c1',d1')(c') against gamma(c1,d1)(c) . f1, and dually
      int lhsC = x.C.compose(f, x.NC.T.cones[x.gamma_pair[r2]].comp[x.e_gamma[p2].first]);
      int rhsC = x.C.compose(x.NC.T.cones[x.gamma_pair[q1]].comp[c], f1);
      int lhsD = x.D.compose(gm, x.ND.T.cones[x.delta_pair[r2]].comp[x.e_gamma[p2].second]);
      int rhsD = x.D.compose(x.ND.T.cones[x.delta_pair[q1]].comp[d], g1);
      if (lhsC != rhsC || lhsD != rhsD) {
        if (!rep.has_failure("restriction.identity")) {
          rep.fail("restriction.identity", {m, q1}, "");
        }
      }
    }
  }

  // chain-order agreement: the conjugated cone-product path reduces to the
  // h-recursion path of the chain calculus
  ChainClosureOptions opts;
  opts.max_len = chain_len_cap;
  auto window  = chain_groupoid(E, opts);
  for (auto const& ch : window.chains) {
    for (int hk = 0; hk < E.n; ++hk) {
      if (!E.leq(hk, ch.dom())) {
        continue;
      }
      // the cone-product path (h,k), (h_1,k_1), ..., (h_n,k_n)
      std::vector<int> path{hk};
      int              gcur = x.gamma_pair[hk];
      int              dcur = x.delta_pair[hk];
      bool             ok   = true;
      for (size_t i = 0; i < ch.seq.size() && ok; ++i) {
        int gi = x.gamma_pair[ch.seq[i]];
        int di = x.delta_pair[ch.seq[i]];
        gcur   = x.NC.T.sg.at(x.NC.T.sg.at(gi, gcur), gi);
        dcur   = x.ND.T.sg.at(x.ND.T.sg.at(di, dcur), di);
        if (!x.NC.T.sg.is_idempotent(gcur) || !x.ND.T.sg.is_idempotent(dcur)) {
          rep.fail("chain_order.idempotent", {hk, static_cast<int>(i)}, "");
          ok = false;
          break;
        }
        int hi = x.pair_of(x.NC.T.cones[gcur].apex, x.ND.T.cones[dcur].apex);
        if (hi < 0 || x.gamma_pair[hi] != gcur || x.delta_pair[hi] != dcur) {
          rep.fail("chain_order.pair", {hk, static_cast<int>(i)},
                   "cone products do not land on an E_Gamma pair");
          ok = false;
          break;
        }
        path.push_back(hi);
      }
      if (ok && !(reduce_path(E, path) == restrict_chain(E, hk, ch))) {
        if (!rep.has_failure("chain_order.agree")) {
          rep.fail("chain_order.agree", {hk, ch.dom(), ch.cod()},
                   "cone-product order disagrees with the chain calculus");
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("cc_groupoid_contracts");
  }
  return rep;
}

InductiveFunctor inductive_functor_of(CCMorphism const& m,
                                      CCGroupoid const& src,
                                      CCGroupoid const& dst,
                                      CrossConnection const& x,
                                      CrossConnection const& x2) {
  InductiveFunctor F;
  F.src = &src.ig;
  F.dst = &dst.ig;
  F.obj_map.resize(x.e_gamma.size());
  for (size_t p = 0; p < x.e_gamma.size(); ++p) {
    auto [c, d]  = x.e_gamma[p];
    F.obj_map[p] = x2.pair_of(m.f1_obj[c], m.f2_obj[d]);
    if (F.obj_map[p] < 0) {
      throw IgcxError("MalformedComposition", "image pair missing",
                      {static_cast<int>(p)});
    }
  }
  F.mor_map.resize(src.ig.g.size());
  for (int i = 0; i < src.ig.g.size(); ++i) {
    auto [p1, p2, f, gm] = src.pair_mor[i];
    int id = dst.morphism_of(F.obj_map[p1], F.obj_map[p2], m.f1_mor[f]);
    if (id < 0 || dst.pair_mor[id][3] != m.f2_mor[gm]) {
      throw IgcxError("MalformedComposition",
                      "image pair morphism missing or inconsistent", {i});
    }
    F.mor_map[i] = id;
  }
  return F;
}

}  // namespace igcx
