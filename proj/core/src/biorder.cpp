#include "igcx/biorder.hpp"

#include <algorithm>

namespace igcx {

std::vector<int> BiorderedSet::lclass(int e) const {
  std::vector<int> out;
  for (int f = 0; f < n; ++f) {
    if (rel_l(e, f)) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<int> BiorderedSet::rclass(int e) const {
  std::vector<int> out;
  for (int f = 0; f < n; ++f) {
    if (rel_r(e, f)) {
      out.push_back(f);
    }
  }
  return out;
}

std::string BiorderedSet::label(int e) const {
  if (e >= 0 && e < static_cast<int>(labels.size()) && !labels[e].empty()) {
    return labels[e];
  }
  return std::to_string(e);
}

void BiorderedSet::derive_relations() {
  size_t nn = static_cast<size_t>(n) * n;
  _leq_l.assign(nn, 0);
  _leq_r.assign(nn, 0);
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      // e <=l f iff ef = e; e <=r f iff fe = e
      _leq_l[static_cast<size_t>(e) * n + f] = defined(e, f) && at(e, f) == e;
      _leq_r[static_cast<size_t>(e) * n + f] = defined(f, e) && at(f, e) == e;
    }
  }
  _lmin.assign(n, 0);
  _rmin.assign(n, 0);
  for (int e = 0; e < n; ++e) {
    int lm = e, rm = e;
    for (int f = 0; f < n; ++f) {
      if (rel_l(e, f) && f < lm) {
        lm = f;
      }
      if (rel_r(e, f) && f < rm) {
        rm = f;
      }
    }
    _lmin[e] = lm;
    _rmin[e] = rm;
  }
}

namespace {

struct Ax {
  BiorderedSet const& E;
  Report&             rep;

  // record only the first (least) witness per check name
  void fail_once(std::string const& check, std::vector<int> w,
                 std::string detail) {
    if (!rep.has_failure(check)) {
      rep.fail(check, std::move(w), std::move(detail));
    }
  }
};

void check_b1(Ax& ax) {
  auto const& E = ax.E;
  int         n = E.n;
  for (int e = 0; e < n; ++e) {
    if (!E.defined(e, e) || E.at(e, e) != e) {
      ax.fail_once("B1.reflexive", {e}, "ee != e or undefined");
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      bool comparable = E.leq_l(e, f) || E.leq_r(e, f) || E.leq_l(f, e)
                        || E.leq_r(f, e);
      if (E.defined(e, f) != comparable) {
        ax.fail_once("B1.domain", {e, f},
                     E.defined(e, f) ? "product defined off the four arrows"
                                     : "comparable pair missing from domain");
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        if (E.leq_l(e, f) && E.leq_l(f, g) && !E.leq_l(e, g)) {
          ax.fail_once("B1.transitive_l", {e, f, g}, "");
        }
        if (E.leq_r(e, f) && E.leq_r(f, g) && !E.leq_r(e, g)) {
          ax.fail_once("B1.transitive_r", {e, f, g}, "");
        }
      }
    }
  }
  // the meet of the preorders is a partial order
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (e != f && E.leq(e, f) && E.leq(f, e)) {
        ax.fail_once("B1.antisymmetric", {e, f}, "<= is not antisymmetric");
      }
    }
  }
}

void check_b2(Ax& ax) {
  auto const& E = ax.E;
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (e == f) {
        continue;
      }
      if (E.leq_l(e, f)) {
        int fe = E.defined(f, e) ? E.at(f, e) : -1;
        if (fe < 0 || !E.rel_l(e, fe) || !E.leq(fe, f)) {
          ax.fail_once("B2.l", {e, f}, "need e L fe <= f");
        }
      }
      if (E.leq_r(e, f)) {
        int ef = E.defined(e, f) ? E.at(e, f) : -1;
        if (ef < 0 || !E.rel_r(e, ef) || !E.leq(ef, f)) {
          ax.fail_once("B2.r", {e, f}, "need e R ef <= f");
        }
      }
    }
  }
}

void check_b3(Ax& ax) {
  auto const& E = ax.E;
  int         n = E.n;
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        // primal: f <=r e, g <=r e, f <=l g  =>  fe <=l ge, (gf)e = (ge)(fe)
        if (E.leq_r(f, e) && E.leq_r(g, e) && E.leq_l(f, g)) {
          int fe = E.at(f, e), ge = E.at(g, e), gf = E.at(g, f);
          if (fe < 0 || ge < 0 || gf < 0 || !E.leq_l(fe, ge)
              || !E.defined(gf, e) || !E.defined(ge, fe)
              || E.at(gf, e) != E.at(ge, fe)) {
            ax.fail_once("B3.primal", {e, f, g}, "(gf)e = (ge)(fe) fails");
          }
        }
        // dual: f <=l e, g <=l e, f <=r g  =>  ef <=r eg, e(fg) = (ef)(eg)
        if (E.leq_l(f, e) && E.leq_l(g, e) && E.leq_r(f, g)) {
          int ef = E.at(e, f), eg = E.at(e, g), fg = E.at(f, g);
          if (ef < 0 || eg < 0 || fg < 0 || !E.leq_r(ef, eg)
              || !E.defined(e, fg) || !E.defined(ef, eg)
              || E.at(e, fg) != E.at(ef, eg)) {
            ax.fail_once("B3.dual", {e, f, g}, "e(fg) = (ef)(eg) fails");
          }
        }
      }
    }
  }
}

void check_b4(Ax& ax) {
  auto const& E = ax.E;
  int         n = E.n;
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        // primal: e <=l f <=l g  =>  f(ge) = fe
        if (E.leq_l(e, f) && E.leq_l(f, g)) {
          int ge = E.at(g, e);
          if (ge < 0 || !E.defined(f, ge) || !E.defined(f, e)
              || E.at(f, ge) != E.at(f, e)) {
            ax.fail_once("B4.primal", {e, f, g}, "f(ge) = fe fails");
          }
        }
        // dual: e <=r f <=r g  =>  (eg)f = ef
        if (E.leq_r(e, f) && E.leq_r(f, g)) {
          int eg = E.at(e, g);
          if (eg < 0 || !E.defined(eg, f) || !E.defined(e, f)
              || E.at(eg, f) != E.at(e, f)) {
            ax.fail_once("B4.dual", {e, f, g}, "(eg)f = ef fails");
          }
        }
      }
    }
  }
}

void check_b5(Ax& ax) {
  auto const& E = ax.E;
  int         n = E.n;
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      for (int g = 0; g < n; ++g) {
        // primal: f <=l e, g <=l e, ef <=r eg  =>  exists f' <=r g, f' <=l e,
        // ef' = ef
        if (E.leq_l(f, e) && E.leq_l(g, e)) {
          int ef = E.at(e, f), eg = E.at(e, g);
          if (ef >= 0 && eg >= 0 && E.leq_r(ef, eg)) {
            bool found = false;
            for (int fp = 0; fp < n && !found; ++fp) {
              if (E.leq_r(fp, g) && E.leq_l(fp, e) && E.defined(e, fp)
                  && E.at(e, fp) == ef) {
                found = true;
              }
            }
            if (!found) {
              ax.fail_once("B5.primal", {e, f, g}, "no f' with ef' = ef");
            }
          }
        }
        // dual: f <=r e, g <=r e, fe <=l ge  =>  exists f' <=l g, f' <=r e,
        // f'e = fe
        if (E.leq_r(f, e) && E.leq_r(g, e)) {
          int fe = E.at(f, e), ge = E.at(g, e);
          if (fe >= 0 && ge >= 0 && E.leq_l(fe, ge)) {
            bool found = false;
            for (int fp = 0; fp < n && !found; ++fp) {
              if (E.leq_l(fp, g) && E.leq_r(fp, e) && E.defined(fp, e)
                  && E.at(fp, e) == fe) {
                found = true;
              }
            }
            if (!found) {
              ax.fail_once("B5.dual", {e, f, g}, "no f' with f'e = fe");
            }
          }
        }
      }
    }
  }
}

}  // namespace

Report check_biorder_table(int n, std::vector<int> const& product) {
  Report rep;
  if (n < 0 || product.size() != static_cast<size_t>(n) * n) {
    rep.fail("table.shape", {n, static_cast<int>(product.size())},
             "product table is not n x n");
    return rep;
  }
  for (size_t i = 0; i < product.size(); ++i) {
    if (product[i] < -1 || product[i] >= n) {
      rep.fail("table.range", {static_cast<int>(i / n), static_cast<int>(i % n)},
               "entry out of range");
      return rep;
    }
  }
  BiorderedSet E;
  E.n       = n;
  E.product = product;
  E.derive_relations();
  Ax ax{E, rep};
  check_b1(ax);
  check_b2(ax);
  check_b3(ax);
  check_b4(ax);
  check_b5(ax);
  if (rep.ok()) {
    rep.pass("B1-B5");
  }
  return rep;
}

BiorderedSet load_biorder(int n, std::vector<int> const& product,
                          std::vector<std::string> labels, std::string name) {
  Report rep = check_biorder_table(n, product);
  for (auto const& it : rep.items) {
    if (!it.pass) {
      if (it.check.rfind("table.", 0) == 0) {
        throw IgcxError("MalformedTable", it.check, it.witness);
      }
      throw IgcxError("AxiomViolation", it.check + " " + it.detail, it.witness);
    }
  }
  BiorderedSet E;
  E.n       = n;
  E.product = product;
  E.labels  = std::move(labels);
  E.name    = std::move(name);
  E.derive_relations();
  return E;
}

std::vector<int> sandwich_set(BiorderedSet const& E, int e, int f) {
  // candidates and quantified comparison set share one description:
  // x <=l e and x <=r f
  std::vector<int> comparable;
  for (int x = 0; x < E.n; ++x) {
    if (E.leq_l(x, e) && E.leq_r(x, f)) {
      comparable.push_back(x);
    }
  }
  std::vector<int> out;
  for (int h : comparable) {
    int  hf = E.at(h, f), eh = E.at(e, h);
    bool maximal = hf >= 0 && eh >= 0;
    for (int g : comparable) {
      if (!maximal) {
        break;
      }
      int gf = E.at(g, f), eg = E.at(e, g);
      if (gf < 0 || eg < 0 || !E.leq_l(gf, hf) || !E.leq_r(eg, eh)) {
        maximal = false;
      }
    }
    if (maximal) {
      out.push_back(h);
    }
  }
  return out;
}

bool is_regular(BiorderedSet const& E) {
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (sandwich_set(E, e, f).empty()) {
        return false;
      }
    }
  }
  return true;
}

Report check_bimorphism(BiorderedSet const& E, BiorderedSet const& E2,
                        std::vector<int> const& theta, bool require_regular) {
  Report rep;
  if (theta.size() != static_cast<size_t>(E.n)) {
    rep.fail("theta.total", {static_cast<int>(theta.size())},
             "map is not total on E");
    return rep;
  }
  for (int e = 0; e < E.n; ++e) {
    if (theta[e] < 0 || theta[e] >= E2.n) {
      rep.fail("theta.range", {e}, "image out of range");
      return rep;
    }
  }
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (!E.defined(e, f)) {
        continue;
      }
      if (!E2.defined(theta[e], theta[f])) {
        if (!rep.has_failure("BM1")) {
          rep.fail("BM1", {e, f}, "image pair outside the domain");
        }
      } else if (E2.at(theta[e], theta[f]) != theta[E.at(e, f)]) {
        if (!rep.has_failure("BM2")) {
          rep.fail("BM2", {e, f}, "(ef)theta != (e theta)(f theta)");
        }
      }
    }
  }
  if (require_regular) {
    for (int e = 0; e < E.n; ++e) {
      for (int f = 0; f < E.n; ++f) {
        auto S2 = sandwich_set(E2, theta[e], theta[f]);
        for (int h : sandwich_set(E, e, f)) {
          if (std::find(S2.begin(), S2.end(), theta[h]) == S2.end()) {
            if (!rep.has_failure("RBM")) {
              rep.fail("RBM", {e, f, h}, "sandwich image escapes S'(et,ft)");
            }
          }
        }
      }
    }
  }
  if (rep.ok()) {
    rep.pass("bimorphism");
  }
  return rep;
}

namespace {

bool row_pattern(BiorderedSet const& E, int a, int b, int c, int d) {
  // [a b; ua ub] for some u with a, b <=l u
  for (int u = 0; u < E.n; ++u) {
    if (E.leq_l(a, u) && E.leq_l(b, u) && E.at(u, a) == c && E.at(u, b) == d) {
      return true;
    }
  }
  return false;
}

bool col_pattern(BiorderedSet const& E, int a, int b, int c, int d) {
  // [a au; c cu] for some u with a, c <=r u
  for (int u = 0; u < E.n; ++u) {
    if (E.leq_r(a, u) && E.leq_r(c, u) && E.at(a, u) == b && E.at(c, u) == d) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ESquare> enumerate_e_squares(BiorderedSet const& E) {
  std::vector<ESquare> out;
  int                  n = E.n;
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (!E.rel_r(e, f)) {
        continue;
      }
      for (int g = 0; g < n; ++g) {
        if (!E.rel_l(e, g)) {
          continue;
        }
        for (int h = 0; h < n; ++h) {
          if (!E.rel_r(g, h) || !E.rel_l(f, h)) {
            continue;
          }
          // symmetry orbit: id, column swap, row swap, both
          std::array<std::array<int, 4>, 4> orbit = {{{e, f, g, h},
                                                      {f, e, h, g},
                                                      {g, h, e, f},
                                                      {h, g, f, e}}};
          if (*std::min_element(orbit.begin(), orbit.end())
              != std::array<int, 4>{e, f, g, h}) {
            continue;
          }
          ESquare sq;
          sq.entries = {e, f, g, h};
          bool row = false, col = false;
          for (auto const& v : orbit) {
            row = row || row_pattern(E, v[0], v[1], v[2], v[3]);
            col = col || col_pattern(E, v[0], v[1], v[2], v[3]);
          }
          sq.kind = row ? 1 : (col ? 2 : 0);
          out.push_back(sq);
        }
      }
    }
  }
  return out;
}

}  // namespace igcx
