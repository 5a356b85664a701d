#include "igcx/fixtures.hpp"

#include <algorithm>
#include <map>

namespace igcx {

namespace {

FiniteSemigroup make(int n, std::vector<int> t, std::string name,
                     std::vector<std::string> labels = {}) {
  return load_cayley(n, t, std::move(name), false, std::move(labels));
}

FiniteSemigroup left_zero(int k) {
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      t[static_cast<size_t>(i) * k + j] = i;
    }
  }
  return make(k, t, "left_zero(" + std::to_string(k) + ")");
}

FiniteSemigroup right_zero(int k) {
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      t[static_cast<size_t>(i) * k + j] = j;
    }
  }
  return make(k, t, "right_zero(" + std::to_string(k) + ")");
}

FiniteSemigroup rect_band(int m, int k) {
  int              n = m * k;
  std::vector<int> t(static_cast<size_t>(n) * n);
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    lab[a] = "(" + std::to_string(a / k) + "," + std::to_string(a % k) + ")";
    for (int b = 0; b < n; ++b) {
      t[static_cast<size_t>(a) * n + b] = (a / k) * k + (b % k);
    }
  }
  return make(n, t,
              "rect_band(" + std::to_string(m) + "," + std::to_string(k) + ")",
              lab);
}

FiniteSemigroup semilattice_chain(int k) {
  std::vector<int> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      t[static_cast<size_t>(i) * k + j] = std::min(i, j);
    }
  }
  return make(k, t, "semilattice_chain(" + std::to_string(k) + ")");
}

FiniteSemigroup brandt2() {
  // element order: e11, e12, e21, e22, zero
  auto             pr = [](int i, int j, int k, int l) {
    if (j == k) {
      return std::array<int, 2>{i, l};
    }
    return std::array<int, 2>{-1, -1};
  };
  std::vector<std::array<int, 2>> el = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<int>                t(25, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      auto p = pr(el[a][0], el[a][1], el[b][0], el[b][1]);
      if (p[0] >= 0) {
        for (int c = 0; c < 4; ++c) {
          if (el[c] == p) {
            t[static_cast<size_t>(a) * 5 + b] = c;
          }
        }
      }
    }
  }
  return make(5, t, "brandt2", {"e11", "e12", "e21", "e22", "0"});
}

FiniteSemigroup full_transformation(int k) {
  if (k > 3) {
    throw IgcxError("SizeBound", "full_transformation capped at k = 3", {k});
  }
  int n = 1;
  for (int i = 0; i < k; ++i) {
    n *= k;
  }
  auto digit = [&](int code, int i) {
    for (int t = 0; t < i; ++t) {
      code /= k;
    }
    return code % k;
  };
  std::vector<int>         t(static_cast<size_t>(n) * n);
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    std::string s;
    for (int i = 0; i < k; ++i) {
      s += std::to_string(digit(a, i));
    }
    lab[a] = s;
    for (int b = 0; b < n; ++b) {
      // left-to-right: apply a, then b
      int code = 0, pw = 1;
      for (int i = 0; i < k; ++i) {
        code += digit(b, digit(a, i)) * pw;
        pw *= k;
      }
      t[static_cast<size_t>(a) * n + b] = code;
    }
  }
  return make(n, t, "full_transformation(" + std::to_string(k) + ")", lab);
}

FiniteSemigroup symmetric_inverse(int k) {
  if (k > 2) {
    throw IgcxError("SizeBound", "symmetric_inverse capped at k = 2", {k});
  }
  // partial injective maps, encoded base (k+1), digit 0 = undefined
  std::vector<std::vector<int>> el;
  int                           total = 1;
  for (int i = 0; i < k; ++i) {
    total *= k + 1;
  }
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(k);
    int              c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = c % (k + 1) - 1;
      c /= k + 1;
    }
    bool inj = true;
    for (int i = 0; i < k && inj; ++i) {
      for (int j = i + 1; j < k && inj; ++j) {
        inj = f[i] < 0 || f[j] < 0 || f[i] != f[j];
      }
    }
    if (inj) {
      el.push_back(f);
    }
  }
  int                      n = static_cast<int>(el.size());
  std::vector<int>         t(static_cast<size_t>(n) * n);
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    std::string s;
    for (int i = 0; i < k; ++i) {
      s += el[a][i] < 0 ? std::string("-") : std::to_string(el[a][i]);
    }
    lab[a] = s;
    for (int b = 0; b < n; ++b) {
      std::vector<int> f(k);
      for (int i = 0; i < k; ++i) {
        f[i] = el[a][i] < 0 ? -1 : el[b][el[a][i]];
      }
      t[static_cast<size_t>(a) * n + b] =
          static_cast<int>(std::find(el.begin(), el.end(), f) - el.begin());
    }
  }
  return make(n, t, "symmetric_inverse(" + std::to_string(k) + ")", lab);
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"left_zero",          "right_zero",        "rect_band",
          "semilattice_chain",  "brandt2",           "full_transformation",
          "symmetric_inverse"};
}

FiniteSemigroup builtin(std::string const& name, std::vector<int> params) {
  auto arg = [&](size_t i, int dflt) {
    return i < params.size() ? params[i] : dflt;
  };
  if (name == "left_zero") {
    return left_zero(arg(0, 2));
  }
  if (name == "right_zero") {
    return right_zero(arg(0, 2));
  }
  if (name == "rect_band") {
    return rect_band(arg(0, 2), arg(1, 2));
  }
  if (name == "semilattice_chain") {
    return semilattice_chain(arg(0, 2));
  }
  if (name == "brandt2") {
    return brandt2();
  }
  if (name == "full_transformation") {
    return full_transformation(arg(0, 2));
  }
  if (name == "symmetric_inverse") {
    return symmetric_inverse(arg(0, 2));
  }
  throw IgcxError("UnknownFixture", name);
}

InductiveGroupoid trace_groupoid(FiniteSemigroup const& S) {
  InductiveGroupoid ig;
  ig.E = idempotent_biorder(S);
  auto const& E = S.idempotents;
  int         ne = static_cast<int>(E.size());

  Groupoid& g   = ig.g;
  g.num_objects = ne;
  g.identity.assign(ne, -1);
  g.obj_label.resize(ne);
  std::vector<std::array<int, 3>>   triples;
  std::map<std::array<int, 3>, int> index;
  for (int a = 0; a < ne; ++a) {
    g.obj_label[a] = S.label(E[a]);
    for (int x = 0; x < S.n; ++x) {
      if (!S.green_r(E[a], x)) {
        continue;
      }
      for (int b = 0; b < ne; ++b) {
        if (!S.green_l(x, E[b])) {
          continue;
        }
        g.dom.push_back(a);
        g.cod.push_back(b);
        g.mor_label.push_back("(" + S.label(E[a]) + "," + S.label(x) + ","
                              + S.label(E[b]) + ")");
        triples.push_back({E[a], x, E[b]});
        index[{E[a], x, E[b]}] = g.size() - 1;
        if (x == E[a] && a == b) {
          g.identity[a] = g.size() - 1;
        }
      }
    }
  }
  g.inv.assign(g.size(), -1);
  g.init_tables();
  for (int m1 = 0; m1 < g.size(); ++m1) {
    auto [e, x, f] = triples[m1];
    int xi = inverse_with(S, x, e, f);
    if (xi < 0) {
      throw IgcxError("NotRegular", "trace morphism has no framed inverse",
                      {e, x, f});
    }
    g.inv[m1] = index.at({f, xi, e});
    for (int m2 = 0; m2 < g.size(); ++m2) {
      auto [f2, y, h] = triples[m2];
      if (g.cod[m1] == g.dom[m2]) {
        auto it = index.find({e, S.at(x, y), h});
        if (it == index.end()) {
          throw IgcxError("MalformedComposition", "trace product escaped",
                          {m1, m2});
        }
        g.set_comp(m1, m2, it->second);
      }
      // natural order with both framing clauses: x = e y and x = y f (the
      // second is what makes restrictions unique)
      if (S.idem_leq(e, f2) && S.idem_leq(f, h) && x == S.at(e, y)
          && x == S.at(y, f)) {
        g.set_leq(m1, m2);
      }
    }
  }
  // evaluation on basic pairs: R-pairs to (e, f, f), L-pairs to (e, e, f)
  ig.eval_gen.assign(static_cast<size_t>(ne) * ne, -1);
  for (int a = 0; a < ne; ++a) {
    for (int b = 0; b < ne; ++b) {
      if (a == b) {
        continue;
      }
      if (ig.E.rel_r(a, b)) {
        ig.eval_gen[static_cast<size_t>(a) * ne + b] = index.at({E[a], E[b], E[b]});
      } else if (ig.E.rel_l(a, b)) {
        ig.eval_gen[static_cast<size_t>(a) * ne + b] = index.at({E[a], E[a], E[b]});
      }
    }
  }
  ig.finalize();
  return ig;
}

std::vector<std::array<int, 3>> trace_triples(InductiveGroupoid const& G,
                                              FiniteSemigroup const&   S) {
  std::vector<std::array<int, 3>> triples;
  auto const&                     E = S.idempotents;
  for (int a = 0; a < static_cast<int>(E.size()); ++a) {
    for (int x = 0; x < S.n; ++x) {
      if (!S.green_r(E[a], x)) {
        continue;
      }
      for (int b = 0; b < static_cast<int>(E.size()); ++b) {
        if (S.green_l(x, E[b])) {
          triples.push_back({E[a], x, E[b]});
        }
      }
    }
  }
  if (static_cast<int>(triples.size()) != G.g.size()) {
    throw IgcxError("MalformedTable", "groupoid is not the trace groupoid of S");
  }
  return triples;
}

PrincipalPair principal_categories(FiniteSemigroup const& S) {
  PrincipalPair P;
  P.L       = principal_left_category(S);
  P.R       = principal_right_category(S);
  P.L_cones = principal_category_cones(S, P.L);
  P.R_cones = principal_category_cones(S, P.R);
  return P;
}

InductiveFunctor induced_functor(InductiveGroupoid const& G,
                                 FiniteSemigroup const&   S,
                                 InductiveGroupoid const& G2,
                                 FiniteSemigroup const&   S2,
                                 std::vector<int> const&  phi) {
  for (int a = 0; a < S.n; ++a) {
    for (int b = 0; b < S.n; ++b) {
      if (phi[S.at(a, b)] != S2.at(phi[a], phi[b])) {
        throw IgcxError("MalformedTable", "phi is not a homomorphism", {a, b});
      }
    }
  }
  auto t1 = trace_triples(G, S);
  auto t2 = trace_triples(G2, S2);
  std::map<std::array<int, 3>, int> index2;
  for (int m = 0; m < static_cast<int>(t2.size()); ++m) {
    index2[t2[m]] = m;
  }
  auto eidx = [](FiniteSemigroup const& T, int e) {
    auto it = std::lower_bound(T.idempotents.begin(), T.idempotents.end(), e);
    return static_cast<int>(it - T.idempotents.begin());
  };
  InductiveFunctor F;
  F.src = &G;
  F.dst = &G2;
  F.obj_map.resize(S.idempotents.size());
  for (size_t i = 0; i < S.idempotents.size(); ++i) {
    F.obj_map[i] = eidx(S2, phi[S.idempotents[i]]);
  }
  F.mor_map.resize(t1.size());
  for (size_t m = 0; m < t1.size(); ++m) {
    auto [e, x, f] = t1[m];
    auto it        = index2.find({phi[e], phi[x], phi[f]});
    if (it == index2.end()) {
      throw IgcxError("MalformedTable", "image triple missing",
                      {phi[e], phi[x], phi[f]});
    }
    F.mor_map[m] = it->second;
  }
  return F;
}

std::vector<std::pair<FiniteSemigroup, std::vector<int>>> test_morphisms_into(
    FiniteSemigroup const& S) {
  std::vector<std::pair<FiniteSemigroup, std::vector<int>>> out;
  auto add = [&](FiniteSemigroup src, std::vector<int> map) {
    for (int a = 0; a < src.n; ++a) {
      for (int b = 0; b < src.n; ++b) {
        if (map[src.at(a, b)] != S.at(map[a], map[b])) {
          throw IgcxError("MalformedTable", "test morphism not a homomorphism");
        }
      }
    }
    out.emplace_back(std::move(src), std::move(map));
  };
  std::string const& nm = S.name;
  if (nm == "left_zero(2)") {
    add(builtin("left_zero", {2}), {1, 0});                  // automorphism
    add(builtin("semilattice_chain", {1}), {0});             // embedding
  } else if (nm == "right_zero(2)") {
    add(builtin("right_zero", {2}), {1, 0});
    add(builtin("semilattice_chain", {1}), {0});
  } else if (nm == "rect_band(2,2)") {
    add(builtin("rect_band", {2, 2}), {2, 3, 0, 1});         // row swap
    add(builtin("left_zero", {2}), {0, 2});                  // a column
  } else if (nm == "semilattice_chain(2)") {
    add(builtin("semilattice_chain", {1}), {1});             // top element
    add(builtin("semilattice_chain", {1}), {0});
  } else if (nm == "brandt2") {
    add(builtin("brandt2"), {3, 2, 1, 0, 4});                // swap 1 <-> 2
    add(builtin("semilattice_chain", {2}), {4, 0});
  } else if (nm == "full_transformation(2)") {
    add(builtin("full_transformation", {2}), {3, 1, 2, 0});  // conjugation
    add(builtin("semilattice_chain", {2}), {0, 2});          // const0 <= id
  } else if (nm == "full_transformation(3)") {
    // conjugation by the cycle s = (0 1 2): f -> s^-1 f s, computed on codes
    auto T3  = builtin("full_transformation", {3});
    auto dig = [](int code, int i) {
      for (int t = 0; t < i; ++t) {
        code /= 3;
      }
      return code % 3;
    };
    int              s[3]  = {1, 2, 0};
    int              si[3] = {2, 0, 1};
    std::vector<int> conj(27);
    for (int a = 0; a < 27; ++a) {
      int code = 0, pw = 1;
      for (int i = 0; i < 3; ++i) {
        code += s[dig(a, si[i])] * pw;
        pw *= 3;
      }
      conj[a] = code;
    }
    add(std::move(T3), conj);
    // T2 embeds by fixing the last point
    auto             T2 = builtin("full_transformation", {2});
    std::vector<int> emb(4);
    for (int a = 0; a < 4; ++a) {
      emb[a] = (a % 2) + 3 * (a / 2) + 9 * 2;
    }
    add(std::move(T2), emb);
  } else if (nm == "symmetric_inverse(2)") {
    // conjugation by the swap on labels -:0, 0-, 1-, -0, 10, -1, 01
    add(builtin("symmetric_inverse", {2}), {0, 5, 3, 2, 4, 1, 6});
    add(builtin("semilattice_chain", {2}), {0, 6});
  }
  return out;
}

}  // namespace igcx
