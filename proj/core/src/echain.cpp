#include "igcx/echain.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "igcx/groupoid.hpp"

namespace igcx {

EChain reduce_path(BiorderedSet const& E, std::vector<int> const& path) {
  if (path.empty()) {
    throw IgcxError("NotAPath", "empty path");
  }
  std::vector<int> cur;
  cur.reserve(path.size());
  for (int e : path) {
    if (e < 0 || e >= E.n) {
      throw IgcxError("NotAPath", "element out of range", {e});
    }
    if (!cur.empty() && cur.back() == e) {
      continue;  // stutter
    }
    if (!cur.empty() && !E.adjacent(cur.back(), e)) {
      throw IgcxError("NotAPath", "consecutive entries neither R nor L",
                      {cur.back(), e});
    }
    cur.push_back(e);
  }
  // left-to-right removal to a fixed point: stutters first, then the first
  // inessential internal entry, repeated until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 1; i < cur.size();) {
      if (cur[i] == cur[i - 1]) {
        cur.erase(cur.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 1; i + 1 < cur.size(); ++i) {
      int a = cur[i - 1], b = cur[i], c = cur[i + 1];
      if ((E.rel_r(a, b) && E.rel_r(b, c)) || (E.rel_l(a, b) && E.rel_l(b, c))) {
        cur.erase(cur.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return EChain{std::move(cur)};
}

EChain compose_chains(BiorderedSet const& E, EChain const& c, EChain const& c2) {
  if (c.seq.empty() || c2.seq.empty() || c.cod() != c2.dom()) {
    throw IgcxError("NotComposable", "cod(c) != dom(c2)",
                    {c.seq.empty() ? -1 : c.cod(),
                     c2.seq.empty() ? -1 : c2.dom()});
  }
  std::vector<int> path = c.seq;
  path.insert(path.end(), c2.seq.begin() + 1, c2.seq.end());
  return reduce_path(E, path);
}

EChain reverse_chain(EChain const& c) {
  EChain out = c;
  std::reverse(out.seq.begin(), out.seq.end());
  return out;
}

EChain restrict_chain(BiorderedSet const& E, int e, EChain const& c2) {
  if (!E.leq(e, c2.dom())) {
    throw IgcxError("NoRestriction", "e is not below dom of the chain",
                    {e, c2.dom()});
  }
  std::vector<int> h;
  h.reserve(c2.seq.size());
  h.push_back(e);
  for (size_t i = 1; i < c2.seq.size(); ++i) {
    int fi = c2.seq[i];
    int a  = E.at(fi, h.back());
    if (a < 0 || !E.defined(a, fi)) {
      throw IgcxError("NoRestriction", "h-recursion product undefined",
                      {e, fi, h.back()});
    }
    h.push_back(E.at(a, fi));
  }
  return reduce_path(E, h);
}

bool chain_leq(BiorderedSet const& E, EChain const& c, EChain const& c2) {
  if (!E.leq(c.dom(), c2.dom())) {
    return false;
  }
  return restrict_chain(E, c.dom(), c2) == c;
}

int ChainGroupoid::index_of(EChain const& c) const {
  auto it = std::lower_bound(chains.begin(), chains.end(), c);
  if (it != chains.end() && *it == c) {
    return static_cast<int>(it - chains.begin());
  }
  return -1;
}

ChainGroupoid chain_groupoid(BiorderedSet const& E, ChainClosureOptions opts) {
  int max_len = opts.max_len > 0 ? opts.max_len : 2 * E.n;
  size_t max_mor =
      opts.max_morphisms > 0
          ? static_cast<size_t>(opts.max_morphisms)
          : std::max<size_t>(16, 2 * static_cast<size_t>(E.n) * E.n);

  std::set<std::vector<int>> seen;
  std::vector<EChain>        frontier;
  bool                       truncated = false;

  auto add = [&](EChain const& c) {
    if (static_cast<int>(c.seq.size()) > max_len) {
      truncated = true;
      return;
    }
    if (seen.size() >= max_mor && !seen.count(c.seq)) {
      truncated = true;
      return;
    }
    if (seen.insert(c.seq).second) {
      frontier.push_back(c);
    }
  };

  std::vector<EChain> generators;
  for (int e = 0; e < E.n; ++e) {
    add(EChain{{e}});
  }
  for (int e = 0; e < E.n; ++e) {
    for (int f = 0; f < E.n; ++f) {
      if (e != f && E.adjacent(e, f)) {
        EChain g{{e, f}};
        generators.push_back(g);
        add(g);
      }
    }
  }

  // breadth-first so that a pure length cap yields the full window of all
  // reduced chains up to that length
  while (!frontier.empty()) {
    std::vector<EChain> next;
    std::swap(next, frontier);
    for (auto const& c : next) {
      for (auto const& g : generators) {
        if (c.cod() == g.dom()) {
          add(compose_chains(E, c, g));
        }
      }
    }
  }

  if (truncated && opts.require_complete) {
    throw IgcxError("ClosureBoundExceeded",
                    "reduced-chain closure does not stabilize within bounds",
                    {max_len, static_cast<int>(max_mor)});
  }

  ChainGroupoid cg;
  cg.E        = E;
  cg.complete = !truncated;
  cg.chains.reserve(seen.size());
  for (auto const& s : seen) {
    cg.chains.push_back(EChain{s});
  }
  std::sort(cg.chains.begin(), cg.chains.end());
  return cg;
}

Report check_chain_groupoid(ChainGroupoid const& cg) {
  Report              rep;
  BiorderedSet const& E = cg.E;
  auto const&         M = cg.chains;

  // groupoid laws through the chain calculus
  for (size_t i = 0; i < M.size(); ++i) {
    EChain inv = reverse_chain(M[i]);
    if (compose_chains(E, M[i], inv) != EChain{{M[i].dom()}}) {
      rep.fail("groupoid.inverse", {static_cast<int>(i)}, "");
      break;
    }
  }

  // the order data, precomputed pairwise on the window
  std::vector<std::pair<int, int>> leq_pairs;
  for (size_t a = 0; a < M.size(); ++a) {
    for (size_t b = 0; b < M.size(); ++b) {
      if (chain_leq(E, M[a], M[b])) {
        leq_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }

  // partial order: antisymmetry and transitivity on the window
  std::set<std::pair<int, int>> leq_set(leq_pairs.begin(), leq_pairs.end());
  for (auto [a, b] : leq_pairs) {
    if (a != b && leq_set.count({b, a})) {
      rep.fail("order.antisymmetric", {a, b}, "");
      break;
    }
  }
  for (auto [a, b] : leq_pairs) {
    bool bad = false;
    for (auto [c, d] : leq_pairs) {
      if (c == b && !leq_set.count({a, d})) {
        rep.fail("order.transitive", {a, b, d}, "");
        bad = true;
        break;
      }
    }
    if (bad) {
      break;
    }
  }

  // OG1: u <= x, v <= y composable on both levels => uv <= xy
  for (auto [u, x] : leq_pairs) {
    for (auto [v, y] : leq_pairs) {
      if (M[u].cod() == M[v].dom() && M[x].cod() == M[y].dom()) {
        EChain uv = compose_chains(E, M[u], M[v]);
        EChain xy = compose_chains(E, M[x], M[y]);
        if (!chain_leq(E, uv, xy)) {
          rep.fail("OG1", {u, x, v, y}, "uv !<= xy");
          break;
        }
      }
    }
    if (!rep.ok()) {
      break;
    }
  }

  // OG2: x <= y => x^-1 <= y^-1
  for (auto [a, b] : leq_pairs) {
    if (!chain_leq(E, reverse_chain(M[a]), reverse_chain(M[b]))) {
      rep.fail("OG2", {a, b}, "");
      break;
    }
  }

  // OG3 existence and uniqueness of restrictions, quantified over the window
  for (size_t x = 0; x < M.size(); ++x) {
    for (int e = 0; e < E.n; ++e) {
      if (!E.leq(e, M[x].dom())) {
        continue;
      }
      EChain r = restrict_chain(E, e, M[x]);
      if (r.dom() != e || !chain_leq(E, r, M[x])) {
        rep.fail("OG3.exists", {e, static_cast<int>(x)},
                 "h-recursion chain is not a restriction");
      }
      for (size_t y = 0; y < M.size(); ++y) {
        if (M[y].dom() == e && chain_leq(E, M[y], M[x]) && !(M[y] == r)) {
          rep.fail("OG3.unique", {e, static_cast<int>(x), static_cast<int>(y)},
                   "second chain below x with domain e");
        }
      }
    }
  }

  // OG3*: corestrictions via reversal
  for (size_t x = 0; x < M.size(); ++x) {
    for (int f = 0; f < E.n; ++f) {
      if (!E.leq(f, M[x].cod())) {
        continue;
      }
      EChain r = reverse_chain(restrict_chain(E, f, reverse_chain(M[x])));
      if (r.cod() != f || !chain_leq(E, r, M[x])) {
        rep.fail("OG3*.exists", {f, static_cast<int>(x)}, "");
      }
    }
  }

  // reversal anti-isomorphism on the window
  for (auto const& c : M) {
    EChain lhs = reduce_path(E, reverse_chain(c).seq);
    if (!(lhs == reverse_chain(reduce_path(E, c.seq)))) {
      rep.fail("reverse.antiiso", {}, "");
      break;
    }
  }

  if (rep.ok()) {
    rep.pass(cg.complete ? "chain_groupoid.complete" : "chain_groupoid.window");
  }
  return rep;
}

Groupoid materialize_groupoid(ChainGroupoid const& cg) {
  if (!cg.complete) {
    throw IgcxError("ClosureBoundExceeded",
                    "cannot materialize a truncated chain groupoid");
  }
  BiorderedSet const& E = cg.E;
  Groupoid            g;
  g.num_objects = E.n;
  int M         = static_cast<int>(cg.chains.size());
  g.dom.resize(M);
  g.cod.resize(M);
  g.inv.resize(M);
  g.identity.assign(E.n, -1);
  g.mor_label.resize(M);
  for (int m = 0; m < M; ++m) {
    auto const& c = cg.chains[m];
    g.dom[m]      = c.dom();
    g.cod[m]      = c.cod();
    g.inv[m]      = cg.index_of(reverse_chain(c));
    if (c.seq.size() == 1) {
      g.identity[c.dom()] = m;
    }
    std::string s = "(";
    for (size_t i = 0; i < c.seq.size(); ++i) {
      s += (i ? "," : "") + E.label(c.seq[i]);
    }
    g.mor_label[m] = s + ")";
  }
  g.init_tables();
  for (int a = 0; a < M; ++a) {
    for (int b = 0; b < M; ++b) {
      if (g.cod[a] == g.dom[b]) {
        int ab = cg.index_of(compose_chains(E, cg.chains[a], cg.chains[b]));
        if (ab < 0) {
          throw IgcxError("ClosureBoundExceeded", "closure not actually closed",
                          {a, b});
        }
        g.set_comp(a, b, ab);
      }
      if (chain_leq(E, cg.chains[a], cg.chains[b])) {
        g.set_leq(a, b);
      }
    }
  }
  return g;
}

}  // namespace igcx
