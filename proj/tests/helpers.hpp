#ifndef IGCX_TESTS_HELPERS_HPP_
#define IGCX_TESTS_HELPERS_HPP_

#include <set>
#include <vector>

#include "igcx/biorder.hpp"
#include "igcx/echain.hpp"
#include "igcx/fixtures.hpp"

// Test-only oracles, kept independent of the implementation paths they check.

namespace igcx_test {

// Direct transcription of the quantified sandwich-set definition, written
// against the raw product table only.
inline std::vector<int> naive_sandwich(igcx::BiorderedSet const& E, int e,
                                       int f) {
  auto ll = [&](int a, int b) { return E.defined(a, b) && E.at(a, b) == a; };
  auto rr = [&](int a, int b) { return E.defined(b, a) && E.at(b, a) == a; };
  std::vector<int> out;
  for (int h = 0; h < E.n; ++h) {
    if (!ll(h, e) || !rr(h, f)) {
      continue;
    }
    bool best = true;
    for (int g = 0; g < E.n && best; ++g) {
      if (!ll(g, e) || !rr(g, f)) {
        continue;
      }
      best = ll(E.at(g, f), E.at(h, f)) && rr(E.at(e, g), E.at(e, h));
    }
    if (best) {
      out.push_back(h);
    }
  }
  return out;
}

// Bounded equivalence closure on E-paths.  Moves: remove/insert an
// inessential internal entry (the printed relation) plus collapse/expand a
// stutter, which is the extra identification the canonical form makes so
// that the identity laws of the chain groupoid hold.  Oracle for reduce.
inline bool paths_equivalent(igcx::BiorderedSet const& E,
                             std::vector<int> const& p,
                             std::vector<int> const& q, size_t cap) {
  auto same = [&](int a, int b, int c) {
    return (E.rel_r(a, b) && E.rel_r(b, c)) || (E.rel_l(a, b) && E.rel_l(b, c));
  };
  std::set<std::vector<int>>    seen{p};
  std::vector<std::vector<int>> frontier{p};
  auto push = [&](std::vector<int> v, std::vector<std::vector<int>>& out) {
    if (seen.insert(v).second) {
      out.push_back(std::move(v));
    }
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto const& w : frontier) {
      if (w == q) {
        return true;
      }
      for (size_t i = 1; i + 1 < w.size(); ++i) {
        if (same(w[i - 1], w[i], w[i + 1])) {
          auto v = w;
          v.erase(v.begin() + static_cast<long>(i));
          push(std::move(v), next);
        }
      }
      for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
          auto v = w;
          v.erase(v.begin() + static_cast<long>(i));
          push(std::move(v), next);
        }
      }
      if (w.size() < cap) {
        for (size_t i = 1; i < w.size(); ++i) {
          for (int x = 0; x < E.n; ++x) {
            if (same(w[i - 1], x, w[i])) {
              auto v = w;
              v.insert(v.begin() + static_cast<long>(i), x);
              push(std::move(v), next);
            }
          }
        }
        for (size_t i = 0; i < w.size(); ++i) {
          auto v = w;
          v.insert(v.begin() + static_cast<long>(i), w[i]);
          push(std::move(v), next);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.count(q) > 0;
}

inline igcx::FiniteSemigroup fixture(std::string const& name,
                                     std::vector<int> params = {}) {
  return igcx::builtin(name, std::move(params));
}

}  // namespace igcx_test

#endif
