#include "igcx/semigroup.hpp"

#include <algorithm>
#include <set>

namespace igcx {

std::string FiniteSemigroup::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty()) {
    return labels[x];
  }
  return std::to_string(x);
}

void FiniteSemigroup::derive() {
  idempotents.clear();
  for (int x = 0; x < n; ++x) {
    if (is_idempotent(x)) {
      idempotents.push_back(x);
    }
  }
  // principal ideals with adjoined identity
  std::vector<std::set<int>> right(n), left(n);
  for (int x = 0; x < n; ++x) {
    right[x].insert(x);
    left[x].insert(x);
    for (int a = 0; a < n; ++a) {
      right[x].insert(at(x, a));
      left[x].insert(at(a, x));
    }
  }
  r_rel.assign(static_cast<size_t>(n) * n, 0);
  l_rel.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r_rel[static_cast<size_t>(x) * n + y] = right[x] == right[y];
      l_rel[static_cast<size_t>(x) * n + y] = left[x] == left[y];
    }
  }
  regular = true;
  for (int a = 0; a < n && regular; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b) {
      has = at3(a, b, a) == a;
    }
    regular = has;
  }
}

FiniteSemigroup load_cayley(int n, std::vector<int> const& table,
                            std::string name, bool require_regular,
                            std::vector<std::string> labels) {
  if (n <= 0 || table.size() != static_cast<size_t>(n) * n) {
    throw IgcxError("MalformedTable", "Cayley table is not n x n",
                    {n, static_cast<int>(table.size())});
  }
  for (int v : table) {
    if (v < 0 || v >= n) {
      throw IgcxError("MalformedTable", "entry out of range", {v});
    }
  }
  FiniteSemigroup S;
  S.n      = n;
  S.table  = table;
  S.name   = std::move(name);
  S.labels = std::move(labels);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (S.at(S.at(a, b), c) != S.at(a, S.at(b, c))) {
          throw IgcxError("NotAssociative", "associativity fails", {a, b, c});
        }
      }
    }
  }
  S.associative = true;
  S.derive();
  if (require_regular && !S.regular) {
    for (int a = 0; a < n; ++a) {
      bool has = false;
      for (int b = 0; b < n && !has; ++b) {
        has = S.at3(a, b, a) == a;
      }
      if (!has) {
        throw IgcxError("NotRegular", "element has no inner inverse", {a});
      }
    }
  }
  return S;
}

int some_inverse(FiniteSemigroup const& S, int x) {
  for (int y = 0; y < S.n; ++y) {
    if (S.at3(x, y, x) == x && S.at3(y, x, y) == y) {
      return y;
    }
  }
  return -1;
}

int inverse_with(FiniteSemigroup const& S, int x, int e, int f) {
  int found = -1;
  for (int y = 0; y < S.n; ++y) {
    if (S.at3(x, y, x) == x && S.at3(y, x, y) == y && S.at(x, y) == e
        && S.at(y, x) == f) {
      if (found >= 0) {
        throw IgcxError("NonUniqueInverse", "two inverses with given frame",
                        {x, e, f, found, y});
      }
      found = y;
    }
  }
  return found;
}

BiorderedSet idempotent_biorder(FiniteSemigroup const& S) {
  if (!S.regular) {
    throw IgcxError("NotRegular", "idempotent_biorder needs a regular semigroup");
  }
  auto const& E = S.idempotents;
  int         m = static_cast<int>(E.size());
  // leq_l: e f = e ; leq_r: f e = e, evaluated in S
  auto leq_l = [&](int i, int j) { return S.at(E[i], E[j]) == E[i]; };
  auto leq_r = [&](int i, int j) { return S.at(E[j], E[i]) == E[i]; };
  std::vector<int> product(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (leq_l(i, j) || leq_r(i, j) || leq_l(j, i) || leq_r(j, i)) {
        int p = S.at(E[i], E[j]);
        // basic products of comparable idempotents stay idempotent
        auto it = std::lower_bound(E.begin(), E.end(), p);
        if (it == E.end() || *it != p) {
          throw IgcxError("AxiomViolation", "basic product not idempotent",
                          {E[i], E[j], p});
        }
        product[static_cast<size_t>(i) * m + j] =
            static_cast<int>(it - E.begin());
      }
    }
  }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = S.label(E[i]);
  }
  return load_biorder(m, product, std::move(labels),
                      S.name.empty() ? "E(S)" : "E(" + S.name + ")");
}

}  // namespace igcx
