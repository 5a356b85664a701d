#ifndef IGCX_SEMIGROUP_HPP_
#define IGCX_SEMIGROUP_HPP_

#include <string>
#include <vector>

#include "biorder.hpp"
#include "report.hpp"

namespace igcx {

//! A finite semigroup given by a total Cayley table, with Green's relations
//! and the idempotent set precomputed.  Products are written left to right,
//! matching the morphism composition convention everywhere else.
struct FiniteSemigroup {
  int                      n = 0;
  std::vector<int>         table;
  std::string              name;
  std::vector<std::string> labels;

  bool             associative = false;
  bool             regular     = false;
  std::vector<int> idempotents;

  // Green's R and L as boolean matrices (x R y iff xS^1 = yS^1)
  std::vector<char> r_rel, l_rel;

  int at(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  int at3(int a, int b, int c) const { return at(at(a, b), c); }
  bool green_r(int x, int y) const {
    return r_rel[static_cast<size_t>(x) * n + y];
  }
  bool green_l(int x, int y) const {
    return l_rel[static_cast<size_t>(x) * n + y];
  }
  bool is_idempotent(int x) const { return at(x, x) == x; }
  //! natural order on idempotents: e <= f iff ef = fe = e
  bool idem_leq(int e, int f) const { return at(e, f) == e && at(f, e) == e; }

  std::string label(int x) const;

  void derive();  // fills flags, idempotents, Green's relations
};

//! Validates associativity (witness on failure); regularity is recorded as a
//! flag and enforced only when require_regular is set.
FiniteSemigroup load_cayley(int n, std::vector<int> const& table,
                            std::string name = "", bool require_regular = false,
                            std::vector<std::string> labels = {});

//! Some inverse y of x (xyx = x, yxy = y), least id; -1 when none.
int some_inverse(FiniteSemigroup const& S, int x);

//! The unique inverse y of x with xy = e and yx = f; -1 when none.
int inverse_with(FiniteSemigroup const& S, int x, int e, int f);

//! The biordered set E(S) of a regular semigroup: products restricted to the
//! comparability domain.  Passes load_biorder by construction or throws.
BiorderedSet idempotent_biorder(FiniteSemigroup const& S);

}  // namespace igcx

#endif  // IGCX_SEMIGROUP_HPP_
