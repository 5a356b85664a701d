#ifndef IGCX_GROUPOID_HPP_
#define IGCX_GROUPOID_HPP_

#include <string>
#include <vector>

#include "biorder.hpp"
#include "echain.hpp"
#include "report.hpp"

namespace igcx {

//! A finite groupoid with a partial order on morphisms, stored as dense
//! tables.  Composition is written left to right: comp(x, y) is "x then y"
//! and is defined exactly when cod(x) = dom(y).
struct Groupoid {
  int                      num_objects = 0;
  std::vector<int>         dom, cod, inv;  // per morphism
  std::vector<int>         identity;       // per object
  std::vector<int>         comp;           // M*M, -1 undefined
  std::vector<char>        leq;            // M*M
  std::vector<std::string> obj_label, mor_label;

  int size() const { return static_cast<int>(dom.size()); }

  int compose(int x, int y) const {
    return comp[static_cast<size_t>(x) * size() + y];
  }
  int compose3(int x, int y, int z) const {
    int xy = compose(x, y);
    return xy < 0 ? -1 : compose(xy, z);
  }
  bool mor_leq(int x, int y) const {
    return leq[static_cast<size_t>(x) * size() + y];
  }
  bool obj_leq(int e, int f) const {
    return mor_leq(identity[e], identity[f]);
  }
  void set_comp(int x, int y, int z) {
    comp[static_cast<size_t>(x) * size() + y] = z;
  }
  void set_leq(int x, int y, bool v = true) {
    leq[static_cast<size_t>(x) * size() + y] = v;
  }
  void init_tables() {
    comp.assign(static_cast<size_t>(size()) * size(), -1);
    leq.assign(static_cast<size_t>(size()) * size(), 0);
  }

  //! The unique y <= x with dom(y) = e, or -1.  Linear scan; the inductive
  //! wrapper caches the full table.
  int restrict_search(int e, int x) const;
  int corestrict_search(int f, int x) const;
};

//! Composition, identity, inverse and order-table sanity.  Failures are
//! reported as MalformedComposition / MalformedOrder items.
Report check_groupoid_tables(Groupoid const& g);

//! OG1, OG2, OG3 and OG3* with witnesses (after table sanity).
Report check_ordered_groupoid(Groupoid const& g);

//! An inductive groupoid: an ordered groupoid whose objects are the elements
//! of a regular biordered set (object i is element i), together with the
//! evaluation functor given on basic R/L-pairs and extended to chains by
//! composition.
struct InductiveGroupoid {
  Groupoid     g;
  BiorderedSet E;
  //! eval_gen[e * n + f] = image of the basic chain (e, f); -1 off the
  //! generator domain.  Diagonal entries are the identities.
  std::vector<int> eval_gen;

  // caches, built by finalize()
  std::vector<int> restr, corestr;  // M * n tables, -1 when undefined

  void finalize();

  int eval_pair(int e, int f) const {
    return e == f ? g.identity[e] : eval_gen[static_cast<size_t>(e) * E.n + f];
  }
  //! Fold of eval_pair along the chain; -1 if some step is missing.
  int eval_chain(EChain const& c) const;

  int restrict_mor(int e, int x) const {
    return restr[static_cast<size_t>(x) * E.n + e];
  }
  int corestrict_mor(int f, int x) const {
    return corestr[static_cast<size_t>(x) * E.n + f];
  }
};

//! Full inductive-groupoid verification: v-isomorphism of the evaluation
//! functor (object order agreement), well-definedness of eval on chains,
//! order preservation, IG1 with its three mirror variants, and IG2 over all
//! singular E-squares.
Report check_inductive(InductiveGroupoid const& ig);

struct InductiveFunctor {
  InductiveGroupoid const* src = nullptr;
  InductiveGroupoid const* dst = nullptr;
  std::vector<int>         obj_map;
  std::vector<int>         mor_map;
};

//! Order preservation, functor laws, regular bimorphism of the object map
//! (BM witnesses propagate) and commutation with the evaluation functors.
Report check_inductive_functor(InductiveFunctor const& F);

InductiveFunctor identity_functor(InductiveGroupoid const& ig);
InductiveFunctor compose_functors(InductiveFunctor const& F,
                                  InductiveFunctor const& G);

}  // namespace igcx

#endif  // IGCX_GROUPOID_HPP_
