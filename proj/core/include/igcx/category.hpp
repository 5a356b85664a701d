#ifndef IGCX_CATEGORY_HPP_
#define IGCX_CATEGORY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "semigroup.hpp"

namespace igcx {

//! A finite category with subobjects.  Objects carry the strict subobject
//! preorder and one designated inclusion morphism per comparable pair;
//! composition is left to right.  finalize() derives hom-sets, inverses,
//! inclusion/retraction flags and normal factorizations (tolerantly: holes
//! are reported by the checkers, not thrown).
struct Category {
  int                      num_objects = 0;
  std::vector<int>         dom, cod;
  std::vector<int>         identity;
  std::vector<int>         comp;     // M*M, -1
  std::vector<char>        obj_leq;  // n*n, c subseteq c'
  std::vector<int>         incl;     // n*n -> morphism id, -1 off the order
  std::vector<std::string> obj_label, mor_label;

  // caches (finalize)
  std::vector<int>              inverse;     // -1 when not iso
  std::vector<char>             incl_flag;   // designated inclusions
  std::vector<char>             retr_flag;   // splits some inclusion
  std::vector<std::vector<int>> hom;         // n*n -> morphism ids
  std::vector<int>              epi, image;  // f deg: q u, cod; -1 when absent
  std::vector<std::array<int, 3>> nf;        // least (q,u,j); -1s when absent
  std::vector<char>               nf_unique; // all factorizations agree on f deg
  std::vector<int> retraction_of;            // per morphism: least splitting q
                                             // when the morphism is an inclusion

  int size() const { return static_cast<int>(dom.size()); }
  int compose(int x, int y) const {
    return comp[static_cast<size_t>(x) * size() + y];
  }
  int compose3(int x, int y, int z) const {
    int xy = compose(x, y);
    return xy < 0 ? -1 : compose(xy, z);
  }
  void set_comp(int x, int y, int z) {
    comp[static_cast<size_t>(x) * size() + y] = z;
  }
  bool subobj(int c, int d) const {
    return obj_leq[static_cast<size_t>(c) * num_objects + d];
  }
  int inclusion(int c, int d) const {
    return incl[static_cast<size_t>(c) * num_objects + d];
  }
  bool is_iso(int m) const { return inverse[m] >= 0; }
  std::vector<int> const& homset(int c, int d) const {
    return hom[static_cast<size_t>(c) * num_objects + d];
  }
  int epi_of(int m) const { return epi[m]; }
  int image_of(int m) const { return image[m]; }

  void init_tables() {
    comp.assign(static_cast<size_t>(size()) * size(), -1);
    obj_leq.assign(static_cast<size_t>(num_objects) * num_objects, 0);
    incl.assign(static_cast<size_t>(num_objects) * num_objects, -1);
  }
  void finalize();

  std::string mlabel(int m) const;
  std::string olabel(int c) const;
};

//! Category and subobject-structure sanity: associativity, identities,
//! strict preorder, inclusion composition closure, monomorphisms, and the
//! left-division property (f = hg with f, g inclusions forces h inclusion).
Report check_category_with_subobjects(Category const& C);

struct NormalFactorization {
  int q = -1, u = -1, j = -1;  // retraction, isomorphism, inclusion
};

//! Least factorization f = q u j; throws IgcxError("NoFactorization") when
//! none exists and IgcxError("AmbiguousEpi") when two factorizations give
//! different epimorphic components.
NormalFactorization normal_factorize(Category const& C, int f);

//! NC1 (factorizations exist, epimorphic part unique), NC2 (inclusions
//! split), NC3 (an idempotent cone at every apex, supplied or discovered).
Report check_normal_category(Category const& C,
                             std::vector<struct Cone> const* supplied = nullptr);

//! A cone: apex object plus one morphism from every object, compatible with
//! inclusions, at least one component an isomorphism.
struct Cone {
  int              apex = -1;
  std::vector<int> comp;

  bool operator==(Cone const& o) const {
    return apex == o.apex && comp == o.comp;
  }
  bool operator<(Cone const& o) const {
    return apex != o.apex ? apex < o.apex : comp < o.comp;
  }
};

Report check_cone(Category const& C, Cone const& g);
bool   is_idempotent_cone(Category const& C, Cone const& g);

//! gamma * f for an epimorphism f from the apex: components compose with f.
Cone cone_star(Category const& C, Cone const& g, int f);

//! Cone product gamma . sigma = gamma * (sigma(apex gamma))^epi.
Cone compose_cone(Category const& C, Cone const& g, Cone const& s);

//! Every cone of C, enumerated by free choices at the maximal objects and
//! propagated down the inclusion order.
std::vector<Cone> all_cones(Category const& C);

//! The set Mgamma of objects where the cone component is an isomorphism.
std::vector<int> m_set(Category const& C, Cone const& g);

//! A set of cones closed under the cone product, with its Cayley table
//! exposed as a FiniteSemigroup (element i = cones[i]).
struct ConeSemigroup {
  std::vector<Cone> cones;  // sorted
  FiniteSemigroup   sg;

  int index_of(Cone const& g) const;
};

//! Closure of seeds under the cone product; bound caps the closure size.
ConeSemigroup cone_semigroup(Category const& C, std::vector<Cone> seeds,
                             size_t bound = 100000);

//! The semigroup of all cones T C.
ConeSemigroup all_cone_semigroup(Category const& C);

//! The H-functor of a cone, with the representability isomorphism eta to the
//! hom-functor of the apex.  sets/maps/eta are full tables over the ambient
//! semigroup of all cones; report records well-definedness or ambiguity
//! findings discovered while building.
struct HFunctor {
  int                           cone = -1;  // id in T
  std::vector<std::vector<int>> sets;       // per object: cone ids, sorted
  std::vector<std::vector<int>> maps;       // per morphism: image cone ids
  std::vector<std::vector<int>> eta;        // per object: morphism ids
  Report                        report;
};

HFunctor h_functor(Category const& C, ConeSemigroup const& T, int cone_id);

//! Principal one-sided ideal category of a semigroup.  left = true gives
//! objects Se with partial right translations (e, u, f), u in eSf; otherwise
//! objects eS with partial left translations, u in fSe.  Morphism triples
//! are stored in canonical form.
struct PrincipalCategory {
  Category                        cat;
  bool                            left = true;
  std::vector<int>                obj_e;    // canonical idempotent per object
  std::vector<std::array<int, 3>> mor_euf;  // canonical (e, u, f)

  //! Morphism id of the class of (e, u, f); -1 when the triple is invalid.
  int morphism_of(FiniteSemigroup const& S, int e, int u, int f) const;
  int object_of(FiniteSemigroup const& S, int e) const;
};

PrincipalCategory principal_left_category(FiniteSemigroup const& S);
PrincipalCategory principal_right_category(FiniteSemigroup const& S);

//! Idempotent cone at each apex of a principal category (the translation
//! cones sigma^e); supplied to NC3.
std::vector<Cone> principal_category_cones(FiniteSemigroup const& S,
                                           PrincipalCategory const& P);

//! The normal dual N*C, presented concretely on the semigroup of all cones:
//! objects are R-classes of idempotent cones (equivalently H-functor
//! equality classes) and morphisms are the lambda triples of R_{TC}.
struct NormalDual {
  ConeSemigroup     T;
  PrincipalCategory R;     // R_{TC}; NormalDual owns the presentation
  std::vector<int>  idem;  // idempotent cone ids in T

  //! Dual object of an idempotent cone (its R-class), -1 if not idempotent.
  int object_of(int cone_id) const;
  //! Morphism id of lambda(eps, theta, eps2); -1 when invalid.
  int lambda_of(int eps, int theta, int eps2) const;
};

NormalDual normal_dual(Category const& C);

struct CatFunctor {
  Category const*  src = nullptr;
  Category const*  dst = nullptr;
  std::vector<int> obj_map, mor_map;
};

Report check_functor(CatFunctor const& F);

//! Inclusion preserving, fully faithful, and an isomorphism from each ideal
//! <c> onto <F(c)>.
Report is_local_isomorphism(CatFunctor const& F);

//! Exhaustively verified isomorphism of categories with subobjects: first a
//! canonical candidate (if given), then backtracking search.  Returns the
//! functor on success.
std::optional<CatFunctor> find_isomorphism(Category const& A, Category const& B,
                                           CatFunctor const* candidate = nullptr);

}  // namespace igcx

#endif  // IGCX_CATEGORY_HPP_
