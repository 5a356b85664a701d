#ifndef IGCX_IG_TO_CC_HPP_
#define IGCX_IG_TO_CC_HPP_

#include <array>
#include <map>
#include <vector>

#include "crossconn.hpp"
#include "groupoid.hpp"

namespace igcx {

//! The sandwich composition (x o y)_h of two groupoid morphisms through a
//! chosen sandwich element h of S(cod x, dom y):
//!   (x corestricted to (cod x)h) eval((cod x)h, h) eval(h, h(dom y))
//!   (h(dom y) restricted y).
//! With h < 0 the least sandwich element is used.
int sandwich_compose(InductiveGroupoid const& G, int x, int y, int h = -1);

//! The canonical representative of the p-class of theta: domain moved to the
//! least element of its R-class, codomain to the least of its L-class, both
//! by eval conjugation.
int p_canonical(InductiveGroupoid const& G, int theta);

//! L_G or R_G: the one-sided normal category of an inductive groupoid.
//! Objects are L-classes (resp. R-classes) of the biordered set; morphisms
//! are canonical triples (base element, p-canonical groupoid morphism,
//! target element).  For the left category the triple [e, a, f> requires the
//! rebased morphism (1_e o a)_h to end L-below f; dually on the right.
struct IgCategory {
  Category                        cat;
  bool                            left = true;
  std::vector<int>                obj_elem;  // canonical element per object
  std::vector<std::array<int, 3>> mor_eaf;   // canonical (e, alpha, f)

  int object_of(InductiveGroupoid const& G, int e) const;
  //! Morphism id of the class of the triple (e, alpha, f); -1 when invalid.
  int morphism_of(InductiveGroupoid const& G, int e, int alpha, int f) const;

  // internal: rebase alpha at the canonical element of an object
  int rebase(InductiveGroupoid const& G, int obj, int alpha) const;

  std::map<std::array<int, 3>, int> index;
};

IgCategory left_category(InductiveGroupoid const& G);
IgCategory right_category(InductiveGroupoid const& G);

//! The principal cone r^alpha in L_G (left) or l^alpha in R_G (right).
Cone principal_cone(InductiveGroupoid const& G, IgCategory const& P,
                    int alpha);

//! NC3 witnesses: the idempotent principal cones r^e (resp. l^e), one per
//! object.
std::vector<Cone> ig_category_cones(InductiveGroupoid const& G,
                                    IgCategory const& P);

//! The cross-connection of an inductive groupoid, bundled with its
//! provenance: the groupoid itself and the two one-sided categories with
//! their triple dictionaries (the cross-connection's C is L.cat and its D is
//! R.cat, morphism ids aligned).
struct IgCrossConnection {
  InductiveGroupoid G;
  IgCategory        L, R;
  CrossConnection   x;
};

//! The functor from inductive groupoids to cross-connections, on objects.
IgCrossConnection cross_connection_of(InductiveGroupoid const& G);

//! ... and on morphisms: the induced pair of functors (F1, F2).
CCMorphism cc_morphism_of(InductiveFunctor const& F,
                          IgCrossConnection const& src,
                          IgCrossConnection const& dst);

}  // namespace igcx

#endif  // IGCX_IG_TO_CC_HPP_
