#ifndef IGCX_CC_TO_IG_HPP_
#define IGCX_CC_TO_IG_HPP_

#include <map>
#include <vector>

#include "crossconn.hpp"
#include "groupoid.hpp"

namespace igcx {

//! The inductive groupoid of a cross-connection: objects are the pairs of
//! E_Gamma, morphisms the transpose-consistent isomorphism pairs (f, g) with
//! g the transpose of f^-1, ordered by epimorphic parts of the inclusion
//! precompositions.  pair_mor maps morphism ids to (dom pair, cod pair,
//! f in C, g in D).
struct CCGroupoid {
  InductiveGroupoid              ig;
  std::vector<std::array<int, 4>> pair_mor;  // (p1, p2, f, g)

  //! Morphism id with first component f between the given pairs; -1 if none.
  int morphism_of(int p1, int p2, int f) const;

  std::map<std::array<int, 3>, int> index;  // (p1, p2, f)
};

//! Builds (G_Gamma, <=_Gamma, eps_Gamma); the biordered set of ig is
//! biorder_of(x).  Pairs whose transpose fails isomorphy are excluded rather
//! than raising (the hom-set may legitimately be empty).
CCGroupoid inductive_groupoid_of(CrossConnection const& x);

//! The named internal sub-contracts of the construction: agreement of the
//! cone-product chain order with the chain calculus on E_Gamma, and the
//! restriction identity (f,g)(gamma'(c'), delta'(d')) =
//! (gamma(c), delta(d))(f1, g1) for every restriction instance.
Report check_cc_groupoid_contracts(CrossConnection const& x,
                                   CCGroupoid const&      GG,
                                   int                    chain_len_cap = 6);

//! The restriction of F1 x F2 to the groupoid of x; passes
//! check_inductive_functor when m is a cross-connection morphism.
InductiveFunctor inductive_functor_of(CCMorphism const& m,
                                      CCGroupoid const& src,
                                      CCGroupoid const& dst,
                                      CrossConnection const& x,
                                      CrossConnection const& x2);

}  // namespace igcx

#endif  // IGCX_CC_TO_IG_HPP_
