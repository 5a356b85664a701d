#ifndef IGCX_CROSSCONN_HPP_
#define IGCX_CROSSCONN_HPP_

#include <utility>
#include <vector>

#include "category.hpp"
#include "groupoid.hpp"

namespace igcx {

//! A cross-connection between two normal categories, carried concretely:
//! both cone families (the functor object maps) and both morphism actions in
//! the lambda presentation of the normal duals.  Everything downstream works
//! through tables; validate_crossconnection is the gatekeeper.
struct CrossConnection {
  Category C, D;
  std::vector<Cone> C_cones, D_cones;  // NC3 witnesses

  NormalDual NC;  // N*C, built on the semigroup of all cones of C
  NormalDual ND;  // N*D

  std::vector<int> gamma;      // per D-object: idempotent cone id in NC.T
  std::vector<int> delta;      // per C-object: idempotent cone id in ND.T
  std::vector<int> gamma_mor;  // per D-morphism: morphism id in NC.R.cat
  std::vector<int> delta_mor;  // per C-morphism: morphism id in ND.R.cat

  // derived by derive()
  std::vector<std::pair<int, int>> e_gamma;    // sorted pairs (c, d)
  std::vector<int>                 pair_index; // c * |vD| + d -> index, -1
  std::vector<int>                 gamma_pair; // per pair: cone id, apex c
  std::vector<int>                 delta_pair; // per pair: cone id, apex d

  int pair_of(int c, int d) const {
    return pair_index[static_cast<size_t>(c) * D.num_objects + d];
  }
  //! Canonical partner objects: the apex of the attached cone.
  int partner_of_c(int c) const { return ND.T.cones[delta[c]].apex; }
  int partner_of_d(int d) const { return NC.T.cones[gamma[d]].apex; }

  //! Fills e_gamma and the per-pair unique idempotent cones.
  void derive();
};

//! Builds the normal duals and the derived tables; the caller supplies the
//! categories, cone tables and lambda actions.
CrossConnection assemble_crossconnection(Category C, Category D,
                                         std::vector<Cone> C_cones,
                                         std::vector<Cone> D_cones,
                                         std::vector<int>  gamma,
                                         std::vector<int>  delta,
                                         std::vector<int>  gamma_mor,
                                         std::vector<int>  delta_mor);

//! Local isomorphism, M-surjectivity, per-pair cone uniqueness, duality of
//! E_Gamma and E_Delta, functoriality of both actions.
Report validate_crossconnection(CrossConnection const& x);

//! The regular biordered set on E_Gamma with the four-case basic products;
//! passes load_biorder or propagates the axiom violation.
BiorderedSet biorder_of(CrossConnection const& x);

//! The transpose of f in C(c, c') relative to the pairs p1 = (c,d) and
//! p2 = (c',d'), an element of D(d', d).  verify runs the full commuting
//! diagram against the H-functor eta tables with a uniqueness scan and
//! throws NoTranspose / NonUniqueTranspose on disagreement.
int transpose(CrossConnection const& x, int f, int p1, int p2,
              bool verify = false);

//! Transpose on the D side relative to Delta: g in D(d, d') maps to an
//! element of C(c', c).
int transpose_dual(CrossConnection const& x, int g, int p1, int p2,
                   bool verify = false);

struct CCMorphism {
  std::vector<int> f1_obj, f1_mor;  // C  -> C'
  std::vector<int> f2_obj, f2_mor;  // D  -> D'
};

//! Inclusion preservation, M1 over all pairs and objects, M2 over all
//! transposes between paired objects.
Report check_cc_morphism(CCMorphism const& m, CrossConnection const& x,
                         CrossConnection const& x2);

CCMorphism identity_cc_morphism(CrossConnection const& x);
CCMorphism compose_cc_morphisms(CCMorphism const& m, CCMorphism const& m2);

}  // namespace igcx

#endif  // IGCX_CROSSCONN_HPP_
