#ifndef IGCX_EQUIVALENCE_HPP_
#define IGCX_EQUIVALENCE_HPP_

#include <string>
#include <vector>

#include "cc_to_ig.hpp"
#include "fixtures.hpp"
#include "ig_to_cc.hpp"

namespace igcx {

//! Verdict of one direction of the equivalence on a concrete instance:
//! the isomorphism components, every check that went into the verdict, and
//! the naturality squares for the supplied test morphisms.
struct RoundTripReport {
  std::string direction;  // "cr-side" or "ig-side"
  Report      checks;
  int         naturality_squares = 0;
  bool        pass() const { return checks.ok(); }
};

//! The cr-side natural isomorphism at x: verifies that the canonical functor
//! pair into the cross-connection of the groupoid of x is an isomorphism of
//! cross-connections.  GG is the groupoid of x and round is the
//! cross-connection built from it.  Test morphisms m : src -> x feed the
//! naturality squares (src comes with its own groupoid and round trip).
struct CCTest {
  CCMorphism               m;  // src -> x
  CrossConnection const*   src;
  CCGroupoid const*        src_g;
  IgCrossConnection const* src_round;
};

RoundTripReport iso_cr(CrossConnection const& x, CCGroupoid const& GG,
                       IgCrossConnection const& round,
                       std::vector<CCTest> const& tests = {});

//! The ig-side natural isomorphism at G: the functor e -> (<-e, ->e),
//! alpha -> ([d a, a, r a>, <d a, a^-1, r a]) into the groupoid of the
//! cross-connection of G, verified to be an inductive isomorphism.  Test
//! functors F : src -> G feed the naturality squares.
struct IGTest {
  InductiveFunctor         F;  // src -> G
  IgCrossConnection const* src_cc;
  CCGroupoid const*        src_g;
};

RoundTripReport iso_ig(InductiveGroupoid const& G, IgCrossConnection const& cc,
                       CCGroupoid const& GG,
                       std::vector<IGTest> const& tests = {});

//! Both directions for a semigroup fixture, including naturality squares for
//! the identity and the fixture's registered test morphisms.
struct SemigroupRoundTrip {
  std::string     name;
  RoundTripReport ig_side, cr_side;
  Report          preparation;  // inductive + cross-connection validation
  bool pass() const {
    return preparation.ok() && ig_side.pass() && cr_side.pass();
  }
};

SemigroupRoundTrip roundtrip_semigroup(FiniteSemigroup const& S);

}  // namespace igcx

#endif  // IGCX_EQUIVALENCE_HPP_
