#ifndef IGCX_FIXTURES_HPP_
#define IGCX_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "category.hpp"
#include "groupoid.hpp"
#include "semigroup.hpp"

namespace igcx {

//! Named Cayley tables used throughout the suites: left_zero(k),
//! right_zero(k), rect_band(m,k), semilattice_chain(k), brandt2,
//! full_transformation(k<=3), symmetric_inverse(k<=2).
//! Throws UnknownFixture / SizeBound.
FiniteSemigroup builtin(std::string const& name, std::vector<int> params = {});

std::vector<std::string> builtin_names();

//! The inductive groupoid of a regular semigroup: objects E(S), morphisms
//! (e, x, f) with e R x L f, componentwise composition, the natural order,
//! and the evaluation functor on basic pairs.  Its validity is established
//! by check_inductive, never assumed.
InductiveGroupoid trace_groupoid(FiniteSemigroup const& S);

//! Both principal ideal categories (L_S, R_S) with their translation cones
//! attached for NC3.
struct PrincipalPair {
  PrincipalCategory L, R;
  std::vector<Cone> L_cones, R_cones;
};
PrincipalPair principal_categories(FiniteSemigroup const& S);

//! The trace-groupoid functor induced by a semigroup homomorphism
//! phi : S -> S2 (checked); object map e -> phi(e), morphism map
//! (e,x,f) -> (phi e, phi x, phi f).
InductiveFunctor induced_functor(InductiveGroupoid const& G,
                                 FiniteSemigroup const&   S,
                                 InductiveGroupoid const& G2,
                                 FiniteSemigroup const&   S2,
                                 std::vector<int> const&  phi);

//! Nonidentity test morphisms per fixture: an automorphism where one exists
//! and an embedding from a smaller fixture.  Each entry is (source semigroup,
//! element map into S).
std::vector<std::pair<FiniteSemigroup, std::vector<int>>> test_morphisms_into(
    FiniteSemigroup const& S);

//! The (e, x, f) triples of a trace groupoid in morphism-id order;
//! reconstructed from S so callers can index morphisms by content.
std::vector<std::array<int, 3>> trace_triples(InductiveGroupoid const& G,
                                              FiniteSemigroup const&   S);

}  // namespace igcx

#endif  // IGCX_FIXTURES_HPP_
