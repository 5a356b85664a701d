#ifndef IGCX_ECHAIN_HPP_
#define IGCX_ECHAIN_HPP_

#include <vector>

#include "biorder.hpp"
#include "report.hpp"

namespace igcx {

//! An E-chain in canonical reduced form: a nonempty sequence of elements in
//! which consecutive entries are R- or L-related, no entry stutters, and no
//! internal entry is inessential (both neighbours through the same relation).
//! The canonical representative is the left-to-right removal fixed point;
//! reduce is idempotent and confluence is oracle-tested against the full
//! equivalence closure on short paths.
struct EChain {
  std::vector<int> seq;

  int  dom() const { return seq.front(); }
  int  cod() const { return seq.back(); }
  bool operator==(EChain const& o) const { return seq == o.seq; }
  bool operator<(EChain const& o) const { return seq < o.seq; }
};

//! Throws IgcxError("NotAPath") if consecutive entries are unrelated.
EChain reduce_path(BiorderedSet const& E, std::vector<int> const& path);

//! Concatenate at the shared endpoint, then reduce.  Throws
//! IgcxError("NotComposable") when cod(c) != dom(c2).
EChain compose_chains(BiorderedSet const& E, EChain const& c, EChain const& c2);

EChain reverse_chain(EChain const& c);

//! The h-recursion path of c2 lowered to domain e: h1 = e and
//! h_i = (f_i h_{i-1}) f_i.  Requires e <= dom(c2); the reduced result is the
//! restriction of c2 to e in the chain groupoid.
EChain restrict_chain(BiorderedSet const& E, int e, EChain const& c2);

//! The order <=_E: dom(c) <= dom(c2) and c equals the reduction of the
//! h-recursion path of c2 at dom(c).
bool chain_leq(BiorderedSet const& E, EChain const& c, EChain const& c2);

struct ChainClosureOptions {
  int max_len        = 0;  // 0: derived from E (2n)
  int max_morphisms  = 0;  // 0: derived from E (2n^2)
  bool require_complete = false;
};

//! Breadth-first closure of the identity chains and basic R/L-pairs under
//! composition.  complete is true when the closure stabilized below both
//! caps, in which case chains is the whole of G(E); otherwise chains is the
//! window of every reduced chain reachable within the caps.  With
//! require_complete set, a non-stabilizing closure throws
//! IgcxError("ClosureBoundExceeded").
struct ChainGroupoid {
  BiorderedSet        E;
  std::vector<EChain> chains;  // sorted, index = morphism id
  bool                complete = false;

  int index_of(EChain const& c) const;  // -1 when outside the window
};

ChainGroupoid chain_groupoid(BiorderedSet const& E,
                             ChainClosureOptions opts = {});

//! Ordered-groupoid axioms evaluated through the chain calculus on the
//! materialized window: composites, inverses and restrictions are computed
//! exactly (they may leave the window; order comparisons still decide).
//! Includes the restriction-uniqueness scan for all (e, chain) pairs.
Report check_chain_groupoid(ChainGroupoid const& cg);

//! Explicit tables for a stabilized closure; requires cg.complete.  Object i
//! is element i of E, morphism i is cg.chains[i].
struct Groupoid;  // groupoid.hpp
Groupoid materialize_groupoid(ChainGroupoid const& cg);

}  // namespace igcx

#endif  // IGCX_ECHAIN_HPP_
