#ifndef IGCX_BIORDER_HPP_
#define IGCX_BIORDER_HPP_

#include <array>
#include <string>
#include <vector>

#include "report.hpp"

namespace igcx {

//! A finite biordered set: element ids 0..n-1, a partial basic-product
//! table defined exactly on the comparability domain, and the two derived
//! preorders.  The arrow notation is normalized once and for all:
//!
//!   e <=l f  iff  ef = e        e <=r f  iff  fe = e
//!
//! L = <=l meet its inverse, R = <=r meet its inverse, <= = <=l meet <=r.
//! Instances are immutable after loading and safe for concurrent reads.
class BiorderedSet {
 public:
  BiorderedSet() = default;

  int n = 0;
  // product[e * n + f] is ef, or -1 when (e, f) is outside the domain
  std::vector<int>         product;
  std::vector<std::string> labels;
  std::string              name;

  int at(int e, int f) const { return product[static_cast<size_t>(e) * n + f]; }
  bool defined(int e, int f) const { return at(e, f) >= 0; }

  bool leq_l(int e, int f) const { return _leq_l[static_cast<size_t>(e) * n + f]; }
  bool leq_r(int e, int f) const { return _leq_r[static_cast<size_t>(e) * n + f]; }
  bool rel_l(int e, int f) const { return leq_l(e, f) && leq_l(f, e); }
  bool rel_r(int e, int f) const { return leq_r(e, f) && leq_r(f, e); }
  bool leq(int e, int f) const { return leq_l(e, f) && leq_r(e, f); }
  //! e and f are joined by a basic chain edge (an R- or L-pair).
  bool adjacent(int e, int f) const { return rel_l(e, f) || rel_r(e, f); }

  //! Least element of the L-class (resp. R-class) of e under the id order.
  int lmin(int e) const { return _lmin[e]; }
  int rmin(int e) const { return _rmin[e]; }

  std::vector<int> lclass(int e) const;
  std::vector<int> rclass(int e) const;

  std::string label(int e) const;

  // filled in by load_biorder
  void derive_relations();

 private:
  std::vector<char> _leq_l, _leq_r;
  std::vector<int>  _lmin, _rmin;
};

//! Non-throwing axiom scan used by the CLI `validate` subcommand; checks are
//! named "B1".."B5" (primal/dual clauses separately) plus table shape checks.
Report check_biorder_table(int n, std::vector<int> const& product);

//! Validates B1-B5 eagerly and derives the preorders; throws IgcxError with
//! kind "MalformedTable" or "AxiomViolation" (smallest witness) on failure.
BiorderedSet load_biorder(int n, std::vector<int> const& product,
                          std::vector<std::string> labels = {},
                          std::string              name   = "");

//! The sandwich set S(e, f), by direct evaluation of the quantified
//! definition: h with h <=l e and h <=r f such that every comparable g
//! satisfies gf <=l hf and eg <=r eh.
std::vector<int> sandwich_set(BiorderedSet const& E, int e, int f);

//! A biordered set is regular when every sandwich set is nonempty.
bool is_regular(BiorderedSet const& E);

//! Bimorphism report for theta : E -> E2.  BM1: domains map into domains,
//! BM2: products are preserved, RBM (checked when require_regular): sandwich
//! sets map into sandwich sets.
Report check_bimorphism(BiorderedSet const& E, BiorderedSet const& E2,
                        std::vector<int> const& theta,
                        bool                    require_regular = true);

//! A 2x2 E-square [e f; g h] with e R f L h R g L e.  Rows are R-pairs, the
//! columns L-pairs.  kind: 0 = nonsingular, 1 = row-singular, 2 =
//! column-singular (row wins when a square matches both patterns).
struct ESquare {
  std::array<int, 4> entries;  // e, f, g, h
  int                kind = 0;

  bool singular() const { return kind != 0; }
};

//! All E-squares up to the symmetries of the square (row swap, column swap
//! and their composite), each classified singular or not.
std::vector<ESquare> enumerate_e_squares(BiorderedSet const& E);

}  // namespace igcx

#endif  // IGCX_BIORDER_HPP_
