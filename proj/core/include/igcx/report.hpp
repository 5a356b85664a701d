#ifndef IGCX_REPORT_HPP_
#define IGCX_REPORT_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace igcx {

//! Thrown when an input structure is rejected outright (malformed tables,
//! axiom failures at load time, unsatisfiable preconditions).  The kind
//! string is stable and machine-readable ("AxiomViolation", "MalformedTable",
//! "NotAPath", ...); the witness holds the smallest offending tuple in
//! lexicographic id order.
class IgcxError : public std::runtime_error {
 public:
  IgcxError(std::string kind, std::string msg, std::vector<int> witness = {})
      : std::runtime_error(kind + ": " + msg),
        _kind(std::move(kind)),
        _witness(std::move(witness)) {}

  std::string const&      kind() const noexcept { return _kind; }
  std::vector<int> const& witness() const noexcept { return _witness; }

 private:
  std::string      _kind;
  std::vector<int> _witness;
};

//! One verified condition: the check name, whether it held, and (on failure)
//! the smallest witness tuple plus a human-readable detail line.
struct CheckItem {
  std::string      check;
  bool             pass = true;
  std::vector<int> witness;
  std::string      detail;
};

//! An ordered list of check results.  Checkers append failures as they find
//! them, always scanning in increasing id order so the recorded witness is
//! the lexicographically least one.
struct Report {
  std::vector<CheckItem> items;

  bool ok() const {
    for (auto const& it : items) {
      if (!it.pass) {
        return false;
      }
    }
    return true;
  }

  void pass(std::string const& check) { items.push_back({check, true, {}, ""}); }

  void fail(std::string const& check, std::vector<int> witness,
            std::string detail = "") {
    items.push_back({check, false, std::move(witness), std::move(detail)});
  }

  //! Record at most one failure per check name (the first = least witness).
  bool has_failure(std::string const& check) const {
    for (auto const& it : items) {
      if (!it.pass && it.check == check) {
        return true;
      }
    }
    return false;
  }

  void merge(Report const& other, std::string const& prefix = "") {
    for (auto it : other.items) {
      if (!prefix.empty()) {
        it.check = prefix + it.check;
      }
      items.push_back(std::move(it));
    }
  }

  std::string summary() const {
    std::ostringstream os;
    size_t             fails = 0;
    for (auto const& it : items) {
      if (!it.pass) {
        ++fails;
        os << "FAIL " << it.check << " witness=[";
        for (size_t i = 0; i < it.witness.size(); ++i) {
          os << (i ? "," : "") << it.witness[i];
        }
        os << "]";
        if (!it.detail.empty()) {
          os << " " << it.detail;
        }
        os << "\n";
      }
    }
    if (fails == 0) {
      os << "all " << items.size() << " checks passed\n";
    }
    return os.str();
  }
};

namespace detail {
template <typename... Args>
std::string msg(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

}  // namespace igcx

#endif  // IGCX_REPORT_HPP_
