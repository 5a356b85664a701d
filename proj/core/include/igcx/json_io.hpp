#ifndef IGCX_JSON_IO_HPP_
#define IGCX_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "crossconn.hpp"
#include "equivalence.hpp"
#include "fixtures.hpp"

namespace igcx {

using json = nlohmann::json;

// Canonical JSON: objects carry sorted keys (nlohmann's default map), arrays
// follow the engine's deterministic id orders, all numbers are exact
// integers.  The same bytes come out of the same input every run.

json to_json(FiniteSemigroup const& S);
json to_json(BiorderedSet const& E);
json to_json(InductiveGroupoid const& G);
json to_json(Category const& C, std::vector<Cone> const* cones = nullptr);
json to_json(CrossConnection const& x);
json to_json(Report const& r);
json to_json(RoundTripReport const& r);
json to_json(SemigroupRoundTrip const& rt);

FiniteSemigroup   semigroup_from_json(json const& j);
BiorderedSet      biorder_from_json(json const& j);
InductiveGroupoid groupoid_from_json(json const& j);
Category          category_from_json(json const& j, std::vector<Cone>* cones);
CrossConnection   crossconnection_from_json(json const& j);

//! "semigroup", "biorder", "inductive_groupoid", "normal_category",
//! "cross_connection"; inferred from the fields when "kind" is absent.
std::string detect_kind(json const& j);

}  // namespace igcx

#endif  // IGCX_JSON_IO_HPP_
