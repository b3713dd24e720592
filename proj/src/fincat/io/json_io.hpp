#pragma once

#include <json.hpp>

#include "fincat/dsl/loader.hpp"
#include "fincat/ind.hpp"

namespace fincat::io {

using nlohmann::json;

// Category serialization; exports re-import to data passing validate().
json category_to_json(const FiniteCategory& cat);
// Throws fincat::Error on malformed input; the result is sealed, not yet
// validated (callers decide whether to enforce the laws).
FiniteCategory category_from_json(const json& j);

json functor_to_json(const Functor& f);
json nat_to_json(const NatTrans& t);
json ind_object_to_json(const IndObject& x);
json report_to_json(const Report& rep);
json diagnostics_to_json(const std::vector<dsl::Diagnostic>& diags);

std::string elt_to_string(const FiniteCategory& cat, ObjId a, ObjId b, const Elt& e);

// DOT digraph of a finite category: one node per object, one edge per
// element/basis morphism (identities included).
std::string category_to_dot(const FiniteCategory& cat);

}  // namespace fincat::io
