// JSON file formats (v1) for the batch front end.  All writers emit
// ordered_json with fixed key order, and every list is emitted in canonical
// (dimension, index) or sorted-map order, so identical inputs produce
// byte-identical files.
//
// sset/v1:  { "format", "name", "generators": [[names]...],
//             "faces": { gen: [ {"word": [..], "target": gen} ... ] } }
// map/v1:   { "format", "source": sset, "target": sset,
//             "nerve_map"?: bool, "assignment": [ {"of","word","target"} ] }
// cyl/v1:   { "format", "total": sset, "a": sset, "b": sset,
//             "structure"/"incl_a"/"incl_b": assignment arrays }
// cat/v1:   mirrors FiniteCategory::build's arguments
// prof/v1:  mirrors Profunctor's fields, with embedded categories
//
// Loaded objects carry no construction provenance, so checks on them never
// claim certified verdicts that need it.
#pragma once

#include <string>

#include <json.hpp>

#include "cylkit/category.hpp"
#include "cylkit/cylinder.hpp"
#include "cylkit/sset.hpp"
#include "cylkit/verdict.hpp"

namespace cylkit {

using Json = nlohmann::ordered_json;

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json sset_to_json(const SSetPtr& x);
SSetPtr sset_from_json(const Json& j);

// Standalone map files embed both endpoints.
Json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j);

Json cylinder_to_json(const Cylinder& x);
Cylinder cylinder_from_json(const Json& j);

Json category_to_json(const CategoryPtr& c);
CategoryPtr category_from_json(const Json& j);

Json profunctor_to_json(const Profunctor& m);
Profunctor profunctor_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json config_to_json(const RunConfig& c);

// Parse errors are rethrown as JsonError with the file name and the
// parser's byte location.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace cylkit
