#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "gpa/algebra.hpp"
#include "gpa/graph.hpp"
#include "gpa/group.hpp"
#include "gpa/groupoid.hpp"
#include "gpa/semigroup.hpp"

namespace gpa {

// File formats.  Keys serialize in lexicographic order (nlohmann default),
// which makes every dump canonical.
//
//   group:     {"order": m, "table": [[..]]} or "InfiniteCyclic"
//   groupoid:  {"objects": n, "arrows": [{"src": i, "dst": j}, ..],
//               "compose": [[..]], "identities"?: [..], "inverses"?: [..]}
//   semigroup: {"order": m, "table": [[..]], "zero": k | null}
//   graph:     {"vertices": n, "edges": [{"src": i, "dst": j}, ..]}

GroupSpec group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupSpec& g);

FiniteGroupoid groupoid_from_json(const nlohmann::json& j);
nlohmann::json groupoid_to_json(const FiniteGroupoid& g);

InverseSemigroup semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const InverseSemigroup& s);

DirectedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const DirectedGraph& e);

nlohmann::json verdict_to_json(const PrimenessVerdict& v, const std::string& question);

/// Stable 64-bit FNV-1a digest of a canonical dump, hex-encoded.
std::string input_digest(const nlohmann::json& canonical);

nlohmann::json load_json_file(const std::string& path);

}  // namespace gpa
