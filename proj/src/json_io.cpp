#include "gpa/json_io.hpp"

#include <fstream>

namespace gpa {

using nlohmann::json;

GroupSpec group_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "InfiniteCyclic") return GroupSpec::infinite_cyclic();
    throw InvalidInput("unknown group literal '" + j.get<std::string>() + "'");
  }
  const auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw InvalidInput("declared order does not match the table");
  return GroupSpec::of(FiniteGroup::validate(table));
}

json group_to_json(const GroupSpec& g) {
  if (g.is_infinite_cyclic()) return "InfiniteCyclic";
  const FiniteGroup& fg = *g.finite;
  std::vector<std::vector<int>> table(fg.order(), std::vector<int>(fg.order()));
  for (int i = 0; i < fg.order(); ++i)
    for (int j2 = 0; j2 < fg.order(); ++j2) table[i][j2] = fg.op(i, j2);
  return json{{"order", fg.order()}, {"table", table}};
}

FiniteGroupoid groupoid_from_json(const json& j) {
  GroupoidData data;
  data.objects = j.at("objects").get<int>();
  for (const auto& arrow : j.at("arrows"))
    data.arrows.push_back({arrow.at("src").get<int>(), arrow.at("dst").get<int>()});
  data.compose = j.at("compose").get<std::vector<std::vector<int>>>();
  if (j.contains("identities") && !j.at("identities").is_null())
    data.identities = j.at("identities").get<std::vector<int>>();
  if (j.contains("inverses") && !j.at("inverses").is_null())
    data.inverses = j.at("inverses").get<std::vector<int>>();
  return FiniteGroupoid::validate(data);
}

json groupoid_to_json(const FiniteGroupoid& g) {
  const GroupoidData data = g.data();
  json arrows = json::array();
  for (const auto& a : data.arrows) arrows.push_back(json{{"src", a.src}, {"dst", a.dst}});
  return json{{"objects", data.objects},
              {"arrows", arrows},
              {"compose", data.compose},
              {"identities", *data.identities},
              {"inverses", *data.inverses}};
}

InverseSemigroup semigroup_from_json(const json& j) {
  const auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw InvalidInput("declared order does not match the table");
  InverseSemigroup s = InverseSemigroup::validate(table);
  if (j.contains("zero") && !j.at("zero").is_null()) {
    const int declared = j.at("zero").get<int>();
    if (!s.zero() || *s.zero() != declared)
      throw InvalidInput("declared zero " + std::to_string(declared) +
                         " is not the zero of the table");
  }
  return s;
}

json semigroup_to_json(const InverseSemigroup& s) {
  std::vector<std::vector<int>> table(s.order(), std::vector<int>(s.order()));
  for (int i = 0; i < s.order(); ++i)
    for (int j2 = 0; j2 < s.order(); ++j2) table[i][j2] = s.op(i, j2);
  json out{{"order", s.order()}, {"table", table}};
  out["zero"] = s.zero() ? json(*s.zero()) : json(nullptr);
  return out;
}

DirectedGraph graph_from_json(const json& j) {
  DirectedGraph e;
  e.vertices = j.at("vertices").get<int>();
  if (e.vertices < 0) throw InvalidInput("negative vertex count");
  for (const auto& edge : j.at("edges")) {
    const int src = edge.at("src").get<int>();
    const int dst = edge.at("dst").get<int>();
    if (src < 0 || src >= e.vertices || dst < 0 || dst >= e.vertices)
      throw InvalidInput("edge endpoint out of range");
    e.edges.push_back({src, dst});
  }
  return e;
}

json graph_to_json(const DirectedGraph& e) {
  json edges = json::array();
  for (const auto& edge : e.edges) edges.push_back(json{{"src", edge.src}, {"dst", edge.dst}});
  return json{{"vertices", e.vertices}, {"edges", edges}};
}

json verdict_to_json(const PrimenessVerdict& v, const std::string& question) {
  json out;
  out[question] = v.decision;
  out["method"] =
      v.method == PrimenessVerdict::Method::structural ? "structural" : "bruteforce";
  out["reason"] = v.reason;
  out["witness"] = v.witness ? *v.witness : json(nullptr);
  return out;
}

std::string input_digest(const json& canonical) {
  const std::string text = canonical.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace gpa
