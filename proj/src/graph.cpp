#include "gpa/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace gpa {

using nlohmann::json;

int DirectedGraph::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.src == v) ++d;
  return d;
}

std::vector<int> DirectedGraph::sinks() const {
  std::vector<int> out;
  for (int v = 0; v < vertices; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

std::vector<std::vector<bool>> DirectedGraph::reachability() const {
  std::vector<std::vector<bool>> reach(vertices, std::vector<bool>(vertices, false));
  for (int v = 0; v < vertices; ++v) reach[v][v] = true;
  for (const auto& e : edges) reach[e.src][e.dst] = true;
  for (int k = 0; k < vertices; ++k)
    for (int u = 0; u < vertices; ++u)
      if (reach[u][k])
        for (int v = 0; v < vertices; ++v)
          if (reach[k][v]) reach[u][v] = true;
  return reach;
}

std::vector<int> DirectedGraph::exitless_cycle_vertices() const {
  std::vector<int> out;
  for (int start = 0; start < vertices; ++start) {
    if (out_degree(start) != 1) continue;
    int v = start;
    for (int steps = 0; steps < vertices; ++steps) {
      int next = -1;
      for (const auto& e : edges)
        if (e.src == v) {
          next = e.dst;
          break;
        }
      if (next < 0 || out_degree(next) != 1) {
        v = -1;
        break;
      }
      v = next;
      if (v == start) break;
    }
    if (v == start) out.push_back(start);
  }
  return out;
}

std::optional<std::vector<int>> DirectedGraph::find_cycle() const {
  std::vector<int> color(vertices, 0);  // 0 new, 1 active, 2 done
  std::vector<int> stack;
  // Iterative DFS keeping the active path to report the cycle itself.
  std::vector<size_t> edge_pos(vertices, 0);
  for (int root = 0; root < vertices; ++root) {
    if (color[root] != 0) continue;
    stack = {root};
    color[root] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      bool advanced = false;
      for (size_t i = edge_pos[v]; i < edges.size(); ++i) {
        if (edges[i].src != v) continue;
        edge_pos[v] = i + 1;
        const int w = edges[i].dst;
        if (color[w] == 1) {
          const auto it = std::find(stack.begin(), stack.end(), w);
          return std::vector<int>(it, stack.end());
        }
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back(w);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

int Path::end(const DirectedGraph& e) const {
  return edges.empty() ? start : e.edges[edges.back()].dst;
}

DownwardDirected is_downward_directed(const DirectedGraph& e) {
  const auto reach = e.reachability();
  for (int u = 0; u < e.vertices; ++u)
    for (int v = 0; v < e.vertices; ++v) {
      bool common = false;
      for (int w = 0; w < e.vertices && !common; ++w) common = reach[u][w] && reach[v][w];
      if (!common) return {false, VertexPairWitness{u, v}};
    }
  return {true, std::nullopt};
}

ConditionL condition_L(const DirectedGraph& e) {
  const auto bad = e.exitless_cycle_vertices();
  if (bad.empty()) return {true, std::nullopt};
  // Reconstruct one exit-free cycle by following the unique edges.
  std::vector<int> cycle;
  int v = bad.front();
  do {
    cycle.push_back(v);
    for (const auto& edge : e.edges)
      if (edge.src == v) {
        v = edge.dst;
        break;
      }
  } while (v != bad.front());
  return {false, cycle};
}

CspResult has_csp(const DirectedGraph& e) {
  // Finite vertex set: X = E^0 always separates.  The minimal witness has
  // one representative per terminal strongly connected component.
  const auto reach = e.reachability();
  std::vector<int> comp(e.vertices, -1);
  int ncomp = 0;
  for (int v = 0; v < e.vertices; ++v) {
    if (comp[v] >= 0) continue;
    for (int u = 0; u < e.vertices; ++u)
      if (reach[v][u] && reach[u][v]) comp[u] = ncomp;
    ++ncomp;
  }
  std::vector<bool> terminal(ncomp, true);
  for (const auto& edge : e.edges)
    if (comp[edge.src] != comp[edge.dst]) terminal[comp[edge.src]] = false;
  std::vector<int> witness;
  std::vector<bool> taken(ncomp, false);
  for (int v = 0; v < e.vertices; ++v)
    if (terminal[comp[v]] && !taken[comp[v]]) {
      witness.push_back(v);
      taken[comp[v]] = true;
    }
  return {true, witness};
}

bool csp_witness_valid(const DirectedGraph& e, const std::vector<int>& witness) {
  const auto reach = e.reachability();
  for (int v = 0; v < e.vertices; ++v) {
    bool separated = false;
    for (int x : witness)
      if (x >= 0 && x < e.vertices && reach[v][x]) {
        separated = true;
        break;
      }
    if (!separated) return false;
  }
  return true;
}

std::vector<Path> enumerate_paths(const DirectedGraph& e, int depth) {
  std::vector<Path> out;
  for (int v = 0; v < e.vertices; ++v) out.push_back({v, {}});
  size_t level_begin = 0;
  for (int len = 1; len <= depth; ++len) {
    const size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      const int tail = out[i].end(e);
      for (int ei = 0; ei < static_cast<int>(e.edges.size()); ++ei) {
        if (e.edges[ei].src != tail) continue;
        Path p = out[i];
        p.edges.push_back(ei);
        out.push_back(std::move(p));
      }
    }
    level_begin = level_end;
  }
  return out;
}

PathSample boundary_paths(const DirectedGraph& e, int depth) {
  if (depth < 0) throw InvalidInput("depth must be >= 0");
  PathSample sample;
  sample.depth = depth;
  const auto exitless = e.exitless_cycle_vertices();
  const auto on_exitless = [&](int v) {
    return std::find(exitless.begin(), exitless.end(), v) != exitless.end();
  };
  for (const Path& p : enumerate_paths(e, depth)) {
    const int tail = p.end(e);
    if (e.is_sink(tail)) {
      sample.entries.push_back({p, true, PathSample::Entry::Periodicity::not_applicable});
    } else if (p.length() == depth) {
      // A prefix that has entered an exit-free cycle has a forced periodic
      // continuation; anything else is unknown at this depth.
      const auto flag = on_exitless(tail) ? PathSample::Entry::Periodicity::eventually_periodic
                                          : PathSample::Entry::Periodicity::unknown;
      sample.entries.push_back({p, false, flag});
    }
  }
  return sample;
}

// ---------------------------------------------------------------------------

int AcyclicGraphGroupoid::object_of(const Path& p, const DirectedGraph& e) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].start == p.start && objects[i].edges == p.edges) return static_cast<int>(i);
  (void)e;
  throw InvalidInput("path is not a boundary path of the graph");
}

AcyclicGraphGroupoid acyclic_graph_groupoid(const DirectedGraph& e) {
  if (const auto cycle = e.find_cycle()) {
    std::string names;
    for (int v : *cycle) names += (names.empty() ? "" : " -> ") + std::to_string(v);
    throw ValidationError("NotAcyclic", "cycle " + names);
  }

  AcyclicGraphGroupoid out;
  // Longest path length bounds the exploration; acyclic, so vertices - 1.
  for (const Path& p : enumerate_paths(e, std::max(e.vertices - 1, 0)))
    if (e.is_sink(p.end(e))) out.objects.push_back(p);

  const int n = static_cast<int>(out.objects.size());
  constexpr long kArrowCap = 200000;
  std::vector<int> sink_of(n);
  long arrow_estimate = 0;
  std::map<int, std::vector<int>> by_sink;
  for (int i = 0; i < n; ++i) {
    sink_of[i] = out.objects[i].end(e);
    by_sink[sink_of[i]].push_back(i);
  }
  for (const auto& [sink, members] : by_sink)
    arrow_estimate += static_cast<long>(members.size()) * static_cast<long>(members.size());
  if (arrow_estimate > kArrowCap)
    throw CapExceeded(static_cast<std::uint64_t>(arrow_estimate), kArrowCap);

  // Two boundary paths share a suffix exactly when they end at the same
  // sink, so each sink contributes one pair-groupoid block.
  GroupoidData data;
  data.objects = n;
  std::map<std::pair<int, int>, int> arrow_id;
  for (const auto& [sink, members] : by_sink)
    for (int dst : members)
      for (int src : members) {
        arrow_id[{dst, src}] = static_cast<int>(data.arrows.size());
        data.arrows.push_back({src, dst});
        out.arrow_pair.emplace_back(dst, src);
      }
  const int a = static_cast<int>(data.arrows.size());
  data.compose.assign(a, std::vector<int>(a, -1));
  for (int lhs = 0; lhs < a; ++lhs)
    for (int rhs = 0; rhs < a; ++rhs) {
      const auto [z, y1] = out.arrow_pair[lhs];
      const auto [y2, x] = out.arrow_pair[rhs];
      if (y1 != y2) continue;
      if (sink_of[z] != sink_of[x]) continue;
      data.compose[lhs][rhs] = arrow_id.at({z, x});
    }
  out.groupoid = FiniteGroupoid::validate(data);
  return out;
}

namespace {

// Cylinder-diagonal bisection of a vertex: identities of all boundary
// paths starting there.
Bisection vertex_bisection(const AcyclicGraphGroupoid& g, int v) {
  Bisection b;
  for (size_t i = 0; i < g.objects.size(); ++i)
    if (g.objects[i].start == v)
      b.arrows.push_back(g.groupoid.identity_arrow(static_cast<int>(i)));
  std::sort(b.arrows.begin(), b.arrows.end());
  return b;
}

// One-step shift bisection of an edge: gamma -> (edge)gamma.
Bisection edge_bisection(const AcyclicGraphGroupoid& g, const DirectedGraph& e, int edge) {
  Bisection b;
  for (size_t i = 0; i < g.objects.size(); ++i) {
    if (g.objects[i].start != e.edges[edge].dst) continue;
    Path extended;
    extended.start = e.edges[edge].src;
    extended.edges.push_back(edge);
    extended.edges.insert(extended.edges.end(), g.objects[i].edges.begin(),
                          g.objects[i].edges.end());
    const int j = g.object_of(extended, e);
    // Arrow from object i to object j within the sink block.
    for (size_t arrow = 0; arrow < g.arrow_pair.size(); ++arrow)
      if (g.arrow_pair[arrow] == std::make_pair(j, static_cast<int>(i)))
        b.arrows.push_back(static_cast<int>(arrow));
  }
  std::sort(b.arrows.begin(), b.arrows.end());
  return b;
}

}  // namespace

bool leavitt_relations_check(const DirectedGraph& e, const RingSpec& ring) {
  const AcyclicGraphGroupoid g = acyclic_graph_groupoid(e);
  const FiniteGroupoid* gpd = &g.groupoid;

  std::vector<AlgebraElem> vert, edge, edge_star;
  for (int v = 0; v < e.vertices; ++v)
    vert.push_back(AlgebraElem::indicator(gpd, ring, vertex_bisection(g, v)));
  for (int ei = 0; ei < static_cast<int>(e.edges.size()); ++ei) {
    const Bisection b = edge_bisection(g, e, ei);
    edge.push_back(AlgebraElem::indicator(gpd, ring, b));
    edge_star.push_back(AlgebraElem::indicator(gpd, ring, g.groupoid.invert_bisection(b)));
  }

  // Vertices are pairwise orthogonal idempotents.
  for (int u = 0; u < e.vertices; ++u)
    for (int v = 0; v < e.vertices; ++v) {
      const AlgebraElem prod = vert[u].convolve(vert[v]);
      if (u == v && prod != vert[u]) return false;
      if (u != v && !prod.is_zero()) return false;
    }
  for (int ei = 0; ei < static_cast<int>(e.edges.size()); ++ei) {
    // (1) s(e) e = e = e r(e)   (2) r(e) e* = e* = e* s(e)
    if (vert[e.edges[ei].src].convolve(edge[ei]) != edge[ei]) return false;
    if (edge[ei].convolve(vert[e.edges[ei].dst]) != edge[ei]) return false;
    if (vert[e.edges[ei].dst].convolve(edge_star[ei]) != edge_star[ei]) return false;
    if (edge_star[ei].convolve(vert[e.edges[ei].src]) != edge_star[ei]) return false;
    // (3) e* e' = [e = e'] r(e)
    for (int ej = 0; ej < static_cast<int>(e.edges.size()); ++ej) {
      const AlgebraElem prod = edge_star[ei].convolve(edge[ej]);
      if (ei == ej && prod != vert[e.edges[ei].dst]) return false;
      if (ei != ej && !prod.is_zero()) return false;
    }
  }
  // (4) v = sum of e e* over edges leaving v, for non-sinks.
  for (int v = 0; v < e.vertices; ++v) {
    if (e.is_sink(v)) continue;
    AlgebraElem sum(gpd, ring);
    for (int ei = 0; ei < static_cast<int>(e.edges.size()); ++ei)
      if (e.edges[ei].src == v) sum = sum + edge[ei].convolve(edge_star[ei]);
    if (sum != vert[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

PrimenessVerdict leavitt_prime_verdict(const DirectedGraph& e, const RingSpec& ring) {
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  const DownwardDirected dd = is_downward_directed(e);
  if (!ring.is_integral_domain()) {
    v.decision = false;
    v.reason = "coefficient ring " + ring.to_string() + " is not an integral domain";
    v.witness = json{{"kind", "non_domain_ring"}};
  } else if (!dd.holds) {
    v.decision = false;
    v.reason = "not downward directed: vertices " + std::to_string(dd.witness->u) + " and " +
               std::to_string(dd.witness->v) + " flow to no common vertex";
    v.witness = json{{"kind", "not_downward_directed"},
                     {"vertices", {dd.witness->u, dd.witness->v}}};
  } else {
    v.decision = true;
    v.reason = ring.to_string() +
               " is an integral domain and the graph is downward directed";
  }

  if (!e.find_cycle()) {
    const PrimenessVerdict structural =
        structural_is_prime(acyclic_graph_groupoid(e).groupoid, ring);
    if (structural.decision != v.decision)
      throw InternalDisagreement(
          "graph-level primeness disagrees with the boundary path groupoid");
  }
  return v;
}

PrimenessVerdict leavitt_semiprime_verdict(const RingSpec& ring) {
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  if (ring.is_reduced()) {
    v.decision = true;
    v.reason = ring.to_string() +
               " is reduced; isotropy groups are trivial or infinite cyclic and Laurent rings "
               "over reduced rings are reduced, so the verdict is graph-independent";
  } else {
    v.decision = false;
    v.reason = "coefficient ring " + ring.to_string() + " is not reduced";
    v.witness = json{{"kind", "non_reduced_ring"}};
  }
  return v;
}

PrimenessVerdict leavitt_primitive_verdict(const DirectedGraph& e, const RingSpec& ring) {
  const bool field = ring.kind() == RingSpec::Kind::Rationals ||
                     (ring.kind() == RingSpec::Kind::IntegersMod && ring.is_integral_domain());
  if (!field)
    throw ValidationError("NotAField", ring.to_string() + " is not a supported field");

  const ConditionL cl = condition_L(e);
  const DownwardDirected dd = is_downward_directed(e);
  const CspResult csp = has_csp(e);

  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  v.decision = cl.holds && dd.holds && csp.holds;
  v.reason = std::string("condition (L): ") + (cl.holds ? "yes" : "no") +
             "; downward directed: " + (dd.holds ? "yes" : "no") +
             "; countable separation: " + (csp.holds ? "yes" : "no");
  json w{{"kind", "primitivity_clauses"},
         {"condition_L", cl.holds},
         {"downward_directed", dd.holds},
         {"csp", csp.holds}};
  if (cl.witness_cycle) w["exitless_cycle"] = *cl.witness_cycle;
  if (dd.witness) w["unseparated"] = {dd.witness->u, dd.witness->v};
  w["csp_witness"] = csp.witness;
  v.witness = w;
  return v;
}

bool transitivity_crosscheck(const DirectedGraph& e, int depth) {
  if (depth < 1) throw InvalidInput("depth must be >= 1");
  const auto reach = e.reachability();
  const auto cylinders = enumerate_paths(e, depth);

  // An arrow joins two cylinders exactly when some vertex is reachable
  // from both base-path endpoints.
  bool all = true;
  for (const Path& alpha : cylinders) {
    for (const Path& beta : cylinders) {
      const int u = alpha.end(e), v = beta.end(e);
      bool common = false;
      for (int w = 0; w < e.vertices && !common; ++w) common = reach[u][w] && reach[v][w];
      if (!common) {
        all = false;
        break;
      }
    }
    if (!all) break;
  }
  const DownwardDirected dd = is_downward_directed(e);
  if (all != dd.holds)
    throw InternalDisagreement("cylinder-level transitivity disagrees with downward directedness");
  return all;
}

}  // namespace gpa
