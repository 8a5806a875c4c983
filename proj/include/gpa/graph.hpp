#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpa/algebra.hpp"
#include "gpa/groupoid.hpp"

namespace gpa {

/// A finite directed graph (parallel edges and loops allowed).
struct DirectedGraph {
  int vertices = 0;
  struct Edge {
    int src;
    int dst;
  };
  std::vector<Edge> edges;

  int out_degree(int v) const;
  bool is_sink(int v) const { return out_degree(v) == 0; }
  std::vector<int> sinks() const;
  /// reach[u][v]: a (possibly empty) directed path runs from u to v.
  std::vector<std::vector<bool>> reachability() const;
  /// Vertices lying on some cycle all of whose vertices have out-degree 1.
  std::vector<int> exitless_cycle_vertices() const;
  std::optional<std::vector<int>> find_cycle() const;  // vertices of one cycle
};

/// A finite path: its start vertex and edge ids (empty paths allowed).
struct Path {
  int start = 0;
  std::vector<int> edges;
  int end(const DirectedGraph& e) const;
  int length() const { return static_cast<int>(edges.size()); }
};

struct VertexPairWitness {
  int u, v;
};

/// Downward directedness (every vertex pair flows to a common vertex),
/// with a failing pair on the negative side.
struct DownwardDirected {
  bool holds;
  std::optional<VertexPairWitness> witness;
};
DownwardDirected is_downward_directed(const DirectedGraph& e);

/// Every cycle has an exit.  Decided by restriction to out-degree-1
/// vertices: a cycle lacks an exit exactly when all its vertices have
/// out-degree 1.  The witness is such a cycle (as a vertex list).
struct ConditionL {
  bool holds;
  std::optional<std::vector<int>> witness_cycle;
};
ConditionL condition_L(const DirectedGraph& e);

/// Countable separation: some vertex set X is reachable from everywhere.
/// Finite graphs always qualify with X = all vertices; the witness is the
/// minimal X (one representative per terminal strongly connected
/// component).
struct CspResult {
  bool holds;
  std::vector<int> witness;
};
CspResult has_csp(const DirectedGraph& e);
bool csp_witness_valid(const DirectedGraph& e, const std::vector<int>& witness);

/// Truncated exploration of the boundary path space: complete members
/// (finite paths ending at sinks) of length <= depth, plus length-depth
/// prefixes of longer or infinite paths.
struct PathSample {
  struct Entry {
    Path path;
    bool complete;  // a boundary path itself, else a proper prefix
    enum class Periodicity { not_applicable, eventually_periodic, unknown } periodicity;
  };
  int depth = 0;
  std::vector<Entry> entries;
};
PathSample boundary_paths(const DirectedGraph& e, int depth);

/// The boundary path groupoid of an acyclic graph: objects are the finite
/// paths into sinks, arrows the shift maps between paths sharing a suffix
/// (one pair-groupoid block per sink).
struct AcyclicGraphGroupoid {
  FiniteGroupoid groupoid;
  std::vector<Path> objects;                    // object i is this path
  std::vector<std::pair<int, int>> arrow_pair;  // arrow -> (dst object, src object)
  int object_of(const Path& p, const DirectedGraph& e) const;
};
AcyclicGraphGroupoid acyclic_graph_groupoid(const DirectedGraph& e);

/// Verify the Leavitt relations inside the convolution algebra of the
/// boundary path groupoid: vertices map to cylinder diagonals, edges to
/// one-step shift bisections.
bool leavitt_relations_check(const DirectedGraph& e, const RingSpec& ring);

/// Prime iff the ring is an integral domain and the graph is downward
/// directed; cross-checked against the structural decision on the
/// boundary path groupoid whenever the graph is acyclic.
PrimenessVerdict leavitt_prime_verdict(const DirectedGraph& e, const RingSpec& ring);

/// Semiprime iff the ring is reduced, independent of the graph (isotropy
/// is trivial or infinite cyclic, and Laurent rings over reduced rings are
/// reduced).
PrimenessVerdict leavitt_semiprime_verdict(const RingSpec& ring);

/// Primitive over a field iff condition (L), downward directedness and
/// countable separation all hold; the verdict lists each clause.
PrimenessVerdict leavitt_primitive_verdict(const DirectedGraph& e, const RingSpec& ring);

/// For all cylinder handles of depth <= k, decide arrow existence between
/// them and check the aggregate equals downward directedness.
bool transitivity_crosscheck(const DirectedGraph& e, int depth);

/// All paths of length <= depth (used by the cylinder enumeration and the
/// sampling routines).
std::vector<Path> enumerate_paths(const DirectedGraph& e, int depth);

}  // namespace gpa
