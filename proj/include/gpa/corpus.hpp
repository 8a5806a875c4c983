#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpa/graph.hpp"
#include "gpa/groupoid.hpp"
#include "gpa/semigroup.hpp"

namespace gpa::corpus {

/// Deterministic generator for every randomized suite; identical seeds
/// give identical corpora on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  int below(int n);  // uniform in [0, n)

 private:
  std::uint64_t state_;
};

// --- small-group catalog -----------------------------------------------

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup symmetric_3();
FiniteGroup dihedral_8();
FiniteGroup quaternion_8();
/// All groups of the given order up to isomorphism (orders 1..8).
std::vector<std::pair<std::string, FiniteGroup>> groups_of_order(int n);

// --- groupoid corpus ----------------------------------------------------

/// Transitive groupoid on `objects` objects with isotropy `g`: the pair
/// groupoid tensored with the group.
FiniteGroupoid transitive_groupoid(int objects, const FiniteGroup& g);
FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);
FiniteGroupoid pair_groupoid(int objects);
FiniteGroupoid group_object(const FiniteGroup& g);

struct CorpusGroupoid {
  FiniteGroupoid groupoid;
  std::string label;
};
/// Every finite groupoid with at most the given objects and arrows, up to
/// isomorphism: disjoint unions of transitive blocks with a group from the
/// catalog, emitted smallest first.
std::vector<CorpusGroupoid> exhaustive_groupoids(int max_objects, int max_arrows);

FiniteGroupoid random_groupoid(Rng& rng, int max_objects, int max_arrows);
Bisection random_bisection(Rng& rng, const FiniteGroupoid& gpd);
RingElem random_ring_elem(Rng& rng, const RingSpec& ring);
AlgebraElem random_algebra_elem(Rng& rng, const FiniteGroupoid* gpd, const RingSpec& ring);

// --- inverse semigroup corpus -------------------------------------------

/// Exhaustive brute-force enumeration of all inverse semigroup Cayley
/// tables of the given order: backtracking over entries with associativity
/// pruning, then a unique-inverse filter.  Independent of the validator.
std::vector<std::vector<std::vector<int>>> inverse_semigroup_tables(int order);

/// The 5-element Brandt semigroup of 2x2 matrix units (zero at index 0).
InverseSemigroup brandt_b2();
/// Two-element chain semilattice {e, f} with f < e.
InverseSemigroup chain_semilattice_2();
InverseSemigroup group_as_semigroup(const FiniteGroup& g);

// --- graph corpus ---------------------------------------------------

DirectedGraph bare_loop();
DirectedGraph two_sinks();
DirectedGraph single_edge();
DirectedGraph random_graph(Rng& rng, int max_vertices, int max_edges);
/// Random acyclic multigraph with a bounded boundary path space.
DirectedGraph random_acyclic_graph(Rng& rng, int max_vertices, int max_edges, long max_paths);

/// All vertex-simple directed cycles, each as a vertex list (independent
/// oracle for the out-degree-1 reduction; DFS in the style of the classic
/// circuit-enumeration algorithms).
std::vector<std::vector<int>> simple_cycles(const DirectedGraph& e);
/// Condition (L) via the cycle list: every simple cycle must contain a
/// vertex of out-degree at least two.
bool condition_L_oracle(const DirectedGraph& e);

// --- agreement suites -------------------------------------------------

struct SuiteResult {
  std::string name;
  int instances = 0;
  int passes = 0;
  int failures = 0;
  int capped = 0;
  nlohmann::json counterexample;  // first (smallest) failing instance
  nlohmann::json to_json() const;
  bool ok() const { return failures == 0; }
};

SuiteResult suite_prime_agreement(int max_objects, int max_arrows);
SuiteResult suite_semiprime_agreement(int max_objects, int max_arrows);
SuiteResult suite_transitivity(int max_objects, int max_arrows);
SuiteResult suite_convolution_laws(std::uint64_t seed, int trials);
SuiteResult suite_brandt_fixture();
SuiteResult suite_semigroup_iso(int max_order);
SuiteResult suite_acyclic_graphs(std::uint64_t seed, int count);
SuiteResult suite_condition_L(std::uint64_t seed, int count);
SuiteResult suite_reference_fixtures();

/// Run every suite; the report is deterministic for a fixed seed.
nlohmann::json run_all_suites(std::uint64_t seed, int max_objects, int max_arrows);

}  // namespace gpa::corpus
