#include "doctest.h"

#include <algorithm>

#include "gpa/corpus.hpp"
#include "gpa/graph.hpp"

using namespace gpa;

namespace {

const RingSpec kQ = RingSpec::rationals();
const RingSpec kZ = RingSpec::integers();
const RingSpec kZ2 = RingSpec::integers_mod(2);
const RingSpec kZ6 = RingSpec::integers_mod(6);

DirectedGraph diamond() {
  // 0 -> 1 -> 3, 0 -> 2 -> 3; one sink.
  return DirectedGraph{4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}};
}

DirectedGraph path3() { return DirectedGraph{3, {{0, 1}, {1, 2}}}; }

}  // namespace

TEST_CASE("downward directedness") {
  CHECK(is_downward_directed(corpus::bare_loop()).holds);
  CHECK(is_downward_directed(path3()).holds);
  CHECK(is_downward_directed(diamond()).holds);

  const DownwardDirected two = is_downward_directed(corpus::two_sinks());
  CHECK_FALSE(two.holds);
  REQUIRE(two.witness.has_value());
  CHECK(two.witness->u == 1);
  CHECK(two.witness->v == 2);
}

TEST_CASE("condition L") {
  const ConditionL loop = condition_L(corpus::bare_loop());
  CHECK_FALSE(loop.holds);
  CHECK(loop.witness_cycle == std::vector<int>{0});

  // The same loop with an exit edge satisfies (L).
  CHECK(condition_L(DirectedGraph{2, {{0, 0}, {0, 1}}}).holds);
  CHECK(condition_L(diamond()).holds);  // acyclic is vacuous

  // A 2-cycle without exits.
  const ConditionL cyc = condition_L(DirectedGraph{2, {{0, 1}, {1, 0}}});
  CHECK_FALSE(cyc.holds);
  CHECK(cyc.witness_cycle->size() == 2);
}

TEST_CASE("countable separation") {
  for (const auto& e : {corpus::bare_loop(), corpus::two_sinks(), diamond(), path3()}) {
    const CspResult r = has_csp(e);
    CHECK(r.holds);
    CHECK(csp_witness_valid(e, r.witness));
    // The whole vertex set always works too.
    std::vector<int> all(e.vertices);
    for (int v = 0; v < e.vertices; ++v) all[v] = v;
    CHECK(csp_witness_valid(e, all));
  }
  CHECK(has_csp(corpus::bare_loop()).witness == std::vector<int>{0});
  CHECK(has_csp(path3()).witness == std::vector<int>{2});
  CHECK(has_csp(corpus::two_sinks()).witness == std::vector<int>{1, 2});
  CHECK_FALSE(csp_witness_valid(corpus::two_sinks(), {1}));  // misses the other sink
}

TEST_CASE("boundary path samples") {
  // Single edge u -> v with v a sink: both members appear, complete.
  const PathSample se = boundary_paths(corpus::single_edge(), 2);
  REQUIRE(se.entries.size() == 2);
  for (const auto& entry : se.entries) CHECK(entry.complete);

  // Bare loop at depth 3: one prefix, forced periodic.
  const PathSample loop = boundary_paths(corpus::bare_loop(), 3);
  REQUIRE(loop.entries.size() == 1);
  CHECK_FALSE(loop.entries[0].complete);
  CHECK(loop.entries[0].path.length() == 3);
  CHECK(loop.entries[0].periodicity == PathSample::Entry::Periodicity::eventually_periodic);

  // A loop with an exit: the truncation cannot know the continuation.
  const PathSample exited = boundary_paths(DirectedGraph{2, {{0, 0}, {0, 1}}}, 2);
  for (const auto& entry : exited.entries)
    if (!entry.complete)
      CHECK(entry.periodicity == PathSample::Entry::Periodicity::unknown);

  // Acyclic diamond at depth 3: all of the boundary, complete.
  const PathSample dia = boundary_paths(diamond(), 3);
  CHECK(dia.entries.size() == 5);  // eps_3, 1->3, 2->3, 0->1->3, 0->2->3
  for (const auto& entry : dia.entries) CHECK(entry.complete);
}

TEST_CASE("acyclic samples are complete at the longest path length") {
  corpus::Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const DirectedGraph e = corpus::random_acyclic_graph(rng, 5, 6, 400);
    const PathSample s = boundary_paths(e, std::max(e.vertices - 1, 0));
    for (const auto& entry : s.entries) CHECK(entry.complete);
    CHECK(s.entries.size() == acyclic_graph_groupoid(e).objects.size());
  }
}

TEST_CASE("acyclic graph groupoids") {
  // Single edge: pair groupoid on {eps_v, e}.
  const AcyclicGraphGroupoid g = acyclic_graph_groupoid(corpus::single_edge());
  CHECK(g.groupoid.object_count() == 2);
  CHECK(g.groupoid.arrow_count() == 4);
  CHECK(g.groupoid.orbits().blocks.size() == 1);
  CHECK(matrix_decomposition(g.groupoid, kQ).describe(kQ) == "M_2(Q)");

  // A single vertex is its own boundary.
  const AcyclicGraphGroupoid point = acyclic_graph_groupoid(DirectedGraph{1, {}});
  CHECK(point.groupoid.object_count() == 1);
  CHECK(point.groupoid.arrow_count() == 1);

  // v <- u -> w: two sinks, two pair blocks, not prime.
  const AcyclicGraphGroupoid two = acyclic_graph_groupoid(corpus::two_sinks());
  CHECK(two.groupoid.object_count() == 4);  // eps_1, eps_2 and the two edges
  CHECK(two.groupoid.orbits().blocks.size() == 2);
  CHECK_FALSE(structural_is_prime(two.groupoid, kQ).decision);
  CHECK(matrix_decomposition(two.groupoid, kQ).describe(kQ) == "M_2(Q) (+) M_2(Q)");

  CHECK_THROWS_AS(acyclic_graph_groupoid(corpus::bare_loop()), ValidationError);
}

TEST_CASE("leavitt relations hold in the boundary path algebra") {
  CHECK(leavitt_relations_check(corpus::single_edge(), kZ));
  CHECK(leavitt_relations_check(corpus::single_edge(), kQ));
  CHECK(leavitt_relations_check(DirectedGraph{1, {}}, kQ));          // lone sink
  CHECK(leavitt_relations_check(DirectedGraph{2, {{0, 1}, {0, 1}}}, kZ2));  // parallel edges
  CHECK(leavitt_relations_check(corpus::two_sinks(), kZ6));
  CHECK(leavitt_relations_check(diamond(), kZ2));
  CHECK(leavitt_relations_check(diamond(), kQ));
}

TEST_CASE("leavitt primeness verdicts") {
  CHECK(leavitt_prime_verdict(corpus::bare_loop(), kQ).decision);
  CHECK(leavitt_prime_verdict(corpus::bare_loop(), kZ).decision);

  const PrimenessVerdict two = leavitt_prime_verdict(corpus::two_sinks(), kQ);
  CHECK_FALSE(two.decision);
  CHECK((*two.witness)["kind"] == "not_downward_directed");

  CHECK_FALSE(leavitt_prime_verdict(corpus::single_edge(), kZ6).decision);
  CHECK(leavitt_prime_verdict(corpus::single_edge(), kQ).decision);
  CHECK(leavitt_prime_verdict(path3(), kQ).decision);
}

TEST_CASE("leavitt semiprimeness is a ring property") {
  CHECK_FALSE(leavitt_semiprime_verdict(RingSpec::integers_mod(4)).decision);
  CHECK(leavitt_semiprime_verdict(kZ6).decision);
  CHECK(leavitt_semiprime_verdict(kQ).decision);
  CHECK(leavitt_semiprime_verdict(RingSpec::laurent(RingSpec::integers())).decision);
}

TEST_CASE("leavitt primitivity verdicts") {
  CHECK_FALSE(leavitt_primitive_verdict(corpus::bare_loop(), kQ).decision);
  CHECK(leavitt_primitive_verdict(DirectedGraph{1, {}}, kQ).decision);
  CHECK_FALSE(leavitt_primitive_verdict(corpus::two_sinks(), kQ).decision);
  CHECK(leavitt_primitive_verdict(corpus::single_edge(), kZ2).decision);
  CHECK_THROWS_AS(leavitt_primitive_verdict(corpus::bare_loop(), kZ), ValidationError);
  CHECK_THROWS_AS(leavitt_primitive_verdict(corpus::bare_loop(), kZ6), ValidationError);
}

TEST_CASE("cylinder transitivity crosscheck") {
  CHECK(transitivity_crosscheck(corpus::bare_loop(), 2));
  CHECK_FALSE(transitivity_crosscheck(corpus::two_sinks(), 1));
  CHECK(transitivity_crosscheck(path3(), 2));
  corpus::Rng rng(37);
  for (int t = 0; t < 60; ++t) {
    const DirectedGraph e = corpus::random_graph(rng, 6, 10);
    CHECK_NOTHROW(transitivity_crosscheck(e, 2));
  }
}

TEST_CASE("cycle enumeration oracle sees multigraph subtleties") {
  // Parallel edges make the loop vertex an exit by out-degree.
  CHECK(corpus::condition_L_oracle(DirectedGraph{1, {{0, 0}, {0, 0}}}));
  CHECK(condition_L(DirectedGraph{1, {{0, 0}, {0, 0}}}).holds);
  CHECK_FALSE(corpus::condition_L_oracle(corpus::bare_loop()));
  // Two disjoint cycles, one with an exit.
  const DirectedGraph mixed{4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {2, 1}}};
  CHECK_FALSE(corpus::condition_L_oracle(mixed));
  CHECK_FALSE(condition_L(mixed).holds);
}
