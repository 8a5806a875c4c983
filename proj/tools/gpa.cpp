// gpa: verdict workbench for finite groupoid convolution algebras,
// inverse semigroup algebras and Leavitt path algebras.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gpa/corpus.hpp"
#include "gpa/json_io.hpp"

using nlohmann::json;

namespace {

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Exit code 1 is reserved for violated --expect assertions.
int check_expectations(const std::string& expect, const std::map<std::string, bool>& facts) {
  if (expect.empty()) return 0;
  std::stringstream ss(expect);
  std::string token;
  int rc = 0;
  while (std::getline(ss, token, ',')) {
    bool want = true;
    std::string key = token;
    if (key.rfind("not-", 0) == 0) {
      want = false;
      key = key.substr(4);
    }
    const auto it = facts.find(key);
    if (it == facts.end())
      throw gpa::InvalidInput("--expect does not understand '" + token + "'");
    if (it->second != want) {
      std::cerr << "expectation violated: " << token << "\n";
      rc = 1;
    }
  }
  return rc;
}

std::string replay_status(const gpa::PrimenessVerdict& v, const gpa::FiniteGroupoid& gpd,
                          const gpa::RingSpec& ring) {
  if (!v.witness) return "n/a";
  return gpa::replay_witness(v, gpd, ring) ? "ok" : "FAILED";
}

int cmd_check_groupoid(const std::string& path, const std::string& ring_text, bool oracle,
                       const std::string& expect, bool dump_canonical) {
  const Timer timer;
  const gpa::RingSpec ring = gpa::RingSpec::parse(ring_text);
  const gpa::FiniteGroupoid gpd = gpa::groupoid_from_json(gpa::load_json_file(path));
  if (dump_canonical) {
    std::cout << gpa::groupoid_to_json(gpd).dump(2) << "\n";
    return 0;
  }

  json report;
  report["operation"] = "check-groupoid";
  report["input_digest"] = gpa::input_digest(gpa::groupoid_to_json(gpd));
  report["ring"] = ring.to_string();

  const gpa::OrbitPartition orbits = gpd.orbits();
  report["orbits"] = orbits.blocks;
  json iso_orders = json::array();
  for (int x = 0; x < gpd.object_count(); ++x)
    iso_orders.push_back(gpd.isotropy_group(x).group.order());
  report["isotropy_orders"] = iso_orders;
  report["effective"] = gpd.is_effective();
  report["topologically_transitive"] = gpd.is_topologically_transitive();

  const gpa::PrimenessVerdict prime = gpa::structural_is_prime(gpd, ring);
  const gpa::PrimenessVerdict semi = gpa::structural_is_semiprime(gpd, ring);
  report["prime"] = gpa::verdict_to_json(prime, "prime");
  report["semiprime"] = gpa::verdict_to_json(semi, "semiprime");
  report["witness_replay"] = {{"prime", replay_status(prime, gpd, ring)},
                              {"semiprime", replay_status(semi, gpd, ring)}};

  if (oracle) {
    json o;
    try {
      const gpa::PrimenessVerdict bp = gpa::bruteforce_is_prime(gpd, ring);
      const gpa::PrimenessVerdict bs = gpa::bruteforce_is_semiprime(gpd, ring);
      o["prime"] = gpa::verdict_to_json(bp, "prime");
      o["semiprime"] = gpa::verdict_to_json(bs, "semiprime");
      o["agreement"] = (bp.decision == prime.decision && bs.decision == semi.decision)
                           ? "ok"
                           : "MISMATCH";
      o["witness_replay"] = {{"prime", replay_status(bp, gpd, ring)},
                             {"semiprime", replay_status(bs, gpd, ring)}};
    } catch (const gpa::CapExceeded& e) {
      o["error"] = e.what();
    } catch (const gpa::InvalidInput& e) {
      o["error"] = e.what();
    }
    report["oracle"] = o;
  }

  report["timing_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << "\n";
  return check_expectations(expect,
                            {{"prime", prime.decision},
                             {"semiprime", semi.decision},
                             {"transitive", report["topologically_transitive"].get<bool>()},
                             {"effective", report["effective"].get<bool>()}});
}

int cmd_check_graph(const std::string& path, const std::string& ring_text, bool oracle, int depth,
                    const std::string& expect, bool dump_canonical) {
  const Timer timer;
  const gpa::RingSpec ring = gpa::RingSpec::parse(ring_text);
  const gpa::DirectedGraph graph = gpa::graph_from_json(gpa::load_json_file(path));
  if (dump_canonical) {
    std::cout << gpa::graph_to_json(graph).dump(2) << "\n";
    return 0;
  }

  json report;
  report["operation"] = "check-graph";
  report["input_digest"] = gpa::input_digest(gpa::graph_to_json(graph));
  report["ring"] = ring.to_string();

  const gpa::DownwardDirected dd = gpa::is_downward_directed(graph);
  report["downward_directed"] = {{"holds", dd.holds}};
  if (dd.witness) report["downward_directed"]["witness"] = {dd.witness->u, dd.witness->v};

  const gpa::ConditionL cl = gpa::condition_L(graph);
  report["condition_L"] = {{"holds", cl.holds}};
  if (cl.witness_cycle) report["condition_L"]["witness_cycle"] = *cl.witness_cycle;

  const gpa::CspResult csp = gpa::has_csp(graph);
  report["csp"] = {{"holds", csp.holds},
                   {"witness", csp.witness},
                   {"witness_valid", gpa::csp_witness_valid(graph, csp.witness)}};

  const gpa::PrimenessVerdict prime = gpa::leavitt_prime_verdict(graph, ring);
  const gpa::PrimenessVerdict semi = gpa::leavitt_semiprime_verdict(ring);
  report["prime"] = gpa::verdict_to_json(prime, "prime");
  report["semiprime"] = gpa::verdict_to_json(semi, "semiprime");

  bool primitive = false, primitive_known = true;
  try {
    const gpa::PrimenessVerdict pv = gpa::leavitt_primitive_verdict(graph, ring);
    primitive = pv.decision;
    report["primitive"] = gpa::verdict_to_json(pv, "primitive");
  } catch (const gpa::ValidationError& e) {
    primitive_known = false;
    report["primitive"] = {{"error", e.what()}};
  }

  if (depth > 0) {
    json d;
    d["depth"] = depth;
    d["transitivity_crosscheck"] = gpa::transitivity_crosscheck(graph, depth);
    const gpa::PathSample sample = gpa::boundary_paths(graph, depth);
    json entries = json::array();
    for (const auto& entry : sample.entries) {
      json e{{"start", entry.path.start},
             {"edges", entry.path.edges},
             {"complete", entry.complete}};
      if (!entry.complete)
        e["eventually_periodic"] =
            entry.periodicity == gpa::PathSample::Entry::Periodicity::eventually_periodic
                ? json(true)
                : json("unknown");
      entries.push_back(e);
    }
    d["boundary_paths"] = entries;
    report["depth_probe"] = d;
  }

  if (oracle && !graph.find_cycle()) {
    json o;
    try {
      const gpa::AcyclicGraphGroupoid g = gpa::acyclic_graph_groupoid(graph);
      o["objects"] = g.groupoid.object_count();
      o["sinks"] = graph.sinks();
      o["orbit_count"] = g.groupoid.orbits().blocks.size();
      o["relations_check"] = gpa::leavitt_relations_check(graph, ring);
      const gpa::PrimenessVerdict sv = gpa::structural_is_prime(g.groupoid, ring);
      o["structural"] = gpa::verdict_to_json(sv, "prime");
      json agreement = sv.decision == prime.decision ? "ok" : "MISMATCH";
      try {
        const gpa::PrimenessVerdict bv = gpa::bruteforce_is_prime(g.groupoid, ring);
        o["bruteforce"] = gpa::verdict_to_json(bv, "prime");
        if (bv.decision != prime.decision) agreement = "MISMATCH";
      } catch (const gpa::CapExceeded& e) {
        o["bruteforce"] = {{"error", e.what()}};
      } catch (const gpa::InvalidInput& e) {
        o["bruteforce"] = {{"error", e.what()}};
      }
      o["agreement"] = agreement;
    } catch (const gpa::CapExceeded& e) {
      o["error"] = e.what();
    }
    report["oracle"] = o;
  }

  report["timing_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << "\n";
  std::map<std::string, bool> facts = {{"prime", prime.decision},
                                       {"semiprime", semi.decision},
                                       {"downward-directed", dd.holds},
                                       {"condition-L", cl.holds}};
  if (primitive_known) facts["primitive"] = primitive;
  return check_expectations(expect, facts);
}

int cmd_check_semigroup(const std::string& path, const std::string& ring_text, bool contracted,
                        bool iso, bool oracle, const std::string& expect, bool dump_canonical) {
  const Timer timer;
  const gpa::RingSpec ring = gpa::RingSpec::parse(ring_text);
  const gpa::InverseSemigroup s = gpa::semigroup_from_json(gpa::load_json_file(path));
  if (dump_canonical) {
    std::cout << gpa::semigroup_to_json(s).dump(2) << "\n";
    return 0;
  }

  json report;
  report["operation"] = "check-semigroup";
  report["input_digest"] = gpa::input_digest(gpa::semigroup_to_json(s));
  report["ring"] = ring.to_string();
  report["contracted"] = contracted;
  report["order"] = s.order();
  report["idempotents"] = s.idempotents();
  report["zero"] = s.zero() ? json(*s.zero()) : json(nullptr);

  const gpa::Semilattice lattice = gpa::semilattice_structure(s);
  report["pseudofinite"] = gpa::is_pseudofinite(lattice);
  report["bisimple"] = gpa::is_bisimple(s);
  report["zero_bisimple"] = s.zero() ? json(gpa::is_0_bisimple(s)) : json(nullptr);
  json subgroup_orders = json::object();
  for (int e : s.idempotents())
    subgroup_orders[std::to_string(e)] = gpa::maximal_subgroup(s, e).group.order();
  report["maximal_subgroup_orders"] = subgroup_orders;

  const gpa::PrimenessVerdict prime = gpa::munn_prime_verdict(s, ring, contracted);
  const gpa::PrimenessVerdict semi = gpa::munn_semiprime_verdict(s, ring, contracted);
  report["prime"] = gpa::verdict_to_json(prime, "prime");
  report["semiprime"] = gpa::verdict_to_json(semi, "semiprime");

  const gpa::UniversalGroupoid ug = gpa::universal_groupoid(s, contracted);
  report["universal_groupoid"] = {{"objects", ug.groupoid.object_count()},
                                  {"arrows", ug.groupoid.arrow_count()},
                                  {"orbits", ug.groupoid.orbits().blocks.size()}};

  if (iso) {
    json i;
    try {
      const gpa::SemigroupAlgebraIso result = gpa::semigroup_algebra_iso(s, ring, contracted);
      i["verified"] = result.verified;
      i["dimension"] = result.forward.size();
    } catch (const gpa::CapExceeded& e) {
      i["error"] = e.what();
    }
    report["iso"] = i;
  }

  if (oracle) {
    json o;
    try {
      const gpa::PrimenessVerdict bp = gpa::bruteforce_is_prime(ug.groupoid, ring);
      const gpa::PrimenessVerdict bs = gpa::bruteforce_is_semiprime(ug.groupoid, ring);
      o["prime"] = gpa::verdict_to_json(bp, "prime");
      o["semiprime"] = gpa::verdict_to_json(bs, "semiprime");
      o["agreement"] =
          (bp.decision == prime.decision && bs.decision == semi.decision) ? "ok" : "MISMATCH";
    } catch (const gpa::CapExceeded& e) {
      o["error"] = e.what();
    } catch (const gpa::InvalidInput& e) {
      o["error"] = e.what();
    }
    report["oracle"] = o;
  }

  report["timing_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << "\n";
  return check_expectations(expect, {{"prime", prime.decision},
                                     {"semiprime", semi.decision},
                                     {"bisimple", gpa::is_bisimple(s)}});
}

int cmd_corpus(std::uint64_t seed, int max_objects, int max_arrows) {
  const Timer timer;
  json report = gpa::corpus::run_all_suites(seed, max_objects, max_arrows);
  for (const auto& suite : report["suites"]) {
    std::cerr << (suite["failures"].get<int>() == 0 ? "PASS " : "FAIL ")
              << suite["name"].get<std::string>() << ": " << suite["passes"].get<int>() << "/"
              << suite["instances"].get<int>() << " passed";
    if (suite["capped"].get<int>() > 0)
      std::cerr << " (" << suite["capped"].get<int>() << " capped)";
    std::cerr << "\n";
  }
  report["timing_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << "\n";
  return report["all_passed"].get<bool>() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for primeness of groupoid convolution algebras"};
  app.require_subcommand(1);

  std::string path, ring = "Q", expect;
  bool oracle = false, contracted = false, iso = false, dump_canonical = false;
  int depth = 0;
  std::uint64_t seed = 42;
  int max_objects = 3, max_arrows = 8;

  auto* groupoid = app.add_subcommand("check-groupoid", "validate a groupoid and decide verdicts");
  groupoid->add_option("file", path)->required();
  groupoid->add_option("--ring", ring, "coefficient ring: Z | Q | Z/<n> | Laurent(<spec>)");
  groupoid->add_flag("--oracle", oracle, "also run the exhaustive oracles");
  groupoid->add_option("--expect", expect, "comma list, e.g. prime,not-semiprime");
  groupoid->add_flag("--dump-canonical", dump_canonical);

  auto* graph = app.add_subcommand("check-graph", "graph-level verdicts for the path algebra");
  graph->add_option("file", path)->required();
  graph->add_option("--ring", ring);
  graph->add_flag("--oracle", oracle);
  graph->add_option("--depth", depth, "probe cylinders and boundary paths to this depth");
  graph->add_option("--expect", expect);
  graph->add_flag("--dump-canonical", dump_canonical);

  auto* semigroup = app.add_subcommand("check-semigroup", "inverse semigroup algebra verdicts");
  semigroup->add_option("file", path)->required();
  semigroup->add_option("--ring", ring);
  semigroup->add_flag("--contracted", contracted, "work with the contracted algebra");
  semigroup->add_flag("--iso", iso, "materialize and verify the algebra isomorphism");
  semigroup->add_flag("--oracle", oracle);
  semigroup->add_option("--expect", expect);
  semigroup->add_flag("--dump-canonical", dump_canonical);

  auto* corpus_cmd = app.add_subcommand("corpus", "run every agreement suite");
  corpus_cmd->add_option("--seed", seed);
  corpus_cmd->add_option("--max-objects", max_objects);
  corpus_cmd->add_option("--max-arrows", max_arrows);

  CLI11_PARSE(app, argc, argv);

  try {
    if (groupoid->parsed())
      return cmd_check_groupoid(path, ring, oracle, expect, dump_canonical);
    if (graph->parsed()) return cmd_check_graph(path, ring, oracle, depth, expect, dump_canonical);
    if (semigroup->parsed())
      return cmd_check_semigroup(path, ring, contracted, iso, oracle, expect, dump_canonical);
    if (corpus_cmd->parsed()) return cmd_corpus(seed, max_objects, max_arrows);
  } catch (const gpa::ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 2;
  } catch (const gpa::InvalidInput& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const gpa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
