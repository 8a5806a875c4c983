#include "gpa/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "gpa/json_io.hpp"

namespace gpa::corpus {

using nlohmann::json;

std::uint64_t Rng::next() {
  // splitmix64: tiny, seedable, identical everywhere.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw InvalidInput("Rng::below needs n > 0");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

// --- small-group catalog -----------------------------------------------

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::validate(t);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < h.order(); ++d)
          t[a * h.order() + b][c * h.order() + d] = g.op(a, c) * h.order() + h.op(b, d);
  return FiniteGroup::validate(t);
}

FiniteGroup symmetric_3() {
  // Permutations of {0,1,2} in lexicographic order, composed left after right.
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return FiniteGroup::validate(t);
}

FiniteGroup dihedral_8() {
  // Element (a, b) = rotation^a reflection^b, index a*2 + b.
  auto idx = [](int a, int b) { return ((a % 4 + 4) % 4) * 2 + b; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d)
          t[idx(a, b)][idx(c, d)] = idx(a + (b ? -c : c), b ^ d);
  return FiniteGroup::validate(t);
}

FiniteGroup quaternion_8() {
  // Axes 1, i, j, k with signs; index = axis*2 + (sign < 0).
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ax = x / 2, sx = x % 2 ? -1 : 1;
      const int ay = y / 2, sy = y % 2 ? -1 : 1;
      const int az = axis_mul[ax][ay];
      const int sz = sx * sy * sign_mul[ax][ay];
      t[x][y] = az * 2 + (sz < 0 ? 1 : 0);
    }
  return FiniteGroup::validate(t);
}

std::vector<std::pair<std::string, FiniteGroup>> groups_of_order(int n) {
  switch (n) {
    case 1:
      return {{"1", cyclic_group(1)}};
    case 2:
      return {{"C2", cyclic_group(2)}};
    case 3:
      return {{"C3", cyclic_group(3)}};
    case 4:
      return {{"C4", cyclic_group(4)},
              {"C2xC2", direct_product(cyclic_group(2), cyclic_group(2))}};
    case 5:
      return {{"C5", cyclic_group(5)}};
    case 6:
      return {{"C6", cyclic_group(6)}, {"S3", symmetric_3()}};
    case 7:
      return {{"C7", cyclic_group(7)}};
    case 8:
      return {{"C8", cyclic_group(8)},
              {"C4xC2", direct_product(cyclic_group(4), cyclic_group(2))},
              {"C2^3", direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                      cyclic_group(2))},
              {"D4", dihedral_8()},
              {"Q8", quaternion_8()}};
    default:
      throw InvalidInput("group catalog covers orders 1..8");
  }
}

// --- groupoid corpus ----------------------------------------------------

FiniteGroupoid transitive_groupoid(int objects, const FiniteGroup& g) {
  const int k = objects, m = g.order();
  if (k < 1) throw InvalidInput("need at least one object");
  // Arrow (i, j, x): object j -> object i carrying group element x.
  auto idx = [&](int i, int j, int x) { return (i * k + j) * m + x; };
  GroupoidData data;
  data.objects = k;
  const int a = k * k * m;
  data.arrows.resize(a);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int x = 0; x < m; ++x) data.arrows[idx(i, j, x)] = {j, i};
  data.compose.assign(a, std::vector<int>(a, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l)
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            data.compose[idx(i, j, x)][idx(j, l, y)] = idx(i, l, g.op(x, y));
  return FiniteGroupoid::validate(data);
}

FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
  GroupoidData data;
  int obj_off = 0;
  std::vector<int> arrow_off;
  int arrows = 0;
  for (const auto& p : parts) {
    arrow_off.push_back(arrows);
    arrows += p.arrow_count();
  }
  data.compose.assign(arrows, std::vector<int>(arrows, -1));
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const auto& p = parts[pi];
    for (int g = 0; g < p.arrow_count(); ++g)
      data.arrows.push_back({p.src(g) + obj_off, p.dst(g) + obj_off});
    for (int g = 0; g < p.arrow_count(); ++g)
      for (int h = 0; h < p.arrow_count(); ++h)
        if (p.composable(g, h))
          data.compose[arrow_off[pi] + g][arrow_off[pi] + h] = arrow_off[pi] + p.compose(g, h);
    obj_off += p.object_count();
  }
  data.objects = obj_off;
  return FiniteGroupoid::validate(data);
}

FiniteGroupoid pair_groupoid(int objects) {
  return transitive_groupoid(objects, cyclic_group(1));
}

FiniteGroupoid group_object(const FiniteGroup& g) { return transitive_groupoid(1, g); }

std::vector<CorpusGroupoid> exhaustive_groupoids(int max_objects, int max_arrows) {
  // Components, canonically non-decreasing by (size, group order, name).
  struct Comp {
    int objects;
    int order;
    std::string name;
    const FiniteGroup* group;
  };
  std::vector<std::pair<std::string, FiniteGroup>> catalog;
  for (int o = 1; o <= std::min(8, max_arrows); ++o)
    for (auto& [name, g] : groups_of_order(o)) catalog.emplace_back(name, g);

  std::vector<Comp> all;
  for (int k = 1; k <= max_objects; ++k)
    for (auto& [name, g] : catalog)
      if (k * k * g.order() <= max_arrows) all.push_back({k, g.order(), name, &g});

  std::vector<CorpusGroupoid> out;
  std::vector<const Comp*> chosen;
  std::function<void(size_t, int, int)> rec = [&](size_t first, int obj_left, int arr_left) {
    if (!chosen.empty()) {
      std::vector<FiniteGroupoid> parts;
      std::string label;
      for (const Comp* c : chosen) {
        parts.push_back(transitive_groupoid(c->objects, *c->group));
        label += (label.empty() ? "" : " + ") + std::to_string(c->objects) + "obj:" + c->name;
      }
      out.push_back({disjoint_union(parts), label});
    }
    for (size_t i = first; i < all.size(); ++i) {
      const Comp& c = all[i];
      if (c.objects > obj_left || c.objects * c.objects * c.order > arr_left) continue;
      chosen.push_back(&c);
      rec(i, obj_left - c.objects, arr_left - c.objects * c.objects * c.order);
      chosen.pop_back();
    }
  };
  rec(0, max_objects, max_arrows);

  std::stable_sort(out.begin(), out.end(), [](const CorpusGroupoid& a, const CorpusGroupoid& b) {
    if (a.groupoid.object_count() != b.groupoid.object_count())
      return a.groupoid.object_count() < b.groupoid.object_count();
    if (a.groupoid.arrow_count() != b.groupoid.arrow_count())
      return a.groupoid.arrow_count() < b.groupoid.arrow_count();
    return a.label < b.label;
  });
  return out;
}

FiniteGroupoid random_groupoid(Rng& rng, int max_objects, int max_arrows) {
  const int objects = 1 + rng.below(max_objects);
  std::vector<FiniteGroupoid> parts;
  int obj_left = objects, arr_left = max_arrows;
  while (obj_left > 0) {
    int k = 1;
    if (obj_left >= 2 && arr_left - (obj_left - 2) >= 4 && rng.below(2)) k = 2;
    const int budget = arr_left - (obj_left - k);  // reserve an arrow per later object
    std::vector<const FiniteGroup*> options;
    static const auto catalog = [] {
      std::vector<std::pair<int, FiniteGroup>> c;
      for (int o = 1; o <= 8; ++o)
        for (auto& [name, g] : groups_of_order(o)) c.emplace_back(o, g);
      return c;
    }();
    for (const auto& [o, g] : catalog)
      if (k * k * o <= budget) options.push_back(&g);
    const FiniteGroup& g = *options[rng.below(static_cast<int>(options.size()))];
    parts.push_back(transitive_groupoid(k, g));
    obj_left -= k;
    arr_left -= k * k * g.order();
  }
  return disjoint_union(parts);
}

Bisection random_bisection(Rng& rng, const FiniteGroupoid& gpd) {
  std::vector<bool> src_used(gpd.object_count(), false), dst_used(gpd.object_count(), false);
  Bisection b;
  for (int g = 0; g < gpd.arrow_count(); ++g) {
    if (rng.below(2)) continue;
    if (src_used[gpd.src(g)] || dst_used[gpd.dst(g)]) continue;
    src_used[gpd.src(g)] = dst_used[gpd.dst(g)] = true;
    b.arrows.push_back(g);
  }
  return b;
}

RingElem random_ring_elem(Rng& rng, const RingSpec& ring) {
  switch (ring.kind()) {
    case RingSpec::Kind::Integers:
      return RingElem::from_integer(ring, BigInt(rng.below(19) - 9));
    case RingSpec::Kind::Rationals:
      return RingElem::rational(ring, BigInt(rng.below(19) - 9), BigInt(1 + rng.below(9)));
    case RingSpec::Kind::IntegersMod:
      return RingElem::from_integer(ring, BigInt(rng.below(static_cast<int>(ring.modulus()))));
    case RingSpec::Kind::Laurent: {
      RingElem e = RingElem::zero(ring);
      const int terms = rng.below(4);
      for (int t = 0; t < terms; ++t) {
        const int exp = rng.below(7) - 3;
        e = e + RingElem::monomial(ring, exp, random_ring_elem(rng, ring.base()));
      }
      return e;
    }
  }
  throw InvalidInput("unknown ring kind");
}

AlgebraElem random_algebra_elem(Rng& rng, const FiniteGroupoid* gpd, const RingSpec& ring) {
  AlgebraElem e(gpd, ring);
  for (int g = 0; g < gpd->arrow_count(); ++g)
    if (rng.below(2) == 0) e.set(g, random_ring_elem(rng, ring));
  return e;
}

// --- inverse semigroup corpus -------------------------------------------

namespace {

// Backtracking over table entries in row-major order, rejecting partial
// tables as soon as any fully determined associativity instance fails.
void enumerate_semigroup_tables(int order, const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  const int m = order;
  std::vector<std::vector<int>> t(m, std::vector<int>(m, -1));

  auto associative_so_far = [&](int i, int j) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        const int ab = t[a][b];
        if (ab < 0) continue;
        for (int c = 0; c < m; ++c) {
          // Only triples that touch the fresh cell can have become invalid.
          if (!((a == i && b == j) || (b == i && c == j) || (ab == i && c == j) ||
                (a == i && t[b][c] == j)))
            continue;
          const int bc = t[b][c];
          if (bc < 0) continue;
          const int left = t[ab][c];
          const int right = t[a][bc];
          if (left >= 0 && right >= 0 && left != right) return false;
        }
      }
    return true;
  };

  std::function<void(int)> fill = [&](int cell) {
    if (cell == m * m) {
      emit(t);
      return;
    }
    const int i = cell / m, j = cell % m;
    for (int v = 0; v < m; ++v) {
      t[i][j] = v;
      if (associative_so_far(i, j)) fill(cell + 1);
    }
    t[i][j] = -1;
  };
  fill(0);
}

bool has_unique_inverses(const std::vector<std::vector<int>>& t) {
  const int m = static_cast<int>(t.size());
  for (int s = 0; s < m; ++s) {
    int count = 0;
    for (int u = 0; u < m; ++u)
      if (t[t[s][u]][s] == s && t[t[u][s]][u] == u) ++count;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> inverse_semigroup_tables(int order) {
  std::vector<std::vector<std::vector<int>>> out;
  enumerate_semigroup_tables(order, [&](const std::vector<std::vector<int>>& t) {
    if (has_unique_inverses(t)) out.push_back(t);
  });
  return out;
}

InverseSemigroup brandt_b2() {
  // 0, a, a*, aa*, a*a as 2x2 matrix units (a = E12).
  return InverseSemigroup::validate({{0, 0, 0, 0, 0},
                                     {0, 0, 3, 0, 1},
                                     {0, 4, 0, 2, 0},
                                     {0, 1, 0, 3, 0},
                                     {0, 0, 2, 0, 4}});
}

InverseSemigroup chain_semilattice_2() {
  // {e, f} with f < e: index 0 = e (top), 1 = f (bottom, the zero).
  return InverseSemigroup::validate({{0, 1}, {1, 1}});
}

InverseSemigroup group_as_semigroup(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) t[i][j] = g.op(i, j);
  return InverseSemigroup::validate(t);
}

// --- graph corpus ---------------------------------------------------

DirectedGraph bare_loop() { return DirectedGraph{1, {{0, 0}}}; }

DirectedGraph two_sinks() { return DirectedGraph{3, {{0, 1}, {0, 2}}}; }

DirectedGraph single_edge() { return DirectedGraph{2, {{0, 1}}}; }

DirectedGraph random_graph(Rng& rng, int max_vertices, int max_edges) {
  DirectedGraph e;
  e.vertices = 1 + rng.below(max_vertices);
  const int edges = rng.below(max_edges + 1);
  for (int i = 0; i < edges; ++i)
    e.edges.push_back({rng.below(e.vertices), rng.below(e.vertices)});
  return e;
}

DirectedGraph random_acyclic_graph(Rng& rng, int max_vertices, int max_edges, long max_paths) {
  for (;;) {
    DirectedGraph e;
    e.vertices = 1 + rng.below(max_vertices);
    const int edges = e.vertices == 1 ? 0 : rng.below(max_edges + 1);
    for (int i = 0; i < edges; ++i) {
      const int src = rng.below(e.vertices - 1);
      const int dst = src + 1 + rng.below(e.vertices - src - 1);
      e.edges.push_back({src, dst});  // src < dst keeps it acyclic
    }
    // The groupoid has one pair block per sink of size = #paths ending
    // there; regenerate when the arrow count would blow up.  Edges go up
    // in vertex order, so descending order is topological.
    long block_sum = 0;
    for (int s : e.sinks()) {
      std::vector<long> ends_at(e.vertices, 0);
      ends_at[s] = 1;
      for (int v = e.vertices - 1; v >= 0; --v) {
        if (v == s) continue;
        long c = 0;
        for (const auto& edge : e.edges)
          if (edge.src == v) c += ends_at[edge.dst];
        ends_at[v] = c;
      }
      long ending_here = 0;
      for (int v = 0; v < e.vertices; ++v) ending_here += ends_at[v];
      block_sum += ending_here * ending_here;
    }
    if (block_sum <= max_paths) return e;
  }
}

std::vector<std::vector<int>> simple_cycles(const DirectedGraph& e) {
  // Enumerate vertex-simple cycles whose least vertex is the DFS root,
  // walking only vertices >= the root; parallel edges collapse since only
  // the vertex sequence matters.
  std::vector<std::vector<int>> cycles;
  std::vector<std::set<int>> succ(e.vertices);
  for (const auto& edge : e.edges) succ[edge.src].insert(edge.dst);

  for (int root = 0; root < e.vertices; ++root) {
    std::vector<int> path = {root};
    std::vector<bool> on_path(e.vertices, false);
    on_path[root] = true;
    std::function<void(int)> dfs = [&](int v) {
      for (int w : succ[v]) {
        if (w < root) continue;
        if (w == root) {
          cycles.push_back(path);
        } else if (!on_path[w]) {
          on_path[w] = true;
          path.push_back(w);
          dfs(w);
          path.pop_back();
          on_path[w] = false;
        }
      }
    };
    dfs(root);
  }
  return cycles;
}

bool condition_L_oracle(const DirectedGraph& e) {
  for (const auto& cycle : simple_cycles(e)) {
    bool has_exit = false;
    for (int v : cycle)
      if (e.out_degree(v) >= 2) has_exit = true;
    if (!has_exit) return false;
  }
  return true;
}

// --- agreement suites -------------------------------------------------

json SuiteResult::to_json() const {
  json j{{"name", name},
         {"instances", instances},
         {"passes", passes},
         {"failures", failures},
         {"capped", capped}};
  if (!counterexample.is_null()) j["counterexample"] = counterexample;
  return j;
}

namespace {

void record(SuiteResult& r, bool ok, const std::function<json()>& dump) {
  ++r.instances;
  if (ok) {
    ++r.passes;
  } else {
    ++r.failures;
    if (r.counterexample.is_null()) r.counterexample = dump();
  }
}

json agreement_dump(const CorpusGroupoid& item, const RingSpec& ring,
                    const PrimenessVerdict& structural, const PrimenessVerdict& brute,
                    const std::string& question) {
  return json{{"label", item.label},
              {"ring", ring.to_string()},
              {"groupoid", groupoid_to_json(item.groupoid)},
              {"structural", verdict_to_json(structural, question)},
              {"bruteforce", verdict_to_json(brute, question)}};
}

}  // namespace

SuiteResult suite_prime_agreement(int max_objects, int max_arrows) {
  SuiteResult r;
  r.name = "prime-oracle-agreement";
  const auto corpus = exhaustive_groupoids(max_objects, max_arrows);
  const std::vector<RingSpec> rings = {RingSpec::integers_mod(2), RingSpec::integers_mod(3)};
  for (const auto& item : corpus) {
    for (const auto& ring : rings) {
      const PrimenessVerdict sv = structural_is_prime(item.groupoid, ring);
      PrimenessVerdict bv;
      try {
        bv = bruteforce_is_prime(item.groupoid, ring);
      } catch (const CapExceeded&) {
        ++r.capped;
        continue;
      }
      const bool ok = sv.decision == bv.decision &&
                      replay_witness(sv, item.groupoid, ring) &&
                      replay_witness(bv, item.groupoid, ring);
      record(r, ok, [&] { return agreement_dump(item, ring, sv, bv, "prime"); });
    }
  }
  return r;
}

SuiteResult suite_semiprime_agreement(int max_objects, int max_arrows) {
  SuiteResult r;
  r.name = "semiprime-oracle-agreement";
  const auto corpus = exhaustive_groupoids(max_objects, max_arrows);
  const std::vector<RingSpec> rings = {RingSpec::integers_mod(2), RingSpec::integers_mod(3),
                                       RingSpec::integers_mod(4)};
  for (const auto& item : corpus) {
    for (const auto& ring : rings) {
      const PrimenessVerdict sv = structural_is_semiprime(item.groupoid, ring);
      PrimenessVerdict bv;
      try {
        bv = bruteforce_is_semiprime(item.groupoid, ring);
      } catch (const CapExceeded&) {
        ++r.capped;
        continue;
      }
      const bool ok = sv.decision == bv.decision &&
                      replay_witness(sv, item.groupoid, ring) &&
                      replay_witness(bv, item.groupoid, ring);
      record(r, ok, [&] { return agreement_dump(item, ring, sv, bv, "semiprime"); });
    }
  }
  return r;
}

SuiteResult suite_transitivity(int max_objects, int max_arrows) {
  SuiteResult r;
  r.name = "transitivity-equivalences";
  for (const auto& item : exhaustive_groupoids(max_objects, max_arrows)) {
    bool ok;
    try {
      const bool tt = item.groupoid.is_topologically_transitive();
      ok = tt == (item.groupoid.orbits().blocks.size() == 1);
    } catch (const InternalDisagreement&) {
      ok = false;
    }
    record(r, ok, [&] {
      return json{{"label", item.label}, {"groupoid", groupoid_to_json(item.groupoid)}};
    });
  }
  return r;
}

SuiteResult suite_convolution_laws(std::uint64_t seed, int trials) {
  SuiteResult r;
  r.name = "convolution-laws";
  const std::vector<RingSpec> rings = {RingSpec::integers_mod(2), RingSpec::integers_mod(3),
                                       RingSpec::integers_mod(4), RingSpec::integers(),
                                       RingSpec::rationals(),
                                       RingSpec::laurent(RingSpec::integers())};
  for (const auto& ring : rings) {
    Rng rng(seed ^ std::hash<std::string>{}(ring.to_string()));
    for (int t = 0; t < trials; ++t) {
      const FiniteGroupoid gpd = random_groupoid(rng, 4, 10);
      const AlgebraElem f = random_algebra_elem(rng, &gpd, ring);
      const AlgebraElem g = random_algebra_elem(rng, &gpd, ring);
      const AlgebraElem h = random_algebra_elem(rng, &gpd, ring);
      const RingElem c = random_ring_elem(rng, ring);

      const bool assoc = f.convolve(g).convolve(h) == f.convolve(g.convolve(h));
      const bool bilinear = (f + g).convolve(h) == f.convolve(h) + g.convolve(h) &&
                            f.convolve(g + h) == f.convolve(g) + f.convolve(h) &&
                            f.scaled(c).convolve(g) == f.convolve(g).scaled(c);
      const Bisection u = random_bisection(rng, gpd);
      const Bisection v = random_bisection(rng, gpd);
      const bool indicator_law =
          AlgebraElem::indicator(&gpd, ring, u).convolve(AlgebraElem::indicator(&gpd, ring, v)) ==
          AlgebraElem::indicator(&gpd, ring, gpd.compose_bisections(u, v));

      record(r, assoc && bilinear && indicator_law, [&] {
        return json{{"ring", ring.to_string()},
                    {"trial", t},
                    {"groupoid", groupoid_to_json(gpd)},
                    {"associativity", assoc},
                    {"bilinearity", bilinear},
                    {"indicator_law", indicator_law}};
      });
    }
  }
  return r;
}

SuiteResult suite_brandt_fixture() {
  SuiteResult r;
  r.name = "brandt-b2-fixture";
  const InverseSemigroup b2 = brandt_b2();
  const RingSpec q = RingSpec::rationals();
  const RingSpec z2 = RingSpec::integers_mod(2);

  const UniversalGroupoid ug = universal_groupoid(b2, true);
  bool pair_shape = ug.groupoid.object_count() == 2 && ug.groupoid.arrow_count() == 4;
  for (int x = 0; x < 2 && pair_shape; ++x)
    for (int y = 0; y < 2 && pair_shape; ++y) {
      int count = 0;
      for (int g = 0; g < ug.groupoid.arrow_count(); ++g)
        if (ug.groupoid.src(g) == x && ug.groupoid.dst(g) == y) ++count;
      pair_shape = count == 1;
    }
  record(r, pair_shape, [&] { return json{{"check", "contracted universal groupoid shape"}}; });

  bool iso_ok = false;
  try {
    iso_ok = semigroup_algebra_iso(b2, q, true).verified;
  } catch (const Error&) {
    iso_ok = false;
  }
  record(r, iso_ok, [&] { return json{{"check", "algebra isomorphism over Q"}}; });

  const MatrixDecomposition dec = matrix_decomposition(ug.groupoid, q);
  record(r, dec.verified && dec.describe(q) == "M_2(Q)",
         [&] { return json{{"check", "matrix decomposition"}, {"got", dec.describe(q)}}; });

  const PrimenessVerdict munn = munn_prime_verdict(b2, q, true);
  record(r, munn.decision, [&] { return json{{"check", "Munn prime over Q"}}; });

  const PrimenessVerdict brute = bruteforce_is_prime(ug.groupoid, z2);
  record(r, brute.decision, [&] { return json{{"check", "brute force over Z/2"}}; });
  return r;
}

SuiteResult suite_semigroup_iso(int max_order) {
  SuiteResult r;
  r.name = "semigroup-iso-small";
  const RingSpec z2 = RingSpec::integers_mod(2);
  const RingSpec q = RingSpec::rationals();
  for (int order = 1; order <= max_order; ++order) {
    for (const auto& table : inverse_semigroup_tables(order)) {
      InverseSemigroup s = InverseSemigroup::validate(table);
      bool ok = true;
      json note;
      try {
        ok = semigroup_algebra_iso(s, z2, false).verified &&
             semigroup_algebra_iso(s, q, false).verified;
        if (ok && s.zero() && s.order() > 1)
          ok = semigroup_algebra_iso(s, z2, true).verified &&
               semigroup_algebra_iso(s, q, true).verified;
        if (ok) {
          // Munn verdicts agree with the exhaustive oracle on the
          // universal groupoid (and cross-check structurally inside).
          const UniversalGroupoid ug = universal_groupoid(s, false);
          ok = munn_prime_verdict(s, z2, false).decision ==
                   bruteforce_is_prime(ug.groupoid, z2).decision &&
               munn_semiprime_verdict(s, z2, false).decision ==
                   bruteforce_is_semiprime(ug.groupoid, z2).decision;
        }
      } catch (const Error& e) {
        ok = false;
        note = e.what();
      }
      record(r, ok, [&] {
        return json{{"order", order}, {"table", table}, {"error", note}};
      });
    }
  }
  return r;
}

SuiteResult suite_acyclic_graphs(std::uint64_t seed, int count) {
  SuiteResult r;
  r.name = "leavitt-acyclic-threeway";
  const RingSpec z2 = RingSpec::integers_mod(2);
  const RingSpec q = RingSpec::rationals();
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    // Half the corpus stays tiny so the exhaustive oracle applies.
    const DirectedGraph e = (i % 2 == 0) ? random_acyclic_graph(rng, 3, 3, 12)
                                         : random_acyclic_graph(rng, 6, 8, 900);
    bool ok = true;
    json note;
    try {
      const AcyclicGraphGroupoid g = acyclic_graph_groupoid(e);
      const PrimenessVerdict lv = leavitt_prime_verdict(e, z2);  // cross-checks inside
      const PrimenessVerdict sv = structural_is_prime(g.groupoid, z2);
      ok = lv.decision == sv.decision;
      try {
        const PrimenessVerdict bv = bruteforce_is_prime(g.groupoid, z2);
        ok = ok && bv.decision == lv.decision && replay_witness(bv, g.groupoid, z2);
      } catch (const CapExceeded&) {
        ++r.capped;
      }
      ok = ok && g.groupoid.orbits().blocks.size() == e.sinks().size();
      ok = ok && leavitt_relations_check(e, z2) && leavitt_relations_check(e, q);
    } catch (const Error& err) {
      ok = false;
      note = err.what();
    }
    record(r, ok, [&] {
      return json{{"graph", graph_to_json(e)}, {"error", note}};
    });
  }
  return r;
}

SuiteResult suite_condition_L(std::uint64_t seed, int count) {
  SuiteResult r;
  r.name = "condition-L-vs-cycle-enumeration";
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const DirectedGraph e = random_graph(rng, 8, 16);
    const ConditionL fast = condition_L(e);
    const bool slow = condition_L_oracle(e);
    bool ok = fast.holds == slow;
    if (ok && !fast.holds) {
      // The witness must be a real exit-free cycle.
      const auto& cyc = *fast.witness_cycle;
      for (size_t k = 0; k < cyc.size() && ok; ++k) ok = e.out_degree(cyc[k]) == 1;
    }
    record(r, ok, [&] {
      return json{{"graph", graph_to_json(e)},
                  {"reduction", fast.holds},
                  {"cycle_enumeration", slow}};
    });
  }
  return r;
}

SuiteResult suite_reference_fixtures() {
  SuiteResult r;
  r.name = "reference-fixtures";
  const RingSpec q = RingSpec::rationals();
  const RingSpec z2 = RingSpec::integers_mod(2);
  const RingSpec z4 = RingSpec::integers_mod(4);

  {
    const DirectedGraph loop = bare_loop();
    record(r, leavitt_prime_verdict(loop, q).decision,
           [] { return json{{"fixture", "bare loop prime over Q"}}; });
    record(r, !leavitt_primitive_verdict(loop, q).decision,
           [] { return json{{"fixture", "bare loop not primitive over Q"}}; });
  }
  record(r, !leavitt_prime_verdict(two_sinks(), q).decision,
         [] { return json{{"fixture", "two sinks not prime"}}; });
  record(r, !leavitt_semiprime_verdict(z4).decision,
         [] { return json{{"fixture", "Z/4 never semiprime"}}; });
  record(r, !group_algebra_is_prime(GroupSpec::of(cyclic_group(2)), q) &&
             group_algebra_is_semiprime(GroupSpec::of(cyclic_group(2)), q),
         [] { return json{{"fixture", "C2 over Q"}}; });
  {
    const FiniteGroupoid c2 = group_object(cyclic_group(2));
    const PrimenessVerdict bv = bruteforce_is_semiprime(c2, z2);
    record(r, !bv.decision && bv.witness && replay_witness(bv, c2, z2),
           [] { return json{{"fixture", "C2 over Z/2 semiprime witness"}}; });
    record(r, !structural_is_semiprime(c2, z2).decision,
           [] { return json{{"fixture", "C2 over Z/2 structural"}}; });
  }
  return r;
}

json run_all_suites(std::uint64_t seed, int max_objects, int max_arrows) {
  std::vector<SuiteResult> suites;
  suites.push_back(suite_prime_agreement(max_objects, max_arrows));
  suites.push_back(suite_semiprime_agreement(max_objects, max_arrows));
  suites.push_back(suite_transitivity(max_objects, max_arrows));
  suites.push_back(suite_convolution_laws(seed, 500));
  suites.push_back(suite_brandt_fixture());
  suites.push_back(suite_semigroup_iso(4));
  suites.push_back(suite_acyclic_graphs(seed, 500));
  suites.push_back(suite_condition_L(seed, 200));
  suites.push_back(suite_reference_fixtures());

  json out;
  out["seed"] = seed;
  out["max_objects"] = max_objects;
  out["max_arrows"] = max_arrows;
  json list = json::array();
  bool all = true;
  for (const auto& s : suites) {
    list.push_back(s.to_json());
    all = all && s.ok();
  }
  out["suites"] = list;
  out["all_passed"] = all;
  return out;
}

}  // namespace gpa::corpus
