#include "gpa/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gpa/semigroup.hpp"

namespace gpa {

namespace {

std::string arrow_str(int g) { return "arrow " + std::to_string(g); }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

int OrbitPartition::block_of(int object) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), object))
      return static_cast<int>(b);
  throw InvalidInput("object " + std::to_string(object) + " not in partition");
}

FiniteGroupoid FiniteGroupoid::validate(const GroupoidData& data) {
  const int n = data.objects;
  const int a = static_cast<int>(data.arrows.size());
  if (n < 0) throw InvalidInput("negative object count");
  for (int g = 0; g < a; ++g) {
    if (data.arrows[g].src < 0 || data.arrows[g].src >= n || data.arrows[g].dst < 0 ||
        data.arrows[g].dst >= n)
      throw InvalidInput("endpoint out of range on " + arrow_str(g));
  }
  if (static_cast<int>(data.compose.size()) != a)
    throw InvalidInput("composition table must have one row per arrow");

  FiniteGroupoid gpd;
  gpd.objects_ = n;
  gpd.src_.resize(a);
  gpd.dst_.resize(a);
  for (int g = 0; g < a; ++g) {
    gpd.src_[g] = data.arrows[g].src;
    gpd.dst_[g] = data.arrows[g].dst;
  }
  gpd.comp_.assign(static_cast<size_t>(a) * a, -1);
  for (int g = 0; g < a; ++g) {
    if (static_cast<int>(data.compose[g].size()) != a)
      throw InvalidInput("ragged composition row for " + arrow_str(g));
    for (int h = 0; h < a; ++h) {
      const int gh = data.compose[g][h];
      if (gh < -1 || gh >= a)
        throw InvalidInput("composition entry out of range at (" + std::to_string(g) + "," +
                           std::to_string(h) + ")");
      gpd.comp_[static_cast<size_t>(g) * a + h] = gh;
    }
  }

  // Composition must be defined exactly on matched endpoints and respect them.
  for (int g = 0; g < a; ++g) {
    for (int h = 0; h < a; ++h) {
      const int gh = gpd.compose(g, h);
      const bool matched = gpd.src_[g] == gpd.dst_[h];
      if (matched != (gh >= 0))
        throw ValidationError("BadComposability",
                              "(" + std::to_string(g) + "," + std::to_string(h) + ")" +
                                  (matched ? " undefined on matched endpoints"
                                           : " defined across mismatched endpoints"));
      if (gh >= 0 && (gpd.src_[gh] != gpd.src_[h] || gpd.dst_[gh] != gpd.dst_[g]))
        throw ValidationError("BadComposability",
                              "endpoints of compose(" + std::to_string(g) + "," +
                                  std::to_string(h) + ") are wrong");
    }
  }

  for (int g = 0; g < a; ++g)
    for (int h = 0; h < a; ++h) {
      if (!gpd.composable(g, h)) continue;
      const int gh = gpd.compose(g, h);
      for (int k = 0; k < a; ++k) {
        if (!gpd.composable(h, k)) continue;
        if (gpd.compose(gh, k) != gpd.compose(g, gpd.compose(h, k)))
          throw ValidationError("NotAssociative", "(" + std::to_string(g) + "," +
                                                      std::to_string(h) + "," +
                                                      std::to_string(k) + ")");
      }
    }

  gpd.identity_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int e = 0; e < a; ++e) {
      if (gpd.src_[e] != x || gpd.dst_[e] != x) continue;
      bool ok = true;
      for (int g = 0; g < a && ok; ++g) {
        if (gpd.dst_[g] == x && gpd.compose(e, g) != g) ok = false;
        if (gpd.src_[g] == x && gpd.compose(g, e) != g) ok = false;
      }
      if (ok) {
        gpd.identity_[x] = e;
        break;
      }
    }
    if (gpd.identity_[x] < 0) throw ValidationError("MissingIdentity", "object " + std::to_string(x));
  }
  if (data.identities) {
    if (static_cast<int>(data.identities->size()) != n)
      throw InvalidInput("identity list must have one entry per object");
    for (int x = 0; x < n; ++x)
      if ((*data.identities)[x] != gpd.identity_[x])
        throw ValidationError("MissingIdentity",
                              "declared identity of object " + std::to_string(x) +
                                  " is not a two-sided unit");
  }

  gpd.inverse_.assign(a, -1);
  for (int g = 0; g < a; ++g) {
    for (int h = 0; h < a; ++h) {
      if (gpd.src_[h] != gpd.dst_[g] || gpd.dst_[h] != gpd.src_[g]) continue;
      if (gpd.compose(g, h) == gpd.identity_[gpd.dst_[g]] &&
          gpd.compose(h, g) == gpd.identity_[gpd.src_[g]]) {
        gpd.inverse_[g] = h;
        break;
      }
    }
    if (gpd.inverse_[g] < 0) throw ValidationError("MissingInverse", arrow_str(g));
  }
  if (data.inverses) {
    if (static_cast<int>(data.inverses->size()) != a)
      throw InvalidInput("inverse list must have one entry per arrow");
    for (int g = 0; g < a; ++g)
      if ((*data.inverses)[g] != gpd.inverse_[g])
        throw ValidationError("MissingInverse",
                              "declared inverse of " + arrow_str(g) + " fails the unit laws");
  }
  return gpd;
}

GroupoidData FiniteGroupoid::data() const {
  GroupoidData d;
  d.objects = objects_;
  const int a = arrow_count();
  d.arrows.resize(a);
  d.compose.assign(a, std::vector<int>(a, -1));
  for (int g = 0; g < a; ++g) {
    d.arrows[g] = {src_[g], dst_[g]};
    for (int h = 0; h < a; ++h) d.compose[g][h] = compose(g, h);
  }
  d.identities = identity_;
  d.inverses = inverse_;
  return d;
}

OrbitPartition FiniteGroupoid::orbits() const {
  std::vector<int> parent(objects_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int g = 0; g < arrow_count(); ++g) {
    const int a = find(src_[g]), b = find(dst_[g]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < objects_; ++x) by_root[find(x)].push_back(x);
  OrbitPartition p;
  for (auto& [root, block] : by_root) {
    std::sort(block.begin(), block.end());
    p.representatives.push_back(block.front());
    p.blocks.push_back(std::move(block));
  }
  return p;
}

IsotropyGroup FiniteGroupoid::isotropy_group(int object) const {
  if (object < 0 || object >= objects_) throw InvalidInput("object out of range");
  IsotropyGroup iso;
  for (int g = 0; g < arrow_count(); ++g)
    if (src_[g] == object && dst_[g] == object) iso.arrow_ids.push_back(g);
  const int m = static_cast<int>(iso.arrow_ids.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = compose(iso.arrow_ids[i], iso.arrow_ids[j]);
      const auto it = std::find(iso.arrow_ids.begin(), iso.arrow_ids.end(), prod);
      table[i][j] = static_cast<int>(it - iso.arrow_ids.begin());
    }
  iso.group = FiniteGroup::validate(table);
  return iso;
}

std::vector<int> FiniteGroupoid::invariant_saturation(const std::vector<int>& objects) const {
  std::vector<bool> in(objects_, false);
  for (int x : objects) {
    if (x < 0 || x >= objects_) throw InvalidInput("object out of range");
    in[x] = true;
  }
  std::vector<int> via_range, via_domain;
  for (int x = 0; x < objects_; ++x) {
    bool hit_r = false, hit_d = false;
    for (int g = 0; g < arrow_count() && !(hit_r && hit_d); ++g) {
      if (dst_[g] == x && in[src_[g]]) hit_r = true;   // x in r(d^-1(U))
      if (src_[g] == x && in[dst_[g]]) hit_d = true;   // x in d(r^-1(U))
    }
    if (hit_r) via_range.push_back(x);
    if (hit_d) via_domain.push_back(x);
  }
  if (via_range != via_domain)
    throw InternalDisagreement("r(d^-1(U)) != d(r^-1(U)) on a validated groupoid");
  return via_range;
}

bool FiniteGroupoid::is_effective() const {
  // Discrete case: the interior of the isotropy bundle is the whole bundle,
  // so effectiveness is exactly triviality of every isotropy group.
  for (int x = 0; x < objects_; ++x)
    if (!isotropy_group(x).group.is_trivial()) return false;
  return true;
}

bool FiniteGroupoid::is_topologically_transitive() const {
  // Minimal nonempty invariant sets are the saturations of singletons, and
  // every nonempty invariant set contains one, so conditions on arbitrary
  // invariant sets reduce to them.
  std::vector<std::vector<int>> minimal(objects_);
  for (int x = 0; x < objects_; ++x) minimal[x] = invariant_saturation({x});

  bool cond1 = true;  // pairwise intersection of nonempty invariant sets
  for (int x = 0; x < objects_ && cond1; ++x)
    for (int y = x + 1; y < objects_ && cond1; ++y) {
      std::vector<int> common;
      std::set_intersection(minimal[x].begin(), minimal[x].end(), minimal[y].begin(),
                            minimal[y].end(), std::back_inserter(common));
      if (common.empty()) cond1 = false;
    }

  bool cond4 = true;  // d^-1(U) meets r^-1(V) for all nonempty U, V;
                      // monotone in U and V, so singletons decide it
  std::vector<bool> joined(static_cast<size_t>(objects_) * std::max(objects_, 1), false);
  for (int g = 0; g < arrow_count(); ++g)
    joined[static_cast<size_t>(src_[g]) * objects_ + dst_[g]] = true;
  for (int x = 0; x < objects_ && cond4; ++x)
    for (int y = 0; y < objects_ && cond4; ++y)
      if (!joined[static_cast<size_t>(x) * objects_ + y]) cond4 = false;

  bool cond5 = true;  // no cover by two proper invariant sets: such a cover
                      // exists iff some saturation misses an object (it and
                      // its complement then cover)
  for (int x = 0; x < objects_ && cond5; ++x)
    if (static_cast<int>(minimal[x].size()) != objects_) cond5 = false;

  if (cond1 != cond4 || cond4 != cond5)
    throw InternalDisagreement("transitivity routines disagree: (" +
                               std::to_string(cond1) + "," + std::to_string(cond4) + "," +
                               std::to_string(cond5) + ")");
  return cond1;
}

bool FiniteGroupoid::is_bisection(const std::vector<int>& arrows) const {
  std::set<int> ds, rs;
  for (int g : arrows) {
    if (g < 0 || g >= arrow_count()) return false;
    if (!ds.insert(src_[g]).second) return false;
    if (!rs.insert(dst_[g]).second) return false;
  }
  return true;
}

Bisection FiniteGroupoid::identity_bisection() const {
  return Bisection{sorted_unique(identity_)};
}

Bisection FiniteGroupoid::compose_bisections(const Bisection& u, const Bisection& v) const {
  if (!is_bisection(u.arrows) || !is_bisection(v.arrows))
    throw InvalidInput("compose_bisections needs bisections");
  std::vector<int> out;
  for (int g : u.arrows)
    for (int h : v.arrows)
      if (composable(g, h)) out.push_back(compose(g, h));
  out = sorted_unique(out);
  if (!is_bisection(out))
    throw InternalDisagreement("product of bisections is not a bisection");
  return Bisection{std::move(out)};
}

Bisection FiniteGroupoid::invert_bisection(const Bisection& u) const {
  std::vector<int> out;
  out.reserve(u.arrows.size());
  for (int g : u.arrows) out.push_back(inverse_[g]);
  return Bisection{sorted_unique(std::move(out))};
}

ActionGroupoid action_groupoid(const FiniteGroup& g, int set_size,
                               const std::vector<std::vector<int>>& action) {
  const int m = g.order();
  if (static_cast<int>(action.size()) != m)
    throw InvalidInput("action table must have one row per group element");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(action[i].size()) != set_size)
      throw InvalidInput("ragged action row " + std::to_string(i));
    for (int x = 0; x < set_size; ++x)
      if (action[i][x] < 0 || action[i][x] >= set_size)
        throw InvalidInput("action image out of range");
  }
  for (int x = 0; x < set_size; ++x)
    if (action[g.identity()][x] != x)
      throw ValidationError("NotAnAction", "identity moves point " + std::to_string(x));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < set_size; ++x)
        if (action[i][action[j][x]] != action[g.op(i, j)][x])
          throw ValidationError("NotAnAction", "(" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") at point " +
                                                   std::to_string(x));

  // Arrow (i, x): x -> i.x, indexed i * set_size + x.
  GroupoidData data;
  data.objects = set_size;
  const int a = m * set_size;
  data.arrows.resize(a);
  ActionGroupoid result;
  result.arrow_labels.resize(a);
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < set_size; ++x) {
      data.arrows[i * set_size + x] = {x, action[i][x]};
      result.arrow_labels[i * set_size + x] = {i, x};
    }
  data.compose.assign(a, std::vector<int>(a, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int x = 0; x < set_size; ++x) {
        // (i, j.x) after (j, x) = (ij, x)
        const int lhs = i * set_size + action[j][x];
        const int rhs = j * set_size + x;
        data.compose[lhs][rhs] = g.op(i, j) * set_size + x;
      }
  result.groupoid = FiniteGroupoid::validate(data);
  return result;
}

GermGroupoid germ_groupoid(const InverseSemigroup& s, int set_size,
                           const std::vector<std::vector<int>>& action) {
  const int m = s.order();
  if (static_cast<int>(action.size()) != m)
    throw InvalidInput("action table must have one row per semigroup element");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(action[i].size()) != set_size)
      throw InvalidInput("ragged action row " + std::to_string(i));
    for (int x = 0; x < set_size; ++x)
      if (action[i][x] < -1 || action[i][x] >= set_size)
        throw InvalidInput("action image out of range");
  }

  auto defined = [&](int t, int x) { return action[t][x] >= 0; };

  // Partial bijections with dom(s) = dom(s*s) composing as a homomorphism.
  for (int t = 0; t < m; ++t) {
    const int tt = s.op(s.star(t), t);
    for (int x = 0; x < set_size; ++x) {
      if (defined(t, x) != defined(tt, x))
        throw ValidationError("NotAnAction", "dom(" + std::to_string(t) + ") differs from dom(" +
                                                 std::to_string(t) + "*" + std::to_string(t) +
                                                 ") at point " + std::to_string(x));
    }
    std::set<int> images;
    for (int x = 0; x < set_size; ++x)
      if (defined(t, x) && !images.insert(action[t][x]).second)
        throw ValidationError("NotAnAction",
                              "element " + std::to_string(t) + " is not injective");
  }
  for (int t = 0; t < m; ++t)
    for (int u = 0; u < m; ++u) {
      const int tu = s.op(t, u);
      for (int x = 0; x < set_size; ++x) {
        const int via = defined(u, x) && defined(t, action[u][x]) ? action[t][action[u][x]] : -1;
        if (via != action[tu][x])
          throw ValidationError("NotAnAction", "composite (" + std::to_string(t) + "," +
                                                   std::to_string(u) + ") at point " +
                                                   std::to_string(x));
      }
    }
  for (int x = 0; x < set_size; ++x) {
    bool covered = false;
    for (int e : s.idempotents())
      if (defined(e, x)) {
        covered = true;
        break;
      }
    if (!covered) throw ValidationError("Degenerate", "point " + std::to_string(x) +
                                                          " is in no idempotent domain");
  }

  // Germs (t, x); (t, x) ~ (u, x) iff some v <= t, u is defined at x.
  std::vector<std::pair<int, int>> germs;
  for (int t = 0; t < m; ++t)
    for (int x = 0; x < set_size; ++x)
      if (defined(t, x)) germs.emplace_back(t, x);

  auto equivalent = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
    if (a.second != b.second) return false;
    for (int v = 0; v < m; ++v)
      if (s.leq(v, a.first) && s.leq(v, b.first) && defined(v, a.second)) return true;
    return false;
  };

  const int g_total = static_cast<int>(germs.size());
  std::vector<int> cls(g_total, -1);
  GermGroupoid out;
  for (int i = 0; i < g_total; ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(out.arrow_rep.size());
    cls[i] = id;
    out.arrow_rep.push_back(germs[i]);
    for (int j = i + 1; j < g_total; ++j)
      if (cls[j] < 0 && equivalent(germs[i], germs[j])) cls[j] = id;
  }
  for (int i = 0; i < g_total; ++i) out.germ_arrow[germs[i]] = cls[i];

  const int a = static_cast<int>(out.arrow_rep.size());
  GroupoidData data;
  data.objects = set_size;
  data.arrows.resize(a);
  for (int id = 0; id < a; ++id) {
    const auto [t, x] = out.arrow_rep[id];
    data.arrows[id] = {x, action[t][x]};
  }
  // Equivalent germs move their base point identically; a mismatch would
  // poison every downstream verdict, so check it here.
  for (int i = 0; i < g_total; ++i) {
    const auto [t, x] = germs[i];
    if (action[t][x] != data.arrows[cls[i]].dst)
      throw InternalDisagreement("equivalent germs disagree on their image");
  }

  data.compose.assign(a, std::vector<int>(a, -1));
  for (int lhs = 0; lhs < a; ++lhs)
    for (int rhs = 0; rhs < a; ++rhs) {
      if (data.arrows[lhs].src != data.arrows[rhs].dst) continue;
      const auto [t, x1] = out.arrow_rep[lhs];
      const auto [u, x] = out.arrow_rep[rhs];
      // [t, u.x][u, x] = [tu, x]
      const auto it = out.germ_arrow.find({s.op(t, u), x});
      if (it == out.germ_arrow.end())
        throw InternalDisagreement("composite germ is not defined where it must be");
      data.compose[lhs][rhs] = it->second;
    }
  out.groupoid = FiniteGroupoid::validate(data);
  return out;
}

}  // namespace gpa
