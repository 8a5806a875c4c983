#include "gpa/group.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gpa {

FiniteGroup FiniteGroup::validate(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw ValidationError("EmptyTable", "");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(table[i].size()) != m)
      throw ValidationError("RaggedTable", "row " + std::to_string(i));
    for (int j = 0; j < m; ++j) {
      if (table[i][j] < 0 || table[i][j] >= m)
        throw ValidationError("EntryOutOfRange",
                              "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  FiniteGroup g;
  g.order_ = m;
  g.table_.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.table_[static_cast<size_t>(i) * m + j] = table[i][j];

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (g.op(g.op(i, j), k) != g.op(i, g.op(j, k)))
          throw ValidationError("NotAssociative", "(" + std::to_string(i) + "," +
                                                      std::to_string(j) + "," +
                                                      std::to_string(k) + ")");

  int identity = -1;
  for (int e = 0; e < m; ++e) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) ok = g.op(e, i) == i && g.op(i, e) == i;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw ValidationError("NoIdentity", "");
  g.identity_ = identity;

  g.inverse_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g.op(i, j) == identity && g.op(j, i) == identity) {
        g.inverse_[i] = j;
        break;
      }
    }
    if (g.inverse_[i] < 0) throw ValidationError("NoInverse", std::to_string(i));
  }
  return g;
}

std::vector<int> FiniteGroup::closure(const std::vector<int>& generators) const {
  std::set<int> seen(generators.begin(), generators.end());
  seen.insert(identity_);
  std::vector<int> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int b : seen) {
        for (int c : {op(a, b), op(b, a), inverse(a)}) {
          if (seen.insert(c).second) next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> FiniteGroup::normal_subgroups() const {
  // Every subgroup arises by repeatedly adjoining one generator, so a BFS
  // over closures enumerates them all; order() <= ~24 at desk scale.
  std::set<std::vector<int>> subgroups;
  subgroups.insert({identity_});
  std::vector<std::vector<int>> frontier = {{identity_}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int g = 0; g < order_; ++g) {
        if (std::binary_search(h.begin(), h.end(), g)) continue;
        std::vector<int> gens = h;
        gens.push_back(g);
        std::vector<int> bigger = closure(gens);
        if (subgroups.insert(bigger).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<int>> normal;
  for (const auto& h : subgroups) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g) {
      for (int n : h) {
        const int conj = op(op(g, n), inverse(g));
        if (!std::binary_search(h.begin(), h.end(), conj)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) normal.push_back(h);
  }
  std::sort(normal.begin(), normal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return normal;
}

bool group_algebra_is_prime(const GroupSpec& g, const RingSpec& r) {
  if (!r.is_integral_domain()) return false;
  if (g.is_infinite_cyclic()) return true;  // only finite normal subgroup of Z is {e}
  return g.finite->is_trivial();            // a nontrivial finite group is its own witness
}

bool group_algebra_is_semiprime(const GroupSpec& g, const RingSpec& r) {
  if (!r.is_reduced()) return false;
  if (g.is_infinite_cyclic()) return true;
  for (const auto& n : g.finite->normal_subgroups()) {
    if (r.is_zero_divisor(BigInt(n.size()))) return false;
  }
  return true;
}

}  // namespace gpa
