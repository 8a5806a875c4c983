#include "gpa/semigroup.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gpa {

InverseSemigroup InverseSemigroup::validate(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw ValidationError("EmptyTable", "");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(table[i].size()) != m)
      throw ValidationError("RaggedTable", "row " + std::to_string(i));
    for (int j = 0; j < m; ++j)
      if (table[i][j] < 0 || table[i][j] >= m)
        throw ValidationError("EntryOutOfRange",
                              "(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }

  InverseSemigroup s;
  s.order_ = m;
  s.table_.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.table_[static_cast<size_t>(i) * m + j] = table[i][j];

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (s.op(s.op(i, j), k) != s.op(i, s.op(j, k)))
          throw ValidationError("NotAssociative", "(" + std::to_string(i) + "," +
                                                      std::to_string(j) + "," +
                                                      std::to_string(k) + ")");

  s.star_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (s.op(s.op(i, j), i) == i && s.op(s.op(j, i), j) == j) {
        if (s.star_[i] >= 0)
          throw ValidationError("NonUniqueInverse",
                                "element " + std::to_string(i) + " has inverses " +
                                    std::to_string(s.star_[i]) + " and " + std::to_string(j));
        s.star_[i] = j;
      }
    }
    if (s.star_[i] < 0) throw ValidationError("NoInverse", "element " + std::to_string(i));
  }

  // Commuting idempotents are a theorem once inverses are unique; a failure
  // here would mean this validator is broken.
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (s.is_idempotent(e) && s.is_idempotent(f) && s.op(e, f) != s.op(f, e))
        throw InternalDisagreement("idempotents fail to commute after unique-inverse check");

  for (int z = 0; z < m; ++z) {
    bool is_zero = true;
    for (int i = 0; i < m && is_zero; ++i) is_zero = s.op(z, i) == z && s.op(i, z) == z;
    if (is_zero) {
      s.zero_ = z;
      break;
    }
  }
  return s;
}

std::vector<int> InverseSemigroup::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < order_; ++i)
    if (is_idempotent(i)) out.push_back(i);
  return out;
}

bool InverseSemigroup::leq(int s, int t) const {
  for (int e : idempotents())
    if (op(t, e) == s) return true;
  return false;
}

Semilattice semilattice_structure(const InverseSemigroup& s) {
  Semilattice e;
  e.elements = s.idempotents();
  const int k = e.size();
  e.leq.assign(k, std::vector<bool>(k, false));
  e.meet.assign(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int prod = s.op(e.elements[a], e.elements[b]);
      const auto it = std::find(e.elements.begin(), e.elements.end(), prod);
      if (it == e.elements.end())
        throw InternalDisagreement("product of idempotents is not idempotent");
      e.meet[a][b] = static_cast<int>(it - e.elements.begin());
      e.leq[a][b] = prod == e.elements[a];
    }
  // Meet-semilattice laws (commutative, associative, idempotent, and the
  // order it induces is antisymmetric).
  for (int a = 0; a < k; ++a) {
    if (e.meet[a][a] != a) throw InternalDisagreement("meet not idempotent");
    for (int b = 0; b < k; ++b) {
      if (e.meet[a][b] != e.meet[b][a]) throw InternalDisagreement("meet not commutative");
      if (a != b && e.leq[a][b] && e.leq[b][a])
        throw InternalDisagreement("semilattice order not antisymmetric");
      for (int c = 0; c < k; ++c)
        if (e.meet[e.meet[a][b]][c] != e.meet[a][e.meet[b][c]])
          throw InternalDisagreement("meet not associative");
    }
  }
  if (s.zero()) e.zero_pos = e.position_of(*s.zero());
  return e;
}

int Semilattice::position_of(int semigroup_index) const {
  const auto it = std::find(elements.begin(), elements.end(), semigroup_index);
  if (it == elements.end()) throw InvalidInput("not an idempotent: " + std::to_string(semigroup_index));
  return static_cast<int>(it - elements.begin());
}

std::vector<Character> characters(const Semilattice& e) {
  // Finite case: every filter has a minimum, so characters are exactly the
  // principal ones, one per idempotent.
  std::vector<Character> out;
  const int k = e.size();
  for (int pos = 0; pos < k; ++pos) {
    Character c;
    c.idempotent = e.elements[pos];
    c.filter.resize(k);
    for (int f = 0; f < k; ++f) c.filter[f] = e.leq[pos][f];
    c.proper = !(e.zero_pos && *e.zero_pos == pos);
    // Verify it is a nonzero semilattice homomorphism to {0,1}.
    if (!c.filter[pos]) throw InternalDisagreement("principal character misses its idempotent");
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        const bool lhs = c.filter[e.meet[a][b]];
        const bool rhs = c.filter[a] && c.filter[b];
        if (lhs != rhs) throw InternalDisagreement("principal character is not a homomorphism");
      }
    out.push_back(std::move(c));
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      if (out[i].filter == out[j].filter)
        throw InternalDisagreement("two idempotents induce the same character");
  return out;
}

MaximalSubgroup maximal_subgroup(const InverseSemigroup& s, int idempotent) {
  if (idempotent < 0 || idempotent >= s.order() || !s.is_idempotent(idempotent))
    throw ValidationError("NotIdempotent", "element " + std::to_string(idempotent));
  MaximalSubgroup g;
  for (int i = 0; i < s.order(); ++i)
    if (s.op(s.star(i), i) == idempotent && s.op(i, s.star(i)) == idempotent)
      g.element_ids.push_back(i);
  const int k = static_cast<int>(g.element_ids.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int prod = s.op(g.element_ids[a], g.element_ids[b]);
      const auto it = std::find(g.element_ids.begin(), g.element_ids.end(), prod);
      if (it == g.element_ids.end())
        throw InternalDisagreement("maximal subgroup is not closed under the product");
      table[a][b] = static_cast<int>(it - g.element_ids.begin());
    }
  g.group = FiniteGroup::validate(table);
  return g;
}

bool is_bisimple(const InverseSemigroup& s) {
  const auto idem = s.idempotents();
  for (int e : idem)
    for (int f : idem) {
      bool linked = false;
      for (int i = 0; i < s.order() && !linked; ++i)
        linked = s.op(s.star(i), i) == e && s.op(i, s.star(i)) == f;
      if (!linked) return false;
    }
  return true;
}

bool is_0_bisimple(const InverseSemigroup& s) {
  if (!s.zero()) throw ValidationError("NoZero", "0-bisimplicity needs a zero element");
  const int z = *s.zero();
  const auto idem = s.idempotents();
  for (int e : idem)
    for (int f : idem) {
      if (e == z || f == z) continue;
      bool linked = false;
      for (int i = 0; i < s.order() && !linked; ++i)
        linked = s.op(s.star(i), i) == e && s.op(i, s.star(i)) == f;
      if (!linked) return false;
    }
  return true;
}

bool is_pseudofinite(const Semilattice& e) {
  const int k = e.size();
  for (int a = 0; a < k; ++a) {
    std::vector<int> below;
    for (int b = 0; b < k; ++b)
      if (b != a && e.leq[b][a]) below.push_back(b);
    // Maximal elements of the strict down-set.
    std::vector<int> maximal;
    for (int b : below) {
      bool is_max = true;
      for (int c : below)
        if (c != b && e.leq[b][c]) is_max = false;
      if (is_max) maximal.push_back(b);
    }
    for (int b : below) {
      bool generated = false;
      for (int m : maximal)
        if (e.leq[b][m]) generated = true;
      if (!generated) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

UniversalGroupoid universal_groupoid(const InverseSemigroup& s, bool contracted) {
  if (contracted && !s.zero())
    throw ValidationError("NoZero", "contracted universal groupoid needs a zero element");

  const Semilattice lattice = semilattice_structure(s);
  std::vector<Character> all = characters(lattice);

  UniversalGroupoid ug;
  ug.contracted = contracted;
  for (auto& c : all)
    if (!contracted || c.proper) ug.chars.push_back(c);
  const int n = static_cast<int>(ug.chars.size());

  // S acts on characters by theta -> theta(s* _ s) with domain where
  // theta(s*s) = 1; on this finite spectrum the action lands back in the
  // character list (looked up, never assumed).
  std::vector<std::vector<int>> action(s.order(), std::vector<int>(n, -1));
  for (int t = 0; t < s.order(); ++t) {
    const int dom_idem = s.op(s.star(t), t);
    for (int x = 0; x < n; ++x) {
      const Character& theta = ug.chars[x];
      if (!theta.filter[lattice.position_of(dom_idem)]) continue;
      std::vector<bool> moved(lattice.size());
      for (int f = 0; f < lattice.size(); ++f) {
        const int conj = s.op(s.op(s.star(t), lattice.elements[f]), t);
        moved[f] = theta.filter[lattice.position_of(conj)];
      }
      int target = -1;
      for (int y = 0; y < n; ++y)
        if (ug.chars[y].filter == moved) {
          target = y;
          break;
        }
      if (target < 0)
        throw InternalDisagreement("action image is not a character of the spectrum");
      action[t][x] = target;
    }
  }

  ug.germs = germ_groupoid(s, n, action);
  ug.groupoid = ug.germs.groupoid;

  // Canonical arrow per element: the germ of s at the principal character
  // of s*s (zero skipped when contracted).
  for (int t = 0; t < s.order(); ++t) {
    if (contracted && t == *s.zero()) {
      ug.element_arrow.push_back(-1);
      continue;
    }
    const int dom_idem = s.op(s.star(t), t);
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (ug.chars[i].idempotent == dom_idem) {
        x = i;
        break;
      }
    if (x < 0) throw InternalDisagreement("principal character of s*s is missing");
    ug.element_arrow.push_back(ug.germs.germ_arrow.at({t, x}));
  }
  return ug;
}

// ---------------------------------------------------------------------------

SemigroupAlgebraIso semigroup_algebra_iso(const InverseSemigroup& s, const RingSpec& ring,
                                          bool contracted, int order_cap) {
  if (s.order() > order_cap)
    throw CapExceeded(static_cast<std::uint64_t>(s.order()), static_cast<std::uint64_t>(order_cap));

  SemigroupAlgebraIso iso;
  iso.universal = universal_groupoid(s, contracted);
  const FiniteGroupoid& gpd = iso.universal.groupoid;
  const int arrows = gpd.arrow_count();
  const int m = s.order();

  // The image of s is the indicator of all germs of s (its domain
  // bisection); the zero of S maps to the zero element when contracted.
  for (int t = 0; t < m; ++t) {
    AlgebraElem img(&gpd, ring);
    for (const auto& [germ, arrow] : iso.universal.germs.germ_arrow)
      if (germ.first == t) img.set(arrow, img.at(arrow) + RingElem::one(ring));
    iso.image.push_back(std::move(img));
  }

  // Multiplicativity on every pair; in the contracted case the product is
  // taken in R0S, where the zero of S is the zero of the algebra.
  const auto zero_elem = [&](int t) {
    return contracted && s.zero() && t == *s.zero();
  };
  for (int t = 0; t < m; ++t)
    for (int u = 0; u < m; ++u) {
      const int tu = s.op(t, u);
      const AlgebraElem lhs = iso.image[t].convolve(iso.image[u]);
      const AlgebraElem rhs = zero_elem(tu) ? AlgebraElem(&gpd, ring) : iso.image[tu];
      if (lhs != rhs)
        throw InternalDisagreement("semigroup algebra map is not multiplicative at (" +
                                   std::to_string(t) + "," + std::to_string(u) + ")");
    }

  // Basis matrix: columns are images over the arrow basis.  Listing the
  // (nonzero) elements along a linear extension of the natural partial
  // order makes it unitriangular, because the germs of t are exactly the
  // canonical germs of the elements below t.
  std::vector<int> elems;
  for (int t = 0; t < m; ++t)
    if (!zero_elem(t)) elems.push_back(t);
  if (static_cast<int>(elems.size()) != arrows)
    throw InternalDisagreement("algebra ranks differ: " + std::to_string(elems.size()) +
                               " elements vs " + std::to_string(arrows) + " arrows");
  {
    std::vector<int> order;
    std::vector<char> used(m, 0);
    while (order.size() < elems.size()) {
      bool progressed = false;
      for (int t : elems) {
        if (used[t]) continue;
        bool minimal = true;
        for (int u : elems)
          if (!used[u] && u != t && s.leq(u, t)) minimal = false;
        if (minimal) {
          order.push_back(t);
          used[t] = 1;
          progressed = true;
        }
      }
      if (!progressed) throw InternalDisagreement("natural partial order has a cycle");
    }
    elems = std::move(order);
  }

  // Row i is the arrow canonically attached to elems[i]; column j the image
  // of elems[j].
  std::vector<int> arrow_of(elems.size());
  std::vector<int> row_of_arrow(arrows, -1);
  for (size_t i = 0; i < elems.size(); ++i) {
    arrow_of[i] = iso.universal.element_arrow[elems[i]];
    if (arrow_of[i] < 0 || row_of_arrow[arrow_of[i]] != -1)
      throw InternalDisagreement("canonical germ map is not a bijection onto arrows");
    row_of_arrow[arrow_of[i]] = static_cast<int>(i);
  }

  const RingElem zero = RingElem::zero(ring);
  const RingElem unit = RingElem::one(ring);
  iso.forward.assign(elems.size(), std::vector<RingElem>(elems.size(), zero));
  for (size_t j = 0; j < elems.size(); ++j) {
    for (const auto& [arrow, coeff] : iso.image[elems[j]].coeffs()) {
      const int i = row_of_arrow[arrow];
      if (i < 0) throw InternalDisagreement("image hits an arrow with no canonical element");
      iso.forward[i][j] = coeff;
      if (static_cast<size_t>(i) > j)
        throw InternalDisagreement("basis matrix is not triangular along the natural order");
    }
    if (iso.forward[j][j] != unit)
      throw InternalDisagreement("basis matrix is not unitriangular");
  }

  // Invert the unitriangular matrix by back-substitution; subtraction only,
  // so it works over every supported ring.
  const size_t n = elems.size();
  iso.backward.assign(n, std::vector<RingElem>(n, zero));
  for (size_t j = 0; j < n; ++j) {
    std::vector<RingElem> col(n, zero);
    col[j] = unit;
    for (size_t i = j + 1; i-- > 0;) {
      RingElem val = col[i];
      for (size_t k = i + 1; k <= j; ++k) val = val - iso.forward[i][k] * iso.backward[k][j];
      iso.backward[i][j] = val;
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      RingElem dot1 = zero, dot2 = zero;
      for (size_t k = 0; k < n; ++k) {
        dot1 = dot1 + iso.forward[i][k] * iso.backward[k][j];
        dot2 = dot2 + iso.backward[i][k] * iso.forward[k][j];
      }
      const RingElem want = i == j ? unit : zero;
      if (dot1 != want || dot2 != want)
        throw InternalDisagreement("unitriangular inverse failed verification");
    }

  iso.verified = true;
  return iso;
}

// ---------------------------------------------------------------------------

namespace {

PrimenessVerdict cross_checked(PrimenessVerdict munn, const PrimenessVerdict& structural,
                               const char* what) {
  if (munn.decision != structural.decision)
    throw InternalDisagreement(std::string(what) +
                               ": Munn criterion disagrees with the structural decision on the "
                               "universal groupoid");
  return munn;
}

}  // namespace

PrimenessVerdict munn_prime_verdict(const InverseSemigroup& s, const RingSpec& ring,
                                    bool contracted) {
  if (contracted && !s.zero())
    throw ValidationError("NoZero", "contracted verdict needs a zero element");

  const Semilattice lattice = semilattice_structure(s);
  // Finite semilattices are pseudofinite, which is what makes the converse
  // direction of the criterion available; computed, not assumed.
  if (!is_pseudofinite(lattice))
    throw InternalDisagreement("finite semilattice fails pseudofiniteness");

  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;

  const bool zero_only = contracted && s.order() == 1;
  if (zero_only) {
    v.decision = false;
    v.reason = "the contracted algebra of the zero semigroup is the zero ring";
    v.witness = nlohmann::json{{"kind", "zero_algebra"}};
    return cross_checked(std::move(v),
                         structural_is_prime(universal_groupoid(s, contracted).groupoid, ring),
                         "prime");
  }

  const bool simple = contracted ? is_0_bisimple(s) : is_bisimple(s);
  if (!simple) {
    // Witness: an unlinked pair of (nonzero) idempotents.
    int we = -1, wf = -1;
    for (int e : s.idempotents()) {
      for (int f : s.idempotents()) {
        if (contracted && (e == *s.zero() || f == *s.zero())) continue;
        bool linked = false;
        for (int i = 0; i < s.order() && !linked; ++i)
          linked = s.op(s.star(i), i) == e && s.op(i, s.star(i)) == f;
        if (!linked) {
          we = e;
          wf = f;
          break;
        }
      }
      if (we >= 0) break;
    }
    v.decision = false;
    v.reason = std::string(contracted ? "not 0-bisimple" : "not bisimple") +
               ": idempotents " + std::to_string(we) + " and " + std::to_string(wf) +
               " are not linked, and the (pseudofinite) converse direction applies";
    v.witness = nlohmann::json{{"kind", "unlinked_idempotents"}, {"idempotents", {we, wf}}};
  } else {
    int base = -1;
    for (int e : s.idempotents()) {
      if (contracted && e == *s.zero()) continue;
      base = e;
      break;
    }
    const MaximalSubgroup g = maximal_subgroup(s, base);
    if (group_algebra_is_prime(GroupSpec::of(g.group), ring)) {
      v.decision = true;
      v.reason = std::string(contracted ? "0-bisimple" : "bisimple") +
                 " with maximal subgroup of order " + std::to_string(g.group.order()) +
                 " whose group algebra over " + ring.to_string() + " is prime";
    } else {
      v.decision = false;
      if (!ring.is_integral_domain()) {
        v.reason = "maximal subgroup algebra is not prime: " + ring.to_string() +
                   " is not an integral domain";
        v.witness = nlohmann::json{{"kind", "non_domain_ring"}};
      } else {
        v.reason = "maximal subgroup of order " + std::to_string(g.group.order()) +
                   " has a nontrivial finite normal subgroup";
        v.witness = nlohmann::json{{"kind", "connell_normal_subgroup"},
                                   {"idempotent", base},
                                   {"subgroup_order", g.group.order()}};
      }
    }
  }
  return cross_checked(std::move(v),
                       structural_is_prime(universal_groupoid(s, contracted).groupoid, ring),
                       "prime");
}

PrimenessVerdict munn_semiprime_verdict(const InverseSemigroup& s, const RingSpec& ring,
                                        bool contracted) {
  if (contracted && !s.zero())
    throw ValidationError("NoZero", "contracted verdict needs a zero element");

  const Semilattice lattice = semilattice_structure(s);
  if (!is_pseudofinite(lattice))
    throw InternalDisagreement("finite semilattice fails pseudofiniteness");

  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  v.decision = true;

  for (int e : s.idempotents()) {
    if (contracted && e == *s.zero()) continue;
    const MaximalSubgroup g = maximal_subgroup(s, e);
    if (!group_algebra_is_semiprime(GroupSpec::of(g.group), ring)) {
      v.decision = false;
      v.reason = "maximal subgroup at idempotent " + std::to_string(e) + " (order " +
                 std::to_string(g.group.order()) + ") has a non-semiprime group algebra over " +
                 ring.to_string() + "; the (pseudofinite) converse direction applies";
      v.witness = nlohmann::json{{"kind", "munn_semiprime_failure"}, {"idempotent", e}};
      break;
    }
  }
  if (v.decision)
    v.reason = "every maximal subgroup algebra over " + ring.to_string() + " is semiprime";
  return cross_checked(std::move(v),
                       structural_is_semiprime(universal_groupoid(s, contracted).groupoid, ring),
                       "semiprime");
}

}  // namespace gpa
