#include "doctest.h"

#include <algorithm>
#include <set>

#include "gpa/corpus.hpp"
#include "gpa/semigroup.hpp"

using namespace gpa;

namespace {

const RingSpec kQ = RingSpec::rationals();
const RingSpec kZ2 = RingSpec::integers_mod(2);
const RingSpec kZ4 = RingSpec::integers_mod(4);

// Subsets of 3 bits under intersection: an 8-element Boolean semilattice.
InverseSemigroup boolean_semilattice_8() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) t[a][b] = a & b;
  return InverseSemigroup::validate(t);
}

}  // namespace

TEST_CASE("validation accepts groups, chains and B2") {
  const InverseSemigroup g = corpus::group_as_semigroup(corpus::cyclic_group(3));
  CHECK(g.order() == 3);
  CHECK_FALSE(g.zero().has_value());

  const InverseSemigroup chain = corpus::chain_semilattice_2();
  CHECK(chain.zero() == 1);  // the bottom absorbs

  const InverseSemigroup b2 = corpus::brandt_b2();
  CHECK(b2.order() == 5);
  CHECK(b2.zero() == 0);
  CHECK(b2.star(1) == 2);  // a* really is the involution
  CHECK(b2.idempotents() == std::vector<int>{0, 3, 4});
}

TEST_CASE("validation rejects bad tables with witnesses") {
  try {
    InverseSemigroup::validate({{0, 0}, {1, 1}});  // left-zero band
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "NonUniqueInverse");
  }
  try {
    InverseSemigroup::validate({{0, 1}, {0, 0}});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "NotAssociative");
  }
  // The bicyclic-ish table below has an element with no inverse at all.
  try {
    InverseSemigroup::validate({{0, 0}, {0, 0}});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "NoInverse");
  }
}

TEST_CASE("semilattice structure") {
  const Semilattice group_e = semilattice_structure(corpus::group_as_semigroup(corpus::cyclic_group(4)));
  CHECK(group_e.size() == 1);

  const Semilattice chain = semilattice_structure(corpus::chain_semilattice_2());
  CHECK(chain.size() == 2);
  const int e = chain.position_of(0), f = chain.position_of(1);
  CHECK(chain.leq[f][e]);
  CHECK_FALSE(chain.leq[e][f]);

  const Semilattice b2e = semilattice_structure(corpus::brandt_b2());
  CHECK(b2e.size() == 3);
  REQUIRE(b2e.zero_pos.has_value());
  for (int pos = 0; pos < b2e.size(); ++pos) CHECK(b2e.leq[*b2e.zero_pos][pos]);
  // The two nonzero idempotents are incomparable.
  const int p = b2e.position_of(3), q = b2e.position_of(4);
  CHECK_FALSE(b2e.leq[p][q]);
  CHECK_FALSE(b2e.leq[q][p]);
}

TEST_CASE("maximal subgroups") {
  const InverseSemigroup s3 = corpus::group_as_semigroup(corpus::symmetric_3());
  CHECK(maximal_subgroup(s3, s3.idempotents()[0]).group.order() == 6);

  const InverseSemigroup b2 = corpus::brandt_b2();
  CHECK(maximal_subgroup(b2, 3).group.is_trivial());
  CHECK(maximal_subgroup(b2, 4).group.is_trivial());
  CHECK_THROWS_AS(maximal_subgroup(b2, 1), ValidationError);  // a is not idempotent

  const InverseSemigroup chain = corpus::chain_semilattice_2();
  CHECK(maximal_subgroup(chain, 0).group.is_trivial());
}

TEST_CASE("characters are exactly the principal ones") {
  const Semilattice chain = semilattice_structure(corpus::chain_semilattice_2());
  const auto chars = characters(chain);
  REQUIRE(chars.size() == 2);
  // theta_e has filter {e}; theta_f sees everything above f.
  const int e = chain.position_of(0), f = chain.position_of(1);
  CHECK(chars[e].filter[e]);
  CHECK_FALSE(chars[e].filter[f]);
  CHECK(chars[f].filter[e]);
  CHECK(chars[f].filter[f]);

  const auto b2chars = characters(semilattice_structure(corpus::brandt_b2()));
  CHECK(b2chars.size() == 3);
  CHECK(std::count_if(b2chars.begin(), b2chars.end(),
                      [](const Character& c) { return c.proper; }) == 2);

  // Pointwise comparable characters anti-reflect the idempotent order.
  for (const auto& lattice :
       {chain, semilattice_structure(corpus::brandt_b2()),
        semilattice_structure(boolean_semilattice_8())}) {
    const auto cs = characters(lattice);
    for (size_t i = 0; i < cs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) {
        bool pointwise_leq = true;
        for (size_t k = 0; k < cs[i].filter.size(); ++k)
          if (cs[i].filter[k] && !cs[j].filter[k]) pointwise_leq = false;
        const bool reverse_order =
            lattice.leq[lattice.position_of(cs[j].idempotent)]
                       [lattice.position_of(cs[i].idempotent)];
        CHECK(pointwise_leq == reverse_order);
      }
  }
}

TEST_CASE("character enumeration agrees with the exhaustive homomorphism search") {
  for (const auto& s :
       {corpus::chain_semilattice_2(), corpus::brandt_b2(), boolean_semilattice_8()}) {
    const Semilattice e = semilattice_structure(s);
    const int k = e.size();
    std::set<std::vector<bool>> homs;
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<bool> theta(k);
      for (int i = 0; i < k; ++i) theta[i] = (mask >> i) & 1;
      bool hom = true;
      for (int a = 0; a < k && hom; ++a)
        for (int b = 0; b < k && hom; ++b)
          if (theta[e.meet[a][b]] != (theta[a] && theta[b])) hom = false;
      if (hom) homs.insert(theta);
    }
    std::set<std::vector<bool>> principal;
    for (const auto& c : characters(e)) {
      std::vector<bool> filt(c.filter.begin(), c.filter.end());
      principal.insert(filt);
    }
    CHECK(homs == principal);
  }
}

TEST_CASE("bisimplicity") {
  CHECK(is_bisimple(corpus::group_as_semigroup(corpus::cyclic_group(2))));
  CHECK_FALSE(is_bisimple(corpus::chain_semilattice_2()));
  CHECK_FALSE(is_bisimple(corpus::brandt_b2()));
  CHECK(is_0_bisimple(corpus::brandt_b2()));
  CHECK_THROWS_AS(is_0_bisimple(corpus::group_as_semigroup(corpus::cyclic_group(2))),
                  ValidationError);
}

TEST_CASE("pseudofiniteness holds for finite semilattices") {
  CHECK(is_pseudofinite(semilattice_structure(corpus::chain_semilattice_2())));
  CHECK(is_pseudofinite(semilattice_structure(corpus::brandt_b2())));
  CHECK(is_pseudofinite(semilattice_structure(boolean_semilattice_8())));
}

TEST_CASE("universal groupoids of basic semigroups") {
  // A group: one object carrying the group itself.
  const UniversalGroupoid g = universal_groupoid(corpus::group_as_semigroup(corpus::cyclic_group(3)), false);
  CHECK(g.groupoid.object_count() == 1);
  CHECK(g.groupoid.isotropy_group(0).group.order() == 3);

  // A semilattice: the groupoid of identities on its characters.
  const UniversalGroupoid chain = universal_groupoid(corpus::chain_semilattice_2(), false);
  CHECK(chain.groupoid.object_count() == 2);
  CHECK(chain.groupoid.arrow_count() == 2);
  CHECK(chain.groupoid.is_effective());
  CHECK(chain.groupoid.orbits().blocks.size() == 2);

  // Contracted B2: the pair groupoid on two objects.
  const UniversalGroupoid b2 = universal_groupoid(corpus::brandt_b2(), true);
  CHECK(b2.groupoid.object_count() == 2);
  CHECK(b2.groupoid.arrow_count() == 4);
  CHECK(b2.groupoid.orbits().blocks.size() == 1);
  CHECK(b2.groupoid.is_effective());
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int count = 0;
      for (int a = 0; a < 4; ++a)
        if (b2.groupoid.src(a) == x && b2.groupoid.dst(a) == y) ++count;
      CHECK(count == 1);
    }

  CHECK_THROWS_AS(universal_groupoid(corpus::group_as_semigroup(corpus::cyclic_group(2)), true),
                  ValidationError);
}

TEST_CASE("universal groupoid object count and isotropy match the theory") {
  for (int order = 1; order <= 3; ++order) {
    for (const auto& table : corpus::inverse_semigroup_tables(order)) {
      const InverseSemigroup s = InverseSemigroup::validate(table);
      const UniversalGroupoid ug = universal_groupoid(s, false);
      CHECK(ug.groupoid.object_count() == static_cast<int>(s.idempotents().size()));
      for (int x = 0; x < ug.groupoid.object_count(); ++x) {
        const int e = ug.chars[x].idempotent;
        CHECK(ug.groupoid.isotropy_group(x).group.order() ==
              maximal_subgroup(s, e).group.order());
      }
    }
  }
}

TEST_CASE("semigroup algebra isomorphism on the chain") {
  const SemigroupAlgebraIso iso = semigroup_algebra_iso(corpus::chain_semilattice_2(), kQ, false);
  CHECK(iso.verified);
  // e sees both characters, f only its own: supports 2 and 1.
  CHECK(iso.image[0].coeffs().size() == 2);
  CHECK(iso.image[1].coeffs().size() == 1);
}

TEST_CASE("semigroup algebra isomorphism on groups is a relabeling") {
  const SemigroupAlgebraIso iso =
      semigroup_algebra_iso(corpus::group_as_semigroup(corpus::cyclic_group(4)), kZ2, false);
  CHECK(iso.verified);
  for (const auto& img : iso.image) CHECK(img.coeffs().size() == 1);
}

TEST_CASE("semigroup algebra isomorphism for contracted B2") {
  const SemigroupAlgebraIso iso = semigroup_algebra_iso(corpus::brandt_b2(), kQ, true);
  CHECK(iso.verified);
  const MatrixDecomposition dec = matrix_decomposition(iso.universal.groupoid, kQ);
  CHECK(dec.describe(kQ) == "M_2(Q)");
  CHECK_THROWS_AS(semigroup_algebra_iso(corpus::brandt_b2(), kQ, true, 3), CapExceeded);
}

TEST_CASE("munn primeness verdicts") {
  CHECK(munn_prime_verdict(corpus::brandt_b2(), kQ, true).decision);
  CHECK_FALSE(munn_prime_verdict(corpus::brandt_b2(), kQ, false).decision);
  CHECK_FALSE(munn_prime_verdict(corpus::chain_semilattice_2(), kQ, false).decision);
  CHECK_FALSE(munn_prime_verdict(corpus::group_as_semigroup(corpus::cyclic_group(2)), kQ).decision);
  CHECK(munn_prime_verdict(corpus::group_as_semigroup(corpus::cyclic_group(1)), kQ).decision);
  CHECK_FALSE(munn_prime_verdict(corpus::brandt_b2(), RingSpec::integers_mod(6), true).decision);
}

TEST_CASE("munn semiprimeness verdicts") {
  CHECK(munn_semiprime_verdict(corpus::brandt_b2(), kZ2, true).decision);
  CHECK_FALSE(munn_semiprime_verdict(corpus::group_as_semigroup(corpus::cyclic_group(2)), kZ2).decision);
  CHECK_FALSE(munn_semiprime_verdict(corpus::brandt_b2(), kZ4, true).decision);
  CHECK_FALSE(munn_semiprime_verdict(corpus::chain_semilattice_2(), kZ4).decision);
  CHECK(munn_semiprime_verdict(corpus::chain_semilattice_2(), kZ2).decision);
  CHECK(munn_semiprime_verdict(corpus::group_as_semigroup(corpus::cyclic_group(2)), kQ).decision);
}

TEST_CASE("the zero semigroup has a zero contracted algebra") {
  const InverseSemigroup z = InverseSemigroup::validate({{0}});
  REQUIRE(z.zero() == 0);
  CHECK(universal_groupoid(z, true).groupoid.object_count() == 0);
  CHECK_FALSE(munn_prime_verdict(z, kQ, true).decision);
  CHECK(munn_semiprime_verdict(z, kQ, true).decision);
  // Uncontracted, the same semigroup is the trivial group.
  CHECK(munn_prime_verdict(z, kQ, false).decision);
}

TEST_CASE("the exhaustive table generator finds the expected tiny corpora") {
  CHECK(corpus::inverse_semigroup_tables(1).size() == 1);
  // Order 2: two labelings each of the group Z2 and the chain semilattice.
  CHECK(corpus::inverse_semigroup_tables(2).size() == 4);
  for (const auto& table : corpus::inverse_semigroup_tables(3))
    CHECK_NOTHROW(InverseSemigroup::validate(table));
}
