#include "doctest.h"

#include "gpa/algebra.hpp"
#include "gpa/corpus.hpp"

using namespace gpa;

namespace {

const RingSpec kQ = RingSpec::rationals();
const RingSpec kZ2 = RingSpec::integers_mod(2);
const RingSpec kZ3 = RingSpec::integers_mod(3);
const RingSpec kZ4 = RingSpec::integers_mod(4);

}  // namespace

TEST_CASE("point masses convolve along composition") {
  const FiniteGroupoid pair = corpus::pair_groupoid(2);
  for (int g = 0; g < pair.arrow_count(); ++g)
    for (int h = 0; h < pair.arrow_count(); ++h) {
      const AlgebraElem prod =
          AlgebraElem::delta(&pair, kQ, g).convolve(AlgebraElem::delta(&pair, kQ, h));
      if (pair.composable(g, h))
        CHECK(prod == AlgebraElem::delta(&pair, kQ, pair.compose(g, h)));
      else
        CHECK(prod.is_zero());
    }
}

TEST_CASE("group algebra products expand correctly") {
  const FiniteGroupoid z2 = corpus::group_object(corpus::cyclic_group(2));
  AlgebraElem f(&z2, kQ);
  f.set(0, RingElem::one(kQ));
  f.set(1, RingElem::one(kQ));
  const AlgebraElem sq = f.convolve(f);
  const RingElem two = RingElem::from_integer(kQ, BigInt(2));
  CHECK(sq.at(0) == two);
  CHECK(sq.at(1) == two);
}

TEST_CASE("indicators") {
  const FiniteGroupoid pair = corpus::pair_groupoid(2);
  CHECK(AlgebraElem::indicator(&pair, kQ, Bisection{{}}).is_zero());
  CHECK(AlgebraElem::indicator(&pair, kQ, Bisection{{2}}) == AlgebraElem::delta(&pair, kQ, 2));

  // The identity bisection is the multiplicative unit.
  const AlgebraElem unit = AlgebraElem::indicator(&pair, kQ, pair.identity_bisection());
  corpus::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const AlgebraElem f = corpus::random_algebra_elem(rng, &pair, kQ);
    CHECK(unit.convolve(f) == f);
    CHECK(f.convolve(unit) == f);
  }
}

TEST_CASE("mismatched carriers are rejected") {
  const FiniteGroupoid a = corpus::pair_groupoid(2);
  const FiniteGroupoid b = corpus::pair_groupoid(2);
  CHECK_THROWS_AS(AlgebraElem::delta(&a, kQ, 0).convolve(AlgebraElem::delta(&b, kQ, 0)),
                  MismatchedCarrier);
  CHECK_THROWS_AS(AlgebraElem::delta(&a, kQ, 0) + AlgebraElem::delta(&a, kZ2, 0),
                  MismatchedCarrier);
}

TEST_CASE("matrix decomposition shapes") {
  const MatrixDecomposition pair_dec = matrix_decomposition(corpus::pair_groupoid(2), kQ);
  CHECK(pair_dec.verified);
  REQUIRE(pair_dec.blocks.size() == 1);
  CHECK(pair_dec.blocks[0].objects.size() == 2);
  CHECK(pair_dec.blocks[0].isotropy.group.is_trivial());
  CHECK(pair_dec.describe(kQ) == "M_2(Q)");
  CHECK(pair_dec.blocks[0].basis_image.size() == 4);  // dimension count

  const MatrixDecomposition grp = matrix_decomposition(corpus::group_object(corpus::symmetric_3()), kQ);
  CHECK(grp.verified);
  REQUIRE(grp.blocks.size() == 1);
  CHECK(grp.blocks[0].objects.size() == 1);
  CHECK(grp.blocks[0].isotropy.group.order() == 6);
  CHECK(grp.describe(kQ) == "M_1(Q[G6])");

  const FiniteGroupoid mixed = corpus::disjoint_union(
      {corpus::pair_groupoid(2), corpus::group_object(corpus::cyclic_group(2))});
  const MatrixDecomposition dec = matrix_decomposition(mixed, kQ);
  CHECK(dec.verified);
  REQUIRE(dec.blocks.size() == 2);
  CHECK(dec.blocks[0].objects.size() == 2);
  CHECK(dec.blocks[0].isotropy.group.is_trivial());
  CHECK(dec.blocks[1].objects.size() == 1);
  CHECK(dec.blocks[1].isotropy.group.order() == 2);
}

TEST_CASE("matrix decomposition verifies on the random corpus") {
  corpus::Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const FiniteGroupoid g = corpus::random_groupoid(rng, 4, 10);
    CHECK(matrix_decomposition(g, kQ).verified);
  }
}

TEST_CASE("structural primeness") {
  const PrimenessVerdict ok = structural_is_prime(corpus::pair_groupoid(2), kQ);
  CHECK(ok.decision);
  CHECK_FALSE(ok.witness.has_value());

  const FiniteGroupoid split =
      corpus::disjoint_union({corpus::pair_groupoid(1), corpus::pair_groupoid(1)});
  const PrimenessVerdict orbits = structural_is_prime(split, kQ);
  CHECK_FALSE(orbits.decision);
  REQUIRE(orbits.witness.has_value());
  CHECK((*orbits.witness)["kind"] == "multiple_orbits");
  CHECK(replay_witness(orbits, split, kQ));

  const FiniteGroupoid z2obj = corpus::group_object(corpus::cyclic_group(2));
  const PrimenessVerdict connell = structural_is_prime(z2obj, kQ);
  CHECK_FALSE(connell.decision);
  REQUIRE(connell.witness.has_value());
  CHECK((*connell.witness)["kind"] == "connell_normal_subgroup");
  CHECK(replay_witness(connell, z2obj, kQ));

  const PrimenessVerdict ring = structural_is_prime(corpus::pair_groupoid(2), RingSpec::integers_mod(6));
  CHECK_FALSE(ring.decision);
  CHECK((*ring.witness)["kind"] == "non_domain_ring");
  CHECK(replay_witness(ring, corpus::pair_groupoid(2), RingSpec::integers_mod(6)));
}

TEST_CASE("structural semiprimeness") {
  CHECK_FALSE(structural_is_semiprime(corpus::pair_groupoid(2), kZ4).decision);
  const FiniteGroupoid z2obj = corpus::group_object(corpus::cyclic_group(2));
  CHECK(structural_is_semiprime(z2obj, kQ).decision);

  const PrimenessVerdict v = structural_is_semiprime(z2obj, kZ2);
  CHECK_FALSE(v.decision);
  REQUIRE(v.witness.has_value());
  CHECK((*v.witness)["kind"] == "passman_zero_divisor");
  CHECK(replay_witness(v, z2obj, kZ2));
}

TEST_CASE("brute force primeness on small fixtures") {
  const FiniteGroupoid point = corpus::pair_groupoid(1);
  CHECK(bruteforce_is_prime(point, kZ2).decision);  // a field

  const FiniteGroupoid split =
      corpus::disjoint_union({corpus::pair_groupoid(1), corpus::pair_groupoid(1)});
  const PrimenessVerdict v = bruteforce_is_prime(split, kZ2);
  CHECK_FALSE(v.decision);
  REQUIRE(v.witness.has_value());
  CHECK((*v.witness)["a"] == nlohmann::json::array({1, 0}));
  CHECK((*v.witness)["b"] == nlohmann::json::array({0, 1}));
  CHECK(replay_witness(v, split, kZ2));

  CHECK(bruteforce_is_prime(corpus::pair_groupoid(2), kZ2).decision);
  CHECK(bruteforce_is_prime(corpus::pair_groupoid(2), kZ3).decision);
}

TEST_CASE("brute force semiprimeness on small fixtures") {
  const FiniteGroupoid z2obj = corpus::group_object(corpus::cyclic_group(2));
  const PrimenessVerdict v = bruteforce_is_semiprime(z2obj, kZ2);
  CHECK_FALSE(v.decision);
  REQUIRE(v.witness.has_value());
  CHECK((*v.witness)["a"] == nlohmann::json::array({1, 1}));  // delta_e + delta_a
  CHECK(replay_witness(v, z2obj, kZ2));

  CHECK(bruteforce_is_semiprime(corpus::pair_groupoid(2), kZ3).decision);

  const FiniteGroupoid point = corpus::pair_groupoid(1);
  const PrimenessVerdict nil = bruteforce_is_semiprime(point, kZ4);
  CHECK_FALSE(nil.decision);
  CHECK((*nil.witness)["a"] == nlohmann::json::array({2}));  // 2 * delta_e
  CHECK(replay_witness(nil, point, kZ4));
}

TEST_CASE("brute force respects the candidate cap") {
  const FiniteGroupoid big = corpus::transitive_groupoid(2, corpus::cyclic_group(4));
  CHECK(big.arrow_count() == 16);
  CHECK_THROWS_AS(bruteforce_is_prime(big, kZ3), CapExceeded);
  BruteForceCaps tiny;
  tiny.max_candidates = 50;  // below 3^4 candidates
  CHECK_THROWS_AS(bruteforce_is_semiprime(corpus::pair_groupoid(2), kZ3, tiny), CapExceeded);
  CHECK_THROWS_AS(bruteforce_is_prime(corpus::pair_groupoid(2), RingSpec::rationals()),
                  InvalidInput);  // infinite ring
}

TEST_CASE("zero algebra conventions") {
  GroupoidData empty;
  empty.objects = 0;
  const FiniteGroupoid zero = FiniteGroupoid::validate(empty);
  CHECK_FALSE(structural_is_prime(zero, kQ).decision);
  CHECK(structural_is_semiprime(zero, kQ).decision);
  CHECK_FALSE(bruteforce_is_prime(zero, kZ2).decision);
  CHECK(bruteforce_is_semiprime(zero, kZ2).decision);
}

TEST_CASE("corner isomorphism checks") {
  CHECK(corner_iso_check(corpus::pair_groupoid(2), 0, kQ));
  CHECK(corner_iso_check(corpus::pair_groupoid(2), 1, kQ));
  const FiniteGroupoid z2obj = corpus::group_object(corpus::cyclic_group(2));
  CHECK(corner_iso_check(z2obj, 0, kQ));
  const FiniteGroupoid mixed = corpus::disjoint_union({corpus::pair_groupoid(2), z2obj});
  CHECK(corner_iso_check(mixed, 2, kZ3));
}

TEST_CASE("primeness necessities across the exhaustive corpus") {
  const std::vector<RingSpec> rings = {kQ, RingSpec::integers(), kZ2, kZ3, kZ4,
                                       RingSpec::integers_mod(6)};
  for (const auto& item : corpus::exhaustive_groupoids(3, 8)) {
    for (const auto& ring : rings) {
      const PrimenessVerdict p = structural_is_prime(item.groupoid, ring);
      if (p.decision) {
        CHECK(item.groupoid.is_topologically_transitive());
        CHECK(ring.is_integral_domain());
        CHECK(structural_is_semiprime(item.groupoid, ring).decision);
      }
    }
  }
}

TEST_CASE("tampered witnesses fail replay") {
  const FiniteGroupoid split =
      corpus::disjoint_union({corpus::pair_groupoid(1), corpus::pair_groupoid(1)});
  PrimenessVerdict v = bruteforce_is_prime(split, kZ2);
  (*v.witness)["b"] = nlohmann::json::array({1, 0});  // no longer annihilating
  CHECK_FALSE(replay_witness(v, split, kZ2));

  PrimenessVerdict s = structural_is_prime(split, kQ);
  (*s.witness)["objects"] = nlohmann::json::array({0, 0});  // same orbit now
  CHECK_FALSE(replay_witness(s, split, kQ));
}
