#include "doctest.h"

#include <algorithm>

#include "gpa/corpus.hpp"
#include "gpa/group.hpp"

using namespace gpa;

TEST_CASE("validate accepts real groups") {
  const FiniteGroup z2 = FiniteGroup::validate({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.inverse(1) == 1);

  // S3 built independently from permutation composition.
  const FiniteGroup s3 = corpus::symmetric_3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.op(1, 2) == s3.op(2, 1));  // non-abelian
}

TEST_CASE("validate rejects broken tables with witnesses") {
  // A row repeating an element is not a Latin square: no inverse.
  CHECK_THROWS_AS(FiniteGroup::validate({{0, 0}, {1, 1}}), ValidationError);
  // Associativity failure.
  try {
    FiniteGroup::validate({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}});
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK((e.axiom() == "NotAssociative" || e.axiom() == "NoIdentity" ||
           e.axiom() == "NoInverse"));
  }
  CHECK_THROWS_AS(FiniteGroup::validate({{0, 2}, {1, 0}}), ValidationError);  // out of range
}

TEST_CASE("normal subgroups of small groups") {
  const FiniteGroup trivial = corpus::cyclic_group(1);
  CHECK(trivial.normal_subgroups() == std::vector<std::vector<int>>{{0}});

  const FiniteGroup z4 = corpus::cyclic_group(4);
  const auto n4 = z4.normal_subgroups();
  REQUIRE(n4.size() == 3);  // {e}, {e, g^2}, all
  CHECK(n4[0] == std::vector<int>{0});
  CHECK(n4[1] == std::vector<int>{0, 2});
  CHECK(n4[2].size() == 4);

  const FiniteGroup s3 = corpus::symmetric_3();
  const auto ns = s3.normal_subgroups();
  REQUIRE(ns.size() == 3);  // {e}, A3, S3
  CHECK(ns[0].size() == 1);
  CHECK(ns[1].size() == 3);
  CHECK(ns[2].size() == 6);
}

TEST_CASE("normal subgroup list is intersection-closed and bounded") {
  for (const auto& [name, g] :
       {std::pair{std::string("S3"), corpus::symmetric_3()},
        std::pair{std::string("D4"), corpus::dihedral_8()},
        std::pair{std::string("Q8"), corpus::quaternion_8()}}) {
    CAPTURE(name);
    const auto normals = g.normal_subgroups();
    CHECK(normals.front() == std::vector<int>{g.identity()});
    CHECK(static_cast<int>(normals.back().size()) == g.order());
    for (const auto& a : normals)
      for (const auto& b : normals) {
        std::vector<int> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        CHECK(std::find(normals.begin(), normals.end(), meet) != normals.end());
      }
  }
}

TEST_CASE("connell criterion") {
  const GroupSpec z2 = GroupSpec::of(corpus::cyclic_group(2));
  const GroupSpec trivial = GroupSpec::of(corpus::cyclic_group(1));
  CHECK_FALSE(group_algebra_is_prime(z2, RingSpec::rationals()));
  CHECK(group_algebra_is_prime(GroupSpec::infinite_cyclic(), RingSpec::integers()));
  CHECK_FALSE(group_algebra_is_prime(trivial, RingSpec::integers_mod(6)));
  CHECK(group_algebra_is_prime(trivial, RingSpec::integers_mod(5)));
  CHECK_FALSE(group_algebra_is_prime(GroupSpec::infinite_cyclic(), RingSpec::integers_mod(6)));
}

TEST_CASE("passman criterion") {
  const GroupSpec z2 = GroupSpec::of(corpus::cyclic_group(2));
  const GroupSpec trivial = GroupSpec::of(corpus::cyclic_group(1));
  CHECK(group_algebra_is_semiprime(z2, RingSpec::rationals()));
  CHECK_FALSE(group_algebra_is_semiprime(z2, RingSpec::integers_mod(2)));
  CHECK_FALSE(group_algebra_is_semiprime(trivial, RingSpec::integers_mod(4)));
  CHECK(group_algebra_is_semiprime(z2, RingSpec::integers_mod(3)));
  CHECK_FALSE(group_algebra_is_semiprime(GroupSpec::of(corpus::cyclic_group(3)),
                                         RingSpec::integers_mod(3)));
  CHECK(group_algebra_is_semiprime(GroupSpec::infinite_cyclic(), RingSpec::integers_mod(6)));
}

TEST_CASE("prime implies semiprime over domains") {
  const std::vector<GroupSpec> groups = {
      GroupSpec::of(corpus::cyclic_group(1)), GroupSpec::of(corpus::cyclic_group(2)),
      GroupSpec::of(corpus::cyclic_group(4)), GroupSpec::of(corpus::symmetric_3()),
      GroupSpec::infinite_cyclic()};
  const std::vector<RingSpec> rings = {RingSpec::integers(), RingSpec::rationals(),
                                       RingSpec::integers_mod(2), RingSpec::integers_mod(3)};
  for (const auto& g : groups)
    for (const auto& r : rings)
      if (group_algebra_is_prime(g, r)) CHECK(group_algebra_is_semiprime(g, r));
}
