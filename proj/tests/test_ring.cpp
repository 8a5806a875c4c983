#include "doctest.h"

#include "gpa/corpus.hpp"
#include "gpa/ring.hpp"

using namespace gpa;

namespace {

RingElem num(const RingSpec& spec, long v) { return RingElem::from_integer(spec, BigInt(v)); }

}  // namespace

TEST_CASE("modular arithmetic is canonical") {
  const RingSpec z6 = RingSpec::integers_mod(6);
  CHECK(num(z6, 2) * num(z6, 3) == RingElem::zero(z6));
  CHECK(num(z6, 5) + num(z6, 5) == num(z6, 4));
  CHECK(-num(z6, 2) == num(z6, 4));
  CHECK(num(z6, 7) == num(z6, 1));
}

TEST_CASE("rational arithmetic reduces fractions") {
  const RingSpec q = RingSpec::rationals();
  const RingElem half = RingElem::rational(q, BigInt(1), BigInt(2));
  const RingElem third = RingElem::rational(q, BigInt(1), BigInt(3));
  CHECK(half + third == RingElem::rational(q, BigInt(5), BigInt(6)));
  CHECK(half + half == RingElem::one(q));
  CHECK(RingElem::rational(q, BigInt(2), BigInt(4)) == half);
}

TEST_CASE("laurent monomials cancel exponents") {
  const RingSpec lz = RingSpec::laurent(RingSpec::integers());
  const RingElem x = RingElem::monomial(lz, 1, RingElem::one(RingSpec::integers()));
  const RingElem xinv = RingElem::monomial(lz, -1, RingElem::one(RingSpec::integers()));
  CHECK(x * xinv == RingElem::one(lz));
  // (x + 1)(x - 1) = x^2 - 1
  const RingElem one = RingElem::one(lz);
  const RingElem lhs = (x + one) * (x - one);
  const RingElem x2 = RingElem::monomial(lz, 2, RingElem::one(RingSpec::integers()));
  CHECK(lhs == x2 - one);
  CHECK((x - x).is_zero());
}

TEST_CASE("mismatched rings are rejected") {
  const RingSpec z = RingSpec::integers();
  const RingSpec q = RingSpec::rationals();
  CHECK_THROWS_AS(num(z, 1) + num(q, 1), MismatchedRing);
}

TEST_CASE("spec constructors enforce invariants") {
  CHECK_THROWS_AS(RingSpec::integers_mod(1), InvalidInput);
  CHECK_THROWS_AS(RingSpec::integers_mod(0), InvalidInput);
  CHECK_THROWS_AS(RingSpec::laurent(RingSpec::laurent(RingSpec::integers())), InvalidInput);
}

TEST_CASE("integral domain predicate") {
  CHECK(RingSpec::integers().is_integral_domain());
  CHECK(RingSpec::rationals().is_integral_domain());
  CHECK_FALSE(RingSpec::integers_mod(6).is_integral_domain());
  CHECK(RingSpec::integers_mod(5).is_integral_domain());
  CHECK(RingSpec::laurent(RingSpec::integers()).is_integral_domain());
  CHECK_FALSE(RingSpec::laurent(RingSpec::integers_mod(4)).is_integral_domain());
}

TEST_CASE("reduced predicate") {
  CHECK_FALSE(RingSpec::integers_mod(4).is_reduced());
  CHECK(RingSpec::integers_mod(6).is_reduced());
  CHECK(RingSpec::laurent(RingSpec::rationals()).is_reduced());
  CHECK_FALSE(RingSpec::laurent(RingSpec::integers_mod(8)).is_reduced());
}

TEST_CASE("zero divisor predicate") {
  CHECK(RingSpec::integers_mod(6).is_zero_divisor(BigInt(2)));
  CHECK(RingSpec::integers_mod(3).is_zero_divisor(BigInt(3)));  // image is 0
  CHECK_FALSE(RingSpec::rationals().is_zero_divisor(BigInt(2)));
  CHECK_FALSE(RingSpec::integers().is_zero_divisor(BigInt(7)));
  CHECK_FALSE(RingSpec::integers_mod(5).is_zero_divisor(BigInt(1)));
  CHECK(RingSpec::laurent(RingSpec::integers_mod(6)).is_zero_divisor(BigInt(2)));
}

TEST_CASE("modular predicates agree with exhaustive search up to 30") {
  for (long n = 2; n <= 30; ++n) {
    const RingSpec spec = RingSpec::integers_mod(n);
    bool has_zero_divisor_pair = false;
    for (long a = 1; a < n && !has_zero_divisor_pair; ++a)
      for (long b = 1; b < n; ++b)
        if (a * b % n == 0) {
          has_zero_divisor_pair = true;
          break;
        }
    CHECK(spec.is_integral_domain() == !has_zero_divisor_pair);

    bool has_nilpotent = false;
    for (long r = 1; r < n && !has_nilpotent; ++r) {
      long p = r % n;
      for (long k = 1; k <= n; ++k) {
        if (p == 0) {
          has_nilpotent = true;
          break;
        }
        p = p * r % n;
      }
    }
    CHECK(spec.is_reduced() == !has_nilpotent);

    for (long v = 1; v <= 2 * n; ++v) {
      bool non_injective = false;
      for (long a = 1; a < n; ++a)
        if (v * a % n == 0) non_injective = true;
      CHECK(spec.is_zero_divisor(BigInt(v)) == non_injective);
    }
  }
}

TEST_CASE("domain implies reduced") {
  const std::vector<RingSpec> specs = {
      RingSpec::integers(),        RingSpec::rationals(),
      RingSpec::integers_mod(2),   RingSpec::integers_mod(4),
      RingSpec::integers_mod(6),   RingSpec::integers_mod(9),
      RingSpec::integers_mod(7),   RingSpec::laurent(RingSpec::integers()),
      RingSpec::laurent(RingSpec::integers_mod(12))};
  for (const auto& s : specs)
    if (s.is_integral_domain()) CHECK(s.is_reduced());
}

TEST_CASE("ring axioms hold on random triples") {
  const std::vector<RingSpec> specs = {
      RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(6),
      RingSpec::integers_mod(5), RingSpec::laurent(RingSpec::integers_mod(4))};
  corpus::Rng rng(2024);
  for (const auto& spec : specs) {
    for (int t = 0; t < 200; ++t) {
      const RingElem a = corpus::random_ring_elem(rng, spec);
      const RingElem b = corpus::random_ring_elem(rng, spec);
      const RingElem c = corpus::random_ring_elem(rng, spec);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + RingElem::zero(spec) == a);
      CHECK(a * RingElem::one(spec) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("textual forms round trip") {
  for (const char* text : {"Z", "Q", "Z/6", "Z/2", "Laurent(Z)", "Laurent(Z/4)"}) {
    const RingSpec spec = RingSpec::parse(text);
    CHECK(spec.to_string() == text);
    CHECK(RingSpec::parse(spec.to_string()) == spec);
  }
  CHECK_THROWS_AS(RingSpec::parse("Z/1"), InvalidInput);
  CHECK_THROWS_AS(RingSpec::parse("Z/x"), InvalidInput);
  CHECK_THROWS_AS(RingSpec::parse("Laurent(Laurent(Z))"), InvalidInput);
  CHECK_THROWS_AS(RingSpec::parse("GF(4)"), InvalidInput);
}
