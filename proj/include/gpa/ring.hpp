#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "gpa/errors.hpp"

namespace gpa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Descriptor of a supported commutative coefficient ring: the integers,
/// the rationals, integers mod n, or Laurent polynomials over one of the
/// former (group algebra of the infinite cyclic group).
class RingSpec {
 public:
  enum class Kind { Integers, Rationals, IntegersMod, Laurent };

  static RingSpec integers();
  static RingSpec rationals();
  static RingSpec integers_mod(long n);     // requires n >= 2
  static RingSpec laurent(const RingSpec& base);  // base must not be Laurent

  Kind kind() const { return kind_; }
  long modulus() const;             // IntegersMod only
  const RingSpec& base() const;     // Laurent only

  bool operator==(const RingSpec& other) const;
  bool operator!=(const RingSpec& other) const { return !(*this == other); }

  /// Textual form: "Z", "Q", "Z/6", "Laurent(Z)".
  std::string to_string() const;
  static RingSpec parse(std::string_view text);

  bool is_integral_domain() const;
  bool is_reduced() const;
  /// True iff multiplication by the image of m (m >= 1) is non-injective.
  bool is_zero_divisor(const BigInt& m) const;

  bool is_finite() const { return kind_ == Kind::IntegersMod; }
  long cardinality() const;         // finite rings only

 private:
  RingSpec(Kind kind, long modulus, std::shared_ptr<const RingSpec> base)
      : kind_(kind), modulus_(modulus), base_(std::move(base)) {}

  Kind kind_;
  long modulus_ = 0;
  std::shared_ptr<const RingSpec> base_;
};

/// Element of a RingSpec ring in canonical form.  Equality is structural;
/// arithmetic is exact (arbitrary precision underneath).
///
/// Base-ring payloads are stored as exact rationals: integer-valued for Z,
/// the canonical residue in [0, n) for Z/n.  Laurent elements hold a
/// finite exponent -> base-coefficient map with no zero coefficients.
class RingElem {
 public:
  static RingElem zero(const RingSpec& spec);
  static RingElem one(const RingSpec& spec);
  static RingElem from_integer(const RingSpec& spec, const BigInt& value);
  static RingElem rational(const RingSpec& spec, const BigInt& num, const BigInt& den);
  /// coeff * x^exp in a Laurent ring.
  static RingElem monomial(const RingSpec& spec, long exp, const RingElem& coeff);

  const RingSpec& spec() const { return spec_; }
  bool is_zero() const;

  RingElem operator+(const RingElem& other) const;
  RingElem operator*(const RingElem& other) const;
  RingElem operator-() const;
  RingElem operator-(const RingElem& other) const { return *this + (-other); }
  bool operator==(const RingElem& other) const;
  bool operator!=(const RingElem& other) const { return !(*this == other); }
  /// Total order on elements of one ring (used for canonical containers).
  bool operator<(const RingElem& other) const;

  const BigRat& scalar() const;                     // non-Laurent payload
  const std::map<long, BigRat>& terms() const;      // Laurent payload

  std::string to_string() const;

 private:
  explicit RingElem(RingSpec spec) : spec_(std::move(spec)) {}
  static BigRat normalize_scalar(const RingSpec& spec, const BigRat& raw);
  void prune_zero_terms();
  void require_same_ring(const RingElem& other) const;

  RingSpec spec_;
  BigRat scalar_ = 0;
  std::map<long, BigRat> terms_;
};

}  // namespace gpa
