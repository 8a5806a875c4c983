#include "gpa/ring.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace gpa {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_squarefree(long n) {
  for (long d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

}  // namespace

RingSpec RingSpec::integers() { return RingSpec(Kind::Integers, 0, nullptr); }

RingSpec RingSpec::rationals() { return RingSpec(Kind::Rationals, 0, nullptr); }

RingSpec RingSpec::integers_mod(long n) {
  if (n < 2) throw InvalidInput("IntegersMod modulus must be >= 2, got " + std::to_string(n));
  return RingSpec(Kind::IntegersMod, n, nullptr);
}

RingSpec RingSpec::laurent(const RingSpec& base) {
  if (base.kind_ == Kind::Laurent)
    throw InvalidInput("Laurent over Laurent is not supported");
  return RingSpec(Kind::Laurent, 0, std::make_shared<const RingSpec>(base));
}

long RingSpec::modulus() const {
  if (kind_ != Kind::IntegersMod) throw InvalidInput("modulus() on non-modular ring");
  return modulus_;
}

const RingSpec& RingSpec::base() const {
  if (kind_ != Kind::Laurent) throw InvalidInput("base() on non-Laurent ring");
  return *base_;
}

bool RingSpec::operator==(const RingSpec& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::IntegersMod:
      return modulus_ == other.modulus_;
    case Kind::Laurent:
      return *base_ == *other.base_;
    default:
      return true;
  }
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Z/" + std::to_string(modulus_);
    case Kind::Laurent:
      return "Laurent(" + base_->to_string() + ")";
  }
  return "?";
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.rfind("Z/", 0) == 0) {
    const std::string digits(text.substr(2));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad modulus in ring spec '" + std::string(text) + "'");
    return integers_mod(std::stol(digits));
  }
  if (text.rfind("Laurent(", 0) == 0 && text.back() == ')') {
    return laurent(parse(text.substr(8, text.size() - 9)));
  }
  throw InvalidInput("unrecognized ring spec '" + std::string(text) +
                     "' (expected Z | Q | Z/<n> | Laurent(<spec>))");
}

bool RingSpec::is_integral_domain() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod:
      return is_prime(modulus_);
    case Kind::Laurent:
      return base_->is_integral_domain();
  }
  return false;
}

bool RingSpec::is_reduced() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return true;
    case Kind::IntegersMod:
      return is_squarefree(modulus_);
    case Kind::Laurent:
      // A Laurent polynomial is nilpotent iff every coefficient is.
      return base_->is_reduced();
  }
  return false;
}

bool RingSpec::is_zero_divisor(const BigInt& m) const {
  if (m < 1) throw InvalidInput("is_zero_divisor expects m >= 1");
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
      return false;
    case Kind::IntegersMod: {
      // Multiplication by k on Z/n is injective iff gcd(k, n) = 1.  The
      // image of m may be 0, which counts: the ring is nonzero.
      const BigInt r = m % modulus_;
      return boost::multiprecision::gcd(r, BigInt(modulus_)) != 1;
    }
    case Kind::Laurent:
      // Scaling acts coefficientwise.
      return base_->is_zero_divisor(m);
  }
  return false;
}

long RingSpec::cardinality() const {
  if (!is_finite()) throw InvalidInput("cardinality() on infinite ring");
  return modulus_;
}

// ---------------------------------------------------------------------------

BigRat RingElem::normalize_scalar(const RingSpec& spec, const BigRat& raw) {
  switch (spec.kind()) {
    case RingSpec::Kind::Integers:
      if (boost::multiprecision::denominator(raw) != 1)
        throw InvalidInput("non-integer value in Z");
      return raw;
    case RingSpec::Kind::Rationals:
      return raw;  // cpp_rational keeps fractions reduced
    case RingSpec::Kind::IntegersMod: {
      if (boost::multiprecision::denominator(raw) != 1)
        throw InvalidInput("non-integer value in Z/n");
      const BigInt n(spec.modulus());
      BigInt r = boost::multiprecision::numerator(raw) % n;
      if (r < 0) r += n;
      return BigRat(r);
    }
    case RingSpec::Kind::Laurent:
      throw InvalidInput("scalar payload in Laurent ring");
  }
  return raw;
}

void RingElem::prune_zero_terms() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

RingElem RingElem::zero(const RingSpec& spec) { return RingElem(spec); }

RingElem RingElem::one(const RingSpec& spec) {
  return from_integer(spec, 1);
}

RingElem RingElem::from_integer(const RingSpec& spec, const BigInt& value) {
  RingElem e(spec);
  if (spec.kind() == RingSpec::Kind::Laurent) {
    const BigRat c = normalize_scalar(spec.base(), BigRat(value));
    if (c != 0) e.terms_[0] = c;
  } else {
    e.scalar_ = normalize_scalar(spec, BigRat(value));
  }
  return e;
}

RingElem RingElem::rational(const RingSpec& spec, const BigInt& num, const BigInt& den) {
  if (spec.kind() != RingSpec::Kind::Rationals)
    throw InvalidInput("fractional literal only valid in Q");
  if (den == 0) throw InvalidInput("zero denominator");
  RingElem e(spec);
  e.scalar_ = BigRat(num, den);
  return e;
}

RingElem RingElem::monomial(const RingSpec& spec, long exp, const RingElem& coeff) {
  if (spec.kind() != RingSpec::Kind::Laurent)
    throw InvalidInput("monomial() needs a Laurent ring");
  if (coeff.spec() != spec.base()) throw MismatchedRing("monomial coefficient ring mismatch");
  RingElem e(spec);
  if (!coeff.is_zero()) e.terms_[exp] = coeff.scalar_;
  return e;
}

bool RingElem::is_zero() const {
  if (spec_.kind() == RingSpec::Kind::Laurent) return terms_.empty();
  return scalar_ == 0;
}

void RingElem::require_same_ring(const RingElem& other) const {
  if (spec_ != other.spec_)
    throw MismatchedRing("operands in " + spec_.to_string() + " and " + other.spec_.to_string());
}

RingElem RingElem::operator+(const RingElem& other) const {
  require_same_ring(other);
  RingElem r(spec_);
  if (spec_.kind() == RingSpec::Kind::Laurent) {
    r.terms_ = terms_;
    for (const auto& [exp, c] : other.terms_) {
      auto [it, inserted] = r.terms_.emplace(exp, c);
      if (!inserted) it->second = normalize_scalar(spec_.base(), it->second + c);
    }
    r.prune_zero_terms();
  } else {
    r.scalar_ = normalize_scalar(spec_, scalar_ + other.scalar_);
  }
  return r;
}

RingElem RingElem::operator*(const RingElem& other) const {
  require_same_ring(other);
  RingElem r(spec_);
  if (spec_.kind() == RingSpec::Kind::Laurent) {
    const RingSpec& base = spec_.base();
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : other.terms_) {
        auto [it, inserted] = r.terms_.emplace(e1 + e2, BigRat(0));
        it->second = normalize_scalar(base, it->second + c1 * c2);
      }
    }
    r.prune_zero_terms();
  } else {
    r.scalar_ = normalize_scalar(spec_, scalar_ * other.scalar_);
  }
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r(spec_);
  if (spec_.kind() == RingSpec::Kind::Laurent) {
    for (const auto& [exp, c] : terms_)
      r.terms_[exp] = normalize_scalar(spec_.base(), -c);
    r.prune_zero_terms();
  } else {
    r.scalar_ = normalize_scalar(spec_, -scalar_);
  }
  return r;
}

bool RingElem::operator==(const RingElem& other) const {
  return spec_ == other.spec_ && scalar_ == other.scalar_ && terms_ == other.terms_;
}

bool RingElem::operator<(const RingElem& other) const {
  require_same_ring(other);
  if (scalar_ != other.scalar_) return scalar_ < other.scalar_;
  return terms_ < other.terms_;
}

const BigRat& RingElem::scalar() const {
  if (spec_.kind() == RingSpec::Kind::Laurent)
    throw InvalidInput("scalar() on Laurent element");
  return scalar_;
}

const std::map<long, BigRat>& RingElem::terms() const {
  if (spec_.kind() != RingSpec::Kind::Laurent)
    throw InvalidInput("terms() on non-Laurent element");
  return terms_;
}

std::string RingElem::to_string() const {
  if (spec_.kind() != RingSpec::Kind::Laurent) {
    std::ostringstream os;
    os << scalar_;
    return os.str();
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (exp != 0) os << "*x^" << exp;
  }
  return os.str();
}

}  // namespace gpa
