#include "gpa/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gpa {

using nlohmann::json;

AlgebraElem AlgebraElem::delta(const FiniteGroupoid* gpd, const RingSpec& ring, int arrow) {
  AlgebraElem e(gpd, ring);
  e.set(arrow, RingElem::one(ring));
  return e;
}

AlgebraElem AlgebraElem::indicator(const FiniteGroupoid* gpd, const RingSpec& ring,
                                   const Bisection& u) {
  if (!gpd->is_bisection(u.arrows)) throw InvalidInput("indicator needs a bisection");
  AlgebraElem e(gpd, ring);
  for (int g : u.arrows) e.set(g, RingElem::one(ring));
  return e;
}

RingElem AlgebraElem::at(int arrow) const {
  const auto it = coeffs_.find(arrow);
  return it == coeffs_.end() ? RingElem::zero(ring_) : it->second;
}

void AlgebraElem::set(int arrow, const RingElem& value) {
  if (arrow < 0 || arrow >= gpd_->arrow_count()) throw InvalidInput("arrow id out of range");
  if (value.spec() != ring_) throw MismatchedRing("coefficient from a different ring");
  if (value.is_zero())
    coeffs_.erase(arrow);
  else
    coeffs_.insert_or_assign(arrow, value);
}

void AlgebraElem::require_same_carrier(const AlgebraElem& other) const {
  if (gpd_ != other.gpd_ || ring_ != other.ring_)
    throw MismatchedCarrier("elements live over different groupoids or rings");
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& other) const {
  require_same_carrier(other);
  AlgebraElem r = *this;
  for (const auto& [g, c] : other.coeffs_) r.set(g, r.at(g) + c);
  return r;
}

AlgebraElem AlgebraElem::operator-() const {
  AlgebraElem r(gpd_, ring_);
  for (const auto& [g, c] : coeffs_) r.set(g, -c);
  return r;
}

AlgebraElem AlgebraElem::scaled(const RingElem& s) const {
  AlgebraElem r(gpd_, ring_);
  for (const auto& [g, c] : coeffs_) r.set(g, c * s);
  return r;
}

bool AlgebraElem::operator==(const AlgebraElem& other) const {
  return gpd_ == other.gpd_ && ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

AlgebraElem AlgebraElem::convolve(const AlgebraElem& other) const {
  require_same_carrier(other);
  AlgebraElem r(gpd_, ring_);
  for (const auto& [u, cu] : coeffs_) {
    for (const auto& [v, cv] : other.coeffs_) {
      if (!gpd_->composable(u, v)) continue;
      const int w = gpd_->compose(u, v);
      r.set(w, r.at(w) + cu * cv);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

MatrixDecomposition matrix_decomposition(const FiniteGroupoid& gpd, const RingSpec& ring) {
  (void)ring;  // the decomposition itself is ring-independent
  MatrixDecomposition dec;
  const OrbitPartition orbit = gpd.orbits();
  int arrows_seen = 0;
  for (size_t b = 0; b < orbit.blocks.size(); ++b) {
    MatrixBlock block;
    block.objects = orbit.blocks[b];
    block.representative = orbit.representatives[b];
    block.isotropy = gpd.isotropy_group(block.representative);

    // Transversal: least arrow id representative -> y per block object.
    block.transversal.resize(block.objects.size(), -1);
    for (size_t yi = 0; yi < block.objects.size(); ++yi) {
      for (int g = 0; g < gpd.arrow_count(); ++g) {
        if (gpd.src(g) == block.representative && gpd.dst(g) == block.objects[yi]) {
          block.transversal[yi] = g;
          break;
        }
      }
      if (block.transversal[yi] < 0)
        throw InternalDisagreement("orbit member unreachable from its representative");
    }

    auto object_pos = [&](int x) {
      return static_cast<int>(std::lower_bound(block.objects.begin(), block.objects.end(), x) -
                              block.objects.begin());
    };
    auto group_index = [&](int arrow) {
      const auto it = std::find(block.isotropy.arrow_ids.begin(),
                                block.isotropy.arrow_ids.end(), arrow);
      if (it == block.isotropy.arrow_ids.end())
        throw InternalDisagreement("conjugated arrow left the isotropy group");
      return static_cast<int>(it - block.isotropy.arrow_ids.begin());
    };

    // delta_g with g: y -> z maps to E_{z,y} carrying t_z^-1 g t_y.
    for (int g = 0; g < gpd.arrow_count(); ++g) {
      if (!std::binary_search(block.objects.begin(), block.objects.end(), gpd.src(g))) continue;
      const int col = object_pos(gpd.src(g));
      const int row = object_pos(gpd.dst(g));
      const int entry = gpd.compose(gpd.inverse(block.transversal[row]),
                                    gpd.compose(g, block.transversal[col]));
      block.basis_image[g] = {row, col, group_index(entry)};
      ++arrows_seen;
    }

    // Bijective on the basis: distinct images, count = |O|^2 |G|.
    std::set<std::array<int, 3>> images;
    for (const auto& [g, img] : block.basis_image)
      if (!images.insert(img).second)
        throw InternalDisagreement("matrix decomposition is not injective on arrows");
    if (images.size() != block.objects.size() * block.objects.size() *
                             static_cast<size_t>(block.isotropy.group.order()))
      throw InternalDisagreement("matrix decomposition misses basis elements");

    // Multiplicative: matrix units compose as E_{z,y}(k) E_{y,w}(k') = E_{z,w}(kk').
    for (const auto& [g, img_g] : block.basis_image)
      for (const auto& [h, img_h] : block.basis_image) {
        if (!gpd.composable(g, h)) {
          if (img_g[1] == img_h[0])
            throw InternalDisagreement("images compose where arrows do not");
          continue;
        }
        const auto& img_gh = block.basis_image.at(gpd.compose(g, h));
        const std::array<int, 3> expect = {img_g[0], img_h[1],
                                           block.isotropy.group.op(img_g[2], img_h[2])};
        if (img_g[1] != img_h[0] || img_gh != expect)
          throw InternalDisagreement("matrix decomposition is not multiplicative");
      }

    dec.blocks.push_back(std::move(block));
  }
  if (arrows_seen != gpd.arrow_count())
    throw InternalDisagreement("matrix decomposition lost arrows");
  dec.verified = true;
  return dec;
}

std::string MatrixDecomposition::describe(const RingSpec& ring) const {
  if (blocks.empty()) return "0";
  std::ostringstream os;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << " (+) ";
    const auto& blk = blocks[b];
    os << "M_" << blk.objects.size() << "(" << ring.to_string();
    if (!blk.isotropy.group.is_trivial()) os << "[G" << blk.isotropy.group.order() << "]";
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Smallest factor pair witnessing a composite modulus somewhere in the ring.
std::pair<long, long> composite_factors(const RingSpec& ring) {
  const RingSpec& base = ring.kind() == RingSpec::Kind::Laurent ? ring.base() : ring;
  if (base.kind() != RingSpec::Kind::IntegersMod)
    throw InternalDisagreement("no composite modulus in a non-domain ring");
  const long n = base.modulus();
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return {p, n / p};
  throw InternalDisagreement("prime modulus cannot witness a non-domain");
}

// r != 0 with r^2 = 0 for a non-reduced modulus.
long nilpotent_residue(const RingSpec& ring) {
  const RingSpec& base = ring.kind() == RingSpec::Kind::Laurent ? ring.base() : ring;
  const long n = base.modulus();
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return n / p;
  throw InternalDisagreement("squarefree modulus cannot witness a non-reduced ring");
}

json subgroup_witness(const char* kind, int object, const IsotropyGroup& iso,
                      const std::vector<int>& subgroup) {
  json arrows = json::array();
  for (int i : subgroup) arrows.push_back(iso.arrow_ids[i]);
  return json{{"kind", kind}, {"object", object}, {"arrows", arrows}};
}

}  // namespace

PrimenessVerdict structural_is_prime(const FiniteGroupoid& gpd, const RingSpec& ring) {
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  if (gpd.arrow_count() == 0) {
    v.decision = false;
    v.reason = "the zero algebra is not prime";
    v.witness = json{{"kind", "zero_algebra"}};
    return v;
  }
  const OrbitPartition orbit = gpd.orbits();
  if (orbit.blocks.size() > 1) {
    v.decision = false;
    v.reason = "not topologically transitive: " + std::to_string(orbit.blocks.size()) +
               " orbits split the algebra into orthogonal ideals";
    v.witness = json{{"kind", "multiple_orbits"},
                     {"objects", {orbit.representatives[0], orbit.representatives[1]}}};
    return v;
  }
  if (!ring.is_integral_domain()) {
    const auto [p, q] = composite_factors(ring);
    v.decision = false;
    v.reason = "coefficient ring " + ring.to_string() + " is not an integral domain";
    v.witness = json{{"kind", "non_domain_ring"}, {"factors", {p, q}}};
    return v;
  }
  const int x = orbit.representatives[0];
  const IsotropyGroup iso = gpd.isotropy_group(x);
  if (!iso.group.is_trivial()) {
    // Connell: a nontrivial finite normal subgroup of the isotropy group.
    const auto normals = iso.group.normal_subgroups();
    const auto it = std::find_if(normals.begin(), normals.end(),
                                 [](const auto& n) { return n.size() > 1; });
    v.decision = false;
    v.reason = "isotropy group at object " + std::to_string(x) + " has order " +
               std::to_string(iso.group.order()) +
               "; a nontrivial finite normal subgroup obstructs primeness";
    v.witness = subgroup_witness("connell_normal_subgroup", x, iso, *it);
    return v;
  }
  v.decision = true;
  v.reason = "single orbit (equivalently topologically transitive; the orbit is dense at "
             "discrete scale) with trivial isotropy over the integral domain " +
             ring.to_string() + "; the algebra is M_" + std::to_string(gpd.object_count()) +
             "(" + ring.to_string() + "), which is prime";
  return v;
}

PrimenessVerdict structural_is_semiprime(const FiniteGroupoid& gpd, const RingSpec& ring) {
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::structural;
  if (!ring.is_reduced()) {
    v.decision = false;
    v.reason = "coefficient ring " + ring.to_string() + " is not reduced";
    v.witness = json{{"kind", "non_reduced_ring"}, {"nilpotent", nilpotent_residue(ring)}};
    return v;
  }
  const OrbitPartition orbit = gpd.orbits();
  for (int x : orbit.representatives) {
    const IsotropyGroup iso = gpd.isotropy_group(x);
    for (const auto& n : iso.group.normal_subgroups()) {
      if (ring.is_zero_divisor(BigInt(n.size()))) {
        v.decision = false;
        v.reason = "isotropy at object " + std::to_string(x) + " has a normal subgroup of order " +
                   std::to_string(n.size()) + ", a zero divisor in " + ring.to_string();
        v.witness = subgroup_witness("passman_zero_divisor", x, iso, n);
        (*v.witness)["order"] = n.size();
        return v;
      }
    }
  }
  v.decision = true;
  v.reason = ring.to_string() +
             " is reduced and no finite normal subgroup order of any isotropy group is a zero "
             "divisor (blockwise Passman criterion)";
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// Fixed candidate order for the exhaustive oracles: coefficient vectors over
// Z/m enumerate as base-m integers with arrow 0 the least significant digit.
// Candidates whose most significant nonzero digit is a unit other than 1 are
// scalar multiples of earlier candidates and are skipped; this cannot change
// any verdict or the first witness found.
struct DenseScan {
  const FiniteGroupoid& gpd;
  long m;
  std::vector<int> digits;
  std::vector<char> unit;  // unit[c]: c invertible mod m

  DenseScan(const FiniteGroupoid& g, long modulus)
      : gpd(g), m(modulus), digits(g.arrow_count(), 0), unit(modulus, 0) {
    for (long c = 0; c < modulus; ++c) unit[c] = std::gcd(c, modulus) == 1 ? 1 : 0;
  }

  // Advance the odometer; returns false when the space is exhausted.
  bool next() {
    for (size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < m) return true;
      digits[i] = 0;
    }
    return false;
  }

  bool kept() const {
    for (size_t i = digits.size(); i-- > 0;) {
      if (digits[i] != 0) return digits[i] == 1 || !unit[digits[i]];
    }
    return false;  // the zero vector
  }

  std::vector<std::pair<int, long>> support() const {
    std::vector<std::pair<int, long>> s;
    for (size_t i = 0; i < digits.size(); ++i)
      if (digits[i]) s.emplace_back(static_cast<int>(i), digits[i]);
    return s;
  }
};

// Does some arrow g give a * delta_g * b != 0?
bool separated_by_point_mass(const FiniteGroupoid& gpd, long m,
                             const std::vector<std::pair<int, long>>& sa,
                             const std::vector<std::pair<int, long>>& sb,
                             std::vector<long>& acc) {
  const int arrows = gpd.arrow_count();
  for (int g = 0; g < arrows; ++g) {
    std::fill(acc.begin(), acc.end(), 0);
    bool touched = false;
    for (const auto& [u, cu] : sa) {
      if (gpd.src(u) != gpd.dst(g)) continue;
      const int ug = gpd.compose(u, g);
      for (const auto& [v, cv] : sb) {
        if (gpd.src(g) != gpd.dst(v)) continue;
        const int w = gpd.compose(ug, v);
        acc[w] = (acc[w] + cu * cv) % m;
        touched = true;
      }
    }
    if (!touched) continue;
    for (long c : acc)
      if (c != 0) return true;
  }
  return false;
}

long kept_digit_count(long m) {
  long k = 0;
  for (long c = 1; c < m; ++c)
    if (c == 1 || std::gcd(c, m) != 1) ++k;
  return k;
}

// Number of kept candidates, saturating at UINT64_MAX on overflow.
std::uint64_t kept_candidate_count(long m, int arrows) {
  const std::uint64_t kd = static_cast<std::uint64_t>(kept_digit_count(m));
  const std::uint64_t mm = static_cast<std::uint64_t>(m);
  std::uint64_t total = 0, power = 1;
  for (int p = 0; p < arrows; ++p) {
    if (kd != 0 && power > (UINT64_MAX - total) / kd) return UINT64_MAX;
    total += kd * power;
    if (p + 1 < arrows) {
      if (power > UINT64_MAX / mm) return UINT64_MAX;
      power *= mm;
    }
  }
  return total;
}

json dense_json(const std::vector<int>& digits) {
  json a = json::array();
  for (int c : digits) a.push_back(c);
  return a;
}

long require_finite_ring(const RingSpec& ring) {
  if (!ring.is_finite())
    throw InvalidInput("the exhaustive oracle needs a finite coefficient ring, got " +
                       ring.to_string());
  return ring.cardinality();
}

}  // namespace

PrimenessVerdict bruteforce_is_prime(const FiniteGroupoid& gpd, const RingSpec& ring,
                                     const BruteForceCaps& caps) {
  const long m = require_finite_ring(ring);
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::bruteforce;
  if (gpd.arrow_count() == 0) {
    v.decision = false;
    v.reason = "the zero algebra is not prime";
    v.witness = json{{"kind", "zero_algebra"}};
    return v;
  }
  const std::uint64_t kept = kept_candidate_count(m, gpd.arrow_count());
  if (kept == UINT64_MAX || kept > caps.max_candidates / std::max<std::uint64_t>(kept, 1)) {
    const std::uint64_t required =
        (kept == UINT64_MAX || kept > UINT64_MAX / kept) ? UINT64_MAX : kept * kept;
    throw CapExceeded(required, caps.max_candidates);
  }

  std::vector<long> acc(gpd.arrow_count(), 0);
  DenseScan a(gpd, m);
  std::uint64_t pairs = 0;
  while (a.next()) {
    if (!a.kept()) continue;
    const auto sa = a.support();
    DenseScan b(gpd, m);
    while (b.next()) {
      if (!b.kept()) continue;
      ++pairs;
      if (!separated_by_point_mass(gpd, m, sa, b.support(), acc)) {
        v.decision = false;
        v.reason = "found nonzero a, b with a * delta_g * b = 0 for every arrow g";
        v.witness = json{{"kind", "annihilating_pair"},
                         {"a", dense_json(a.digits)},
                         {"b", dense_json(b.digits)}};
        return v;
      }
    }
  }
  v.decision = true;
  v.reason = "exhausted " + std::to_string(pairs) +
             " candidate pairs over " + ring.to_string() +
             "; every pair is separated by some point mass";
  return v;
}

PrimenessVerdict bruteforce_is_semiprime(const FiniteGroupoid& gpd, const RingSpec& ring,
                                         const BruteForceCaps& caps) {
  const long m = require_finite_ring(ring);
  PrimenessVerdict v;
  v.method = PrimenessVerdict::Method::bruteforce;
  if (gpd.arrow_count() == 0) {
    v.decision = true;
    v.reason = "the zero algebra is vacuously semiprime";
    return v;
  }
  std::uint64_t total = 1;
  for (int p = 0; p < gpd.arrow_count(); ++p) {
    if (total > UINT64_MAX / static_cast<std::uint64_t>(m))
      throw CapExceeded(UINT64_MAX, caps.max_candidates);
    total *= static_cast<std::uint64_t>(m);
    if (total > caps.max_candidates) throw CapExceeded(total, caps.max_candidates);
  }

  std::vector<long> acc(gpd.arrow_count(), 0);
  DenseScan a(gpd, m);
  std::uint64_t count = 0;
  while (a.next()) {
    if (!a.kept()) continue;
    ++count;
    const auto sa = a.support();
    if (!separated_by_point_mass(gpd, m, sa, sa, acc)) {
      v.decision = false;
      v.reason = "found nonzero a with a * delta_g * a = 0 for every arrow g";
      v.witness = json{{"kind", "nilpotent_sandwich"}, {"a", dense_json(a.digits)}};
      return v;
    }
  }
  v.decision = true;
  v.reason = "exhausted " + std::to_string(count) + " candidates over " + ring.to_string() +
             "; none squares to zero through every point mass";
  return v;
}

// ---------------------------------------------------------------------------

bool corner_iso_check(const FiniteGroupoid& gpd, int object, const RingSpec& ring) {
  if (object < 0 || object >= gpd.object_count()) throw InvalidInput("object out of range");
  const AlgebraElem e = AlgebraElem::delta(&gpd, ring, gpd.identity_arrow(object));
  const IsotropyGroup iso = gpd.isotropy_group(object);

  // e * delta_h * e is delta_h exactly on isotropy arrows, 0 elsewhere.
  for (int h = 0; h < gpd.arrow_count(); ++h) {
    const AlgebraElem corner = e.convolve(AlgebraElem::delta(&gpd, ring, h)).convolve(e);
    const bool in_iso =
        std::find(iso.arrow_ids.begin(), iso.arrow_ids.end(), h) != iso.arrow_ids.end();
    if (in_iso && corner != AlgebraElem::delta(&gpd, ring, h)) return false;
    if (!in_iso && !corner.is_zero()) return false;
  }

  // Convolution restricted to the corner is the isotropy group algebra.
  const int k = iso.group.order();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const AlgebraElem prod = AlgebraElem::delta(&gpd, ring, iso.arrow_ids[i])
                                   .convolve(AlgebraElem::delta(&gpd, ring, iso.arrow_ids[j]));
      if (prod != AlgebraElem::delta(&gpd, ring, iso.arrow_ids[iso.group.op(i, j)])) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

AlgebraElem element_from_dense(const FiniteGroupoid& gpd, const RingSpec& ring, const json& arr) {
  AlgebraElem e(&gpd, ring);
  for (int g = 0; g < gpd.arrow_count(); ++g)
    e.set(g, RingElem::from_integer(ring, BigInt(arr.at(g).get<long>())));
  return e;
}

bool check_subgroup_witness(const FiniteGroupoid& gpd, const json& w, bool require_nontrivial) {
  const int x = w.at("object").get<int>();
  std::vector<int> arrows = w.at("arrows").get<std::vector<int>>();
  if (arrows.empty()) return false;
  std::sort(arrows.begin(), arrows.end());
  for (int g : arrows)
    if (g < 0 || g >= gpd.arrow_count() || gpd.src(g) != x || gpd.dst(g) != x) return false;
  for (int g : arrows) {
    if (!std::binary_search(arrows.begin(), arrows.end(), gpd.inverse(g))) return false;
    for (int h : arrows)
      if (!std::binary_search(arrows.begin(), arrows.end(), gpd.compose(g, h))) return false;
  }
  const IsotropyGroup iso = gpd.isotropy_group(x);
  for (int k : iso.arrow_ids)
    for (int g : arrows) {
      const int conj = gpd.compose(gpd.compose(k, g), gpd.inverse(k));
      if (!std::binary_search(arrows.begin(), arrows.end(), conj)) return false;
    }
  return !require_nontrivial || arrows.size() > 1;
}

}  // namespace

bool replay_witness(const PrimenessVerdict& verdict, const FiniteGroupoid& gpd,
                    const RingSpec& ring) {
  if (!verdict.witness) return true;  // positive verdicts carry no witness
  const json& w = *verdict.witness;
  const std::string kind = w.at("kind").get<std::string>();
  try {
    if (kind == "zero_algebra") return gpd.arrow_count() == 0;
    if (kind == "multiple_orbits") {
      const int x = w.at("objects").at(0).get<int>();
      const int y = w.at("objects").at(1).get<int>();
      const auto sat = gpd.invariant_saturation({x});
      return !std::binary_search(sat.begin(), sat.end(), y);
    }
    if (kind == "non_domain_ring") {
      const RingElem p = RingElem::from_integer(ring, BigInt(w.at("factors").at(0).get<long>()));
      const RingElem q = RingElem::from_integer(ring, BigInt(w.at("factors").at(1).get<long>()));
      return !p.is_zero() && !q.is_zero() && (p * q).is_zero();
    }
    if (kind == "non_reduced_ring") {
      const RingElem r = RingElem::from_integer(ring, BigInt(w.at("nilpotent").get<long>()));
      return !r.is_zero() && (r * r).is_zero();
    }
    if (kind == "connell_normal_subgroup") return check_subgroup_witness(gpd, w, true);
    if (kind == "passman_zero_divisor") {
      if (!check_subgroup_witness(gpd, w, false)) return false;
      const auto order = w.at("order").get<std::uint64_t>();
      return order == w.at("arrows").size() && ring.is_zero_divisor(BigInt(order));
    }
    if (kind == "annihilating_pair" || kind == "nilpotent_sandwich") {
      const AlgebraElem a = element_from_dense(gpd, ring, w.at("a"));
      const AlgebraElem b =
          kind == "annihilating_pair" ? element_from_dense(gpd, ring, w.at("b")) : a;
      if (a.is_zero() || b.is_zero()) return false;
      for (int g = 0; g < gpd.arrow_count(); ++g) {
        if (!a.convolve(AlgebraElem::delta(&gpd, ring, g)).convolve(b).is_zero()) return false;
      }
      return true;
    }
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
  return false;
}

}  // namespace gpa
