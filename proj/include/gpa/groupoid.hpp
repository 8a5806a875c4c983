#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gpa/group.hpp"

namespace gpa {

class InverseSemigroup;

/// Raw groupoid data as it arrives from files: arrows with endpoints and a
/// partial composition table (-1 = undefined).  Identity and inverse
/// assignments are optional; validation infers and certifies them.
struct GroupoidData {
  int objects = 0;
  struct Arrow {
    int src;  // domain d(g)
    int dst;  // range r(g)
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> compose;  // compose[g][h] = g after h, or -1
  std::optional<std::vector<int>> identities;  // arrow id per object
  std::optional<std::vector<int>> inverses;    // arrow id per arrow
};

/// Isotropy group at an object together with the arrow carried by each
/// group element (element i of `group` is arrow `arrow_ids[i]`).
struct IsotropyGroup {
  FiniteGroup group;
  std::vector<int> arrow_ids;
};

/// Partition of the objects into orbits; blocks are sorted, the
/// representative is the least object of each block.
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> representatives;
  int block_of(int object) const;
};

/// An arrow set on which both endpoint maps are injective.  Bisections of
/// a fixed groupoid form an inverse monoid under pointwise composition.
struct Bisection {
  std::vector<int> arrows;  // sorted arrow ids
};

/// A finite groupoid with the discrete topology: every finite ample
/// groupoid is of this form, every subset of it is compact open, dense
/// means total, and effectiveness means all isotropy is trivial.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;  // empty placeholder; assign from validate()

  /// Certify raw data as a groupoid or throw a ValidationError whose axiom
  /// is one of BadComposability, NotAssociative, MissingIdentity,
  /// MissingInverse (with witnesses).
  static FiniteGroupoid validate(const GroupoidData& data);

  int object_count() const { return objects_; }
  int arrow_count() const { return static_cast<int>(src_.size()); }
  int src(int g) const { return src_[g]; }  // d(g)
  int dst(int g) const { return dst_[g]; }  // r(g)
  bool composable(int g, int h) const { return src_[g] == dst_[h]; }
  int compose(int g, int h) const { return comp_[static_cast<size_t>(g) * src_.size() + h]; }
  int identity_arrow(int object) const { return identity_[object]; }
  int inverse(int g) const { return inverse_[g]; }

  GroupoidData data() const;  // canonical dump (identities/inverses included)

  OrbitPartition orbits() const;
  IsotropyGroup isotropy_group(int object) const;

  /// Smallest invariant superset of U, namely r(d^-1(U)).  Also computed
  /// as d(r^-1(U)); the two must agree or the library is broken.
  std::vector<int> invariant_saturation(const std::vector<int>& objects) const;

  bool is_effective() const;

  /// Decides topological transitivity by three independent routines and
  /// insists they agree (InternalDisagreement otherwise):
  ///   1. all pairwise intersections of minimal invariant sets are nonempty,
  ///   4. an arrow joins every ordered pair of objects,
  ///   5. no cover of the objects by two proper invariant sets exists.
  bool is_topologically_transitive() const;

  bool is_bisection(const std::vector<int>& arrows) const;
  Bisection identity_bisection() const;
  Bisection compose_bisections(const Bisection& u, const Bisection& v) const;
  Bisection invert_bisection(const Bisection& u) const;

 private:
  int objects_ = 0;
  std::vector<int> src_, dst_;
  std::vector<int> comp_;  // flat arrow_count^2, -1 = undefined
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

/// Groupoid of a group action: objects X, arrows (g, x): x -> g.x.
/// `action[g][x]` must be a total group action (checked; NotAnAction).
struct ActionGroupoid {
  FiniteGroupoid groupoid;
  std::vector<std::pair<int, int>> arrow_labels;  // (group element, source point)
};
ActionGroupoid action_groupoid(const FiniteGroup& g, int set_size,
                               const std::vector<std::vector<int>>& action);

/// Groupoid of germs of an inverse semigroup acting by partial bijections.
/// `action[s][x]` is the image of x under s, or -1 outside the domain.
/// Requirements (checked): dom(s) = dom(s*s), the assignment is a
/// homomorphism, and every point lies in the domain of some idempotent.
struct GermGroupoid {
  FiniteGroupoid groupoid;
  /// Canonical representative germ (s, x) of each arrow.
  std::vector<std::pair<int, int>> arrow_rep;
  /// Every germ (s, x) with x in dom(s) -> its arrow id.
  std::map<std::pair<int, int>, int> germ_arrow;
};
GermGroupoid germ_groupoid(const InverseSemigroup& s, int set_size,
                           const std::vector<std::vector<int>>& action);

}  // namespace gpa
