#pragma once

#include <optional>
#include <vector>

#include "gpa/ring.hpp"

namespace gpa {

/// A finite group given by its Cayley table.  Construction certifies the
/// group axioms on every triple; instances are immutable afterwards.
class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty placeholder; assign from validate()

  /// Certify an m x m table (entries in [0, m)) as a group, or throw a
  /// ValidationError naming the violated axiom and a witness.
  static FiniteGroup validate(const std::vector<std::vector<int>>& table);

  int order() const { return order_; }
  int op(int i, int j) const { return table_[static_cast<size_t>(i) * order_ + j]; }
  int identity() const { return identity_; }
  int inverse(int i) const { return inverse_[i]; }
  bool is_trivial() const { return order_ == 1; }

  /// All normal subgroups as sorted element-index sets, ordered by size
  /// then lexicographically.  Always contains {e} and the whole group.
  std::vector<std::vector<int>> normal_subgroups() const;

  /// Subgroup generated by a set of elements.
  std::vector<int> closure(const std::vector<int>& generators) const;

  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Either an explicit finite group or the symbolic infinite cyclic group;
/// the latter never materializes a table (its group algebra is Laurent).
struct GroupSpec {
  std::optional<FiniteGroup> finite;  // empty means infinite cyclic

  static GroupSpec of(FiniteGroup g) { return GroupSpec{std::move(g)}; }
  static GroupSpec infinite_cyclic() { return GroupSpec{std::nullopt}; }
  bool is_infinite_cyclic() const { return !finite.has_value(); }
};

/// Connell's criterion: RG is prime iff R is an integral domain and G has
/// no non-trivial finite normal subgroup.
bool group_algebra_is_prime(const GroupSpec& g, const RingSpec& r);

/// Passman's criterion: RG is semiprime iff R is reduced and no finite
/// normal subgroup of G has order that is a zero divisor in R.
bool group_algebra_is_semiprime(const GroupSpec& g, const RingSpec& r);

}  // namespace gpa
