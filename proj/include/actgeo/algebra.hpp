#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace actgeo {

/// Dense element index. Monoid elements, act points and partition blocks all use it.
using Element = std::uint32_t;

/// A finite monoid given by its Cayley table, `mul(s, t) = s·t`.
///
/// Instances are only produced by `validate_monoid`, so associativity and a
/// two-sided identity always hold. The identity need not be element 0.
class FiniteMonoid {
public:
  virtual ~FiniteMonoid() = default;

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element s, Element t) const noexcept { return table_[s * order_ + t]; }
  std::span<const Element> row(Element s) const noexcept {
    return {table_.data() + s * order_, order_};
  }
  const std::vector<Element>& table() const noexcept { return table_; }

  bool same_table(const FiniteMonoid& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

protected:
  FiniteMonoid(std::size_t order, std::vector<Element> table, Element identity)
      : order_(order), table_(std::move(table)), identity_(identity) {}

private:
  friend std::shared_ptr<const FiniteMonoid> validate_monoid(
      const std::vector<std::vector<Element>>& table);

  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
};

class FiniteGroup : public FiniteMonoid {
public:
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  const std::vector<Element>& inverses() const noexcept { return inverse_; }

  /// a⁻¹·h·a
  Element conjugate(Element h, Element a) const noexcept {
    return mul(mul(inverse_[a], h), a);
  }

private:
  friend std::shared_ptr<const FiniteGroup> as_group(const FiniteMonoid& monoid);

  FiniteGroup(const FiniteMonoid& base, std::vector<Element> inverse)
      : FiniteMonoid(base), inverse_(std::move(inverse)) {}

  std::vector<Element> inverse_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Throws Error{NotSquare, OutOfRangeEntry, NotAssociative, NoIdentity}.
MonoidPtr validate_monoid(const std::vector<std::vector<Element>>& table);

/// Throws Error{NotAGroup} naming the first element without an inverse.
GroupPtr as_group(const FiniteMonoid& monoid);

/// Returns the group view of `monoid` when it was built by `as_group`, else null.
GroupPtr group_view(const MonoidPtr& monoid);

/// Cyclic group Z_n with elements 0..n-1 and addition mod n.
GroupPtr cyclic_group(std::size_t n);
/// The one-element group; its acts are plain sets.
GroupPtr trivial_group();

class Subgroup {
public:
  /// Validates `members` (any order, duplicates allowed) as a subgroup of `parent`.
  /// Throws Error{NotASubgroup} or Error{OutOfRangeEntry}.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup trivial(const GroupPtr& parent);
  static Subgroup whole(const GroupPtr& parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  /// Sorted ascending.
  std::span<const Element> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element a) const noexcept;
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const noexcept;

  bool operator==(const Subgroup& other) const noexcept { return members_ == other.members_; }
  /// Size first, then lexicographic member list.
  std::strong_ordering operator<=>(const Subgroup& other) const noexcept;

private:
  struct Unchecked {};
  Subgroup(Unchecked, GroupPtr parent, std::vector<Element> sorted_members)
      : parent_(std::move(parent)), members_(std::move(sorted_members)) {}
  friend Subgroup generated_subgroup(const GroupPtr&, std::span<const Element>);
  friend Subgroup conjugate_subgroup(const Subgroup&, Element);

  GroupPtr parent_;
  std::vector<Element> members_;
};

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const GroupPtr& group, std::span<const Element> generators);

/// Every subgroup of `group`, sorted by order and then by member list.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group);

/// {a⁻¹ h a : h ∈ H}
Subgroup conjugate_subgroup(const Subgroup& h, Element a);

/// Smallest α with H1^α = H2.
std::optional<Element> are_conjugate(const Subgroup& h1, const Subgroup& h2);

/// Smallest α with H1^α ⊆ H2.
std::optional<Element> exists_conjugate_inclusion(const Subgroup& h1, const Subgroup& h2);

bool is_normal(const Subgroup& h);

/// Subgroups partitioned into conjugacy classes.
///
/// Classes are numbered by first appearance in `subgroups`, so the
/// representative of each class (its first member) has the lexicographically
/// smallest member list, and the class of the whole group is always last.
struct ConjugacyClassTable {
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  std::vector<bool> normal;

  std::size_t size() const noexcept { return classes.size(); }
  const Subgroup& representative(std::size_t cls) const { return subgroups[classes[cls].front()]; }
  std::size_t subgroup_index(const Subgroup& h) const;
  std::size_t class_index(const Subgroup& h) const { return class_of[subgroup_index(h)]; }
  std::size_t whole_class() const noexcept { return classes.size() - 1; }
  bool is_proper(std::size_t cls) const noexcept { return cls != whole_class(); }
  /// Size of the coset act of any member: |S| / |H|.
  std::size_t orbit_size(std::size_t cls) const {
    return group->order() / representative(cls).order();
  }
};

ConjugacyClassTable subgroup_conjugacy_classes(const GroupPtr& group);

/// External class label: "c" followed by the 1-based class number.
std::string class_label(std::size_t cls);
/// Class label plus a letter for the subgroup's position inside its class ("c2a", "c2b", ...).
std::string subgroup_label(const ConjugacyClassTable& table, std::size_t subgroup);

}  // namespace actgeo
