#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actgeo/acts.hpp"

namespace actgeo {

/// The free act on k generators: k disjoint copies of the regular act.
/// Point (i, s) is stored at index i·|S| + s and `t·(i, s) = (i, t·s)`.
class FreeAct {
public:
  FreeAct(const MonoidPtr& monoid, std::size_t basis_size);

  const Act& act() const noexcept { return act_; }
  const FiniteMonoid& monoid() const noexcept { return act_.monoid(); }
  const MonoidPtr& monoid_ptr() const noexcept { return act_.monoid_ptr(); }
  std::size_t basis_size() const noexcept { return basis_size_; }
  std::size_t size() const noexcept { return act_.size(); }

  Element element(std::size_t basis, Element s) const noexcept {
    return static_cast<Element>(basis * monoid().order() + s);
  }
  Element generator(std::size_t basis) const noexcept { return element(basis, monoid().identity()); }
  std::size_t basis_of(Element x) const noexcept { return x / monoid().order(); }
  Element scalar_of(Element x) const noexcept {
    return static_cast<Element>(x % monoid().order());
  }

private:
  std::size_t basis_size_;
  Act act_;
};

inline FreeAct free_act(const MonoidPtr& monoid, std::size_t k) { return FreeAct(monoid, k); }

/// The unique homomorphism sending generator i to images[i].
/// Throws Error{DimensionMismatch, OutOfRangeEntry, MixedMonoids}.
ActHom hom_from_basis_images(const FreeAct& free, const Act& target,
                             std::span<const Element> images);

/// An equivalence relation on 0..size-1 stored as a block id per point.
///
/// Block ids are canonical: numbered 0, 1, ... in order of first occurrence, so
/// two partitions are equal iff their block vectors are. Whether the partition is
/// a congruence depends on an act; see `is_compatible`.
class Congruence {
public:
  static Congruence diagonal(std::size_t size);
  static Congruence universal(std::size_t size);
  /// Any labelling of points; relabels canonically.
  static Congruence from_labels(std::span<const Element> labels);

  std::size_t size() const noexcept { return blocks_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  Element block(Element a) const noexcept { return blocks_[a]; }
  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  bool related(Element a, Element b) const noexcept { return blocks_[a] == blocks_[b]; }
  bool is_diagonal() const noexcept { return num_blocks_ == blocks_.size(); }
  bool is_universal() const noexcept { return num_blocks_ <= 1; }

  /// This ⊆ other as sets of pairs.
  bool refines(const Congruence& other) const;

  /// Blocks as sorted member lists, ordered by smallest member.
  std::vector<std::vector<Element>> block_members() const;

  /// "[0,0,1,1]"
  std::string to_string() const;

  bool operator==(const Congruence& other) const noexcept = default;
  std::strong_ordering operator<=>(const Congruence& other) const noexcept {
    return blocks_ <=> other.blocks_;
  }

private:
  std::vector<Element> blocks_;
  std::size_t num_blocks_ = 0;
};

/// Finer partitions first, ties broken by block vector. Used for every listing.
bool lattice_order(const Congruence& a, const Congruence& b);

bool is_compatible(const Act& act, const Congruence& t);
/// Throws Error{CarrierMismatch, NotCompatible}.
Congruence validate_congruence(const Act& act, std::span<const Element> labels);

/// A finite set of pairs of points (a system of equations).
class Relation {
public:
  explicit Relation(std::size_t size) : size_(size) {}
  /// Throws Error{OutOfRangeEntry}.
  Relation(std::size_t size, std::vector<std::pair<Element, Element>> pairs);
  /// A spanning set of pairs for the partition: each point with its block's minimum.
  static Relation spanning(const Congruence& t);

  std::size_t size() const noexcept { return size_; }
  /// Sorted, duplicate free.
  const std::vector<std::pair<Element, Element>>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }

  Relation united(const Relation& other) const;

  bool operator==(const Relation&) const noexcept = default;

private:
  std::size_t size_;
  std::vector<std::pair<Element, Element>> pairs_;
};

/// Partition by equal image.
Congruence kernel(const ActHom& hom);

/// Least congruence containing `pairs`. Throws Error{CarrierMismatch}.
Congruence congruence_generated(const Act& act, const Relation& pairs);

/// Blockwise intersection. The empty family yields the universal congruence on `size` points.
/// Throws Error{CarrierMismatch}.
Congruence intersect(std::size_t size, std::span<const Congruence> family);
Congruence meet(const Congruence& a, const Congruence& b);

struct Quotient {
  Act act;
  ActHom projection;
};

/// Throws Error{CarrierMismatch, NotCompatible}.
Quotient quotient(const Act& act, const Congruence& t);

/// a ~ b iff hom(a) T hom(b). Throws Error{CarrierMismatch}.
Congruence pullback_congruence(const ActHom& hom, const Congruence& t);

/// Elementwise image of the pairs. Throws Error{CarrierMismatch}.
Relation pushforward_relation(const ActHom& hom, const Relation& r);

/// Every congruence of `act`, in lattice order. Built from the diagonal by joining
/// principal congruences, so it scales with the lattice rather than the Bell number.
std::vector<Congruence> enumerate_congruences(const Act& act);

}  // namespace actgeo
