#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "actgeo/algebra.hpp"

namespace actgeo {

/// Upper bound on enumerated carriers and search spaces unless a caller overrides it.
inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// A finite left S-act: a non-empty carrier 0..size-1 with `act(s, a) = s·a`.
///
/// The action table is shared between copies, so passing acts by value is cheap.
class Act {
public:
  /// Wraps a row-major |S|×size table without checking the act laws. Library
  /// constructions use this when validity holds by construction; user input goes
  /// through `validate_act`.
  static Act unchecked(MonoidPtr monoid, std::size_t size, std::vector<Element> action);

  const FiniteMonoid& monoid() const noexcept { return *monoid_; }
  const MonoidPtr& monoid_ptr() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return size_; }
  Element act(Element s, Element a) const noexcept { return (*action_)[s * size_ + a]; }
  std::span<const Element> row(Element s) const noexcept {
    return {action_->data() + s * size_, size_};
  }
  const std::vector<Element>& table() const noexcept { return *action_; }

  /// Same monoid table and same action table.
  bool operator==(const Act& other) const noexcept;

private:
  Act(MonoidPtr monoid, std::size_t size, std::shared_ptr<const std::vector<Element>> action)
      : monoid_(std::move(monoid)), size_(size), action_(std::move(action)) {}

  MonoidPtr monoid_;
  std::size_t size_;
  std::shared_ptr<const std::vector<Element>> action_;
};

/// Validates an action matrix with `action[s][a] = s·a`.
/// Throws Error{EmptyCarrier, DimensionMismatch, OutOfRangeEntry,
/// IdentityLawViolated, CompatibilityViolated}.
Act validate_act(MonoidPtr monoid, const std::vector<std::vector<Element>>& action);

bool same_monoid(const Act& a, const Act& b) noexcept;

/// S acting on itself by left multiplication (the free act on one generator).
Act regular_act(const MonoidPtr& monoid);
/// A single fixed point.
Act zero_act(const MonoidPtr& monoid);
/// `size` fixed points.
Act trivial_act(const MonoidPtr& monoid, std::size_t size);

/// An equivariant map between two acts over the same monoid.
struct ActHom {
  Act source;
  Act target;
  std::vector<Element> map;

  Element operator()(Element a) const noexcept { return map[a]; }
  bool is_injective() const;
};

/// Throws Error{DimensionMismatch, OutOfRangeEntry, MixedMonoids, NotEquivariant}.
ActHom validate_hom(Act source, Act target, std::vector<Element> map);
ActHom identity_hom(const Act& act);
/// outer ∘ inner
ActHom compose(const ActHom& outer, const ActHom& inner);

std::vector<Element> fixed_points(const Act& act);

/// Greedy generating set: repeatedly the smallest point outside the subact
/// generated so far. Over a group these are exactly the orbit minima.
std::vector<Element> act_generators(const Act& act);

struct Orbit {
  std::vector<Element> elements;  // sorted
  Element representative;         // smallest element
  Subgroup stabilizer;            // of the representative
  std::size_t class_id;           // conjugacy class of the stabilizer

  bool is_zero() const noexcept { return stabilizer.is_whole(); }
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // ordered by representative
  std::size_t zero_orbits = 0;
};

/// Throws Error{MonoidNotGroup}.
OrbitDecomposition orbit_decomposition(const Act& act, const ConjugacyClassTable& classes);
OrbitDecomposition orbit_decomposition(const Act& act);

/// {s : s·a = a}. Throws Error{MonoidNotGroup}.
Subgroup stabilizer(const Act& act, Element a);

/// S acting on the left cosets of `h`; points are ordered by their smallest member.
Act coset_act(const Subgroup& h);
/// Index of the coset containing `s` in `coset_act(h)`.
Element coset_index(const Subgroup& h, Element s);

struct Coproduct {
  Act act;
  std::vector<std::size_t> offsets;  // offsets[i] = first index of part i
};

/// Throws Error{EmptyList, MixedMonoids}.
Coproduct coproduct(std::span<const Act> parts);

/// Componentwise action on n-tuples, indexed row-major (first coordinate most significant).
/// Throws Error{SizeBoundExceeded} when size^n exceeds `cap`.
Act power_act(const Act& act, std::size_t n, std::size_t cap = kDefaultSizeCap);
/// Encodes a tuple for `power_act(act, tuple.size())`.
Element power_index(std::size_t base, std::span<const Element> tuple);

/// Coproduct of n copies.
Act copower_act(const Act& act, std::size_t n, std::size_t cap = kDefaultSizeCap);

/// Every homomorphism source → target, sorted by map.
/// Throws Error{MixedMonoids}, and Error{SizeBoundExceeded} when
/// |target|^(#generators of source) exceeds `cap`.
std::vector<ActHom> enumerate_homs(const Act& source, const Act& target,
                                   std::size_t cap = kDefaultSizeCap);

/// Some injective homomorphism source → target, if any. The search order is
/// deterministic, so repeated calls return the same embedding.
std::optional<ActHom> exists_embedding(const Act& source, const Act& target,
                                       std::size_t cap = kDefaultSizeCap);

/// Sorted stabilizer class ids of all orbits; a complete isomorphism invariant over a group.
std::vector<std::size_t> orbit_type(const Act& act, const ConjugacyClassTable& classes);

/// Throws Error{MonoidNotGroup, MixedMonoids}.
bool are_isomorphic(const Act& a, const Act& b);

}  // namespace actgeo
