#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actgeo/congruence.hpp"
#include "actgeo/kernels.hpp"

namespace actgeo {

using kernels::PointId;

/// A set of points of the affine space hom(F_k, G). Each point is stored as the
/// id of its generator-image vector (see `kernels::encode_point`).
class PointSet {
public:
  /// Throws Error{MixedMonoids, OutOfRangeEntry}.
  PointSet(FreeAct free, Act target, std::vector<PointId> ids);

  /// The whole affine space. Throws Error{ArityBoundExceeded}.
  static PointSet all(const FreeAct& free, const Act& target,
                      std::size_t cap = kDefaultSizeCap);

  const FreeAct& free_act() const noexcept { return free_; }
  const Act& target() const noexcept { return target_; }
  std::size_t arity() const noexcept { return free_.basis_size(); }
  /// Sorted, duplicate free.
  const std::vector<PointId>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(PointId id) const;

  std::vector<Element> images(PointId id) const;
  ActHom hom(PointId id) const;

  bool is_subset_of(const PointSet& other) const;
  PointSet united(const PointSet& other) const;
  PointSet intersected(const PointSet& other) const;

  bool operator==(const PointSet& other) const noexcept { return ids_ == other.ids_; }

private:
  FreeAct free_;
  Act target_;
  std::vector<PointId> ids_;
};

/// T' : every point whose kernel contains the relation. Relations need not be congruences.
/// Throws Error{ArityBoundExceeded, CarrierMismatch, MixedMonoids}.
PointSet solutions(const FreeAct& free, const Relation& t, const Act& target,
                   std::size_t cap = kDefaultSizeCap);
PointSet solutions(const FreeAct& free, const Congruence& t, const Act& target,
                   std::size_t cap = kDefaultSizeCap);

/// A' : intersection of the kernels; universal for the empty set.
Congruence coclosure(const PointSet& points);

/// T'' = (T')'
Congruence congruence_closure(const FreeAct& free, const Relation& t, const Act& target,
                              std::size_t cap = kDefaultSizeCap);
Congruence congruence_closure(const FreeAct& free, const Congruence& t, const Act& target,
                              std::size_t cap = kDefaultSizeCap);

bool is_closed_congruence(const FreeAct& free, const Congruence& t, const Act& target,
                          std::size_t cap = kDefaultSizeCap);

/// A'' = (A')'
PointSet variety_closure(const PointSet& points, std::size_t cap = kDefaultSizeCap);

/// For a closed T, the point set T' whose kernels intersect to exactly T; these
/// are the coordinates of an embedding F/T ↣ G^T'. Absent when T is not closed.
std::optional<PointSet> subdirect_certificate(const FreeAct& free, const Congruence& t,
                                              const Act& target,
                                              std::size_t cap = kDefaultSizeCap);

/// The lattice of G-closed congruences on F_k, in `lattice_order`
/// (diagonal side first, universal last).
struct ClosedCongruenceLattice {
  Act target;
  FreeAct free;
  std::vector<Congruence> members;

  std::size_t arity() const noexcept { return free.basis_size(); }
  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::size_t> index_of(const Congruence& t) const;
  bool contains(const Congruence& t) const { return index_of(t).has_value(); }
  std::size_t meet(std::size_t i, std::size_t j) const;
  /// Smallest member above both, i.e. (Ti ∪ Tj)''.
  std::size_t join(std::size_t i, std::size_t j) const;
  /// Covering pairs (lower, upper) of the inclusion order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

/// Kernels of all single points closed under pairwise intersection, plus the
/// universal congruence. Throws Error{ArityBoundExceeded}.
ClosedCongruenceLattice closed_lattice(const Act& target, std::size_t arity,
                                       std::size_t cap = kDefaultSizeCap);

/// (T1 ∪ T2)''
Congruence join(const FreeAct& free, const Congruence& t1, const Congruence& t2,
                const Act& target, std::size_t cap = kDefaultSizeCap);

/// Algebraic varieties of hom(F_k, G). `members[i]` is `closed.members[i]'`, so the
/// index map is the order-reversing bijection between the two lattices.
struct VarietyLattice {
  ClosedCongruenceLattice closed;
  std::vector<PointSet> members;

  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::size_t> index_of(const PointSet& a) const;
};

VarietyLattice variety_lattice(const Act& target, std::size_t arity,
                               std::size_t cap = kDefaultSizeCap);

/// Points of (T1 ∩ T2)' outside T1' ∪ T2'. Empty iff the union of the two
/// varieties is already a variety.
PointSet stability_gap(const FreeAct& free, const Congruence& t1, const Congruence& t2,
                       const Act& target, std::size_t cap = kDefaultSizeCap);

struct StabilityCounterexample {
  std::size_t arity;
  Congruence t1;
  Congruence t2;
  std::vector<Element> witness;  // generator images of a point in the gap
};

struct StabilityReport {
  bool stable = true;
  std::size_t max_arity = 0;
  std::optional<StabilityCounterexample> counterexample;
};

/// Checks T1' ∪ T2' = (T1 ∩ T2)' for all closed T1, T2 at every arity 1..max_arity.
StabilityReport is_geometrically_stable(const Act& target, std::size_t max_arity = 3,
                                        std::size_t cap = kDefaultSizeCap);

/// Absent when Cl_G1(F_k) = Cl_G2(F_k); otherwise the first congruence of the
/// symmetric difference in `lattice_order`.
/// Throws Error{MixedMonoids, ArityBoundExceeded}.
std::optional<Congruence> cl_equal(const Act& g1, const Act& g2, std::size_t arity,
                                   std::size_t cap = kDefaultSizeCap);

/// Hasse diagram in Graphviz DOT; node labels are canonical block vectors.
std::string to_dot(const ClosedCongruenceLattice& lattice);
/// Same diagram with each node labelled by its variety's point count; edges point
/// from the smaller variety to the larger.
std::string to_dot(const VarietyLattice& lattice);

}  // namespace actgeo
