#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "actgeo/congruence.hpp"

/// Hot loops over the affine space hom(F_k, G).
///
/// A point is identified by the base-|G| number whose digits are its generator
/// images, first generator most significant. Each kernel has a serial reference
/// and an OpenMP version; both return identical, sorted results.
namespace actgeo::kernels {

using PointId = std::uint64_t;

/// |G|^k. Throws Error{ArityBoundExceeded} above `cap`.
std::size_t point_count(std::size_t target_size, std::size_t arity, std::size_t cap);

void decode_point(PointId id, std::size_t base, std::span<Element> images);
PointId encode_point(std::span<const Element> images, std::size_t base);

/// Points whose kernel contains every pair of `relation`.
std::vector<PointId> solutions_serial(const FreeAct& free, const Act& target,
                                      const Relation& relation, std::size_t cap);
std::vector<PointId> solutions_omp(const FreeAct& free, const Act& target,
                                   const Relation& relation, std::size_t cap);

/// Distinct kernels of all points, sorted by `lattice_order`.
std::vector<Congruence> point_kernels_serial(const FreeAct& free, const Act& target,
                                             std::size_t cap);
std::vector<Congruence> point_kernels_omp(const FreeAct& free, const Act& target,
                                          std::size_t cap);

}  // namespace actgeo::kernels
