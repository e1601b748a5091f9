#include <algorithm>

#include "actgeo/error.hpp"
#include "actgeo/kernels.hpp"
#include "kernels_common.hpp"

namespace actgeo::kernels {

std::size_t point_count(std::size_t target_size, std::size_t arity, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (target_size != 0 && n > cap / target_size)
      throw Error(ErrorCode::ArityBoundExceeded,
                  "|G|^k = " + std::to_string(target_size) + "^" + std::to_string(arity) +
                      " exceeds cap " + std::to_string(cap));
    n *= target_size;
  }
  if (n > cap) throw Error(ErrorCode::ArityBoundExceeded, "point count exceeds cap");
  return n;
}

void decode_point(PointId id, std::size_t base, std::span<Element> images) {
  for (std::size_t i = images.size(); i-- > 0;) {
    images[i] = static_cast<Element>(id % base);
    id /= base;
  }
}

PointId encode_point(std::span<const Element> images, std::size_t base) {
  PointId id = 0;
  for (Element x : images) id = id * base + x;
  return id;
}

std::vector<PointId> solutions_serial(const FreeAct& free, const Act& target,
                                      const Relation& relation, std::size_t cap) {
  const std::size_t n = point_count(target.size(), free.basis_size(), cap);
  const detail::PairTable pairs(free, relation);
  std::vector<Element> images(free.basis_size());
  std::vector<PointId> out;
  for (PointId id = 0; id < n; ++id) {
    decode_point(id, target.size(), images);
    if (pairs.satisfied_by(target, images)) out.push_back(id);
  }
  return out;
}

std::vector<Congruence> point_kernels_serial(const FreeAct& free, const Act& target,
                                             std::size_t cap) {
  const std::size_t n = point_count(target.size(), free.basis_size(), cap);
  std::vector<Element> images(free.basis_size());
  detail::KernelScratch scratch(free, target);
  std::vector<std::vector<Element>> found;
  std::size_t threshold = detail::kCompactThreshold;
  for (PointId id = 0; id < n; ++id) {
    decode_point(id, target.size(), images);
    found.push_back(scratch.kernel_labels(images));
    detail::compact(found, threshold);
  }
  return detail::distinct_congruences(std::move(found));
}

}  // namespace actgeo::kernels
