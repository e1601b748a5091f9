#include <algorithm>
#include <cstdint>

#include "actgeo/kernels.hpp"
#include "kernels_common.hpp"

namespace actgeo::kernels {

std::vector<PointId> solutions_omp(const FreeAct& free, const Act& target,
                                   const Relation& relation, std::size_t cap) {
  const std::size_t n = point_count(target.size(), free.basis_size(), cap);
  const detail::PairTable pairs(free, relation);
  std::vector<char> hit(n, 0);
  const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel
  {
    std::vector<Element> images(free.basis_size());
#pragma omp for schedule(static)
    for (std::int64_t id = 0; id < count; ++id) {
      decode_point(static_cast<PointId>(id), target.size(), images);
      hit[id] = pairs.satisfied_by(target, images) ? 1 : 0;
    }
  }

  std::vector<PointId> out;
  for (std::size_t id = 0; id < n; ++id)
    if (hit[id]) out.push_back(id);
  return out;
}

std::vector<Congruence> point_kernels_omp(const FreeAct& free, const Act& target,
                                          std::size_t cap) {
  const std::size_t n = point_count(target.size(), free.basis_size(), cap);
  const auto count = static_cast<std::int64_t>(n);
  std::vector<std::vector<Element>> merged;

#pragma omp parallel
  {
    std::vector<Element> images(free.basis_size());
    detail::KernelScratch scratch(free, target);
    std::vector<std::vector<Element>> local;
    std::size_t threshold = detail::kCompactThreshold;
#pragma omp for schedule(static) nowait
    for (std::int64_t id = 0; id < count; ++id) {
      decode_point(static_cast<PointId>(id), target.size(), images);
      local.push_back(scratch.kernel_labels(images));
      detail::compact(local, threshold);
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
#pragma omp critical(actgeo_kernel_merge)
    merged.insert(merged.end(), std::make_move_iterator(local.begin()),
                  std::make_move_iterator(local.end()));
  }
  return detail::distinct_congruences(std::move(merged));
}

}  // namespace actgeo::kernels
