#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "actgeo/congruence.hpp"

namespace actgeo::kernels::detail {

/// Relation pairs pre-split into (generator, scalar) coordinates.
class PairTable {
public:
  PairTable(const FreeAct& free, const Relation& relation) {
    for (auto [a, b] : relation.pairs())
      if (a != b)
        coords_.push_back({free.basis_of(a), free.scalar_of(a), free.basis_of(b), free.scalar_of(b)});
  }

  bool satisfied_by(const Act& target, std::span<const Element> images) const {
    for (const auto& c : coords_)
      if (target.act(c.sa, images[c.ga]) != target.act(c.sb, images[c.gb])) return false;
    return true;
  }

private:
  struct Coord {
    std::size_t ga;
    Element sa;
    std::size_t gb;
    Element sb;
  };
  std::vector<Coord> coords_;
};

/// Canonical kernel labels of the point with the given generator images.
class KernelScratch {
public:
  KernelScratch(const FreeAct& free, const Act& target)
      : free_(free), target_(target), rename_(target.size(), kFree) {}

  std::vector<Element> kernel_labels(std::span<const Element> images) {
    const std::size_t order = free_.monoid().order();
    std::vector<Element> labels(free_.size());
    std::vector<Element> touched;
    Element next = 0;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (Element s = 0; s < order; ++s) {
        const Element y = target_.act(s, images[i]);
        if (rename_[y] == kFree) {
          rename_[y] = next++;
          touched.push_back(y);
        }
        labels[free_.element(i, s)] = rename_[y];
      }
    for (Element y : touched) rename_[y] = kFree;
    return labels;
  }

private:
  static constexpr Element kFree = static_cast<Element>(-1);
  const FreeAct& free_;
  const Act& target_;
  std::vector<Element> rename_;
};

/// Sort and deduplicate once the buffer grows past `threshold` entries; the
/// threshold doubles whenever the distinct set itself is that large.
inline void compact(std::vector<std::vector<Element>>& labels, std::size_t& threshold) {
  if (labels.size() < threshold) return;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  threshold = std::max(threshold, 2 * labels.size());
}

inline constexpr std::size_t kCompactThreshold = 1 << 14;

inline std::vector<Congruence> distinct_congruences(std::vector<std::vector<Element>> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Congruence> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(Congruence::from_labels(l));
  std::sort(out.begin(), out.end(), lattice_order);
  return out;
}

}  // namespace actgeo::kernels::detail
