#include "actgeo/galois.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo {

// --- PointSet ----------------------------------------------------------------

PointSet::PointSet(FreeAct free, Act target, std::vector<PointId> ids)
    : free_(std::move(free)), target_(std::move(target)), ids_(std::move(ids)) {
  if (!same_monoid(free_.act(), target_))
    throw Error(ErrorCode::MixedMonoids, "point set target is over a different monoid");
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  PointId limit = 1;
  for (std::size_t i = 0; i < free_.basis_size(); ++i) limit *= target_.size();
  if (!ids_.empty() && ids_.back() >= limit)
    throw Error(ErrorCode::OutOfRangeEntry, "point id out of range");
}

PointSet PointSet::all(const FreeAct& free, const Act& target, std::size_t cap) {
  const std::size_t n = kernels::point_count(target.size(), free.basis_size(), cap);
  std::vector<PointId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return PointSet(free, target, std::move(ids));
}

bool PointSet::contains(PointId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<Element> PointSet::images(PointId id) const {
  std::vector<Element> out(arity());
  kernels::decode_point(id, target_.size(), out);
  return out;
}

ActHom PointSet::hom(PointId id) const {
  return hom_from_basis_images(free_, target_, images(id));
}

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

PointSet PointSet::united(const PointSet& other) const {
  std::vector<PointId> ids;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(ids));
  return PointSet(free_, target_, std::move(ids));
}

PointSet PointSet::intersected(const PointSet& other) const {
  std::vector<PointId> ids;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(ids));
  return PointSet(free_, target_, std::move(ids));
}

// --- Galois correspondence ---------------------------------------------------

PointSet solutions(const FreeAct& free, const Relation& t, const Act& target, std::size_t cap) {
  if (t.size() != free.size())
    throw Error(ErrorCode::CarrierMismatch, "relation is not on this free act");
  if (!same_monoid(free.act(), target))
    throw Error(ErrorCode::MixedMonoids, "target is over a different monoid");
  return PointSet(free, target, kernels::solutions_omp(free, target, t, cap));
}

PointSet solutions(const FreeAct& free, const Congruence& t, const Act& target, std::size_t cap) {
  return solutions(free, Relation::spanning(t), target, cap);
}

Congruence coclosure(const PointSet& points) {
  const auto& free = points.free_act();
  const auto& target = points.target();
  const std::size_t order = free.monoid().order();
  // A point x of F_k lies in the same block as y iff every point agrees on them;
  // refine one point at a time.
  Congruence out = Congruence::universal(free.size());
  std::vector<Element> images(points.arity());
  std::vector<Element> labels(free.size());
  for (PointId id : points.ids()) {
    kernels::decode_point(id, target.size(), images);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (Element s = 0; s < order; ++s)
        labels[free.element(i, s)] = target.act(s, images[i]);
    out = meet(out, Congruence::from_labels(labels));
    if (out.is_diagonal()) break;
  }
  return out;
}

Congruence congruence_closure(const FreeAct& free, const Relation& t, const Act& target,
                              std::size_t cap) {
  return coclosure(solutions(free, t, target, cap));
}

Congruence congruence_closure(const FreeAct& free, const Congruence& t, const Act& target,
                              std::size_t cap) {
  return coclosure(solutions(free, t, target, cap));
}

bool is_closed_congruence(const FreeAct& free, const Congruence& t, const Act& target,
                          std::size_t cap) {
  return congruence_closure(free, t, target, cap) == t;
}

PointSet variety_closure(const PointSet& points, std::size_t cap) {
  return solutions(points.free_act(), coclosure(points), points.target(), cap);
}

std::optional<PointSet> subdirect_certificate(const FreeAct& free, const Congruence& t,
                                              const Act& target, std::size_t cap) {
  PointSet family = solutions(free, t, target, cap);
  if (coclosure(family) != t) return std::nullopt;
  return family;
}

// --- lattices ----------------------------------------------------------------

std::optional<std::size_t> ClosedCongruenceLattice::index_of(const Congruence& t) const {
  auto it = std::lower_bound(members.begin(), members.end(), t, lattice_order);
  if (it == members.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

std::size_t ClosedCongruenceLattice::meet(std::size_t i, std::size_t j) const {
  auto idx = index_of(actgeo::meet(members[i], members[j]));
  if (!idx) throw Error(ErrorCode::NotCompatible, "lattice not closed under meet");
  return *idx;
}

std::size_t ClosedCongruenceLattice::join(std::size_t i, std::size_t j) const {
  Congruence acc = Congruence::universal(free.size());
  for (const auto& m : members)
    if (members[i].refines(m) && members[j].refines(m)) acc = actgeo::meet(acc, m);
  return *index_of(acc);
}

std::vector<std::pair<std::size_t, std::size_t>> ClosedCongruenceLattice::covers() const {
  const std::size_t n = members.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && members[i].refines(members[j]);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool direct = true;
      for (std::size_t m = 0; m < n && direct; ++m) direct = !(below[i][m] && below[m][j]);
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

ClosedCongruenceLattice closed_lattice(const Act& target, std::size_t arity, std::size_t cap) {
  FreeAct free(target.monoid_ptr(), arity);
  std::set<Congruence> seen;
  std::vector<Congruence> members;
  auto add = [&](Congruence c) {
    if (seen.insert(c).second) members.push_back(std::move(c));
  };
  for (auto& k : kernels::point_kernels_omp(free, target, cap)) add(std::move(k));

  // Each new member is met with everything present when it is processed; later
  // arrivals meet it in their own turn.
  for (std::size_t next = 0; next < members.size(); ++next)
    for (std::size_t j = 0; j < next; ++j) add(meet(members[next], members[j]));
  add(Congruence::universal(free.size()));

  std::sort(members.begin(), members.end(), lattice_order);
  return ClosedCongruenceLattice{target, std::move(free), std::move(members)};
}

Congruence join(const FreeAct& free, const Congruence& t1, const Congruence& t2,
                const Act& target, std::size_t cap) {
  return congruence_closure(free, Relation::spanning(t1).united(Relation::spanning(t2)), target,
                            cap);
}

std::optional<std::size_t> VarietyLattice::index_of(const PointSet& a) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == a) return i;
  return std::nullopt;
}

VarietyLattice variety_lattice(const Act& target, std::size_t arity, std::size_t cap) {
  VarietyLattice out{closed_lattice(target, arity, cap), {}};
  out.members.reserve(out.closed.size());
  for (const auto& t : out.closed.members)
    out.members.push_back(solutions(out.closed.free, t, target, cap));
  return out;
}

PointSet stability_gap(const FreeAct& free, const Congruence& t1, const Congruence& t2,
                       const Act& target, std::size_t cap) {
  const PointSet whole = solutions(free, meet(t1, t2), target, cap);
  const PointSet part = solutions(free, t1, target, cap).united(solutions(free, t2, target, cap));
  std::vector<PointId> gap;
  std::set_difference(whole.ids().begin(), whole.ids().end(), part.ids().begin(), part.ids().end(),
                      std::back_inserter(gap));
  return PointSet(free, target, std::move(gap));
}

StabilityReport is_geometrically_stable(const Act& target, std::size_t max_arity,
                                        std::size_t cap) {
  StabilityReport report;
  report.max_arity = max_arity;
  for (std::size_t k = 1; k <= max_arity; ++k) {
    const VarietyLattice lattice = variety_lattice(target, k, cap);
    const auto& closed = lattice.closed;
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = i + 1; j < closed.size(); ++j) {
        const PointSet& whole = lattice.members[closed.meet(i, j)];
        const PointSet part = lattice.members[i].united(lattice.members[j]);
        if (part.size() == whole.size()) continue;
        std::vector<PointId> gap;
        std::set_difference(whole.ids().begin(), whole.ids().end(), part.ids().begin(),
                            part.ids().end(), std::back_inserter(gap));
        report.stable = false;
        report.counterexample = StabilityCounterexample{k, closed.members[i], closed.members[j],
                                                        whole.images(gap.front())};
        return report;
      }
  }
  return report;
}

std::optional<Congruence> cl_equal(const Act& g1, const Act& g2, std::size_t arity,
                                   std::size_t cap) {
  if (!same_monoid(g1, g2)) throw Error(ErrorCode::MixedMonoids, "acts over different monoids");
  const auto a = closed_lattice(g1, arity, cap);
  const auto b = closed_lattice(g2, arity, cap);
  std::vector<Congruence> diff;
  std::set_symmetric_difference(a.members.begin(), a.members.end(), b.members.begin(),
                                b.members.end(), std::back_inserter(diff), lattice_order);
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

// --- DOT ---------------------------------------------------------------------

namespace {

std::string dot_graph(const std::string& name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (auto [lo, hi] : edges) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const ClosedCongruenceLattice& lattice) {
  std::vector<std::string> labels;
  for (const auto& m : lattice.members) labels.push_back(m.to_string());
  return dot_graph("closed_congruences", labels, lattice.covers());
}

std::string to_dot(const VarietyLattice& lattice) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    labels.push_back(lattice.closed.members[i].to_string() + " ' = " +
                     std::to_string(lattice.members[i].size()) + " points");
  // Larger congruence means smaller variety, so congruence covers reverse.
  auto edges = lattice.closed.covers();
  for (auto& [lo, hi] : edges) std::swap(lo, hi);
  std::sort(edges.begin(), edges.end());
  return dot_graph("varieties", labels, edges);
}

}  // namespace actgeo
