#include "actgeo/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo {

namespace {

Act make_free_act(const MonoidPtr& monoid, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::EmptyCarrier, "free act needs at least one generator");
  std::vector<Act> copies(k, regular_act(monoid));
  return coproduct(copies).act;
}

void require_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    std::ostringstream os;
    os << what << ": carrier of size " << actual << ", expected " << expected;
    throw Error(ErrorCode::CarrierMismatch, os.str());
  }
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  Element find(Element a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Element> labels() {
    std::vector<Element> out(parent_.size());
    for (Element a = 0; a < out.size(); ++a) out[a] = find(a);
    return out;
  }

private:
  std::vector<Element> parent_;
};

}  // namespace

FreeAct::FreeAct(const MonoidPtr& monoid, std::size_t basis_size)
    : basis_size_(basis_size), act_(make_free_act(monoid, basis_size)) {}

ActHom hom_from_basis_images(const FreeAct& free, const Act& target,
                             std::span<const Element> images) {
  if (!same_monoid(free.act(), target))
    throw Error(ErrorCode::MixedMonoids, "target is over a different monoid");
  if (images.size() != free.basis_size())
    throw Error(ErrorCode::DimensionMismatch, "one image per generator is required");
  for (Element y : images)
    if (y >= target.size()) throw Error(ErrorCode::OutOfRangeEntry, "basis image out of range");
  const std::size_t order = free.monoid().order();
  std::vector<Element> map(free.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    for (Element s = 0; s < order; ++s) map[free.element(i, s)] = target.act(s, images[i]);
  return ActHom{free.act(), target, std::move(map)};
}

// --- Congruence --------------------------------------------------------------

Congruence Congruence::diagonal(std::size_t size) {
  Congruence c;
  c.blocks_.resize(size);
  std::iota(c.blocks_.begin(), c.blocks_.end(), 0u);
  c.num_blocks_ = size;
  return c;
}

Congruence Congruence::universal(std::size_t size) {
  Congruence c;
  c.blocks_.assign(size, 0);
  c.num_blocks_ = size == 0 ? 0 : 1;
  return c;
}

Congruence Congruence::from_labels(std::span<const Element> labels) {
  Congruence c;
  c.blocks_.resize(labels.size());
  if (labels.empty()) return c;
  const Element top = *std::max_element(labels.begin(), labels.end());
  if (top < 4 * labels.size() + 64) {
    std::vector<Element> rename(static_cast<std::size_t>(top) + 1, static_cast<Element>(-1));
    Element next = 0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      Element& r = rename[labels[a]];
      if (r == static_cast<Element>(-1)) r = next++;
      c.blocks_[a] = r;
    }
    c.num_blocks_ = next;
    return c;
  }
  std::map<Element, Element> rename;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    auto [it, fresh] = rename.emplace(labels[a], static_cast<Element>(rename.size()));
    c.blocks_[a] = it->second;
  }
  c.num_blocks_ = rename.size();
  return c;
}

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) return false;
  // Each block of this must sit inside one block of other.
  std::vector<Element> image(num_blocks_, static_cast<Element>(-1));
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    Element& slot = image[blocks_[a]];
    if (slot == static_cast<Element>(-1))
      slot = other.blocks_[a];
    else if (slot != other.blocks_[a])
      return false;
  }
  return true;
}

std::vector<std::vector<Element>> Congruence::block_members() const {
  std::vector<std::vector<Element>> out(num_blocks_);
  for (Element a = 0; a < blocks_.size(); ++a) out[blocks_[a]].push_back(a);
  return out;
}

std::string Congruence::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(blocks_[a]);
  }
  return s + "]";
}

bool lattice_order(const Congruence& a, const Congruence& b) {
  if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
  return a < b;
}

bool is_compatible(const Act& act, const Congruence& t) {
  if (t.size() != act.size()) return false;
  // Comparing every point with its block's first member suffices by transitivity.
  std::vector<Element> first(t.num_blocks(), static_cast<Element>(-1));
  for (Element a = 0; a < t.size(); ++a)
    if (first[t.block(a)] == static_cast<Element>(-1)) first[t.block(a)] = a;
  for (Element s = 0; s < act.monoid().order(); ++s)
    for (Element a = 0; a < t.size(); ++a)
      if (!t.related(act.act(s, a), act.act(s, first[t.block(a)]))) return false;
  return true;
}

Congruence validate_congruence(const Act& act, std::span<const Element> labels) {
  require_size(act.size(), labels.size(), "congruence");
  auto t = Congruence::from_labels(labels);
  if (!is_compatible(act, t))
    throw Error(ErrorCode::NotCompatible, "partition " + t.to_string() + " is not S-compatible");
  return t;
}

// --- Relation ----------------------------------------------------------------

Relation::Relation(std::size_t size, std::vector<std::pair<Element, Element>> pairs)
    : size_(size), pairs_(std::move(pairs)) {
  for (auto [a, b] : pairs_)
    if (a >= size_ || b >= size_) throw Error(ErrorCode::OutOfRangeEntry, "pair out of range");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::spanning(const Congruence& t) {
  std::vector<Element> first(t.num_blocks(), static_cast<Element>(-1));
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < t.size(); ++a) {
    Element& f = first[t.block(a)];
    if (f == static_cast<Element>(-1))
      f = a;
    else
      pairs.emplace_back(f, a);
  }
  return Relation(t.size(), std::move(pairs));
}

Relation Relation::united(const Relation& other) const {
  require_size(size_, other.size_, "relation union");
  auto pairs = pairs_;
  pairs.insert(pairs.end(), other.pairs_.begin(), other.pairs_.end());
  return Relation(size_, std::move(pairs));
}

// --- operations --------------------------------------------------------------

Congruence kernel(const ActHom& hom) { return Congruence::from_labels(hom.map); }

Congruence congruence_generated(const Act& act, const Relation& pairs) {
  require_size(act.size(), pairs.size(), "congruence_generated");
  UnionFind uf(act.size());
  std::deque<std::pair<Element, Element>> work(pairs.pairs().begin(), pairs.pairs().end());
  // Only pairs that actually merge two classes need their translates queued.
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (Element s = 0; s < act.monoid().order(); ++s) work.emplace_back(act.act(s, a), act.act(s, b));
  }
  return Congruence::from_labels(uf.labels());
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_size(a.size(), b.size(), "meet");
  std::map<std::pair<Element, Element>, Element> ids;
  std::vector<Element> labels(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    auto [it, fresh] = ids.emplace(std::pair{a.block(x), b.block(x)}, static_cast<Element>(ids.size()));
    labels[x] = it->second;
  }
  return Congruence::from_labels(labels);
}

Congruence intersect(std::size_t size, std::span<const Congruence> family) {
  Congruence out = Congruence::universal(size);
  for (const auto& t : family) {
    require_size(size, t.size(), "intersect");
    out = meet(out, t);
  }
  return out;
}

Quotient quotient(const Act& act, const Congruence& t) {
  require_size(act.size(), t.size(), "quotient");
  if (!is_compatible(act, t)) throw Error(ErrorCode::NotCompatible, "quotient by a non-congruence");
  const std::size_t n = t.num_blocks();
  std::vector<Element> rep(n, static_cast<Element>(-1));
  for (Element a = 0; a < t.size(); ++a)
    if (rep[t.block(a)] == static_cast<Element>(-1)) rep[t.block(a)] = a;
  const std::size_t order = act.monoid().order();
  std::vector<Element> flat(order * n);
  for (Element s = 0; s < order; ++s)
    for (Element b = 0; b < n; ++b) flat[s * n + b] = t.block(act.act(s, rep[b]));
  Act q = Act::unchecked(act.monoid_ptr(), n, std::move(flat));
  return Quotient{q, ActHom{act, q, t.blocks()}};
}

Congruence pullback_congruence(const ActHom& hom, const Congruence& t) {
  require_size(hom.target.size(), t.size(), "pullback");
  std::vector<Element> labels(hom.map.size());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[a] = t.block(hom.map[a]);
  return Congruence::from_labels(labels);
}

Relation pushforward_relation(const ActHom& hom, const Relation& r) {
  require_size(hom.source.size(), r.size(), "pushforward");
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(r.pairs().size());
  for (auto [a, b] : r.pairs()) pairs.emplace_back(hom.map[a], hom.map[b]);
  return Relation(hom.target.size(), std::move(pairs));
}

std::vector<Congruence> enumerate_congruences(const Act& act) {
  const std::size_t n = act.size();
  std::set<Congruence> seen{Congruence::diagonal(n)};
  std::vector<Congruence> work{Congruence::diagonal(n)};
  // Every congruence is a join of principal ones, reachable one pair at a time.
  while (!work.empty()) {
    Congruence c = std::move(work.back());
    work.pop_back();
    const Relation base = Relation::spanning(c);
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (c.related(a, b)) continue;
        Congruence next = congruence_generated(act, base.united(Relation(n, {{a, b}})));
        if (seen.insert(next).second) work.push_back(std::move(next));
      }
  }
  std::vector<Congruence> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lattice_order);
  return out;
}

}  // namespace actgeo
