#include "actgeo/acts.hpp"

#include <algorithm>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

GroupPtr require_group(const Act& act) {
  auto g = group_view(act.monoid_ptr());
  if (!g) throw Error(ErrorCode::MonoidNotGroup, "operation needs an act over a group");
  return g;
}

void require_same_monoid(const Act& a, const Act& b) {
  if (!same_monoid(a, b)) throw Error(ErrorCode::MixedMonoids, "acts are over different monoids");
}

/// base^exp, or nullopt once it passes `cap`.
std::optional<std::size_t> bounded_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  if (r > cap) return std::nullopt;
  return r;
}

}  // namespace

Act Act::unchecked(MonoidPtr monoid, std::size_t size, std::vector<Element> action) {
  return Act(std::move(monoid), size,
             std::make_shared<const std::vector<Element>>(std::move(action)));
}

bool Act::operator==(const Act& other) const noexcept {
  return size_ == other.size_ && monoid_->same_table(*other.monoid_) &&
         (action_ == other.action_ || *action_ == *other.action_);
}

bool same_monoid(const Act& a, const Act& b) noexcept {
  return a.monoid_ptr() == b.monoid_ptr() || a.monoid().same_table(b.monoid());
}

Act validate_act(MonoidPtr monoid, const std::vector<std::vector<Element>>& action) {
  const auto& m = *monoid;
  if (action.size() != m.order()) {
    std::ostringstream os;
    os << "action has " << action.size() << " rows, monoid has order " << m.order();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  const std::size_t size = action.front().size();
  if (size == 0) throw Error(ErrorCode::EmptyCarrier, "acts are non-empty");
  std::vector<Element> flat;
  flat.reserve(m.order() * size);
  for (std::size_t s = 0; s < m.order(); ++s) {
    if (action[s].size() != size)
      throw Error(ErrorCode::DimensionMismatch, "ragged action row " + std::to_string(s));
    for (std::size_t a = 0; a < size; ++a) {
      if (action[s][a] >= size) {
        std::ostringstream os;
        os << "action[" << s << "][" << a << "] = " << action[s][a] << " is not below " << size;
        throw Error(ErrorCode::OutOfRangeEntry, os.str());
      }
      flat.push_back(action[s][a]);
    }
  }
  Act act = Act::unchecked(std::move(monoid), size, std::move(flat));
  for (Element a = 0; a < size; ++a)
    if (act.act(m.identity(), a) != a)
      throw Error(ErrorCode::IdentityLawViolated, "identity moves point " + std::to_string(a));
  for (Element s = 0; s < m.order(); ++s)
    for (Element t = 0; t < m.order(); ++t)
      for (Element a = 0; a < size; ++a)
        if (act.act(m.mul(s, t), a) != act.act(s, act.act(t, a))) {
          std::ostringstream os;
          os << "(" << s << "·" << t << ")·" << a << " != " << s << "·(" << t << "·" << a << ")";
          throw Error(ErrorCode::CompatibilityViolated, os.str());
        }
  return act;
}

Act regular_act(const MonoidPtr& monoid) {
  return Act::unchecked(monoid, monoid->order(), monoid->table());
}

Act zero_act(const MonoidPtr& monoid) { return trivial_act(monoid, 1); }

Act trivial_act(const MonoidPtr& monoid, std::size_t size) {
  if (size == 0) throw Error(ErrorCode::EmptyCarrier, "acts are non-empty");
  std::vector<Element> flat(monoid->order() * size);
  for (std::size_t s = 0; s < monoid->order(); ++s)
    for (std::size_t a = 0; a < size; ++a) flat[s * size + a] = static_cast<Element>(a);
  return Act::unchecked(monoid, size, std::move(flat));
}

// --- homomorphisms -----------------------------------------------------------

bool ActHom::is_injective() const {
  std::vector<char> hit(target.size(), 0);
  for (Element y : map) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

ActHom validate_hom(Act source, Act target, std::vector<Element> map) {
  require_same_monoid(source, target);
  if (map.size() != source.size())
    throw Error(ErrorCode::DimensionMismatch, "map length differs from source size");
  for (Element y : map)
    if (y >= target.size()) throw Error(ErrorCode::OutOfRangeEntry, "map value out of range");
  for (Element s = 0; s < source.monoid().order(); ++s)
    for (Element a = 0; a < source.size(); ++a)
      if (map[source.act(s, a)] != target.act(s, map[a])) {
        std::ostringstream os;
        os << "map(" << s << "·" << a << ") != " << s << "·map(" << a << ")";
        throw Error(ErrorCode::NotEquivariant, os.str());
      }
  return ActHom{std::move(source), std::move(target), std::move(map)};
}

ActHom identity_hom(const Act& act) {
  std::vector<Element> map(act.size());
  for (Element a = 0; a < map.size(); ++a) map[a] = a;
  return ActHom{act, act, std::move(map)};
}

ActHom compose(const ActHom& outer, const ActHom& inner) {
  if (inner.target.size() != outer.source.size())
    throw Error(ErrorCode::DimensionMismatch, "homomorphisms do not compose");
  std::vector<Element> map(inner.map.size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = outer.map[inner.map[a]];
  return ActHom{inner.source, outer.target, std::move(map)};
}

// --- structure ---------------------------------------------------------------

std::vector<Element> fixed_points(const Act& act) {
  std::vector<Element> out;
  for (Element a = 0; a < act.size(); ++a) {
    bool fixed = true;
    for (Element s = 0; s < act.monoid().order() && fixed; ++s) fixed = act.act(s, a) == a;
    if (fixed) out.push_back(a);
  }
  return out;
}

std::vector<Element> act_generators(const Act& act) {
  std::vector<char> covered(act.size(), 0);
  std::vector<Element> gens;
  for (Element a = 0; a < act.size(); ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    for (Element s = 0; s < act.monoid().order(); ++s) covered[act.act(s, a)] = 1;
  }
  return gens;
}

Subgroup stabilizer(const Act& act, Element a) {
  auto g = require_group(act);
  std::vector<Element> members;
  for (Element s = 0; s < g->order(); ++s)
    if (act.act(s, a) == a) members.push_back(s);
  return Subgroup(g, std::move(members));
}

OrbitDecomposition orbit_decomposition(const Act& act, const ConjugacyClassTable& classes) {
  auto g = require_group(act);
  OrbitDecomposition out;
  std::vector<char> seen(act.size(), 0);
  for (Element a = 0; a < act.size(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> elements;
    for (Element s = 0; s < g->order(); ++s) {
      Element b = act.act(s, a);
      if (!seen[b]) {
        seen[b] = 1;
        elements.push_back(b);
      }
    }
    std::sort(elements.begin(), elements.end());
    Subgroup stab = stabilizer(act, a);
    const std::size_t cls = classes.class_index(stab);
    if (stab.is_whole()) ++out.zero_orbits;
    out.orbits.push_back(Orbit{std::move(elements), a, std::move(stab), cls});
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const Act& act) {
  return orbit_decomposition(act, subgroup_conjugacy_classes(require_group(act)));
}

Element coset_index(const Subgroup& h, Element s) {
  // Coset sH is labelled by its smallest element; labels are ranked in ascending order.
  const auto& g = h.parent();
  auto label = [&](Element x) {
    Element m = x;
    for (Element y : h.members()) m = std::min(m, g.mul(x, y));
    return m;
  };
  const Element target = label(s);
  Element rank = 0;
  for (Element x = 0; x < target; ++x)
    if (label(x) == x) ++rank;
  return rank;
}

Act coset_act(const Subgroup& h) {
  const auto& g = h.parent();
  const std::size_t n = g.order();
  std::vector<Element> label(n);
  for (Element x = 0; x < n; ++x) {
    Element m = x;
    for (Element y : h.members()) m = std::min(m, g.mul(x, y));
    label[x] = m;
  }
  std::vector<Element> reps;
  std::vector<Element> rank(n, kUnset);
  for (Element x = 0; x < n; ++x)
    if (label[x] == x) {
      rank[x] = static_cast<Element>(reps.size());
      reps.push_back(x);
    }
  const std::size_t size = reps.size();
  std::vector<Element> flat(n * size);
  for (Element s = 0; s < n; ++s)
    for (std::size_t c = 0; c < size; ++c) flat[s * size + c] = rank[label[g.mul(s, reps[c])]];
  return Act::unchecked(h.parent_ptr(), size, std::move(flat));
}

Coproduct coproduct(std::span<const Act> parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyList, "coproduct of no acts");
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& p : parts) {
    require_same_monoid(parts.front(), p);
    offsets.push_back(total);
    total += p.size();
  }
  const auto& monoid = parts.front().monoid_ptr();
  std::vector<Element> flat(monoid->order() * total);
  for (Element s = 0; s < monoid->order(); ++s)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (Element a = 0; a < parts[i].size(); ++a)
        flat[s * total + offsets[i] + a] = static_cast<Element>(offsets[i] + parts[i].act(s, a));
  return Coproduct{Act::unchecked(monoid, total, std::move(flat)), std::move(offsets)};
}

Element power_index(std::size_t base, std::span<const Element> tuple) {
  std::size_t idx = 0;
  for (Element x : tuple) idx = idx * base + x;
  return static_cast<Element>(idx);
}

Act power_act(const Act& act, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::EmptyList, "power exponent must be positive");
  auto size = bounded_pow(act.size(), n, cap);
  if (!size) throw Error(ErrorCode::SizeBoundExceeded, "power act exceeds size cap");
  const std::size_t m = act.size();
  const std::size_t order = act.monoid().order();
  std::vector<Element> flat(order * *size);
  for (Element s = 0; s < order; ++s) {
    for (std::size_t idx = 0; idx < *size; ++idx) {
      std::size_t rest = idx, out = 0, scale = 1;
      for (std::size_t c = 0; c < n; ++c) {
        out += act.act(s, static_cast<Element>(rest % m)) * scale;
        rest /= m;
        scale *= m;
      }
      flat[s * *size + idx] = static_cast<Element>(out);
    }
  }
  return Act::unchecked(act.monoid_ptr(), *size, std::move(flat));
}

Act copower_act(const Act& act, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorCode::EmptyList, "copower count must be positive");
  if (act.size() > cap / n) throw Error(ErrorCode::SizeBoundExceeded, "copower exceeds size cap");
  std::vector<Act> parts(n, act);
  return coproduct(parts).act;
}

// --- hom search --------------------------------------------------------------

namespace {

/// Backtracking over generator images. `visit` returns false to stop.
template <class Visit>
void search_homs(const Act& source, const Act& target, bool injective_only, Visit&& visit) {
  const auto gens = act_generators(source);
  const std::size_t order = source.monoid().order();
  std::vector<Element> map(source.size(), kUnset);
  std::vector<std::size_t> used(target.size(), 0);
  std::vector<Element> assigned;
  bool stop = false;

  auto recurse = [&](auto& self, std::size_t gi) -> void {
    if (gi == gens.size()) {
      if (!visit(map)) stop = true;
      return;
    }
    const Element g = gens[gi];
    for (Element b = 0; b < target.size() && !stop; ++b) {
      const std::size_t mark = assigned.size();
      bool ok = true;
      for (Element s = 0; s < order && ok; ++s) {
        const Element x = source.act(s, g), y = target.act(s, b);
        if (map[x] == kUnset) {
          if (injective_only && used[y] != 0) {
            ok = false;
            break;
          }
          map[x] = y;
          ++used[y];
          assigned.push_back(x);
        } else if (map[x] != y) {
          ok = false;
        }
      }
      if (ok) self(self, gi + 1);
      while (assigned.size() > mark) {
        --used[map[assigned.back()]];
        map[assigned.back()] = kUnset;
        assigned.pop_back();
      }
    }
  };
  recurse(recurse, 0);
}

void check_search_bound(const Act& source, const Act& target, std::size_t cap) {
  if (!bounded_pow(target.size(), act_generators(source).size(), cap))
    throw Error(ErrorCode::SizeBoundExceeded, "hom search space exceeds size cap");
}

}  // namespace

std::vector<ActHom> enumerate_homs(const Act& source, const Act& target, std::size_t cap) {
  require_same_monoid(source, target);
  check_search_bound(source, target, cap);
  std::vector<std::vector<Element>> maps;
  search_homs(source, target, false, [&](const std::vector<Element>& m) {
    maps.push_back(m);
    return true;
  });
  std::sort(maps.begin(), maps.end());
  std::vector<ActHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back(ActHom{source, target, std::move(m)});
  return out;
}

std::optional<ActHom> exists_embedding(const Act& source, const Act& target, std::size_t cap) {
  require_same_monoid(source, target);
  if (source.size() > target.size()) return std::nullopt;
  check_search_bound(source, target, cap);
  std::optional<ActHom> found;
  search_homs(source, target, true, [&](const std::vector<Element>& m) {
    found = ActHom{source, target, m};
    return false;
  });
  return found;
}

std::vector<std::size_t> orbit_type(const Act& act, const ConjugacyClassTable& classes) {
  std::vector<std::size_t> type;
  for (const auto& o : orbit_decomposition(act, classes).orbits) type.push_back(o.class_id);
  std::sort(type.begin(), type.end());
  return type;
}

bool are_isomorphic(const Act& a, const Act& b) {
  auto g = require_group(a);
  require_group(b);
  require_same_monoid(a, b);
  if (a.size() != b.size()) return false;
  const auto classes = subgroup_conjugacy_classes(g);
  return orbit_type(a, classes) == orbit_type(b, classes);
}

}  // namespace actgeo
