#pragma once

// Shared fixtures and brute-force oracles. The oracles only use the raw tables of
// monoids and acts, never the library's search routines.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "actgeo/acts.hpp"
#include "actgeo/congruence.hpp"
#include "actgeo/equivalence.hpp"
#include "actgeo/kernels.hpp"

namespace fixture {

using actgeo::Element;

using Perm = std::array<Element, 3>;

// 0=e, 1=(123), 2=(132), 3=(12), 4=(13), 5=(23); products compose left to right,
// (s·t)(x) = t(s(x)).
inline const std::vector<Perm>& s3_perms() {
  static const std::vector<Perm> perms{
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  return perms;
}

inline std::vector<std::vector<Element>> s3_table() {
  const auto& p = s3_perms();
  std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
  for (Element s = 0; s < 6; ++s)
    for (Element t = 0; t < 6; ++t) {
      Perm c{p[t][p[s][0]], p[t][p[s][1]], p[t][p[s][2]]};
      table[s][t] = static_cast<Element>(std::find(p.begin(), p.end(), c) - p.begin());
    }
  return table;
}

inline actgeo::GroupPtr s3() {
  static const auto group = actgeo::as_group(*actgeo::validate_monoid(s3_table()));
  return group;
}

inline actgeo::GroupPtr z(std::size_t n) { return actgeo::cyclic_group(n); }

inline actgeo::Act coset(const actgeo::GroupPtr& g, std::vector<Element> members) {
  return actgeo::coset_act(actgeo::Subgroup(g, std::move(members)));
}

inline actgeo::Act sum(std::vector<actgeo::Act> parts) {
  return actgeo::coproduct(parts).act;
}

}  // namespace fixture

namespace oracle {

using actgeo::Act;
using actgeo::Element;
using Labels = std::vector<Element>;

// First-occurrence relabelling.
inline Labels canon(const Labels& labels) {
  std::map<Element, Element> seen;
  Labels out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = seen.try_emplace(labels[i], static_cast<Element>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

// Every set partition of n points as a restricted growth string.
inline std::vector<Labels> partitions(std::size_t n) {
  std::vector<Labels> out;
  Labels cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Element max) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (Element b = 0; b <= max + 1; ++b) {
      cur[i] = b;
      self(self, i + 1, std::max(max, b));
    }
  };
  if (n == 0) return {Labels{}};
  cur[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline bool compatible(const Act& act, const Labels& labels) {
  const auto n = act.size();
  for (Element s = 0; s < act.monoid().order(); ++s)
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (labels[a] == labels[b] && labels[act.act(s, a)] != labels[act.act(s, b)]) return false;
  return true;
}

inline std::vector<Labels> congruences(const Act& act) {
  std::vector<Labels> out;
  for (auto& p : partitions(act.size()))
    if (compatible(act, p)) out.push_back(std::move(p));
  return out;
}

// a ⊆ b as sets of pairs.
inline bool refines(const Labels& a, const Labels& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j] && b[i] != b[j]) return false;
  return true;
}

inline Labels meet(const Labels& a, const Labels& b) {
  std::map<std::pair<Element, Element>, Element> ids;
  Labels out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = ids.try_emplace({a[i], b[i]}, static_cast<Element>(ids.size())).first->second;
  return canon(out);
}

inline bool equivariant(const Act& src, const Act& tgt, const Labels& map) {
  for (Element s = 0; s < src.monoid().order(); ++s)
    for (Element a = 0; a < src.size(); ++a)
      if (map[src.act(s, a)] != tgt.act(s, map[a])) return false;
  return true;
}

// All equivariant maps, by exhausting tgt^src.
inline std::vector<Labels> homs(const Act& src, const Act& tgt) {
  std::vector<Labels> out;
  Labels map(src.size(), 0);
  while (true) {
    if (equivariant(src, tgt, map)) out.push_back(map);
    std::size_t i = src.size();
    while (i > 0 && ++map[i - 1] == tgt.size()) map[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::vector<std::vector<Element>> subgroups(const actgeo::FiniteMonoid& g) {
  std::vector<std::vector<Element>> out;
  const auto n = g.order();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1u)) continue;
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a)
      for (Element b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<Element> members;
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1u) members.push_back(a);
    out.push_back(members);
  }
  return out;
}

// Point of hom(F_k, G) given by generator images; (i, s) ↦ s·images[i].
inline Labels point_map(std::size_t order, const Act& target, const Labels& images) {
  Labels map(images.size() * order);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (Element s = 0; s < order; ++s) map[i * order + s] = target.act(s, images[i]);
  return map;
}

inline std::vector<Labels> all_points(const Act& target, std::size_t k) {
  std::vector<Labels> out;
  Labels images(k, 0);
  while (true) {
    out.push_back(images);
    std::size_t i = k;
    while (i > 0 && ++images[i - 1] == target.size()) images[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::uint64_t encode(const Labels& images, std::size_t base) {
  std::uint64_t id = 0;
  for (auto x : images) id = id * base + x;
  return id;
}

// T' over the whole affine space; returns point ids in increasing order.
inline std::vector<std::uint64_t> solutions(const Labels& t, const Act& target, std::size_t k) {
  const auto order = target.monoid().order();
  std::vector<std::uint64_t> out;
  for (const auto& images : all_points(target, k)) {
    const auto map = point_map(order, target, images);
    bool ok = true;
    for (std::size_t a = 0; a < t.size() && ok; ++a)
      for (std::size_t b = a + 1; b < t.size() && ok; ++b)
        if (t[a] == t[b] && map[a] != map[b]) ok = false;
    if (ok) out.push_back(encode(images, target.size()));
  }
  return out;
}

// A' : intersection of kernels, universal for the empty set.
inline Labels coclosure(const std::vector<std::uint64_t>& ids, const Act& target, std::size_t k) {
  const auto order = target.monoid().order();
  Labels acc(k * order, 0);
  for (auto id : ids) {
    Labels images(k);
    for (std::size_t i = k; i-- > 0;) {
      images[i] = static_cast<Element>(id % target.size());
      id /= target.size();
    }
    acc = meet(acc, canon(point_map(order, target, images)));
  }
  return canon(acc);
}

inline Labels closure(const Labels& t, const Act& target, std::size_t k) {
  return coclosure(solutions(t, target, k), target, k);
}

// Act with its carrier relabelled by a permutation.
inline Act relabel(const Act& act, const Labels& perm) {
  std::vector<std::vector<Element>> rows(act.monoid().order(), Labels(act.size()));
  for (Element s = 0; s < act.monoid().order(); ++s)
    for (Element a = 0; a < act.size(); ++a) rows[s][perm[a]] = perm[act.act(s, a)];
  return actgeo::validate_act(act.monoid_ptr(), rows);
}

// Random act over a group: a coproduct of coset acts of random subgroups, carrier shuffled.
inline Act random_act(const actgeo::GroupPtr& g, std::mt19937& rng, std::size_t max_orbits,
                      bool allow_zero = true) {
  const auto subs = subgroups(*g);
  std::vector<Act> parts;
  std::uniform_int_distribution<std::size_t> count(1, max_orbits);
  std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
  const auto n = count(rng);
  while (parts.size() < n) {
    const auto& h = subs[pick(rng)];
    if (!allow_zero && h.size() == g->order()) continue;
    parts.push_back(actgeo::coset_act(actgeo::Subgroup(g, h)));
  }
  const Act act = actgeo::coproduct(parts).act;
  Labels perm(act.size());
  for (Element i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(act, perm);
}

}  // namespace oracle
