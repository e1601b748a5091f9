#include "actgeo/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeEntry: return "OutOfRangeEntry";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IdentityLawViolated: return "IdentityLawViolated";
    case ErrorCode::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorCode::MonoidNotGroup: return "MonoidNotGroup";
    case ErrorCode::MixedMonoids: return "MixedMonoids";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::ArityBoundExceeded: return "ArityBoundExceeded";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

MonoidPtr validate_monoid(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::NotSquare, "empty table");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    if (rows[s].size() != n) {
      std::ostringstream os;
      os << "row " << s << " has " << rows[s].size() << " entries, expected " << n;
      throw Error(ErrorCode::NotSquare, os.str());
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (rows[s][t] >= n) {
        std::ostringstream os;
        os << "table[" << s << "][" << t << "] = " << rows[s][t] << " is not below " << n;
        throw Error(ErrorCode::OutOfRangeEntry, os.str());
      }
      table.push_back(rows[s][t]);
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "(" << a << "·" << b << ")·" << c << " != " << a << "·(" << b << "·" << c << ")";
          throw Error(ErrorCode::NotAssociative, os.str());
        }

  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) return MonoidPtr(new FiniteMonoid(n, std::move(table), e));
  }
  throw Error(ErrorCode::NoIdentity, "no element is a two-sided identity");
}

GroupPtr as_group(const FiniteMonoid& monoid) {
  const std::size_t n = monoid.order();
  std::vector<Element> inverse(n);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (monoid.mul(a, b) == monoid.identity() && monoid.mul(b, a) == monoid.identity()) {
        inverse[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
  }
  return GroupPtr(new FiniteGroup(monoid, std::move(inverse)));
}

GroupPtr group_view(const MonoidPtr& monoid) {
  return std::dynamic_pointer_cast<const FiniteGroup>(monoid);
}

GroupPtr cyclic_group(std::size_t n) {
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rows[a][b] = static_cast<Element>((a + b) % n);
  return as_group(*validate_monoid(rows));
}

GroupPtr trivial_group() { return cyclic_group(1); }

// --- subgroups ---------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto& g = *parent_;
  for (Element m : members)
    if (m >= g.order())
      throw Error(ErrorCode::OutOfRangeEntry, "subgroup member " + std::to_string(m) + " out of range");
  members_ = std::move(members);
  if (!contains(g.identity())) throw Error(ErrorCode::NotASubgroup, "identity missing");
  for (Element a : members_) {
    if (!contains(g.inverse(a)))
      throw Error(ErrorCode::NotASubgroup, "not closed under inverse at " + std::to_string(a));
    for (Element b : members_)
      if (!contains(g.mul(a, b)))
        throw Error(ErrorCode::NotASubgroup,
                    "not closed: " + std::to_string(a) + "·" + std::to_string(b));
  }
}

Subgroup Subgroup::trivial(const GroupPtr& parent) {
  return Subgroup(Unchecked{}, parent, {parent->identity()});
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<Element> all(parent->order());
  for (Element a = 0; a < all.size(); ++a) all[a] = a;
  return Subgroup(Unchecked{}, parent, std::move(all));
}

bool Subgroup::contains(Element a) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::strong_ordering Subgroup::operator<=>(const Subgroup& other) const noexcept {
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return members_ <=> other.members_;
}

Subgroup generated_subgroup(const GroupPtr& group, std::span<const Element> generators) {
  const auto& g = *group;
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  // In a finite group the multiplicative closure already contains inverses.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element x : generators) {
      Element y = g.mul(members[i], x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(Subgroup::Unchecked{}, group, std::move(members));
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group) {
  const auto& g = *group;
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> frontier;

  auto add = [&](Subgroup h) {
    std::vector<Element> key(h.members().begin(), h.members().end());
    if (seen.insert(std::move(key)).second) {
      found.push_back(std::move(h));
      frontier.push_back(found.size() - 1);
    }
  };
  add(Subgroup::trivial(group));

  // Every subgroup is reached by adjoining one element at a time to a smaller one.
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    next.swap(frontier);
    for (std::size_t idx : next) {
      std::vector<Element> base(found[idx].members().begin(), found[idx].members().end());
      for (Element x = 0; x < g.order(); ++x) {
        if (found[idx].contains(x)) continue;
        auto gens = base;
        gens.push_back(x);
        add(generated_subgroup(group, gens));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Subgroup conjugate_subgroup(const Subgroup& h, Element a) {
  const auto& g = h.parent();
  std::vector<Element> members;
  members.reserve(h.order());
  for (Element x : h.members()) members.push_back(g.conjugate(x, a));
  std::sort(members.begin(), members.end());
  return Subgroup(Subgroup::Unchecked{}, h.parent_ptr(), std::move(members));
}

std::optional<Element> are_conjugate(const Subgroup& h1, const Subgroup& h2) {
  if (h1.order() != h2.order()) return std::nullopt;
  for (Element a = 0; a < h1.parent().order(); ++a)
    if (conjugate_subgroup(h1, a) == h2) return a;
  return std::nullopt;
}

std::optional<Element> exists_conjugate_inclusion(const Subgroup& h1, const Subgroup& h2) {
  if (h2.order() % h1.order() != 0) return std::nullopt;
  for (Element a = 0; a < h1.parent().order(); ++a)
    if (conjugate_subgroup(h1, a).is_subset_of(h2)) return a;
  return std::nullopt;
}

bool is_normal(const Subgroup& h) {
  for (Element a = 0; a < h.parent().order(); ++a)
    if (conjugate_subgroup(h, a) != h) return false;
  return true;
}

std::size_t ConjugacyClassTable::subgroup_index(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it == subgroups.end() || *it != h)
    throw Error(ErrorCode::NotASubgroup, "subgroup not found in class table");
  return static_cast<std::size_t>(it - subgroups.begin());
}

ConjugacyClassTable subgroup_conjugacy_classes(const GroupPtr& group) {
  ConjugacyClassTable table;
  table.group = group;
  table.subgroups = enumerate_subgroups(group);
  const std::size_t n = table.subgroups.size();
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  table.class_of.assign(n, unassigned);

  for (std::size_t i = 0; i < n; ++i) {
    if (table.class_of[i] != unassigned) continue;
    const std::size_t cls = table.classes.size();
    table.classes.emplace_back();
    for (Element a = 0; a < group->order(); ++a) {
      std::size_t j = table.subgroup_index(conjugate_subgroup(table.subgroups[i], a));
      if (table.class_of[j] == unassigned) table.class_of[j] = cls;
    }
    for (std::size_t j = i; j < n; ++j)
      if (table.class_of[j] == cls) table.classes[cls].push_back(j);
    table.normal.push_back(table.classes[cls].size() == 1);
  }
  return table;
}

std::string class_label(std::size_t cls) { return "c" + std::to_string(cls + 1); }

std::string subgroup_label(const ConjugacyClassTable& table, std::size_t subgroup) {
  const std::size_t cls = table.class_of[subgroup];
  const auto& members = table.classes[cls];
  const auto pos = std::find(members.begin(), members.end(), subgroup) - members.begin();
  std::string label = class_label(cls);
  // a..z, then aa, ab, ... for very large classes
  if (pos >= 26) label += static_cast<char>('a' + pos / 26 - 1);
  label += static_cast<char>('a' + pos % 26);
  return label;
}

}  // namespace actgeo
