#include "actgeo/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "actgeo/error.hpp"

namespace actgeo {

namespace {

using io::Json;

struct OracleSplit {
  std::size_t arity;
  Congruence congruence;
};

/// Closed lattices keyed by (arity, action table); acts built the same way share a table.
class Oracle {
public:
  Oracle(GroupPtr group, std::size_t max_arity, std::size_t cap)
      : group_(std::move(group)), max_arity_(max_arity), cap_(cap) {}

  const std::vector<Congruence>& lattice(const Act& act, std::size_t k) {
    auto key = std::make_pair(k, act.table());
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(std::move(key), closed_lattice(act, k, cap_).members).first;
    return it->second;
  }

  /// First arity ≤ max_arity at which the closed lattices differ.
  std::optional<OracleSplit> separate(const Act& a, const Act& b) {
    for (std::size_t k = 1; k <= max_arity_; ++k) {
      const auto& la = lattice(a, k);
      const auto& lb = lattice(b, k);
      std::vector<Congruence> diff;
      std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                    std::back_inserter(diff), lattice_order);
      if (!diff.empty()) return OracleSplit{k, diff.front()};
    }
    return std::nullopt;
  }

  std::size_t max_arity() const { return max_arity_; }
  std::size_t cap() const { return cap_; }

private:
  GroupPtr group_;
  std::size_t max_arity_;
  std::size_t cap_;
  std::map<std::pair<std::size_t, std::vector<Element>>, std::vector<Congruence>> cache_;
};

struct Context {
  GroupPtr group;
  ConjugacyClassTable classes;
  Oracle oracle;

  std::size_t order() const { return group->order(); }

  Act orbit(std::size_t cls) const { return coset_act(classes.representative(cls)); }
  Act zeros(std::size_t n) const { return trivial_act(group, n); }

  /// Proper-class orbits, one per class.
  std::vector<Act> orbits() const {
    std::vector<Act> out;
    for (std::size_t c = 0; c + 1 < classes.size(); ++c) out.push_back(orbit(c));
    return out;
  }

  std::vector<Act> acts_up_to(std::size_t size) const {
    std::vector<Act> out;
    for (auto& a : enumerate_acts(classes, size)) out.push_back(std::move(a.act));
    return out;
  }

  std::vector<Act> zero_free_up_to(std::size_t size) const {
    std::vector<Act> out;
    for (auto& a : enumerate_acts(classes, size))
      if (std::find(a.orbit_classes.begin(), a.orbit_classes.end(), classes.whole_class()) ==
          a.orbit_classes.end())
        out.push_back(std::move(a.act));
    return out;
  }

  /// Orbit types joined with '+', zero orbits written as z.
  std::string describe(const std::optional<Act>& act) const {
    if (!act) return "empty";
    std::string out;
    for (auto c : orbit_type(*act, classes)) {
      if (!out.empty()) out += " + ";
      out += c == classes.whole_class() ? "z" : "coset(" + class_label(c) + ")";
    }
    return out;
  }
};

/// Coproduct of the present parts; `std::nullopt` stands for the empty act.
Act sum(std::initializer_list<std::optional<Act>> parts) {
  std::vector<Act> present;
  for (const auto& p : parts)
    if (p) present.push_back(*p);
  return coproduct(present).act;
}

class Recorder {
public:
  Recorder(std::string name, std::string anchor, std::string statement, Json parameters = {}) {
    result_.name = std::move(name);
    result_.anchor = std::move(anchor);
    result_.statement = std::move(statement);
    if (!parameters.is_null()) result_.parameters = std::move(parameters);
  }

  /// Records the first failure only; later ones would repeat the same defect.
  void fail(Json witness) {
    ++failures_;
    if (result_.status == CheckStatus::Fail) return;
    result_.status = CheckStatus::Fail;
    result_.witness = std::move(witness);
  }
  void expect(bool ok, const std::function<Json()>& witness) {
    ++cases_;
    if (!ok) fail(witness());
  }
  void skip(std::string note) {
    result_.status = CheckStatus::Skip;
    result_.note = std::move(note);
  }
  void note(std::string note) { result_.note = std::move(note); }

  CheckResult finish() {
    if (result_.status != CheckStatus::Skip) {
      result_.parameters["cases"] = cases_;
      if (failures_ > 0) result_.parameters["failures"] = failures_;
    }
    return std::move(result_);
  }

private:
  CheckResult result_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
};

Json separation_json(const Context& ctx, const Act& a, const Act& b,
                     const std::optional<OracleSplit>& sep) {
  Json out{{"first", ctx.describe(a)}, {"second", ctx.describe(b)}};
  if (sep) {
    out["arity"] = sep->arity;
    out["congruence"] = io::to_json(sep->congruence);
  }
  return out;
}

/// Expects the two acts to have equal closed lattices at every checked arity.
void expect_equivalent(Recorder& rec, Context& ctx, const Act& a, const Act& b) {
  auto sep = ctx.oracle.separate(a, b);
  rec.expect(!sep, [&] { return separation_json(ctx, a, b, sep); });
}

void expect_separated(Recorder& rec, Context& ctx, const Act& a, const Act& b) {
  auto sep = ctx.oracle.separate(a, b);
  rec.expect(sep.has_value(), [&] { return separation_json(ctx, a, b, sep); });
}

Json arity_params(const Context& ctx) { return Json{{"max_arity", ctx.oracle.max_arity()}}; }

std::optional<ActHom> embeds_in_power(const Act& a, const Act& b, std::size_t max_exponent,
                                      std::size_t cap) {
  for (std::size_t i = 1; i <= max_exponent; ++i)
    if (auto e = exists_embedding(a, power_act(b, i, cap), cap)) return e;
  return std::nullopt;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// --- suites --------------------------------------------------------------------

std::vector<CheckResult> check_set_stability(Context& ctx) {
  std::vector<CheckResult> out;
  const std::size_t cap = ctx.oracle.cap();
  {
    Recorder rec("single-point-target-stable", "prop2.4",
                 "a one-point trivial act is geometrically stable", Json{{"max_arity", 3}});
    auto report = is_geometrically_stable(ctx.zeros(1), 3, cap);
    rec.expect(report.stable, [&] { return io::stability_json(report); });
    out.push_back(rec.finish());
  }
  {
    Recorder rec("two-point-target-unstable", "prop2.4",
                 "for T1 = (x1,x2) and T2 = (x2,x3) on F_3 with a two-point trivial target, "
                 "(T1 ∩ T2)' \\ (T1' ∪ T2') is exactly the points with x1 = x3 ≠ x2",
                 Json{{"arity", 3}});
    FreeAct free(ctx.group, 3);
    const Act target = ctx.zeros(2);
    const Congruence t1 = congruence_generated(
        free.act(), Relation(free.size(), {{free.generator(0), free.generator(1)}}));
    const Congruence t2 = congruence_generated(
        free.act(), Relation(free.size(), {{free.generator(1), free.generator(2)}}));
    const PointSet gap = stability_gap(free, t1, t2, target, cap);
    std::vector<PointId> expected;
    for (Element g1 = 0; g1 < 2; ++g1)
      for (Element g2 = 0; g2 < 2; ++g2)
        if (g1 != g2) {
          const std::vector<Element> images{g1, g2, g1};
          expected.push_back(kernels::encode_point(images, 2));
        }
    std::sort(expected.begin(), expected.end());
    rec.expect(gap.ids() == expected, [&] {
      Json points = Json::array();
      for (auto id : gap.ids()) points.push_back(gap.images(id));
      return Json{{"t1", io::to_json(t1)}, {"t2", io::to_json(t2)}, {"gap", points}};
    });
    auto report = is_geometrically_stable(target, 3, cap);
    rec.expect(!report.stable, [&] { return io::stability_json(report); });
    out.push_back(rec.finish());
  }
  return out;
}

std::vector<CheckResult> check_set_classes(Context& ctx) {
  Recorder rec("two-classes-of-sets", "thm3.2",
               "over the one-element group the acts of size at most 4 fall into exactly two "
               "classes, singletons and the rest",
               Json{{"max_size", 4}, {"max_arity", ctx.oracle.max_arity()}});
  if (ctx.order() != 1) {
    rec.skip("applies to the one-element group only");
    return {rec.finish()};
  }
  auto result = classify(ctx.group, 4, ctx.oracle.max_arity(), ctx.oracle.cap());
  rec.expect(result.buckets.size() == 2, [&] { return io::classification_json(result, ctx.classes); });
  rec.expect(result.coherent() && result.unknown_pairs.empty(),
             [&] { return io::classification_json(result, ctx.classes); });
  return {rec.finish()};
}

std::vector<CheckResult> check_monomorphism_closure(Context& ctx) {
  Recorder rec("embedding-shrinks-closures", "lemma3.3",
               "if G1 embeds in G2 then T''(G1) contains T''(G2) for every congruence T on F_k",
               arity_params(ctx));
  const std::size_t size_bound = std::min<std::size_t>(ctx.order() + 1, 4);
  const auto pool = ctx.acts_up_to(size_bound);
  const std::size_t max_k = std::min<std::size_t>(ctx.oracle.max_arity(), 2);
  const std::size_t cap = ctx.oracle.cap();
  for (std::size_t k = 1; k <= max_k; ++k) {
    FreeAct free(ctx.group, k);
    const auto congruences = enumerate_congruences(free.act());
    std::vector<std::vector<Congruence>> closures(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (const auto& t : congruences)
        closures[i].push_back(congruence_closure(free, t, pool[i], cap));
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (i == j || !exists_embedding(pool[i], pool[j], cap)) continue;
        for (std::size_t t = 0; t < congruences.size(); ++t)
          rec.expect(closures[j][t].refines(closures[i][t]), [&] {
            return Json{{"small", ctx.describe(pool[i])},
                        {"large", ctx.describe(pool[j])},
                        {"arity", k},
                        {"congruence", io::to_json(congruences[t])}};
          });
      }
  }
  return {rec.finish()};
}

std::vector<CheckResult> check_powers(Context& ctx) {
  Recorder rec("act-equivalent-to-its-square", "cor3.4", "G and G^2 have equal closed lattices",
               arity_params(ctx));
  for (const auto& a : ctx.acts_up_to(3)) expect_equivalent(rec, ctx, a, power_act(a, 2));
  return {rec.finish()};
}

std::vector<CheckResult> check_mutual_embeddings(Context& ctx) {
  Recorder rec("mutual-power-embeddings", "cor3.5",
               "G1 ↣ G2^I and G2 ↣ G1^J (I, J ≤ 2) imply equal closed lattices", arity_params(ctx));
  const auto pool = ctx.acts_up_to(3);
  const std::size_t cap = ctx.oracle.cap();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!embeds_in_power(pool[i], pool[j], 2, cap) || !embeds_in_power(pool[j], pool[i], 2, cap))
        continue;
      ++pairs;
      expect_equivalent(rec, ctx, pool[i], pool[j]);
    }
  rec.note(std::to_string(pairs) + " pairs with mutual embeddings");
  return {rec.finish()};
}

std::vector<CheckResult> check_trivial_acts(Context& ctx) {
  Recorder rec("trivial-acts-equivalent", "cor3.8",
               "trivial acts with 2, 3 and 4 points are pairwise equivalent", arity_params(ctx));
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = m + 1; n <= 4; ++n) {
      const Act a = ctx.zeros(m), b = ctx.zeros(n);
      expect_equivalent(rec, ctx, a, b);
      auto v = decide(a, b, ctx.oracle.max_arity(), ctx.oracle.cap());
      rec.expect(v.kind == VerdictKind::Equivalent,
                 [&] { return io::verdict_json(v, ctx.classes); });
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_cyclic_containment(Context& ctx) {
  Recorder rec("equivalent-cosets-mutually-contained", "prop3.9",
               "coset acts with equal closed lattices have mutually conjugate-contained stabilizers",
               arity_params(ctx));
  const auto& subs = ctx.classes.subgroups;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i; j < subs.size(); ++j) {
      if (ctx.oracle.separate(coset_act(subs[i]), coset_act(subs[j]))) continue;
      const bool mutual = exists_conjugate_inclusion(subs[i], subs[j]).has_value() &&
                          exists_conjugate_inclusion(subs[j], subs[i]).has_value();
      rec.expect(mutual, [&] {
        return Json{{"first", subgroup_label(ctx.classes, i)},
                    {"second", subgroup_label(ctx.classes, j)}};
      });
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_strict_inclusion(Context& ctx) {
  Recorder rec("strict-subgroup-separated", "prop3.10",
               "for H ⊂ G the kernel of S → S/H or of S → S/G is closed for exactly one of "
               "S/H and S/G",
               Json{{"arity", 1}});
  const auto& subs = ctx.classes.subgroups;
  FreeAct free(ctx.group, 1);
  const std::size_t cap = ctx.oracle.cap();
  auto projection_kernel = [&](const Subgroup& h) {
    std::vector<Element> image(free.size());
    for (Element s = 0; s < free.size(); ++s) image[s] = coset_index(h, s);
    return Congruence::from_labels(image);
  };
  for (std::size_t h = 0; h < subs.size(); ++h)
    for (std::size_t g = 0; g < subs.size(); ++g) {
      if (h == g || !subs[h].is_subset_of(subs[g])) continue;
      const Act small = coset_act(subs[h]), large = coset_act(subs[g]);
      auto separates = [&](const Congruence& t) {
        return is_closed_congruence(free, t, small, cap) !=
               is_closed_congruence(free, t, large, cap);
      };
      // The kernel onto S/H is also closed for S/G when H is the core of G, and the
      // kernel onto S/G is universal when G = S; one of the two always separates.
      const Congruence th = projection_kernel(subs[h]), tg = projection_kernel(subs[g]);
      rec.expect(separates(th) || separates(tg), [&] {
        return Json{{"h", subgroup_label(ctx.classes, h)},
                    {"g", subgroup_label(ctx.classes, g)},
                    {"kernel_h", io::to_json(th)},
                    {"kernel_g", io::to_json(tg)}};
      });
      expect_separated(rec, ctx, small, large);
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_cyclic_classification(Context& ctx) {
  Recorder rec("coset-acts-equivalent-iff-conjugate", "thm3.12",
               "decide(S/H1, S/H2) is Equivalent exactly when H1 and H2 are conjugate, and the "
               "oracle agrees",
               arity_params(ctx));
  const auto& subs = ctx.classes.subgroups;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i; j < subs.size(); ++j) {
      const Act a = coset_act(subs[i]), b = coset_act(subs[j]);
      const bool conjugate = are_conjugate(subs[i], subs[j]).has_value();
      const auto v = decide(a, b, ctx.oracle.max_arity(), ctx.oracle.cap());
      const auto sep = ctx.oracle.separate(a, b);
      auto witness = [&] {
        return Json{{"first", subgroup_label(ctx.classes, i)},
                    {"second", subgroup_label(ctx.classes, j)},
                    {"conjugate", conjugate},
                    {"verdict", io::verdict_json(v, ctx.classes)},
                    {"oracle", separation_json(ctx, a, b, sep)}};
      };
      rec.expect((v.kind == VerdictKind::Equivalent) == conjugate, witness);
      if (conjugate)
        rec.expect(!sep, witness);
      else
        rec.expect(sep || v.reason == Separation::CyclicNonConjugate, witness);
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_normal_cosets(Context& ctx) {
  Recorder rec("normal-coset-acts-distinct", "cor3.13",
               "coset acts of distinct normal subgroups are never equivalent", arity_params(ctx));
  const auto& subs = ctx.classes.subgroups;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i; j < subs.size(); ++j) {
      if (!ctx.classes.normal[ctx.classes.class_of[i]] ||
          !ctx.classes.normal[ctx.classes.class_of[j]])
        continue;
      const Act a = coset_act(subs[i]), b = coset_act(subs[j]);
      const auto v = decide(a, b, ctx.oracle.max_arity(), ctx.oracle.cap());
      rec.expect((v.kind == VerdictKind::Equivalent) == (i == j),
                 [&] { return io::verdict_json(v, ctx.classes); });
      if (i != j) expect_separated(rec, ctx, a, b);
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_zero_counts(Context& ctx) {
  std::vector<CheckResult> out;
  std::vector<std::optional<Act>> bases{std::nullopt};
  for (auto& a : ctx.zero_free_up_to(ctx.order())) bases.emplace_back(std::move(a));
  const std::size_t cap = ctx.oracle.cap();
  {
    Recorder rec("one-zero-versus-two", "prop3.14",
                 "A + z and A + z + z are not equivalent; decide returns a re-verifiable witness",
                 arity_params(ctx));
    for (const auto& base : bases) {
      const Act one = sum({base, ctx.zeros(1)}), two = sum({base, ctx.zeros(2)});
      const auto v = decide(one, two, ctx.oracle.max_arity(), cap);
      bool ok = v.kind == VerdictKind::NotEquivalent && v.witness.has_value();
      if (ok) {
        FreeAct free(ctx.group, v.witness->arity);
        const bool in_one = is_closed_congruence(free, v.witness->congruence, one, cap);
        const bool in_two = is_closed_congruence(free, v.witness->congruence, two, cap);
        ok = in_one != in_two && in_one == v.witness->closed_for_first;
      }
      rec.expect(ok, [&] {
        return Json{{"base", ctx.describe(base)}, {"verdict", io::verdict_json(v, ctx.classes)}};
      });
      expect_separated(rec, ctx, one, two);
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("two-zeros-absorb-more", "prop3.14",
                 "A + z + z and A + z + z + z are equivalent", arity_params(ctx));
    for (const auto& base : bases) {
      const Act two = sum({base, ctx.zeros(2)}), three = sum({base, ctx.zeros(3)});
      expect_equivalent(rec, ctx, two, three);
      const auto v = decide(two, three, ctx.oracle.max_arity(), cap);
      rec.expect(v.kind == VerdictKind::Equivalent,
                 [&] { return io::verdict_json(v, ctx.classes); });
    }
    out.push_back(rec.finish());
  }
  return out;
}

std::vector<CheckResult> check_copowers_beside_zero(Context& ctx) {
  Recorder rec("copowers-collapse-beside-zero", "prop3.15",
               "B + A*I + Z and B + A + Z are equivalent for Z = z or z + z and zero-free A",
               arity_params(ctx));
  std::vector<std::optional<Act>> bs{std::nullopt};
  for (auto& o : ctx.orbits()) bs.emplace_back(std::move(o));
  for (const auto& a : ctx.orbits())
    for (const auto& b : bs)
      for (std::size_t zeros = 1; zeros <= 2; ++zeros)
        for (std::size_t copies = 2; copies <= 3; ++copies) {
          const Act lhs = sum({b, copower_act(a, copies), ctx.zeros(zeros)});
          if (copies == 3 && lhs.size() > 12) continue;
          expect_equivalent(rec, ctx, lhs, sum({b, a, ctx.zeros(zeros)}));
        }
  return {rec.finish()};
}

std::vector<CheckResult> check_normal_copowers(Context& ctx) {
  Recorder rec("normal-copowers-collapse", "prop3.16",
               "B + N*I and B + N are equivalent for the coset act N of a proper normal subgroup",
               arity_params(ctx));
  std::vector<std::optional<Act>> bs{std::nullopt};
  for (auto& o : ctx.orbits()) bs.emplace_back(std::move(o));
  bs.emplace_back(ctx.zeros(1));
  for (std::size_t c = 0; c + 1 < ctx.classes.size(); ++c) {
    if (!ctx.classes.normal[c]) continue;
    const Act n = ctx.orbit(c);
    for (const auto& b : bs)
      for (std::size_t copies = 2; copies <= 3; ++copies) {
        const Act lhs = sum({b, copower_act(n, copies)});
        if (copies == 3 && lhs.size() > 12) continue;
        expect_equivalent(rec, ctx, lhs, sum({b, n}));
      }
  }
  return {rec.finish()};
}

std::vector<CheckResult> check_zero_free_versus_zero(Context& ctx) {
  Recorder rec("zero-free-versus-zero", "prop3.17",
               "a zero-free A is equivalent to neither B + z nor B + z + z for zero-free B",
               arity_params(ctx));
  const auto pool = ctx.zero_free_up_to(ctx.order());
  if (pool.empty()) {
    rec.skip("every act over the one-element group has zeros");
    return {rec.finish()};
  }
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (std::size_t zeros = 1; zeros <= 2; ++zeros) {
        const Act rhs = sum({b, ctx.zeros(zeros)});
        expect_separated(rec, ctx, a, rhs);
        const auto v = decide(a, rhs, ctx.oracle.max_arity(), ctx.oracle.cap());
        rec.expect(v.kind == VerdictKind::NotEquivalent,
                   [&] { return io::verdict_json(v, ctx.classes); });
      }
  return {rec.finish()};
}

std::vector<CheckResult> check_copower_cap(Context& ctx) {
  Recorder rec("copowers-cap-at-two", "prop3.18", "A*3 and A*2 are equivalent", arity_params(ctx));
  for (const auto& a : ctx.acts_up_to(std::min<std::size_t>(ctx.order(), 4)))
    expect_equivalent(rec, ctx, copower_act(a, 3), copower_act(a, 2));
  return {rec.finish()};
}

std::vector<CheckResult> check_embedding_summands(Context& ctx) {
  Recorder rec("mutually-embedded-summands", "prop3.19",
               "A ↣ B^I and B ↣ A^J (I, J ≤ 2) imply C + A and C + B are equivalent",
               arity_params(ctx));
  const auto pool = ctx.acts_up_to(3);
  std::vector<std::optional<Act>> cs{std::nullopt, ctx.zeros(1)};
  for (auto& o : ctx.orbits()) cs.emplace_back(std::move(o));
  const std::size_t cap = ctx.oracle.cap();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!embeds_in_power(pool[i], pool[j], 2, cap) || !embeds_in_power(pool[j], pool[i], 2, cap))
        continue;
      for (const auto& c : cs) expect_equivalent(rec, ctx, sum({c, pool[i]}), sum({c, pool[j]}));
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_copowers_with_context(Context& ctx) {
  Recorder rec("copowers-cap-at-two-in-context", "cor3.20", "C + A*3 and C + A*2 are equivalent",
               arity_params(ctx));
  std::vector<std::optional<Act>> cs{std::nullopt, ctx.zeros(1)};
  for (auto& o : ctx.orbits()) cs.emplace_back(std::move(o));
  for (const auto& a : ctx.acts_up_to(std::min<std::size_t>(ctx.order(), 3)))
    for (const auto& c : cs) {
      const Act lhs = sum({c, copower_act(a, 3)});
      if (lhs.size() > 12) continue;
      expect_equivalent(rec, ctx, lhs, sum({c, copower_act(a, 2)}));
    }
  return {rec.finish()};
}

std::vector<CheckResult> check_representation(Context& ctx) {
  std::vector<CheckResult> out;
  const auto classified = enumerate_acts(ctx.classes, ctx.order() + 2);
  {
    Recorder rec("canonical-form-round-trip", "thm3.21",
                 "every act's canonical form is valid and is reproduced by its representative",
                 Json{{"max_size", ctx.order() + 2}});
    for (const auto& c : classified) {
      const auto form = canonical_form(c.act, ctx.classes);
      bool ok = true;
      try {
        validate_form(form, ctx.classes);
        ok = canonical_form(representative(form, ctx.classes), ctx.classes) == form;
      } catch (const Error&) {
        ok = false;
      }
      rec.expect(ok, [&] {
        return Json{{"act", ctx.describe(c.act)}, {"form", io::form_json(form, ctx.classes)}};
      });
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec("collapse-soundness", "thm3.21",
                 "every act is oracle-equivalent to the representative of its canonical form",
                 Json{{"max_size", ctx.order() + 2}, {"max_arity", ctx.oracle.max_arity()}});
    for (const auto& c : classified)
      expect_equivalent(rec, ctx, c.act,
                        representative(canonical_form(c.act, ctx.classes), ctx.classes));
    out.push_back(rec.finish());
  }
  return out;
}

std::vector<CheckResult> check_prime_order_classes(Context& ctx) {
  Recorder rec("prime-order-classes", "cor3.23",
               "over a group of prime order, S, S + z and S + z + z lie in three distinct, "
               "internally coherent classes",
               Json{{"max_size", ctx.order() + 2}, {"max_arity", ctx.oracle.max_arity()}});
  if (!is_prime(ctx.order()) || !is_abelian(*ctx.group)) {
    rec.skip("applies to abelian groups of prime order only");
    return {rec.finish()};
  }
  const std::size_t cap = ctx.oracle.cap();
  const auto result = classify(ctx.group, ctx.order() + 2, ctx.oracle.max_arity(), cap);
  const Act s = regular_act(ctx.group);
  const std::vector<Act> listed{s, sum({s, ctx.zeros(1)}), sum({s, ctx.zeros(2)})};
  std::vector<std::optional<std::size_t>> bucket(listed.size());
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const auto form = canonical_form(listed[i], ctx.classes);
    for (std::size_t b = 0; b < result.buckets.size(); ++b)
      if (result.buckets[b].form == form) bucket[i] = b;
  }
  for (std::size_t i = 0; i < listed.size(); ++i) {
    rec.expect(bucket[i].has_value(), [&] { return Json{{"missing", ctx.describe(listed[i])}}; });
    if (!bucket[i]) continue;
    const auto& tally = result.tallies[*bucket[i]][*bucket[i]];
    rec.expect(tally.not_equivalent == 0 && tally.unknown == 0,
               [&] { return io::classification_json(result, ctx.classes); });
    for (std::size_t j = i + 1; j < listed.size(); ++j) {
      const auto v = decide(listed[i], listed[j], ctx.oracle.max_arity(), cap);
      rec.expect(v.kind == VerdictKind::NotEquivalent,
                 [&] { return io::verdict_json(v, ctx.classes); });
    }
  }
  rec.expect(result.coherent() && result.unknown_pairs.empty(),
             [&] { return io::classification_json(result, ctx.classes); });

  std::size_t zero_only = 0;
  for (const auto& b : result.buckets)
    if (b.form.classes.empty()) ++zero_only;
  CheckResult r = rec.finish();
  r.parameters["class_count"] = result.buckets.size();
  r.parameters["zero_only_classes"] = zero_only;
  if (zero_only > 0)
    r.note = std::to_string(result.buckets.size()) + " classes found; " +
             std::to_string(zero_only) +
             " consist of acts with only zero orbits and are separated from the three listed "
             "classes by the oracle";
  return {r};
}

std::vector<CheckResult> check_injective_forms(Context& ctx) {
  Recorder rec("injective-acts-forms", "cor3.25",
               "injective acts have canonical forms with a zero and all multiplicities 1",
               Json{{"max_size", ctx.order() + 2}, {"max_arity", ctx.oracle.max_arity()}});
  for (const auto& c : enumerate_acts(ctx.classes, ctx.order() + 2)) {
    if (!is_injective_over_group(c.act)) continue;
    const auto form = canonical_form(c.act, ctx.classes);
    bool ok = form.zero_sig >= 1;
    for (auto [cls, mult] : form.classes) ok = ok && mult == 1;
    rec.expect(ok, [&] {
      return Json{{"act", ctx.describe(c.act)}, {"form", io::form_json(form, ctx.classes)}};
    });
    expect_equivalent(rec, ctx, c.act, representative(form, ctx.classes));
  }
  return {rec.finish()};
}

std::vector<CheckResult> check_free_acts(Context& ctx) {
  Recorder rec("free-acts-equivalent", "cor3.26", "F_1, F_2 and F_3 are pairwise equivalent",
               arity_params(ctx));
  if (ctx.order() == 1) {
    rec.skip("requires a group with more than one element");
    return {rec.finish()};
  }
  std::vector<Act> free;
  for (std::size_t k = 1; k <= 3; ++k) free.push_back(FreeAct(ctx.group, k).act());
  for (std::size_t i = 0; i < free.size(); ++i)
    for (std::size_t j = i + 1; j < free.size(); ++j) {
      expect_equivalent(rec, ctx, free[i], free[j]);
      const auto v = decide(free[i], free[j], ctx.oracle.max_arity(), ctx.oracle.cap());
      rec.expect(v.kind == VerdictKind::Equivalent,
                 [&] { return io::verdict_json(v, ctx.classes); });
    }
  return {rec.finish()};
}

using Suite = std::vector<CheckResult> (*)(Context&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"prop2.4", check_set_stability},
      {"thm3.2", check_set_classes},
      {"lemma3.3", check_monomorphism_closure},
      {"cor3.4", check_powers},
      {"cor3.5", check_mutual_embeddings},
      {"cor3.8", check_trivial_acts},
      {"prop3.9", check_cyclic_containment},
      {"prop3.10", check_strict_inclusion},
      {"thm3.12", check_cyclic_classification},
      {"cor3.13", check_normal_cosets},
      {"prop3.14", check_zero_counts},
      {"prop3.15", check_copowers_beside_zero},
      {"prop3.16", check_normal_copowers},
      {"prop3.17", check_zero_free_versus_zero},
      {"prop3.18", check_copower_cap},
      {"prop3.19", check_embedding_summands},
      {"cor3.20", check_copowers_with_context},
      {"thm3.21", check_representation},
      {"cor3.23", check_prime_order_classes},
      {"cor3.25", check_injective_forms},
      {"cor3.26", check_free_acts},
  };
  return suites;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

bool CheckReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_checks(const GroupPtr& group, std::string_view suite, std::size_t max_arity,
                       std::size_t cap) {
  const auto& suites = registry();
  const bool all = suite == "all";
  if (!all && std::none_of(suites.begin(), suites.end(),
                           [&](const auto& s) { return s.first == suite; }))
    throw Error(ErrorCode::ParseError, "unknown check suite '" + std::string(suite) + "'");

  Context ctx{group, subgroup_conjugacy_classes(group), Oracle(group, max_arity, cap)};
  CheckReport report;
  report.group_order = group->order();
  report.max_arity = max_arity;
  report.suite = std::string(suite);
  for (const auto& [name, fn] : suites) {
    if (!all && name != suite) continue;
    for (auto& r : fn(ctx)) report.checks.push_back(std::move(r));
  }
  return report;
}

io::Json to_json(const CheckReport& report) {
  io::Json checks = io::Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    io::Json entry{{"name", c.name},
                   {"anchor", c.anchor},
                   {"statement", c.statement},
                   {"parameters", c.parameters},
                   {"status", std::string(to_string(c.status))}};
    if (c.status == CheckStatus::Fail) entry["witness"] = c.witness;
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
    switch (c.status) {
      case CheckStatus::Pass: ++passed; break;
      case CheckStatus::Fail: ++failed; break;
      case CheckStatus::Skip: ++skipped; break;
    }
  }
  return io::Json{{"suite", report.suite},
                  {"group_order", report.group_order},
                  {"max_arity", report.max_arity},
                  {"status", report.passed() ? "pass" : "fail"},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"checks", std::move(checks)}};
}

}  // namespace actgeo
