// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance [--cli PATH --data DIR]
//
// With --cli the determinism criterion also compares two CLI runs byte for byte.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "actgeo/checks.hpp"
#include "actgeo/error.hpp"
#include "actgeo/io.hpp"
#include "support.hpp"

using namespace actgeo;
using fixture::coset;
using fixture::sum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Args {
  std::string cli;
  std::string data;
};

struct Setting {
  std::string name;
  GroupPtr group;
};

std::vector<Setting> law_groups() {
  return {{"trivial", trivial_group()}, {"Z2", fixture::z(2)}, {"Z3", fixture::z(3)},
          {"S3", fixture::s3()}};
}

bool separated_upto(const Act& a, const Act& b, std::size_t k_max) {
  for (std::size_t k = 1; k <= k_max; ++k)
    if (cl_equal(a, b, k)) return true;
  return false;
}

// 1. T ⊆ T'', idempotence and antitonicity on both sides, over every congruence of F_k
//    for k ≤ 3 while the carrier has at most 8 points.
Outcome galois_laws() {
  std::size_t congruences = 0, point_sets = 0, violations = 0;
  std::mt19937 rng(1);
  for (const auto& s : law_groups()) {
    const auto t = subgroup_conjugacy_classes(s.group);
    for (const auto& target : enumerate_acts(t, 4)) {
      for (std::size_t k = 1; k <= 3 && k * s.group->order() <= 8; ++k) {
        const FreeAct f(s.group, k);
        const auto all = oracle::congruences(f.act());
        std::vector<PointSet> primes;
        for (const auto& labels : all) {
          ++congruences;
          const auto c = Congruence::from_labels(labels);
          const auto closure = congruence_closure(f, c, target.act);
          if (closure.blocks() != oracle::closure(labels, target.act, k)) ++violations;
          if (!c.refines(closure)) ++violations;
          if (congruence_closure(f, closure, target.act) != closure) ++violations;
          primes.push_back(solutions(f, c, target.act));
        }
        for (std::size_t i = 0; i < all.size(); ++i)
          for (std::size_t j = 0; j < all.size(); ++j)
            if (oracle::refines(all[i], all[j]) && !primes[j].is_subset_of(primes[i]))
              ++violations;

        const auto space = PointSet::all(f, target.act);
        const auto n = space.size();
        auto subset = [&](std::uint64_t mask) {
          std::vector<PointId> ids;
          for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) ids.push_back(space.ids()[i]);
          return PointSet(f, target.act, ids);
        };
        std::vector<std::pair<PointSet, PointSet>> pairs;  // (A1, A2) with A1 ⊆ A2
        if (n <= 8) {
          for (std::uint64_t m = 0; m < (1ull << n); ++m) {
            const std::uint64_t sup = m | (rng() & ((1ull << n) - 1));
            pairs.emplace_back(subset(m), subset(sup));
          }
        } else {
          for (int i = 0; i < 200; ++i) {
            const std::uint64_t m = rng() & rng() & ((1ull << n) - 1);
            pairs.emplace_back(subset(m), subset(m | (rng() & ((1ull << n) - 1))));
          }
        }
        for (const auto& [a1, a2] : pairs) {
          ++point_sets;
          const auto closed = variety_closure(a1);
          if (!a1.is_subset_of(closed)) ++violations;
          if (variety_closure(closed) != closed) ++violations;
          const auto c1 = coclosure(a1), c2 = coclosure(a2);
          if (c1.blocks() != oracle::coclosure(a1.ids(), target.act, k)) ++violations;
          if (!c2.refines(c1)) ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(congruences) + " congruences, " +
                               std::to_string(point_sets) + " point-set pairs, " +
                               std::to_string(violations) + " violations"};
}

// 2. Closed congruences have exact subdirect certificates; the rest are rejected.
Outcome subdirect() {
  std::size_t closed = 0, rejected = 0, violations = 0;
  for (const auto& s : law_groups()) {
    const auto t = subgroup_conjugacy_classes(s.group);
    for (const auto& target : enumerate_acts(t, 4)) {
      for (std::size_t k = 1; k <= 3 && k * s.group->order() <= 8; ++k) {
        const FreeAct f(s.group, k);
        const auto lattice = closed_lattice(target.act, k);
        for (const auto& m : lattice.members) {
          ++closed;
          const auto cert = subdirect_certificate(f, m, target.act);
          if (!cert || oracle::coclosure(cert->ids(), target.act, k) != m.blocks()) ++violations;
        }
        for (const auto& labels : oracle::congruences(f.act())) {
          const auto c = Congruence::from_labels(labels);
          const bool fixpoint = oracle::closure(labels, target.act, k) == labels;
          if (fixpoint != lattice.contains(c)) ++violations;
          if (fixpoint) continue;
          ++rejected;
          if (subdirect_certificate(f, c, target.act) || is_closed_congruence(f, c, target.act))
            ++violations;
        }
      }
    }
  }
  return {violations == 0, std::to_string(closed) + " closed certified, " +
                               std::to_string(rejected) + " non-closed rejected, " +
                               std::to_string(violations) + " violations"};
}

// 3. Set case: one point is stable, two points fail first at arity 3 with the γ witness.
Outcome set_stability() {
  const auto one = trivial_group();
  Outcome out;
  const auto single = is_geometrically_stable(zero_act(one), 3);
  const Act pair = trivial_act(one, 2);
  const auto low = is_geometrically_stable(pair, 2);
  const auto r = is_geometrically_stable(pair, 3);
  out.pass = single.stable && low.stable && !r.stable && r.counterexample &&
             r.counterexample->arity == 3;
  if (!out.pass) {
    out.detail = "stability verdicts differ from expectation";
    return out;
  }
  // the reported counterexample glues {a,b} and {b,c}; its witness has γa = γc ≠ γb
  const auto& c = *r.counterexample;
  const auto members1 = c.t1.block_members(), members2 = c.t2.block_members();
  auto glued = [](const std::vector<std::vector<Element>>& blocks) {
    for (const auto& b : blocks)
      if (b.size() == 2) return std::optional<std::pair<Element, Element>>({b[0], b[1]});
    return std::optional<std::pair<Element, Element>>();
  };
  const auto p1 = glued(members1), p2 = glued(members2);
  bool shape = p1 && p2 && members1.size() == 2 && members2.size() == 2 && *p1 != *p2;
  std::set<Element> u;
  if (shape) u = {p1->first, p1->second, p2->first, p2->second};
  shape = shape && u.size() == 3;
  if (shape) {
    Element shared = 0;
    for (Element x : u)
      if ((x == p1->first || x == p1->second) && (x == p2->first || x == p2->second)) shared = x;
    Element outer[2];
    int n = 0;
    for (Element x : u)
      if (x != shared) outer[n++] = x;
    shape = c.witness[outer[0]] == c.witness[outer[1]] &&
            c.witness[outer[0]] != c.witness[shared];
  }
  // the literal configuration T1 = x1~x2, T2 = x2~x3 against a brute-force gap
  const FreeAct f(one, 3);
  const std::vector<Element> l1{0, 0, 1}, l2{0, 1, 1};
  const auto gap =
      stability_gap(f, Congruence::from_labels(l1), Congruence::from_labels(l2), pair);
  const auto s1 = oracle::solutions(l1, pair, 3), s2 = oracle::solutions(l2, pair, 3);
  const auto s12 = oracle::solutions(oracle::meet(l1, l2), pair, 3);
  std::vector<PointId> brute;
  for (auto id : s12)
    if (!std::binary_search(s1.begin(), s1.end(), id) &&
        !std::binary_search(s2.begin(), s2.end(), id))
      brute.push_back(id);
  bool exact = gap.ids() == brute && brute.size() == 2;
  for (auto id : gap.ids()) {
    const auto g = gap.images(id);
    exact = exact && g[0] == g[2] && g[0] != g[1];
  }
  out.pass = shape && exact;
  out.detail = "first failure at arity 3; gap of x1~x2, x2~x3 = {";
  for (std::size_t i = 0; i < gap.size(); ++i) {
    const auto g = gap.images(gap.ids()[i]);
    out.detail += std::string(i ? ", " : "") + "(" + std::to_string(g[0]) + "," +
                  std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
  }
  out.detail += "}";
  return out;
}

// 4. Sets: exactly two classes.
Outcome sets_two_classes() {
  const auto c = classify(trivial_group(), 4);
  bool ok = c.buckets.size() == 2 && c.coherent() && c.unknown_pairs.empty();
  for (std::size_t i = 0; i < c.buckets.size(); ++i)
    for (std::size_t j = 0; j < c.buckets.size(); ++j) {
      const auto& t = c.tallies[i][j];
      ok = ok && t.unknown == 0 && (i == j ? t.not_equivalent == 0 : t.equivalent == 0);
    }
  return {ok, std::to_string(c.acts.size()) + " acts in " + std::to_string(c.buckets.size()) +
                  " classes"};
}

// 5. Cyclic acts are equivalent iff their stabilizers are conjugate.
Outcome cyclic_conjugacy() {
  std::size_t pairs = 0, by_oracle = 0, by_arm = 0, violations = 0;
  for (const auto& g : {fixture::s3(), fixture::z(4)}) {
    const auto subs = enumerate_subgroups(g);
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) {
        ++pairs;
        const Act a = coset_act(h1), b = coset_act(h2);
        const bool conj = are_conjugate(h1, h2).has_value();
        const auto v = decide(a, b);
        if ((v.kind == VerdictKind::Equivalent) != conj) ++violations;
        const bool sep = separated_upto(a, b, 2);
        if (conj && sep) ++violations;
        if (!conj) {
          if (sep) ++by_oracle;
          else if (v.reason == Separation::CyclicNonConjugate) ++by_arm;
          else ++violations;
        }
      }
  }
  return {violations == 0, std::to_string(pairs) + " pairs; non-conjugate separated by oracle " +
                               std::to_string(by_oracle) + ", by cyclic arm only " +
                               std::to_string(by_arm) + "; " + std::to_string(violations) +
                               " violations"};
}

// 6. Zero-orbit counts 0, 1 and ≥2 are three distinct classes.
Outcome zero_orbits() {
  bool ok = true;
  std::string detail;
  for (const auto& g : {fixture::z(2), fixture::z(3)}) {
    const Act s = regular_act(g), z = zero_act(g);
    const Act sz = sum({s, z}), szz = sum({s, z, z}), szzz = sum({s, z, z, z});
    const auto v1 = decide(s, sz), v2 = decide(sz, szz), v3 = decide(szz, szzz);
    bool reverify = false;
    if (v2.witness) {
      const FreeAct f(g, v2.witness->arity);
      const bool c1 = is_closed_congruence(f, v2.witness->congruence, sz);
      const bool c2 = is_closed_congruence(f, v2.witness->congruence, szz);
      reverify = c1 != c2 && c1 == v2.witness->closed_for_first;
    }
    ok = ok && v1.kind == VerdictKind::NotEquivalent && v2.kind == VerdictKind::NotEquivalent &&
         reverify && v3.kind == VerdictKind::Equivalent;
    detail += (detail.empty() ? "Z" : "; Z") + std::to_string(g->order()) + ": " +
              std::string(to_string(v1.kind)) + ", " + std::string(to_string(v2.kind)) +
              (v2.witness ? " witness " + v2.witness->congruence.to_string() : "") + ", " +
              std::string(to_string(v3.kind));
  }
  return {ok, detail};
}

// 7. Collapsed and uncollapsed acts have the same closed lattices at k ≤ 2.
Outcome collapse_soundness() {
  const auto g = fixture::s3();
  const auto t = subgroup_conjugacy_classes(g);
  const Act b = coset(g, {0, 3}), n = coset(g, {0, 1, 2});
  std::vector<std::pair<Act, Act>> pairs{
      {FreeAct(g, 1).act(), FreeAct(g, 3).act()},
      {sum({b, copower_act(n, 2)}), sum({b, n})},
      {copower_act(b, 3), copower_act(b, 2)},
  };
  for (const auto& c : enumerate_acts(t, 3)) pairs.emplace_back(c.act, power_act(c.act, 2));
  std::size_t separated = 0;
  for (const auto& [x, y] : pairs) separated += separated_upto(x, y, 2);
  return {separated == 0, std::to_string(pairs.size()) + " pairs, " + std::to_string(separated) +
                              " separated"};
}

// 8. Distinct subgroups of Z4 give pairwise inequivalent coset acts.
Outcome abelian_cosets() {
  const auto g = fixture::z(4);
  const auto subs = enumerate_subgroups(g);
  std::size_t checked = 0;
  bool ok = subs.size() == 3;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      ++checked;
      ok = ok && decide(coset_act(subs[i]), coset_act(subs[j])).kind == VerdictKind::NotEquivalent;
    }
  return {ok, std::to_string(checked) + " pairs over subgroups {0}, {0,2}, Z4"};
}

// 9. Prime cyclic groups: [S], [S∐z], [S∐z1∐z2] distinct and coherent; extra classes reported.
Outcome prime_cyclic_probe() {
  bool ok = true;
  std::string detail;
  for (const auto& g : {fixture::z(2), fixture::z(3)}) {
    const auto t = subgroup_conjugacy_classes(g);
    const auto c = classify(g, 4);
    const Act s = regular_act(g), z = zero_act(g);
    const std::array<Act, 3> listed{s, sum({s, z}), sum({s, z, z})};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        ok = ok && decide(listed[i], listed[j]).kind == VerdictKind::NotEquivalent;
    // internal coherence: bucket members of a listed form are all equivalent to it
    std::size_t present = 0, pure_zero = 0;
    for (std::size_t b = 0; b < c.buckets.size(); ++b) {
      const auto& bucket = c.buckets[b];
      if (bucket.form.classes.empty()) ++pure_zero;
      for (const auto& l : listed)
        if (canonical_form(l, t) == bucket.form) {
          ++present;
          ok = ok && c.tallies[b][b].not_equivalent == 0 && c.tallies[b][b].unknown == 0;
          for (auto m : bucket.members)
            ok = ok && decide(c.acts[m].act, l).kind == VerdictKind::Equivalent;
        }
    }
    // listed classes with no member inside the size bound are checked directly
    const Act szzz = sum({s, z, z, z});
    ok = ok && decide(listed[2], szzz).kind == VerdictKind::Equivalent && c.coherent();
    detail += (detail.empty() ? "Z" : "; Z") + std::to_string(g->order()) + ": " +
              std::to_string(c.buckets.size()) + " classes (" + std::to_string(present) +
              " of the three listed present at max_size 4, " + std::to_string(pure_zero) +
              " pure-zero classes beyond them: discrepancy flagged)";
  }
  return {ok, detail};
}

std::string run_cli(const std::string& cli, const std::string& group) {
  const std::string cmd = "\"" + cli + "\" check \"" + group + "\" --suite all 2>&1";
  std::string out;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
  }
  return out;
}

// 10. Reports are byte-identical across runs.
Outcome determinism(const Args& args) {
  bool ok = true;
  std::size_t compared = 0;
  for (const auto& s : {trivial_group(), fixture::z(2), fixture::z(3), fixture::z(4),
                        fixture::s3()}) {
    const auto a = io::dump(to_json(run_checks(s, "all")));
    const auto b = io::dump(to_json(run_checks(s, "all")));
    ok = ok && a == b && !a.empty();
    ++compared;
  }
  if (!args.cli.empty()) {
    for (const char* name : {"trivial", "z2", "z3", "z4", "s3"}) {
      const auto path = args.data + "/" + name + ".json";
      const auto a = run_cli(args.cli, path), b = run_cli(args.cli, path);
      ok = ok && a == b && a.find("\"status\"") != std::string::npos;
      ++compared;
    }
  }
  return {ok, std::to_string(compared) + " report pairs compared" +
                  (args.cli.empty() ? " (library only)" : " (library and CLI)")};
}

}  // namespace

int main(int argc, char** argv) {
  Args args;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") args.cli = argv[i + 1];
    else if (key == "--data") args.data = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Galois laws", galois_laws},
      {"closed congruences certified, others rejected", subdirect},
      {"Set-case stability and the gamma witness", set_stability},
      {"sets form two classes", sets_two_classes},
      {"cyclic acts: equivalent iff conjugate stabilizers", cyclic_conjugacy},
      {"zero-orbit signature over Z2 and Z3", zero_orbits},
      {"collapse soundness over S3", collapse_soundness},
      {"Z4 coset acts pairwise inequivalent", abelian_cosets},
      {"prime cyclic class probe", prime_cyclic_probe},
      {"determinism of check reports", [&] { return determinism(args); }},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::printf("%s  %2zu  %-50s  %s  [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed, %.2fs total\n", failed, criteria.size(), total);
  return failed ? 1 : 0;
}
