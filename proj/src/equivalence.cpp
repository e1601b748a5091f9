#include "actgeo/equivalence.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo {

namespace {

GroupPtr require_group(const Act& act) {
  auto g = group_view(act.monoid_ptr());
  if (!g) throw Error(ErrorCode::MonoidNotGroup, "geometric classification needs a group");
  return g;
}

struct RawCounts {
  std::size_t zeros = 0;
  std::map<std::size_t, std::size_t> proper;  // class id -> orbit count
};

RawCounts raw_counts(const Act& act, const ConjugacyClassTable& classes) {
  RawCounts raw;
  for (const auto& orbit : orbit_decomposition(act, classes).orbits) {
    if (orbit.is_zero())
      ++raw.zeros;
    else
      ++raw.proper[orbit.class_id];
  }
  return raw;
}

std::string form_string(const CanonicalForm& form) {
  std::ostringstream os;
  os << "(" << form.zero_sig << ", {";
  bool first = true;
  for (auto [cls, mult] : form.classes) {
    os << (first ? "" : ", ") << class_label(cls) << ":" << mult;
    first = false;
  }
  os << "})";
  return os.str();
}

/// F_arity with two generators' copies collapsed separately: {copy 0}, {copy 1}.
Congruence two_block_congruence(const FreeAct& free) {
  std::vector<Element> labels(free.size());
  for (Element x = 0; x < free.size(); ++x) labels[x] = static_cast<Element>(free.basis_of(x));
  return Congruence::from_labels(labels);
}

/// Returns the witness when it is closed for exactly one of the acts.
std::optional<SeparatingWitness> verify_witness(const FreeAct& free, const Congruence& t,
                                                const Act& a, const Act& b, std::size_t cap) {
  try {
    const bool in_a = is_closed_congruence(free, t, a, cap);
    const bool in_b = is_closed_congruence(free, t, b, cap);
    if (in_a == in_b) return std::nullopt;
    return SeparatingWitness{free.basis_size(), t, in_a};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ArityBoundExceeded) throw;
    return std::nullopt;
  }
}

/// Kernel of the point (images...) of F_k into `target`.
Congruence point_kernel(const FreeAct& free, const Act& target, std::vector<Element> images) {
  return kernel(hom_from_basis_images(free, target, images));
}

/// Separates an act without zeros from one with zeros. With a non-zero orbit
/// on the zero side, the kernel of (orbit point, zero) on F_2 works; otherwise the
/// zero side is a bare set and any kernel of F_1 into the zero-free act does.
std::optional<SeparatingWitness> zero_presence_witness(const Act& a, const Act& b,
                                                       const ConjugacyClassTable& classes,
                                                       std::size_t cap) {
  const bool a_has_zero = !fixed_points(a).empty();
  const Act& with_zero = a_has_zero ? a : b;
  const Act& without = a_has_zero ? b : a;
  const auto decomposition = orbit_decomposition(with_zero, classes);
  std::optional<Element> moving, zero;
  for (const auto& o : decomposition.orbits) {
    if (o.is_zero() && !zero) zero = o.representative;
    if (!o.is_zero() && !moving) moving = o.representative;
  }
  if (moving) {
    FreeAct free(a.monoid_ptr(), 2);
    return verify_witness(free, point_kernel(free, with_zero, {*moving, *zero}), a, b, cap);
  }
  FreeAct free(a.monoid_ptr(), 1);
  return verify_witness(free, point_kernel(free, without, {0}), a, b, cap);
}

/// Kernel of S → orbit for either act; by the cyclic classification one of them separates.
std::optional<SeparatingWitness> cyclic_witness(const Act& a, const Act& b, std::size_t cap) {
  FreeAct free(a.monoid_ptr(), 1);
  if (auto w = verify_witness(free, point_kernel(free, a, {0}), a, b, cap)) return w;
  return verify_witness(free, point_kernel(free, b, {0}), a, b, cap);
}

}  // namespace

CanonicalForm canonical_form(const Act& act, const ConjugacyClassTable& classes) {
  require_group(act);
  CanonicalForm form;
  if (classes.group->order() == 1) {
    form.zero_sig = static_cast<int>(std::min<std::size_t>(act.size(), 2));
    return form;
  }
  const RawCounts raw = raw_counts(act, classes);
  form.zero_sig = static_cast<int>(std::min<std::size_t>(raw.zeros, 2));
  for (auto [cls, count] : raw.proper) {
    std::size_t cap = 2;
    if (form.zero_sig >= 1 || classes.normal[cls]) cap = 1;
    form.classes[cls] = static_cast<int>(std::min(count, cap));
  }
  return form;
}

CanonicalForm canonical_form(const Act& act) {
  return canonical_form(act, subgroup_conjugacy_classes(require_group(act)));
}

void validate_form(const CanonicalForm& form, const ConjugacyClassTable& classes) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidForm, form_string(form) + ": " + why);
  };
  if (form.zero_sig < 0 || form.zero_sig > 2) fail("zero signature must be 0, 1 or 2");
  if (form.zero_sig == 0 && form.classes.empty()) fail("an act has at least one orbit");
  for (auto [cls, mult] : form.classes) {
    if (cls >= classes.size() || !classes.is_proper(cls)) fail("not a proper subgroup class");
    if (mult < 1 || mult > 2) fail("multiplicity must be 1 or 2");
    if (mult == 2 && form.zero_sig >= 1) fail("multiplicity 2 beside a zero orbit");
    if (mult == 2 && classes.normal[cls]) fail("multiplicity 2 on a normal class");
  }
}

Act representative(const CanonicalForm& form, const ConjugacyClassTable& classes) {
  validate_form(form, classes);
  std::vector<Act> parts;
  for (auto [cls, mult] : form.classes)
    for (int i = 0; i < mult; ++i) parts.push_back(coset_act(classes.representative(cls)));
  for (int i = 0; i < form.zero_sig; ++i) parts.push_back(zero_act(classes.group));
  return coproduct(parts).act;
}

std::vector<std::string> reduction_steps(const Act& act, const ConjugacyClassTable& classes) {
  std::vector<std::string> steps;
  if (classes.group->order() == 1) {
    if (act.size() > 2)
      steps.push_back(std::to_string(act.size()) + " points of a bare set reduced to 2");
    return steps;
  }
  const RawCounts raw = raw_counts(act, classes);
  if (raw.zeros > 2)
    steps.push_back(std::to_string(raw.zeros) + " zero orbits reduced to 2");
  for (auto [cls, count] : raw.proper) {
    const std::string label = class_label(cls);
    if (raw.zeros >= 1 && count > 1)
      steps.push_back(std::to_string(count) + " orbits of type " + label +
                      " reduced to 1 beside a zero orbit");
    else if (raw.zeros == 0 && classes.normal[cls] && count > 1)
      steps.push_back(std::to_string(count) + " orbits of normal type " + label + " reduced to 1");
    else if (raw.zeros == 0 && count > 2)
      steps.push_back(std::to_string(count) + " orbits of type " + label + " reduced to 2");
  }
  return steps;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Equivalent: return "Equivalent";
    case VerdictKind::NotEquivalent: return "NotEquivalent";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(Separation reason) {
  switch (reason) {
    case Separation::ZeroSignature: return "ZeroSignature";
    case Separation::CyclicNonConjugate: return "CyclicNonConjugate";
    case Separation::OracleWitness: return "OracleWitness";
  }
  return "Unknown";
}

Verdict decide(const Act& a, const Act& b, std::size_t oracle_arity, std::size_t cap) {
  auto group = require_group(a);
  require_group(b);
  if (!same_monoid(a, b)) throw Error(ErrorCode::MixedMonoids, "acts over different groups");
  const auto classes = subgroup_conjugacy_classes(group);

  Verdict v;
  v.form_a = canonical_form(a, classes);
  v.form_b = canonical_form(b, classes);
  v.oracle_arity = oracle_arity;

  // 1. equal normal forms
  if (v.form_a == v.form_b) {
    v.kind = VerdictKind::Equivalent;
    for (auto& s : reduction_steps(a, classes)) v.justification.push_back("first: " + s);
    for (auto& s : reduction_steps(b, classes)) v.justification.push_back("second: " + s);
    v.justification.push_back("both reduce to " + form_string(v.form_a) +
                              "; isomorphic orbits are interchangeable");
    return v;
  }

  // 2. zero signatures
  const int za = v.form_a.zero_sig, zb = v.form_b.zero_sig;
  if ((za == 0) != (zb == 0)) {
    v.kind = VerdictKind::NotEquivalent;
    v.reason = Separation::ZeroSignature;
    v.justification.push_back("exactly one act has a zero orbit");
    v.witness = zero_presence_witness(a, b, classes, cap);
    return v;
  }
  if (za != zb) {
    FreeAct free(group, 2);
    if (auto w = verify_witness(free, two_block_congruence(free), a, b, cap)) {
      v.kind = VerdictKind::NotEquivalent;
      v.reason = Separation::ZeroSignature;
      v.witness = std::move(w);
      v.justification.push_back("one zero orbit versus at least two; sending the generators of F_2 "
                                "to distinct zeros gives a kernel closed only for the latter");
      return v;
    }
    v.note = "two-block witness did not verify; falling back to the oracle";
  }

  // 3. single orbits
  if (orbit_decomposition(a, classes).orbits.size() == 1 &&
      orbit_decomposition(b, classes).orbits.size() == 1) {
    v.kind = VerdictKind::NotEquivalent;
    v.reason = Separation::CyclicNonConjugate;
    v.justification.push_back("single orbits with non-conjugate stabilizers");
    v.witness = cyclic_witness(a, b, cap);
    return v;
  }

  // 4. bounded oracle
  for (std::size_t k = 1; k <= oracle_arity; ++k) {
    try {
      if (auto t = cl_equal(a, b, k, cap)) {
        FreeAct free(group, k);
        v.kind = VerdictKind::NotEquivalent;
        v.reason = Separation::OracleWitness;
        v.witness = SeparatingWitness{k, *t, is_closed_congruence(free, *t, a, cap)};
        v.justification.push_back("closed congruence lattices differ at arity " +
                                  std::to_string(k));
        return v;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ArityBoundExceeded) throw;
      v.note = "oracle stopped at arity " + std::to_string(k) + ": " + e.what();
      break;
    }
  }

  // 5. open
  v.kind = VerdictKind::Unknown;
  v.justification.push_back("different normal forms, no separating congruence up to arity " +
                            std::to_string(oracle_arity));
  return v;
}

bool is_injective_over_group(const Act& act) {
  require_group(act);
  return !fixed_points(act).empty();
}

// --- classification ----------------------------------------------------------

std::vector<ClassifiedAct> enumerate_acts(const ConjugacyClassTable& classes, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> types;
  std::vector<std::size_t> current;
  auto extend = [&](auto& self, std::size_t from, std::size_t room) -> void {
    if (!current.empty()) types.push_back(current);
    for (std::size_t cls = from; cls < classes.size(); ++cls) {
      const std::size_t size = classes.orbit_size(cls);
      if (size > room) continue;
      current.push_back(cls);
      self(self, cls, room - size);
      current.pop_back();
    }
  };
  extend(extend, 0, max_size);

  auto size_of = [&](const std::vector<std::size_t>& t) {
    std::size_t s = 0;
    for (auto c : t) s += classes.orbit_size(c);
    return s;
  };
  std::sort(types.begin(), types.end(), [&](const auto& x, const auto& y) {
    const auto sx = size_of(x), sy = size_of(y);
    return sx != sy ? sx < sy : x < y;
  });

  std::vector<ClassifiedAct> out;
  out.reserve(types.size());
  for (auto& t : types) {
    std::vector<Act> parts;
    for (auto c : t) parts.push_back(coset_act(classes.representative(c)));
    out.push_back(ClassifiedAct{t, coproduct(parts).act});
  }
  return out;
}

Classification classify(const GroupPtr& group, std::size_t max_size, std::size_t oracle_arity,
                        std::size_t cap) {
  const auto classes = subgroup_conjugacy_classes(group);
  Classification out;
  out.max_size = max_size;
  out.oracle_arity = oracle_arity;
  out.acts = enumerate_acts(classes, max_size);

  const std::size_t n = out.acts.size();
  if (n > 1 && n * (n - 1) / 2 > cap)
    throw Error(ErrorCode::SizeBoundExceeded, "too many act pairs to cross-check");

  std::vector<std::size_t> bucket_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto form = canonical_form(out.acts[i].act, classes);
    auto it = std::find_if(out.buckets.begin(), out.buckets.end(),
                           [&](const FormBucket& b) { return b.form == form; });
    if (it == out.buckets.end()) {
      out.buckets.push_back(FormBucket{form, {}});
      it = std::prev(out.buckets.end());
    }
    it->members.push_back(i);
    bucket_of[i] = static_cast<std::size_t>(it - out.buckets.begin());
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<VerdictKind> kinds(pairs.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < count; ++p) {
    try {
      const auto [i, j] = pairs[p];
      kinds[p] = decide(out.acts[i].act, out.acts[j].act, oracle_arity, cap).kind;
    } catch (...) {
#pragma omp critical(actgeo_classify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t nb = out.buckets.size();
  out.tallies.assign(nb, std::vector<VerdictTally>(nb));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const std::size_t bi = bucket_of[i], bj = bucket_of[j];
    for (auto* tally : {&out.tallies[bi][bj], &out.tallies[bj][bi]}) {
      switch (kinds[p]) {
        case VerdictKind::Equivalent: ++tally->equivalent; break;
        case VerdictKind::NotEquivalent: ++tally->not_equivalent; break;
        case VerdictKind::Unknown: ++tally->unknown; break;
      }
      if (bi == bj) break;
    }
    if (kinds[p] == VerdictKind::Unknown) out.unknown_pairs.emplace_back(i, j);
    const bool same = bi == bj;
    if ((same && kinds[p] != VerdictKind::Equivalent) ||
        (!same && kinds[p] == VerdictKind::Equivalent))
      out.conflicting_pairs.emplace_back(i, j);
  }
  return out;
}

}  // namespace actgeo
