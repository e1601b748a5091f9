#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actgeo/galois.hpp"

namespace actgeo {

/// Normal form of an act over a group up to the known equivalence-preserving
/// rewrites: zero orbits capped at two, copies of an orbit type capped at two,
/// normal-stabilizer types capped at one, and every type capped at one once a
/// zero orbit is present.
struct CanonicalForm {
  int zero_sig = 0;                       // min(#zero orbits, 2)
  std::map<std::size_t, int> classes;     // proper class id -> multiplicity (1 or 2)

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Throws Error{MonoidNotGroup}.
CanonicalForm canonical_form(const Act& act, const ConjugacyClassTable& classes);
CanonicalForm canonical_form(const Act& act);

/// Throws Error{InvalidForm} unless `form` is reachable from some act.
void validate_form(const CanonicalForm& form, const ConjugacyClassTable& classes);

/// Coproduct of coset acts of the class representatives with the stated
/// multiplicities, in class order, followed by `zero_sig` zero points.
Act representative(const CanonicalForm& form, const ConjugacyClassTable& classes);

/// Human-readable list of the rewrites `canonical_form` applies to `act`.
std::vector<std::string> reduction_steps(const Act& act, const ConjugacyClassTable& classes);

enum class VerdictKind { Equivalent, NotEquivalent, Unknown };
enum class Separation { ZeroSignature, CyclicNonConjugate, OracleWitness };

std::string_view to_string(VerdictKind kind);
std::string_view to_string(Separation reason);

/// A congruence on F_arity that is closed for exactly one of the two acts.
struct SeparatingWitness {
  std::size_t arity;
  Congruence congruence;
  bool closed_for_first;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<std::string> justification;
  std::optional<Separation> reason;
  std::optional<SeparatingWitness> witness;
  CanonicalForm form_a;
  CanonicalForm form_b;
  std::size_t oracle_arity = 0;  // bound the verdict was derived under
  std::string note;
};

/// Three-valued equivalence decision:
///  1. equal canonical forms -> Equivalent;
///  2. different zero signatures -> NotEquivalent (with a verified witness; the
///     one-vs-two zero case requires it, otherwise falls through);
///  3. two single orbits with different forms -> NotEquivalent;
///  4. closed-lattice comparison at arities 1..oracle_arity -> NotEquivalent on a witness;
///  5. otherwise Unknown.
/// Throws Error{MonoidNotGroup, MixedMonoids}. An arity cap hit yields Unknown with a note.
Verdict decide(const Act& a, const Act& b, std::size_t oracle_arity = 2,
               std::size_t cap = kDefaultSizeCap);

/// True iff the act has a fixed point. Throws Error{MonoidNotGroup}.
bool is_injective_over_group(const Act& act);

struct ClassifiedAct {
  std::vector<std::size_t> orbit_classes;  // nondecreasing class ids
  Act act;
};

struct VerdictTally {
  std::size_t equivalent = 0;
  std::size_t not_equivalent = 0;
  std::size_t unknown = 0;
};

struct FormBucket {
  CanonicalForm form;
  std::vector<std::size_t> members;  // indices into Classification::acts
};

struct Classification {
  std::size_t max_size = 0;
  std::size_t oracle_arity = 0;
  std::vector<ClassifiedAct> acts;                 // by size, then orbit classes
  std::vector<FormBucket> buckets;                 // by first member
  std::vector<std::vector<VerdictTally>> tallies;  // bucket x bucket, over member pairs
  std::vector<std::pair<std::size_t, std::size_t>> unknown_pairs;    // act indices
  std::vector<std::pair<std::size_t, std::size_t>> conflicting_pairs;  // verdict disagrees with buckets

  bool coherent() const noexcept { return conflicting_pairs.empty(); }
};

/// Every act of size ≤ max_size up to isomorphism, bucketed by canonical form,
/// with `decide` run on every pair. Throws Error{SizeBoundExceeded} when the
/// pair count exceeds `cap`.
Classification classify(const GroupPtr& group, std::size_t max_size, std::size_t oracle_arity = 2,
                        std::size_t cap = kDefaultSizeCap);

/// All acts of size ≤ max_size up to isomorphism, as orbit-class multisets.
std::vector<ClassifiedAct> enumerate_acts(const ConjugacyClassTable& classes, std::size_t max_size);

}  // namespace actgeo
