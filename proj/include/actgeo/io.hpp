#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "actgeo/equivalence.hpp"

namespace actgeo::io {

using Json = nlohmann::ordered_json;

/// A monoid read from a group file; `group` is null when the table has no inverses.
struct LoadedMonoid {
  MonoidPtr monoid;
  GroupPtr group;
  std::vector<std::string> names;  // empty unless the file provides them
};

/// `{"order": n, "table": [[...]], "names": [...]?}`.
/// Throws Error{ParseError} on malformed JSON or shape, and the validation errors of
/// `validate_monoid`.
LoadedMonoid parse_group(std::string_view text);
LoadedMonoid load_group(const std::filesystem::path& path);

/// `{"size": m, "action": [[...]]}` with `action[s][a] = s·a`.
Act parse_act_json(const MonoidPtr& monoid, std::string_view text);
Act load_act(const MonoidPtr& monoid, const std::filesystem::path& path);

/// Evaluates an act expression:
///
///   expr   := term ('+' term)*            coproduct
///   term   := atom (('^' | '*') INT)*     power, copower
///   atom   := 'S' | 'z' | 'coset' '(' subgroup ')' | 'file' '(' path ')' | '(' expr ')'
///   subgroup := '[' INT (',' INT)* ']' | class label such as c2 or c2b
///
/// Whitespace is ignored outside file paths. Relative paths resolve against `base`.
/// Throws Error{ParseError} carrying the column of the offending token.
Act parse_act(const MonoidPtr& monoid, std::string_view expression,
              const std::filesystem::path& base = {}, std::size_t cap = kDefaultSizeCap);

/// Resolves "[0,3]" or a label printed by `subgroups_json`.
Subgroup parse_subgroup(const ConjugacyClassTable& classes, std::string_view spec);

Json to_json(const Congruence& t);
Json to_json(const Act& act);
Json subgroups_json(const ConjugacyClassTable& classes);
Json decomposition_json(const Act& act, const ConjugacyClassTable& classes);
Json form_json(const CanonicalForm& form, const ConjugacyClassTable& classes);
Json verdict_json(const Verdict& verdict, const ConjugacyClassTable& classes);
Json lattice_json(const ClosedCongruenceLattice& lattice);
Json stability_json(const StabilityReport& report);
Json classification_json(const Classification& result, const ConjugacyClassTable& classes);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& json);

}  // namespace actgeo::io
