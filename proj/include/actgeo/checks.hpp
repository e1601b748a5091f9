#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "actgeo/io.hpp"

namespace actgeo {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status);

/// One desk-scale verification. A failing check carries a witness that can be
/// replayed with the core operations (congruence vectors, generator images, act
/// orbit types).
struct CheckResult {
  std::string name;
  std::string anchor;
  std::string statement;
  io::Json parameters = io::Json::object();
  CheckStatus status = CheckStatus::Pass;
  io::Json witness;  // null unless failed
  std::string note;
};

struct CheckReport {
  std::size_t group_order = 0;
  std::size_t max_arity = 0;
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Suite identifiers accepted by `run_checks`, in execution order ("all" excluded).
const std::vector<std::string>& check_suites();

/// Runs one suite, or every suite for "all", against acts over `group`.
/// Oracle comparisons use arities 1..max_arity. Throws Error{ParseError} for an
/// unknown suite name.
CheckReport run_checks(const GroupPtr& group, std::string_view suite, std::size_t max_arity = 2,
                       std::size_t cap = kDefaultSizeCap);

/// Deterministic JSON; contains no timings.
io::Json to_json(const CheckReport& report);

}  // namespace actgeo
