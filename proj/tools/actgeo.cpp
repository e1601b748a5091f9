#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "actgeo/checks.hpp"
#include "actgeo/error.hpp"
#include "actgeo/io.hpp"

namespace {

using namespace actgeo;
using io::Json;

constexpr int kExitError = 3;

std::size_t size_cap() {
  const char* env = std::getenv("ACTGEO_SIZE_CAP");
  if (!env || !*env) return kDefaultSizeCap;
  std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18)
    throw Error(ErrorCode::ParseError, "ACTGEO_SIZE_CAP must be a positive integer");
  const auto cap = std::stoull(text);
  if (cap == 0) throw Error(ErrorCode::ParseError, "ACTGEO_SIZE_CAP must be a positive integer");
  return cap;
}

GroupPtr require_group(const io::LoadedMonoid& loaded) {
  if (!loaded.group) throw Error(ErrorCode::MonoidNotGroup, "the table is a monoid, not a group");
  return loaded.group;
}

std::string join(std::span<const Element> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string form_text(const CanonicalForm& form) {
  std::string out = "zero_sig " + std::to_string(form.zero_sig) + ", classes {";
  bool first = true;
  for (auto [cls, mult] : form.classes) {
    out += (first ? "" : ", ") + class_label(cls) + ":" + std::to_string(mult);
    first = false;
  }
  return out + "}";
}

struct Options {
  std::string group_path;
  std::vector<std::string> expressions;
  std::size_t max_arity = 2;
  std::size_t max_size = 6;
  std::size_t arity = 1;
  std::string dot_path;
  std::string suite = "all";
  bool json = false;
};

int cmd_validate(const Options& o) {
  const auto loaded = io::load_group(o.group_path);
  Json out{{"order", loaded.monoid->order()},
           {"identity", loaded.monoid->identity()},
           {"group", static_cast<bool>(loaded.group)}};
  std::optional<Act> act;
  if (!o.expressions.empty()) {
    act = io::parse_act(loaded.monoid, o.expressions.front(), {}, size_cap());
    out["act"] = io::to_json(*act);
  }
  if (o.json) {
    std::cout << io::dump(out);
    return 0;
  }
  std::cout << (loaded.group ? "group" : "monoid") << " of order " << loaded.monoid->order()
            << ", identity " << loaded.monoid->identity() << "\n";
  if (act) std::cout << "act of size " << act->size() << "\n";
  return 0;
}

int cmd_subgroups(const Options& o) {
  const auto classes = subgroup_conjugacy_classes(require_group(io::load_group(o.group_path)));
  if (o.json) {
    std::cout << io::dump(io::subgroups_json(classes));
    return 0;
  }
  std::cout << classes.subgroups.size() << " subgroups in " << classes.size() << " classes\n";
  for (std::size_t i = 0; i < classes.subgroups.size(); ++i) {
    const auto& h = classes.subgroups[i];
    std::cout << "  " << subgroup_label(classes, i) << "  order " << h.order()
              << (classes.normal[classes.class_of[i]] ? "  normal  " : "          ")
              << join(h.members()) << "\n";
  }
  return 0;
}

int cmd_decompose(const Options& o) {
  const auto group = require_group(io::load_group(o.group_path));
  const auto classes = subgroup_conjugacy_classes(group);
  const Act act = io::parse_act(group, o.expressions.at(0), {}, size_cap());
  if (o.json) {
    std::cout << io::dump(io::decomposition_json(act, classes));
    return 0;
  }
  const auto d = orbit_decomposition(act, classes);
  std::cout << "size " << act.size() << ", " << d.orbits.size() << " orbits, " << d.zero_orbits
            << " zero\n";
  for (const auto& orbit : d.orbits)
    std::cout << "  " << join(orbit.elements) << "  stabilizer "
              << subgroup_label(classes, classes.subgroup_index(orbit.stabilizer)) << " "
              << join(orbit.stabilizer.members()) << (orbit.is_zero() ? "  zero" : "") << "\n";
  return 0;
}

int cmd_canonical(const Options& o) {
  const auto group = require_group(io::load_group(o.group_path));
  const auto classes = subgroup_conjugacy_classes(group);
  const Act act = io::parse_act(group, o.expressions.at(0), {}, size_cap());
  const auto form = canonical_form(act, classes);
  const auto steps = reduction_steps(act, classes);
  if (o.json) {
    Json out = io::form_json(form, classes);
    out["steps"] = steps;
    std::cout << io::dump(out);
    return 0;
  }
  std::cout << form_text(form) << "\n";
  for (const auto& s : steps) std::cout << "  " << s << "\n";
  return 0;
}

int cmd_classify(const Options& o) {
  const auto group = require_group(io::load_group(o.group_path));
  const auto classes = subgroup_conjugacy_classes(group);
  const auto result = classify(group, o.max_size, o.max_arity, size_cap());
  if (o.json) {
    std::cout << io::dump(io::classification_json(result, classes));
    return 0;
  }
  std::cout << result.acts.size() << " acts of size <= " << result.max_size << " in "
            << result.buckets.size() << " classes\n";
  for (std::size_t b = 0; b < result.buckets.size(); ++b) {
    const auto& bucket = result.buckets[b];
    std::cout << "  [" << b << "] " << form_text(bucket.form) << "  (" << bucket.members.size()
              << " acts)\n";
  }
  std::cout << "unknown pairs: " << result.unknown_pairs.size()
            << ", conflicting pairs: " << result.conflicting_pairs.size() << "\n";
  return 0;
}

int cmd_stability(const Options& o) {
  const auto loaded = io::load_group(o.group_path);
  const Act act = io::parse_act(loaded.monoid, o.expressions.at(0), {}, size_cap());
  const auto report = is_geometrically_stable(act, o.max_arity, size_cap());
  if (o.json) {
    std::cout << io::dump(io::stability_json(report));
    return 0;
  }
  if (report.stable) {
    std::cout << "stable up to arity " << report.max_arity << "\n";
    return 0;
  }
  const auto& c = *report.counterexample;
  std::cout << "unstable at arity " << c.arity << "\n  t1 " << c.t1.to_string() << "\n  t2 "
            << c.t2.to_string() << "\n  witness " << join(c.witness) << "\n";
  return 0;
}

int cmd_lattice(const Options& o) {
  const auto loaded = io::load_group(o.group_path);
  const Act act = io::parse_act(loaded.monoid, o.expressions.at(0), {}, size_cap());
  const auto lattice = closed_lattice(act, o.arity, size_cap());
  if (!o.dot_path.empty()) {
    std::ofstream dot(o.dot_path, std::ios::binary);
    if (!dot) throw Error(ErrorCode::ParseError, "cannot write " + o.dot_path);
    dot << to_dot(lattice);
  }
  if (o.json) {
    std::cout << io::dump(io::lattice_json(lattice));
    return 0;
  }
  std::cout << lattice.size() << " closed congruences on F_" << lattice.arity() << " (size "
            << lattice.free.size() << ")\n";
  for (const auto& m : lattice.members) std::cout << "  " << m.to_string() << "\n";
  return 0;
}

int cmd_equiv(const Options& o) {
  const auto group = require_group(io::load_group(o.group_path));
  const auto classes = subgroup_conjugacy_classes(group);
  const Act a = io::parse_act(group, o.expressions.at(0), {}, size_cap());
  const Act b = io::parse_act(group, o.expressions.at(1), {}, size_cap());
  const auto v = decide(a, b, o.max_arity, size_cap());
  std::cout << io::dump(io::verdict_json(v, classes));
  switch (v.kind) {
    case VerdictKind::Equivalent: return 0;
    case VerdictKind::NotEquivalent: return 1;
    case VerdictKind::Unknown: return 2;
  }
  return kExitError;
}

int cmd_check(const Options& o) {
  const auto group = require_group(io::load_group(o.group_path));
  const auto report = run_checks(group, o.suite, o.max_arity, size_cap());
  std::cout << io::dump(to_json(report));
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric equivalence and closed congruences of finite S-acts"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto add = [&](const std::string& name, const std::string& help, std::size_t n_exprs,
                 std::function<int(const Options&)> fn) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("group", o.group_path, "group file (JSON)")->required();
    if (n_exprs > 0) {
      auto* opt = cmd->add_option("acts", o.expressions, "act expressions");
      opt->expected(static_cast<int>(n_exprs));
      if (name != "validate") opt->required();
    }
    cmd->callback([&run, fn] { run = fn; });
    return cmd;
  };

  add("validate", "validate a group file and optionally an act expression", 1, cmd_validate)
      ->add_flag("--json", o.json, "JSON output");
  add("subgroups", "list subgroups with their class labels", 0, cmd_subgroups)
      ->add_flag("--json", o.json, "JSON output");
  add("decompose", "orbit decomposition of an act", 1, cmd_decompose)
      ->add_flag("--json", o.json, "JSON output");
  add("canonical", "canonical form of an act", 1, cmd_canonical)
      ->add_flag("--json", o.json, "JSON output");
  {
    auto* cmd = add("classify", "classify all acts up to a size", 0, cmd_classify);
    cmd->add_option("--max-size", o.max_size, "largest act size")->capture_default_str();
    cmd->add_option("--max-arity", o.max_arity, "oracle arity bound")->capture_default_str();
    cmd->add_flag("--json", o.json, "JSON output");
  }
  {
    auto* cmd = add("stability", "geometric stability up to an arity", 1, cmd_stability);
    cmd->add_option("--max-arity", o.max_arity, "largest arity checked")->capture_default_str();
    cmd->add_flag("--json", o.json, "JSON output");
  }
  {
    auto* cmd = add("lattice", "closed congruences of F_k for a target act", 1, cmd_lattice);
    cmd->add_option("--arity", o.arity, "rank of the free act")->capture_default_str();
    cmd->add_option("--dot", o.dot_path, "write the Hasse diagram as DOT");
    cmd->add_flag("--json", o.json, "JSON output");
  }
  {
    auto* cmd = add("equiv", "decide geometric equivalence (exit 0/1/2)", 2, cmd_equiv);
    cmd->add_option("--max-arity", o.max_arity, "oracle arity bound")->capture_default_str();
  }
  {
    auto* cmd = add("check", "run verification suites", 0, cmd_check);
    cmd->add_option("--suite", o.suite, "suite name or all")->capture_default_str();
    cmd->add_option("--max-arity", o.max_arity, "oracle arity bound")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  try {
    return run(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
