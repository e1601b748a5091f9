#include "actgeo/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "actgeo/error.hpp"

namespace actgeo::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Parses JSON, translating the byte offset of a syntax error into line and column.
Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column) +
               ": malformed JSON");
  }
}

Element element_at(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) parse_fail(where + " is not an integer");
  const auto v = value.get<std::int64_t>();
  if (v < 0 || v > std::int64_t{0xffffffff})
    throw Error(ErrorCode::OutOfRangeEntry, where + " = " + std::to_string(v) + " is out of range");
  return static_cast<Element>(v);
}

std::size_t count_at(const Json& object, const char* key) {
  if (!object.contains(key)) parse_fail(std::string("missing \"") + key + "\"");
  const Json& v = object[key];
  if (!v.is_number_unsigned()) parse_fail(std::string("\"") + key + "\" is not a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::vector<Element>> matrix_at(const Json& object, const char* key, std::size_t rows,
                                            std::size_t cols) {
  if (!object.contains(key) || !object[key].is_array())
    parse_fail(std::string("missing array \"") + key + "\"");
  const Json& m = object[key];
  if (m.size() != rows)
    parse_fail(std::string("\"") + key + "\" has " + std::to_string(m.size()) + " rows, expected " +
               std::to_string(rows));
  std::vector<std::vector<Element>> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_name = std::string(key) + "[" + std::to_string(r) + "]";
    if (!m[r].is_array() || m[r].size() != cols)
      parse_fail(row_name + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out[r].push_back(element_at(m[r][c], row_name + "[" + std::to_string(c) + "]"));
  }
  return out;
}

GroupPtr need_group(const MonoidPtr& monoid) {
  auto g = group_view(monoid);
  if (!g) throw Error(ErrorCode::MonoidNotGroup, "subgroups need a group");
  return g;
}

// --- expression parser --------------------------------------------------------

class ExpressionParser {
public:
  ExpressionParser(const MonoidPtr& monoid, std::string_view text,
                   const std::filesystem::path& base, std::size_t cap)
      : monoid_(monoid), text_(text), base_(base), cap_(cap) {}

  Act run() {
    Act out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    parse_fail("column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::size_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Act expr() {
    std::vector<Act> parts{term()};
    while (accept('+')) parts.push_back(term());
    if (parts.size() == 1) return parts.front();
    return coproduct(parts).act;
  }

  Act term() {
    Act out = atom();
    for (;;) {
      if (accept('^')) {
        const std::size_t at = pos_;
        const std::size_t n = integer();
        if (n == 0) {
          pos_ = at;
          fail("power exponent must be positive");
        }
        out = power_act(out, n, cap_);
      } else if (accept('*')) {
        const std::size_t at = pos_;
        const std::size_t n = integer();
        if (n == 0) {
          pos_ = at;
          fail("copower count must be positive");
        }
        out = copower_act(out, n, cap_);
      } else {
        return out;
      }
    }
  }

  Act atom() {
    skip_space();
    if (accept('(')) {
      Act out = expr();
      expect(')');
      return out;
    }
    const std::size_t start = pos_;
    const std::string name = word();
    if (name == "S") return regular_act(monoid_);
    if (name == "z") return zero_act(monoid_);
    if (name == "coset") {
      expect('(');
      skip_space();
      const std::size_t from = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      const std::string spec(text_.substr(from, pos_ - from));
      expect(')');
      try {
        if (!classes_) classes_ = subgroup_conjugacy_classes(need_group(monoid_));
        return coset_act(parse_subgroup(*classes_, spec));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        pos_ = from;
        fail(e.what());
      }
    }
    if (name == "file") {
      expect('(');
      const std::size_t from = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(from, pos_ - from));
      expect(')');
      const auto first = path.find_first_not_of(" \t");
      const auto last = path.find_last_not_of(" \t");
      if (first == std::string::npos) {
        pos_ = from;
        fail("empty file path");
      }
      std::filesystem::path p = path.substr(first, last - first + 1);
      if (p.is_relative() && !base_.empty()) p = base_ / p;
      return load_act(monoid_, p);
    }
    pos_ = start;
    if (name.empty()) fail("expected S, z, coset(...), file(...) or '('");
    fail("unknown act '" + name + "'");
  }

  MonoidPtr monoid_;
  std::string_view text_;
  std::filesystem::path base_;
  std::size_t cap_;
  std::size_t pos_ = 0;
  std::optional<ConjugacyClassTable> classes_;
};

Json members_json(std::span<const Element> members) {
  Json out = Json::array();
  for (Element m : members) out.push_back(m);
  return out;
}

Json class_list_json(const std::vector<std::size_t>& classes) {
  Json out = Json::array();
  for (auto c : classes) out.push_back(class_label(c));
  return out;
}

}  // namespace

LoadedMonoid parse_group(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("group file must be a JSON object");
  const std::size_t n = count_at(doc, "order");
  if (n == 0) parse_fail("\"order\" must be positive");
  LoadedMonoid out;
  out.monoid = validate_monoid(matrix_at(doc, "table", n, n));
  try {
    out.group = as_group(*out.monoid);
    out.monoid = out.group;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAGroup) throw;
  }
  if (doc.contains("names")) {
    const Json& names = doc["names"];
    if (!names.is_array() || names.size() != n)
      parse_fail("\"names\" must list " + std::to_string(n) + " strings");
    for (const auto& name : names) {
      if (!name.is_string()) parse_fail("\"names\" must list strings");
      out.names.push_back(name.get<std::string>());
    }
  }
  return out;
}

LoadedMonoid load_group(const std::filesystem::path& path) {
  try {
    return parse_group(read_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    parse_fail(path.string() + ": " + e.what());
  }
}

Act parse_act_json(const MonoidPtr& monoid, std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) parse_fail("act file must be a JSON object");
  const std::size_t size = count_at(doc, "size");
  if (size == 0) throw Error(ErrorCode::EmptyCarrier, "act has no points");
  return validate_act(monoid, matrix_at(doc, "action", monoid->order(), size));
}

Act load_act(const MonoidPtr& monoid, const std::filesystem::path& path) {
  try {
    return parse_act_json(monoid, read_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    parse_fail(path.string() + ": " + e.what());
  }
}

Act parse_act(const MonoidPtr& monoid, std::string_view expression,
              const std::filesystem::path& base, std::size_t cap) {
  return ExpressionParser(monoid, expression, base, cap).run();
}

Subgroup parse_subgroup(const ConjugacyClassTable& classes, std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    std::vector<Element> members;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        parse_fail("bad subgroup member '" + item + "'");
      if (item.size() > 9) throw Error(ErrorCode::OutOfRangeEntry, "subgroup member " + item);
      members.push_back(static_cast<Element>(std::stoul(item)));
    }
    return Subgroup(classes.group, std::move(members));
  }
  if (s.size() >= 2 && s[0] == 'c' && std::isdigit(static_cast<unsigned char>(s[1]))) {
    std::size_t i = 1, number = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) && number < 100000)
      number = number * 10 + static_cast<std::size_t>(s[i++] - '0');
    if (number == 0 || number > classes.size())
      parse_fail("no subgroup class " + s.substr(0, i));
    const auto& members = classes.classes[number - 1];
    const std::string suffix = s.substr(i);
    std::size_t pos = 0;
    if (suffix.size() == 1 && std::islower(static_cast<unsigned char>(suffix[0]))) {
      pos = static_cast<std::size_t>(suffix[0] - 'a');
    } else if (suffix.size() == 2 && std::islower(static_cast<unsigned char>(suffix[0])) &&
               std::islower(static_cast<unsigned char>(suffix[1]))) {
      pos = static_cast<std::size_t>(suffix[0] - 'a' + 1) * 26 + static_cast<std::size_t>(suffix[1] - 'a');
    } else if (!suffix.empty()) {
      parse_fail("bad subgroup label '" + s + "'");
    }
    if (pos >= members.size()) parse_fail("class " + s.substr(0, i) + " has no member " + suffix);
    return classes.subgroups[members[pos]];
  }
  parse_fail("expected a member list like [0,3] or a class label like c2a, got '" + s + "'");
}

// --- serialization -------------------------------------------------------------

Json to_json(const Congruence& t) {
  Json out = Json::array();
  for (Element b : t.blocks()) out.push_back(b);
  return out;
}

Json to_json(const Act& act) {
  Json action = Json::array();
  for (Element s = 0; s < act.monoid().order(); ++s) action.push_back(members_json(act.row(s)));
  return Json{{"size", act.size()}, {"action", std::move(action)}};
}

Json subgroups_json(const ConjugacyClassTable& classes) {
  Json list = Json::array();
  for (std::size_t i = 0; i < classes.subgroups.size(); ++i) {
    const auto& h = classes.subgroups[i];
    const auto cls = classes.class_of[i];
    list.push_back(Json{{"label", subgroup_label(classes, i)},
                        {"class", cls + 1},
                        {"order", h.order()},
                        {"normal", static_cast<bool>(classes.normal[cls])},
                        {"members", members_json(h.members())}});
  }
  return Json{{"group_order", classes.group->order()},
              {"subgroups", std::move(list)},
              {"classes", classes.size()}};
}

Json decomposition_json(const Act& act, const ConjugacyClassTable& classes) {
  const auto d = orbit_decomposition(act, classes);
  Json orbits = Json::array();
  for (const auto& o : d.orbits) {
    orbits.push_back(Json{{"representative", o.representative},
                          {"elements", members_json(o.elements)},
                          {"stabilizer", members_json(o.stabilizer.members())},
                          {"stabilizer_label",
                           subgroup_label(classes, classes.subgroup_index(o.stabilizer))},
                          {"class", o.class_id + 1},
                          {"zero", o.is_zero()}});
  }
  return Json{{"size", act.size()},
              {"orbit_count", d.orbits.size()},
              {"zero_orbits", d.zero_orbits},
              {"orbits", std::move(orbits)}};
}

Json form_json(const CanonicalForm& form, const ConjugacyClassTable& classes) {
  Json list = Json::array();
  for (auto [cls, mult] : form.classes)
    list.push_back(Json{{"class", cls + 1},
                        {"order", classes.representative(cls).order()},
                        {"normal", static_cast<bool>(classes.normal[cls])},
                        {"mult", mult}});
  return Json{{"zero_sig", form.zero_sig}, {"classes", std::move(list)}};
}

Json verdict_json(const Verdict& v, const ConjugacyClassTable& classes) {
  Json out{{"verdict", std::string(to_string(v.kind))}};
  if (v.reason) out["reason"] = std::string(to_string(*v.reason));
  out["justification"] = v.justification;
  out["forms"] = Json{{"first", form_json(v.form_a, classes)},
                      {"second", form_json(v.form_b, classes)}};
  if (v.witness)
    out["witness"] = Json{{"arity", v.witness->arity},
                          {"congruence", to_json(v.witness->congruence)},
                          {"closed_for", v.witness->closed_for_first ? "first" : "second"}};
  out["oracle_arity"] = v.oracle_arity;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json lattice_json(const ClosedCongruenceLattice& lattice) {
  Json members = Json::array();
  for (const auto& m : lattice.members) members.push_back(to_json(m));
  Json covers = Json::array();
  for (auto [lo, hi] : lattice.covers()) covers.push_back(Json::array({lo, hi}));
  return Json{{"arity", lattice.arity()},
              {"free_size", lattice.free.size()},
              {"target_size", lattice.target.size()},
              {"count", lattice.size()},
              {"members", std::move(members)},
              {"covers", std::move(covers)}};
}

Json stability_json(const StabilityReport& report) {
  Json out{{"stable", report.stable}, {"max_arity", report.max_arity}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = Json{{"arity", c.arity},
                                 {"t1", to_json(c.t1)},
                                 {"t2", to_json(c.t2)},
                                 {"witness", members_json(c.witness)}};
  }
  return out;
}

Json classification_json(const Classification& result, const ConjugacyClassTable& classes) {
  Json buckets = Json::array();
  for (const auto& b : result.buckets) {
    Json members = Json::array();
    for (auto i : b.members) members.push_back(class_list_json(result.acts[i].orbit_classes));
    buckets.push_back(Json{{"form", form_json(b.form, classes)}, {"members", std::move(members)}});
  }
  Json cross = Json::array();
  for (std::size_t i = 0; i < result.buckets.size(); ++i)
    for (std::size_t j = i; j < result.buckets.size(); ++j) {
      const auto& t = result.tallies[i][j];
      if (t.equivalent + t.not_equivalent + t.unknown == 0) continue;
      cross.push_back(Json{{"buckets", Json::array({i, j})},
                           {"equivalent", t.equivalent},
                           {"not_equivalent", t.not_equivalent},
                           {"unknown", t.unknown}});
    }
  auto pairs_json = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Json out = Json::array();
    for (auto [i, j] : pairs)
      out.push_back(Json::array({class_list_json(result.acts[i].orbit_classes),
                                 class_list_json(result.acts[j].orbit_classes)}));
    return out;
  };
  return Json{{"max_size", result.max_size},
              {"oracle_arity", result.oracle_arity},
              {"act_count", result.acts.size()},
              {"class_count", result.buckets.size()},
              {"buckets", std::move(buckets)},
              {"pair_verdicts", std::move(cross)},
              {"unknown_pairs", pairs_json(result.unknown_pairs)},
              {"conflicting_pairs", pairs_json(result.conflicting_pairs)},
              {"coherent", result.coherent()}};
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace actgeo::io
