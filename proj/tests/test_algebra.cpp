#include <doctest.h>

#include "actgeo/error.hpp"
#include "support.hpp"

using namespace actgeo;
using fixture::s3;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

Subgroup sub(const GroupPtr& g, std::vector<Element> m) { return Subgroup(g, std::move(m)); }

}  // namespace

TEST_CASE("validate_monoid accepts group and trivial tables") {
  const auto z2 = validate_monoid({{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK(z2->identity() == 0);
  const auto one = validate_monoid({{0}});
  CHECK(one->identity() == 0);
}

TEST_CASE("validate_monoid finds an identity that is not element 0") {
  const auto m = validate_monoid({{0, 0}, {0, 1}});
  CHECK(m->identity() == 1);
}

TEST_CASE("validate_monoid rejects bad tables") {
  CHECK(code_of([] { validate_monoid({{0, 1}, {0, 1}}); }) == ErrorCode::NoIdentity);
  CHECK(code_of([] { validate_monoid({{0, 1}, {1}}); }) == ErrorCode::NotSquare);
  CHECK(code_of([] { validate_monoid({{0, 2}, {1, 0}}); }) == ErrorCode::OutOfRangeEntry);
  // x·y = 1 for y = 0 breaks associativity once an identity row exists
  CHECK(code_of([] { validate_monoid({{0, 1, 2}, {1, 1, 1}, {2, 0, 2}}); }) ==
        ErrorCode::NotAssociative);
}

TEST_CASE("left-zero table has no two-sided identity by exhaustive search") {
  const std::vector<std::vector<Element>> t{{0, 1}, {0, 1}};
  int identities = 0;
  for (Element e = 0; e < 2; ++e) {
    bool ok = true;
    for (Element a = 0; a < 2; ++a) ok = ok && t[e][a] == a && t[a][e] == a;
    identities += ok;
  }
  CHECK(identities == 0);
  CHECK(code_of([&] { validate_monoid(t); }) == ErrorCode::NoIdentity);
}

TEST_CASE("as_group") {
  const auto z2 = as_group(*validate_monoid({{0, 1}, {1, 0}}));
  CHECK(z2->inverses() == std::vector<Element>{0, 1});
  // {1, e} with e·e = e: element 1 is the identity, element 0 is idempotent
  CHECK(code_of([] { as_group(*validate_monoid({{0, 0}, {0, 1}})); }) == ErrorCode::NotAGroup);
  const auto g = s3();
  CHECK(g->order() == 6);
  for (Element a = 0; a < 6; ++a) {
    int hits = 0;
    for (Element b = 0; b < 6; ++b) hits += g->mul(a, b) == 0 && g->mul(b, a) == 0;
    CHECK(hits == 1);
    CHECK(g->mul(a, g->inverse(a)) == g->identity());
  }
  CHECK(group_view(g) == g);
  CHECK(group_view(validate_monoid({{0, 0}, {0, 1}})) == nullptr);
}

TEST_CASE("enumerate_subgroups matches exhaustive subset closure") {
  for (const auto& g : {trivial_group(), fixture::z(2), fixture::z(3), fixture::z(4),
                        fixture::z(5), fixture::z(6), s3()}) {
    const auto subs = enumerate_subgroups(g);
    auto brute = oracle::subgroups(*g);
    std::vector<std::vector<Element>> got;
    for (const auto& h : subs) got.emplace_back(h.members().begin(), h.members().end());
    std::sort(brute.begin(), brute.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == brute);
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    for (const auto& h : subs) CHECK(g->order() % h.order() == 0);
  }
  CHECK(enumerate_subgroups(fixture::z(2)).size() == 2);
  CHECK(enumerate_subgroups(fixture::z(4)).size() == 3);
  CHECK(enumerate_subgroups(s3()).size() == 6);
  for (std::size_t p : {2, 3, 5}) CHECK(enumerate_subgroups(fixture::z(p)).size() == 2);
}

TEST_CASE("Subgroup validation") {
  CHECK(code_of([] { sub(s3(), {0, 3, 4}); }) == ErrorCode::NotASubgroup);
  CHECK(code_of([] { sub(s3(), {0, 9}); }) == ErrorCode::OutOfRangeEntry);
  CHECK(sub(s3(), {3, 0, 3}).members().size() == 2);
}

TEST_CASE("conjugation in S3") {
  const auto g = s3();
  const auto h12 = sub(g, {0, 3});
  CHECK(conjugate_subgroup(h12, 0) == h12);
  // elementwise α⁻¹hα from the permutation table
  const auto& p = fixture::s3_perms();
  std::vector<Element> expect;
  for (Element h : h12.members()) {
    const Element inv = g->inverse(1);
    expect.push_back(g->mul(g->mul(inv, h), 1));
  }
  CHECK(conjugate_subgroup(h12, 1) == sub(g, expect));
  CHECK(conjugate_subgroup(h12, 1) == sub(g, {0, 5}));  // ⟨(23)⟩
  CHECK(p[5] == fixture::Perm{0, 2, 1});
  const auto a3 = sub(g, {0, 1, 2});
  for (Element a = 0; a < 6; ++a) CHECK(conjugate_subgroup(a3, a) == a3);
}

TEST_CASE("are_conjugate and conjugate inclusion") {
  const auto g = s3();
  const auto h12 = sub(g, {0, 3}), h13 = sub(g, {0, 4}), a3 = sub(g, {0, 1, 2});
  CHECK(are_conjugate(h12, h12) == Element{0});
  const auto w = are_conjugate(h12, h13);
  REQUIRE(w);
  CHECK(conjugate_subgroup(h12, *w) == h13);
  CHECK_FALSE(are_conjugate(h12, a3));
  CHECK(exists_conjugate_inclusion(Subgroup::trivial(g), h13) == Element{0});
  CHECK(exists_conjugate_inclusion(h12, Subgroup::whole(g)) == Element{0});
  CHECK_FALSE(exists_conjugate_inclusion(a3, h12));
  const auto inc = exists_conjugate_inclusion(h13, h12);
  REQUIRE(inc);
  CHECK(conjugate_subgroup(h13, *inc).is_subset_of(h12));
}

TEST_CASE("is_normal") {
  const auto g = s3();
  CHECK(is_normal(Subgroup::trivial(g)));
  CHECK(is_normal(sub(g, {0, 1, 2})));
  CHECK_FALSE(is_normal(sub(g, {0, 3})));
}

TEST_CASE("conjugacy class tables") {
  const auto z4 = subgroup_conjugacy_classes(fixture::z(4));
  CHECK(z4.size() == 3);
  for (std::size_t c = 0; c < z4.size(); ++c) CHECK(z4.normal[c]);
  CHECK(subgroup_conjugacy_classes(trivial_group()).size() == 1);

  const auto t = subgroup_conjugacy_classes(s3());
  REQUIRE(t.size() == 4);
  CHECK(t.classes[0].size() == 1);
  CHECK(t.classes[1].size() == 3);
  CHECK(t.classes[2].size() == 1);
  CHECK(t.representative(2).order() == 3);
  CHECK(t.whole_class() == 3);
  CHECK(t.normal == std::vector<bool>{true, false, true, true});
  CHECK(class_label(0) == "c1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.subgroups.size(); ++i) labels.push_back(subgroup_label(t, i));
  CHECK(labels == std::vector<std::string>{"c1a", "c2a", "c2b", "c2c", "c3a", "c4a"});
  CHECK(t.orbit_size(1) == 3);
}

TEST_CASE("property: conjugation composes and are_conjugate is an equivalence") {
  for (const auto& g : {fixture::z(4), fixture::z(6), s3()}) {
    const auto subs = enumerate_subgroups(g);
    const auto table = subgroup_conjugacy_classes(g);
    for (const auto& h : subs) {
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          CHECK(conjugate_subgroup(conjugate_subgroup(h, a), b) ==
                conjugate_subgroup(h, g->mul(a, b)));
      CHECK(are_conjugate(h, h));
      // normal iff the class is a singleton
      CHECK(is_normal(h) == (table.classes[table.class_index(h)].size() == 1));
    }
    for (const auto& h1 : subs)
      for (const auto& h2 : subs) {
        const auto w = are_conjugate(h1, h2);
        const auto back = are_conjugate(h2, h1);
        CHECK(w.has_value() == back.has_value());
        if (w) CHECK(conjugate_subgroup(h2, g->inverse(*w)) == h1);
        CHECK(w.has_value() == (table.class_index(h1) == table.class_index(h2)));
        for (const auto& h3 : subs) {
          const auto w2 = are_conjugate(h2, h3);
          if (w && w2) CHECK(conjugate_subgroup(h1, g->mul(*w, *w2)) == h3);
        }
      }
  }
}
