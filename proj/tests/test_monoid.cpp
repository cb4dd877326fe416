#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "pamdt/monoid.hpp"

using namespace pamdt;

namespace {

RawMonoid raw_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_monoid_text(in);
}

bool mentions(const std::vector<std::string>& msgs, const std::string& frag) {
  for (const auto& m : msgs)
    if (m.find(frag) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("stock monoids have the expected tables") {
  auto z2 = cyclic_group(2);
  CHECK(z2.size() == 2);
  CHECK(z2.zero() == z2.require("0"));
  CHECK(z2.sum(z2.require("1"), z2.require("1")) == z2.require("0"));

  auto z3 = cyclic_group(3);
  CHECK(z3.sum(z3.require("1"), z3.require("2")) == z3.require("0"));
  CHECK(z3.sum(z3.require("2"), z3.require("2")) == z3.require("1"));

  auto t2 = truncated_naturals(2);
  CHECK(t2.sum(t2.require("1"), t2.require("1")) == t2.require("2"));
  CHECK_FALSE(t2.defined(t2.require("1"), t2.require("2")));
  CHECK_FALSE(t2.defined(t2.require("2"), t2.require("2")));

  auto s = single_sum_monoid();
  CHECK(s.sum(s.require("a"), s.require("b")) == s.require("c"));
  CHECK_FALSE(s.defined(s.require("a"), s.require("a")));
  CHECK_FALSE(s.defined(s.require("a"), s.require("c")));

  auto tr = trivial_monoid(3);
  CHECK(tr.size() == 4);
  for (ElemId a = 1; a < 4; ++a)
    for (ElemId b = 1; b < 4; ++b) CHECK_FALSE(tr.defined(a, b));

  CHECK(cyclic_group(1).size() == 1);
  CHECK(trivial_monoid(0).size() == 1);
  CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
  CHECK_THROWS_AS(truncated_naturals(-1), std::invalid_argument);
}

TEST_CASE("unit laws are filled in automatically") {
  auto m = single_sum_monoid();
  for (ElemId a = 0; a < m.size(); ++a) {
    CHECK(m.sum(m.zero(), a) == a);
    CHECK(m.sum(a, m.zero()) == a);
  }
}

TEST_CASE("validation takes the symmetric closure of the entries") {
  auto res = validate_monoid(raw_from_text("elements: 0 a b c\n"
                                           "zero: 0\n"
                                           "b + a = c\n"));
  REQUIRE(res.ok());
  const auto& m = *res.monoid;
  CHECK(m.sum(m.require("a"), m.require("b")) == m.require("c"));
}

TEST_CASE("validation reports carrier problems") {
  auto dup = validate_monoid(raw_from_text("elements: 0 a a\nzero: 0\n"));
  CHECK_FALSE(dup.ok());
  CHECK(mentions(dup.violations, "duplicate element"));

  auto nozero = validate_monoid(raw_from_text("elements: a b\nzero: 0\n"));
  CHECK_FALSE(nozero.ok());
  CHECK((mentions(nozero.violations, "missing from the element list") ||
         mentions(nozero.violations, "missing from element list")));

  RawMonoid badname;
  badname.elements = {"0", "a+b"};
  badname.zero = "0";
  auto bn = validate_monoid(badname);
  CHECK_FALSE(bn.ok());
  CHECK(mentions(bn.violations, "name not allowed"));

  auto unknown = validate_monoid(raw_from_text("elements: 0 a\n"
                                               "zero: 0\n"
                                               "a + q = a\n"));
  CHECK_FALSE(unknown.ok());
  CHECK(mentions(unknown.violations, "unknown element 'q'"));
}

TEST_CASE("validation rejects conflicting and asymmetric tables") {
  auto res = validate_monoid(raw_from_text("elements: 0 a b c d\n"
                                           "zero: 0\n"
                                           "a + b = c\n"
                                           "b + a = d\n"));
  CHECK_FALSE(res.ok());
  CHECK(mentions(res.violations, "conflicting values"));
}

TEST_CASE("validation rejects explicit unit-law violations") {
  auto res = validate_monoid(raw_from_text("elements: 0 a b\n"
                                           "zero: 0\n"
                                           "0 + a = b\n"));
  CHECK_FALSE(res.ok());
  CHECK(mentions(res.violations, "unit axiom"));
}

TEST_CASE("validation rejects associativity coherence failures") {
  auto res = validate_monoid(raw_from_text("elements: 0 a b c\n"
                                           "zero: 0\n"
                                           "a + b = c\n"
                                           "a + c = b\n"));
  CHECK_FALSE(res.ok());
  CHECK(mentions(res.violations, "coherence violated"));
}

TEST_CASE("validation rejects filtered descriptions") {
  auto raw = raw_from_text("elements: 0 1 2\nzero: 0\nlevel 0:\nlevel 1:\n"
                           "1 + 1 = 2\n");
  CHECK_FALSE(validate_monoid(raw).ok());
  CHECK(validate_filtered_monoid(raw).ok());
}

TEST_CASE("multiset composability and totals") {
  auto z3 = cyclic_group(3);
  CHECK(z3.composable({}));
  CHECK(z3.multiset_sum({}) == z3.zero());
  CHECK(z3.multiset_sum({1}) == 1);
  CHECK(z3.multiset_sum({1, 1, 1}) == 0);
  CHECK(z3.multiset_sum({2, 2, 2, 2}) == 2);

  auto t2 = truncated_naturals(2);
  CHECK(t2.composable({1, 1}));
  CHECK_FALSE(t2.composable({1, 1, 1}));
  CHECK_FALSE(t2.composable({2, 2}));
  CHECK(t2.composable({1, 1, 0, 0}));
  CHECK_THROWS_AS(t2.multiset_sum({1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(t2.composable({99}), std::out_of_range);

  auto s = single_sum_monoid();
  CHECK(s.composable({s.require("a"), s.require("b")}));
  CHECK_FALSE(s.composable({s.require("a"), s.require("a"), s.require("b")}));
}

TEST_CASE("composability matches the exhaustive reduction-order oracle") {
  // Every multiset over each stock monoid, checked against a search that
  // tries all reduction orders: the tri-state must never come back mixed,
  // and the memoized search must agree with it exactly.
  std::vector<PartialMonoid> fixtures = {
      cyclic_group(2),   cyclic_group(3),      trivial_monoid(2),
      trivial_monoid(3), truncated_naturals(2), truncated_naturals(3),
      single_sum_monoid()};
  for (const auto& m : fixtures) {
    const ElemId n = static_cast<ElemId>(m.size());
    std::vector<Multiset> pool = {{}};
    for (int round = 0; round < 4; ++round) {
      std::vector<Multiset> next;
      for (const auto& ms : pool)
        for (ElemId e = ms.empty() ? 0 : ms.back(); e < n; ++e) {
          Multiset grown = ms;
          grown.push_back(e);
          next.push_back(grown);
        }
      for (const auto& ms : next) {
        auto rep = oracles::reduce_all_orders(m, ms);
        REQUIRE(rep.outcome != oracles::Reduction::mixed);
        bool expected = rep.outcome == oracles::Reduction::all_agree;
        REQUIRE(m.composable(ms) == expected);
        if (expected) REQUIRE(m.multiset_sum(ms) == *rep.value);
      }
      pool = std::move(next);
    }
  }
}

TEST_CASE("random valid monoids satisfy the axioms and agree with the oracle") {
  std::mt19937 rng(911);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = oracles::random_valid_monoid(rng, 6);
    CHECK(oracles::axiom_scan(m).empty());
    for (int t = 0; t < 30; ++t) {
      auto ms = oracles::random_multiset(rng, m, 5);
      auto rep = oracles::reduce_all_orders(m, ms);
      REQUIRE(rep.outcome != oracles::Reduction::mixed);
      REQUIRE(m.composable(ms) ==
              (rep.outcome == oracles::Reduction::all_agree));
      if (rep.value) REQUIRE(m.multiset_sum(ms) == *rep.value);
    }
  }
}

TEST_CASE("composable tuples enumerate in lexicographic order") {
  auto z2 = cyclic_group(2);
  auto all = z2.composable_tuples(3);
  REQUIRE(all.size() == 8);  // groups compose everything
  CHECK(all.front().entries == std::vector<ElemId>{0, 0, 0});
  CHECK(all.back().entries == std::vector<ElemId>{1, 1, 1});
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].entries < all[i].entries);
  for (const auto& t : all) CHECK(t.certified);

  auto tr = trivial_monoid(2);
  // Only tuples with at most one nonzero entry are composable.
  CHECK(tr.composable_tuples(2).size() == 5);
  CHECK(tr.composable_tuples(0).size() == 1);

  auto t2 = truncated_naturals(2);
  CHECK(t2.composable_tuples(2).size() == 6);
  CHECK(t2.composable_tuples(3).size() == 10);

  CHECK_THROWS_AS(z2.composable_tuples(-1), std::invalid_argument);
}

TEST_CASE("defined pairs are unordered and include the unit row") {
  auto z3 = cyclic_group(3);
  auto pairs = z3.defined_pairs();
  CHECK(pairs.size() == 6);  // three unit pairs plus (1,1), (1,2), (2,2)
  for (const auto& [pair, value] : pairs) {
    CHECK(pair.first <= pair.second);
    CHECK(z3.sum(pair.first, pair.second) == value);
  }
}

TEST_CASE("canonical text is stable and round-trips") {
  auto z2 = cyclic_group(2);
  CHECK(z2.canonical_text() ==
        "elements: 0 1\n"
        "zero: 0\n"
        "0 + 0 = 0\n"
        "0 + 1 = 1\n"
        "1 + 1 = 0\n");
  auto res = validate_monoid(raw_from_text(z2.canonical_text()));
  REQUIRE(res.ok());
  CHECK(res.monoid->hash() == z2.hash());
  CHECK(cyclic_group(3).hash() != z2.hash());
}

TEST_CASE("filtered truncated naturals grow one total per level") {
  auto f = filtered_truncated_naturals(3);
  REQUIRE(f.level_count() == 3);
  CHECK(f.top().size() == 4);
  // Level k admits nonzero sums with total at most k + 1.
  CHECK_FALSE(f.level(0).defined(1, 1));
  CHECK(f.level(1).defined(1, 1));
  CHECK_FALSE(f.level(1).defined(1, 2));
  CHECK(f.level(2).defined(1, 2));

  CHECK(f.composable_level({}) == 0);
  CHECK(f.composable_level({3}) == 0);
  CHECK(f.composable_level({1, 1}) == 1);
  CHECK(f.composable_level({1, 1, 1}) == 2);
  CHECK(f.composable_level({1, 2}) == 2);
  CHECK_FALSE(f.composable_level({2, 2}).has_value());
  CHECK_THROWS_AS(filtered_truncated_naturals(0), std::invalid_argument);
}

TEST_CASE("each filtration level embeds in the next") {
  auto f = filtered_truncated_naturals(4);
  for (std::size_t lv = 0; lv + 1 < f.level_count(); ++lv) {
    const auto& lo = f.level(lv);
    const auto& hi = f.level(lv + 1);
    for (const auto& [pair, value] : lo.defined_pairs())
      CHECK(hi.sum(pair.first, pair.second) == value);
  }
}

TEST_CASE("constant filtrations repeat one monoid") {
  auto m = cyclic_group(3);
  auto f = constant_filtration(m, 3);
  REQUIRE(f.level_count() == 3);
  for (std::size_t lv = 0; lv < 3; ++lv)
    CHECK(f.level(lv).hash() == m.hash());
  CHECK(f.composable_level({1, 1, 1}) == 0);
  CHECK_THROWS_AS(constant_filtration(m, 0), std::invalid_argument);
}

TEST_CASE("filtered validation rejects a level that redefines a sum") {
  auto res = validate_filtered_monoid(
      raw_from_text("elements: 0 1 2 3\n"
                    "zero: 0\n"
                    "level 0:\n"
                    "1 + 1 = 2\n"
                    "level 1:\n"
                    "1 + 1 = 3\n"));
  CHECK_FALSE(res.ok());
  CHECK(mentions(res.violations, "level 1:"));
  CHECK(mentions(res.violations, "conflicting values"));
}

TEST_CASE("element lookup") {
  auto m = single_sum_monoid();
  CHECK(m.find("b") == m.require("b"));
  CHECK_FALSE(m.find("missing").has_value());
  CHECK_THROWS_AS(m.require("missing"), std::out_of_range);
  CHECK_THROWS_AS(m.sum(0, 99), std::out_of_range);
}
