#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "pamdt/homology.hpp"
#include "pamdt/nerve.hpp"

using namespace pamdt;

namespace {

SimplexId named(const SpacePtr& X, int k, const std::string& name) {
  auto id = X->level(k).find(name);
  REQUIRE_MESSAGE(id.has_value(), "missing simplex ", name);
  return *id;
}

}  // namespace

TEST_CASE("classifying space of a group lists every tuple") {
  auto B = classifying_space(cyclic_group(2), 4);
  REQUIRE(B->max_dim() == 4);
  for (int k = 0; k <= 4; ++k)
    CHECK(B->level(k).size() == (1u << k));
  CHECK(validate_identities(*B).empty());
  CHECK(B->connected());
  CHECK(B->level(0).names.front() == "()");
  CHECK(B->is_basepoint(2, named(B, 2, "(0,0)")));
  CHECK(B->meta.at("kind") == "nerve");
}

TEST_CASE("classifying space of a partial monoid lists composable tuples") {
  auto B = classifying_space(truncated_naturals(2), 3);
  // Tuples over {0, 1, 2} whose total stays at most 2.
  CHECK(B->level(0).size() == 1);
  CHECK(B->level(1).size() == 3);
  CHECK(B->level(2).size() == 6);
  CHECK(B->level(3).size() == 10);
  CHECK(validate_identities(*B).empty());

  auto T = classifying_space(trivial_monoid(2), 3);
  for (int k = 0; k <= 3; ++k)
    CHECK(T->level(k).size() == 1 + 2 * static_cast<std::size_t>(k));
}

TEST_CASE("nerve faces drop ends and merge adjacent entries") {
  auto m = cyclic_group(3);
  auto B = classifying_space(m, 3);
  SimplexId s = named(B, 2, "(1,2)");
  CHECK(B->face(2, 0, s) == named(B, 1, "(2)"));
  CHECK(B->face(2, 1, s) == named(B, 1, "(0)"));  // 1 + 2 = 0
  CHECK(B->face(2, 2, s) == named(B, 1, "(1)"));
  CHECK(B->degen(2, 0, s) == named(B, 3, "(0,1,2)"));
  CHECK(B->degen(2, 1, s) == named(B, 3, "(1,0,2)"));
  CHECK(B->degen(2, 2, s) == named(B, 3, "(1,2,0)"));

  CHECK_THROWS_AS(classifying_space(m, -1), std::invalid_argument);
}

TEST_CASE("classifying-space homology of small cyclic groups") {
  auto h2 = space_homology(*classifying_space(cyclic_group(2), 4), 3);
  CHECK(h2.betti == std::vector<int>{1, 0, 0, 0});
  CHECK(h2.torsion[1] == std::vector<Int>{2});
  CHECK(h2.torsion[2].empty());
  CHECK(h2.torsion[3] == std::vector<Int>{2});

  auto h3 = space_homology(*classifying_space(cyclic_group(3), 4), 3);
  CHECK(h3.torsion[1] == std::vector<Int>{3});
  CHECK(h3.torsion[2].empty());
  CHECK(h3.torsion[3] == std::vector<Int>{3});
}

TEST_CASE("classifying a sum-free monoid gives a wedge of circles") {
  for (unsigned q = 1; q <= 3; ++q) {
    auto h = space_homology(*classifying_space(trivial_monoid(q), 3), 2, true);
    CHECK(h.betti == std::vector<int>{0, static_cast<int>(q), 0});
    for (const auto& t : h.torsion) CHECK(t.empty());
  }
  // One generator with no self-sum behaves the same way.
  auto h = space_homology(*classifying_space(truncated_naturals(1), 3), 2,
                          true);
  CHECK(h.betti == std::vector<int>{0, 1, 0});
}

TEST_CASE("the nerve aligns with the circle configuration space") {
  std::vector<PartialMonoid> fixtures = {
      cyclic_group(2), cyclic_group(3), trivial_monoid(2),
      truncated_naturals(2), single_sum_monoid()};
  for (const auto& m : fixtures) {
    auto cmp = nerve_to_circle_comparison(m, 3);
    REQUIRE_MESSAGE(cmp.alignment.has_value(),
                    ("no alignment for " + m.canonical_text()));
    CHECK(cmp.alignment->validate().empty());
    for (int k = 0; k <= 3; ++k)
      CHECK(cmp.nerve->level(k).size() ==
            cmp.circle_space.space->level(k).size());
    auto via_nerve = space_homology(*cmp.nerve, 2);
    auto via_circle = space_homology(*cmp.circle_space.space, 2);
    CHECK(compare_homology(via_nerve, via_circle, 2).equal);
  }
  CHECK_THROWS_AS(nerve_to_circle_comparison(cyclic_group(2), 0),
                  std::invalid_argument);
}

TEST_CASE("alignment sends a tuple to its jump labeling") {
  auto m = cyclic_group(3);
  auto cmp = nerve_to_circle_comparison(m, 2);
  REQUIRE(cmp.alignment.has_value());
  SimplexId s = named(cmp.nerve, 2, "(1,2)");
  SimplexId img = cmp.alignment->apply(2, s);
  const auto& config = cmp.circle_space.configs[2][img];
  REQUIRE(config.labels.size() == 2);
  // The first entry jumps at position 1 ("011"), the second at position 2
  // ("001"); configurations keep labels sorted by simplex id.
  auto circle = cmp.circle_space.base;
  CHECK(circle->level(2).names[config.labels[0].first] == "001");
  CHECK(circle->level(2).names[config.labels[1].first] == "011");
  CHECK(config.labels[0].second == m.require("2"));
  CHECK(config.labels[1].second == m.require("1"));
}
