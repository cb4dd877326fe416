#include <algorithm>
#include <stdexcept>

#include "pamdt/dold_thom.hpp"
#include "pamdt/homology.hpp"
#include "pamdt/monoid.hpp"
#include "pamdt/nerve.hpp"
#include "pamdt/simplicial.hpp"
#include "pamdt/verify.hpp"

namespace pamdt {

namespace {

std::vector<std::pair<std::string, PartialMonoid>> fixture_monoids() {
  std::vector<std::pair<std::string, PartialMonoid>> out;
  out.emplace_back("cyclic1", cyclic_group(1));
  out.emplace_back("cyclic2", cyclic_group(2));
  out.emplace_back("cyclic3", cyclic_group(3));
  out.emplace_back("trivial1", trivial_monoid(1));
  out.emplace_back("trivial2", trivial_monoid(2));
  out.emplace_back("trivial3", trivial_monoid(3));
  out.emplace_back("truncated1", truncated_naturals(1));
  out.emplace_back("truncated2", truncated_naturals(2));
  out.emplace_back("truncated3", truncated_naturals(3));
  out.emplace_back("single-sum", single_sum_monoid());
  return out;
}

std::vector<std::pair<std::string, SpacePtr>> fixture_bases(int depth) {
  return {{"sphere1", sphere(1, depth)},
          {"sphere2", sphere(2, std::max(depth, 2))},
          {"wedge(sphere1,2)", wedge(sphere(1, depth), 2)}};
}

std::string ok_or_first(const std::vector<std::string>& problems) {
  return problems.empty() ? "ok" : problems.front();
}

std::string equal_or_detail(const HomologyComparison& c) {
  return c.equal ? "equal" : c.detail;
}

bool injective_levelwise(const SimplicialMap& f) {
  for (const auto& level : f.assignment) {
    std::vector<SimplexId> seen(level.begin(), level.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      return false;
  }
  return true;
}

std::string level_sizes(const SimplicialSet& X) {
  std::string s;
  for (const auto& lv : X.levels) {
    if (!s.empty()) s += ",";
    s += std::to_string(lv.size());
  }
  return s;
}

}  // namespace

std::vector<Check> verify_identities() {
  std::vector<Check> out;
  const int depth = 4;
  for (const auto& [name, X] : fixture_bases(depth))
    out.push_back(make_check("identities:" + name, "ok",
                             ok_or_first(validate_identities(*X))));
  for (const auto& [mname, m] : fixture_monoids()) {
    auto nerve = classifying_space(m, depth);
    out.push_back(make_check("identities:nerve(" + mname + ")", "ok",
                             ok_or_first(validate_identities(*nerve))));
    for (const auto& [bname, X] : fixture_bases(depth)) {
      auto dt = dold_thom_space(m, X, std::nullopt, depth);
      out.push_back(
          make_check("identities:configs(" + mname + "," + bname + ")", "ok",
                     ok_or_first(validate_identities(*dt.space))));
    }
  }
  auto filtered = filtered_truncated_naturals(4);
  for (const auto& [bname, X] : fixture_bases(depth)) {
    auto dt = dold_thom_space(filtered, X, std::nullopt, depth);
    out.push_back(
        make_check("identities:configs(filtered-truncated4," + bname + ")",
                   "ok", ok_or_first(validate_identities(*dt.space))));
  }
  return out;
}

std::vector<Check> verify_nerve_circle() {
  std::vector<Check> out;
  const int depth = 4;
  for (const auto& [mname, m] : fixture_monoids()) {
    auto cmp = nerve_to_circle_comparison(m, depth);
    auto left = space_homology(*cmp.nerve, depth - 1);
    auto right = space_homology(*cmp.circle_space.space, depth - 1);
    out.push_back(make_check(
        "nerve-circle:" + mname + ":homology", "equal",
        equal_or_detail(compare_homology(left, right, depth - 1))));
    std::string status = "missing";
    if (cmp.alignment) status = "isomorphism";
    out.push_back(
        make_check("nerve-circle:" + mname + ":alignment", "isomorphism",
                   status));
  }
  return out;
}

std::vector<Check> verify_trivial_smash() {
  std::vector<Check> out;
  const int depth = 4;
  const int through = 3;
  // Reduced homology of the bases through degree 3, as (degree, rank) pairs.
  for (int q = 1; q <= 2; ++q) {
    auto m = trivial_monoid(q);
    for (const auto& [bname, X] : fixture_bases(depth)) {
      std::string tag = "trivial" + std::to_string(q) + ":" + bname;
      auto dt = dold_thom_space(m, X, std::nullopt, depth);
      auto W = wedge(X, q);
      out.push_back(make_check(tag + ":level-sizes", level_sizes(*W),
                               level_sizes(*dt.space)));
      auto left = space_homology(*dt.space, through, true);
      auto right = space_homology(*W, through, true);
      out.push_back(make_check(tag + ":wedge-homology", "equal",
                               equal_or_detail(compare_homology(
                                   left, right, through))));
      auto base = space_homology(*X, through, true);
      for (auto& b : base.betti) b *= q;
      out.push_back(
          make_check(tag + ":multiplicity", base.to_string(), left.to_string()));
    }
  }
  return out;
}

std::vector<Check> verify_functoriality() {
  std::vector<Check> out;
  const int depth = 3;
  auto m = single_sum_monoid();
  auto X = sphere(1, depth);
  auto dtX = dold_thom_space(m, X, std::nullopt, depth);

  auto lifted_id = induced_map(identity_map(X), dtX, dtX);
  out.push_back(make_check("functoriality:identity", "identity",
                           lifted_id.same_assignment(identity_map(dtX.space))
                               ? "identity"
                               : "differs"));

  auto W = wedge(X, 2);
  auto dtW = dold_thom_space(m, W, std::nullopt, depth);
  auto fold = wedge_fold_map(W, X, 2);
  auto incl1 = wedge_include_copy(X, W, 2, 1);
  out.push_back(make_check("functoriality:fold-valid", "ok",
                           ok_or_first(fold.validate())));
  out.push_back(make_check("functoriality:include-valid", "ok",
                           ok_or_first(incl1.validate())));

  auto lifted_fold = induced_map(fold, dtW, dtX);
  auto lifted_incl = induced_map(incl1, dtX, dtW);
  out.push_back(make_check("functoriality:lifted-fold-valid", "ok",
                           ok_or_first(lifted_fold.validate())));
  out.push_back(make_check("functoriality:lifted-include-valid", "ok",
                           ok_or_first(lifted_incl.validate())));

  // Composition in both orders: fold . incl1 = id on X, and the projection
  // incl1 . fold on W.
  auto round_trip = compose_maps(fold, incl1);
  out.push_back(make_check(
      "functoriality:compose-id", "identity",
      induced_map(round_trip, dtX, dtX)
              .same_assignment(compose_maps(lifted_fold, lifted_incl))
          ? "identity"
          : "differs"));
  auto projection = compose_maps(incl1, fold);
  out.push_back(make_check(
      "functoriality:compose-projection", "equal",
      induced_map(projection, dtW, dtW)
              .same_assignment(compose_maps(lifted_incl, lifted_fold))
          ? "equal"
          : "differs"));

  // Label merge under the fold: a on copy 1 and b on copy 2 of the circle's
  // edge land on the same edge and sum to c.
  {
    ElemId a = m.require("a"), b = m.require("b"), c = m.require("c");
    SimplexId e1 = *W->levels[1].find("c1:01");
    SimplexId e2 = *W->levels[1].find("c2:01");
    SimplexId e = *X->levels[1].find("01");
    Configuration src;
    src.labels = {{e1, a}, {e2, b}};
    std::sort(src.labels.begin(), src.labels.end());
    Configuration dst;
    dst.labels = {{e, c}};
    auto src_id = dtW.find_config(1, src);
    auto dst_id = dtX.find_config(1, dst);
    bool merged = src_id && dst_id &&
                  lifted_fold.apply(1, *src_id) == *dst_id;
    out.push_back(make_check("functoriality:fold-merges-labels", "merged",
                             merged ? "merged" : "differs"));
  }

  // Collapsing the whole base sends every configuration to the empty one.
  {
    std::vector<std::pair<int, SimplexId>> all;
    for (int k = 0; k <= X->max_dim(); ++k)
      for (SimplexId s = 0; s < X->levels[k].size(); ++s) all.push_back({k, s});
    auto full = subcomplex_closure(*X, all);
    auto collapsed = collapse_map(X, full);
    auto dtQ = dold_thom_space(m, collapsed.quotient, std::nullopt, depth);
    auto lifted = induced_map(collapsed.projection, dtX, dtQ);
    bool all_base = true;
    for (std::size_t k = 0; k < lifted.assignment.size(); ++k)
      for (SimplexId img : lifted.assignment[k])
        if (img != dtQ.space->levels[k].basepoint) all_base = false;
    out.push_back(make_check("functoriality:collapse-all", "basepoint",
                             all_base ? "basepoint" : "differs"));
  }
  return out;
}

std::vector<Check> verify_filtration() {
  std::vector<Check> out;
  const int depth = 3;
  auto X = sphere(1, depth);
  auto F = filtered_truncated_naturals(4);
  auto dtF = dold_thom_space(F, X, std::nullopt, depth);

  // The filtered space is the union of the per-stage spaces: stage i holds
  // exactly the configurations with recorded admitting level <= i.
  for (std::size_t stage = 0; stage < F.level_count(); ++stage) {
    auto dtStage = dold_thom_space(F.level(stage), X, std::nullopt, depth);
    bool equal = true;
    for (int k = 0; k <= depth && equal; ++k) {
      std::vector<Configuration> admitted;
      for (std::size_t i = 0; i < dtF.configs[k].size(); ++i)
        if (dtF.admit_level[k][i] <= stage)
          admitted.push_back(dtF.configs[k][i]);
      equal = admitted == dtStage.configs[k];
    }
    out.push_back(make_check(
        "filtration:stage-" + std::to_string(stage) + "-union", "equal",
        equal ? "equal" : "differs"));
  }

  // Recorded admitting levels are minimal.
  {
    bool minimal = true;
    for (int k = 0; k <= depth && minimal; ++k)
      for (std::size_t i = 0; i < dtF.configs[k].size(); ++i) {
        auto ms = dtF.configs[k][i].label_multiset();
        std::size_t lv = dtF.admit_level[k][i];
        if (!F.level(lv).composable(ms) ||
            (lv > 0 && F.level(lv - 1).composable(ms))) {
          minimal = false;
          break;
        }
      }
    out.push_back(make_check("filtration:admit-minimal", "ok",
                             minimal ? "ok" : "not minimal"));
  }

  // Inclusions along consecutive stages.
  {
    auto dt0 = dold_thom_space(F.level(0), X, std::nullopt, depth);
    auto dt1 = dold_thom_space(F.level(1), X, std::nullopt, depth);
    auto inc = filtration_inclusion(dt0, dt1);
    out.push_back(make_check("filtration:stage-inclusion-valid", "ok",
                             ok_or_first(inc.validate())));
    out.push_back(make_check("filtration:stage-inclusion-injective",
                             "injective",
                             injective_levelwise(inc) ? "injective"
                                                      : "collides"));
  }

  // Inclusions along rising support bounds, ending at the full space.
  {
    auto m = truncated_naturals(3);
    auto prev = dold_thom_space(m, X, 0, depth);
    for (int b = 1; b <= 3; ++b) {
      auto next = dold_thom_space(m, X, b, depth);
      auto inc = filtration_inclusion(prev, next);
      out.push_back(make_check(
          "filtration:bound-" + std::to_string(b - 1) + "-to-" +
              std::to_string(b) + "-valid",
          "ok", ok_or_first(inc.validate())));
      out.push_back(make_check(
          "filtration:bound-" + std::to_string(b - 1) + "-to-" +
              std::to_string(b) + "-injective",
          "injective", injective_levelwise(inc) ? "injective" : "collides"));
      prev = std::move(next);
    }
    auto unbounded = dold_thom_space(m, X, std::nullopt, depth);
    out.push_back(make_check("filtration:bound-saturation", "equal",
                             prev.configs == unbounded.configs ? "equal"
                                                               : "differs"));
  }

  // A constant filtration builds the same space as its plain monoid.
  {
    auto m = cyclic_group(2);
    auto constant = dold_thom_space(constant_filtration(m, 2), X,
                                    std::nullopt, depth);
    auto plain = dold_thom_space(m, X, std::nullopt, depth);
    out.push_back(make_check("filtration:constant", "equal",
                             constant.configs == plain.configs ? "equal"
                                                               : "differs"));
  }
  return out;
}

std::vector<std::string> verify_suite_names() {
  return {"identities", "nerve-circle", "trivial-smash", "functoriality",
          "filtration"};
}

std::vector<Check> run_verify_suite(const std::string& name) {
  if (name == "identities") return verify_identities();
  if (name == "nerve-circle") return verify_nerve_circle();
  if (name == "trivial-smash") return verify_trivial_smash();
  if (name == "functoriality") return verify_functoriality();
  if (name == "filtration") return verify_filtration();
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace pamdt
