// Acceptance battery: ten end-to-end criteria, one summary line each.
// Every expectation is an exact integer or string comparison; there are no
// numeric tolerances anywhere.  The reference values come either from frozen
// classical results or from the independent reference implementations in
// oracles.hpp, never from the code under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pamdt/dold_thom.hpp"
#include "pamdt/homology.hpp"
#include "pamdt/monoid.hpp"
#include "pamdt/nerve.hpp"
#include "pamdt/simplicial.hpp"
#include "pamdt/verify.hpp"

using namespace pamdt;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string torsion_text(const std::vector<Int>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t[i].str();
  }
  return s + "]";
}

// Exact comparison of a homology profile against frozen betti numbers and
// torsion factors; empty string means the profile matches.
std::string homology_mismatch(const HomologyResult& got,
                              const std::vector<int>& betti,
                              const std::vector<std::vector<int>>& torsion,
                              const std::string& label) {
  if (got.betti != betti) {
    std::string s = label + ": betti (";
    for (std::size_t i = 0; i < got.betti.size(); ++i)
      s += (i ? "," : "") + std::to_string(got.betti[i]);
    return s + ") differs from the expected profile";
  }
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    std::vector<Int> want(torsion[k].begin(), torsion[k].end());
    if (got.torsion[k] != want)
      return label + ": torsion " + torsion_text(got.torsion[k]) +
             " at degree " + std::to_string(k) + ", expected " +
             torsion_text(want);
  }
  return "";
}

Outcome run_suite(const std::string& name) {
  auto checks = run_verify_suite(name);
  for (const auto& c : checks)
    if (!c.pass)
      return fail(c.name + ": expected " + c.expected + ", got " + c.computed);
  return pass("all " + std::to_string(checks.size()) +
              " fixture checks hold, exact");
}

// ---------------------------------------------------------------------------

// Tri-state reduction oracle vs the memoized search, on one multiset.
std::string reduction_mismatch(const PartialMonoid& m, const Multiset& ms) {
  auto rep = oracles::reduce_all_orders(m, ms);
  if (rep.outcome == oracles::Reduction::mixed)
    return "reduction orders disagree over a validated monoid";
  bool expected = rep.outcome == oracles::Reduction::all_agree;
  if (m.composable(ms) != expected)
    return "composability search disagrees with the oracle";
  if (expected && m.multiset_sum(ms) != *rep.value)
    return "multiset total disagrees with the oracle";
  return "";
}

Outcome criterion_reduction_coherence() {
  // Every multiset of size <= 5 over each stock carrier, exhaustively.
  std::vector<PartialMonoid> stock = {
      cyclic_group(1),       cyclic_group(2),       cyclic_group(3),
      trivial_monoid(1),     trivial_monoid(2),     trivial_monoid(3),
      truncated_naturals(1), truncated_naturals(2), truncated_naturals(3),
      single_sum_monoid()};
  long long exhaustive = 0;
  for (const auto& m : stock) {
    std::string bad;
    Multiset ms;
    std::function<bool(ElemId)> walk = [&](ElemId least) {
      bad = reduction_mismatch(m, ms);
      if (!bad.empty()) return false;
      ++exhaustive;
      if (ms.size() == 5) return true;
      for (ElemId a = least; a < m.size(); ++a) {
        ms.push_back(a);
        bool ok = walk(a);
        ms.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!walk(0)) return fail("stock table: " + bad);
  }

  std::mt19937 rng(20260815);
  const int monoids = 200, multisets_per = 25;
  long long tested = 0;
  for (int trial = 0; trial < monoids; ++trial) {
    auto m = oracles::random_valid_monoid(rng, 6);
    auto breaches = oracles::axiom_scan(m);
    if (!breaches.empty())
      return fail("accepted monoid breaks an axiom: " + breaches.front());
    for (int t = 0; t < multisets_per; ++t) {
      auto ms = oracles::random_multiset(rng, m, 5);
      ++tested;
      auto bad = reduction_mismatch(m, ms);
      if (!bad.empty()) return fail(bad);
    }
  }
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return parse_monoid_text(in);
  };
  if (validate_monoid(parse("elements: 0 a b c d\nzero: 0\n"
                            "a + b = c\nb + a = d\n")).ok())
    return fail("conflicting table accepted");
  if (validate_monoid(parse("elements: 0 a b c\nzero: 0\n"
                            "a + b = c\na + c = b\n")).ok())
    return fail("incoherent table accepted");
  if (validate_monoid(parse("elements: 0 a b\nzero: 0\n0 + a = b\n")).ok())
    return fail("unit-law violation accepted");
  return pass(std::to_string(exhaustive) + " fixture multisets (exhaustive "
              "to size 5) plus " + std::to_string(tested) + " multisets over " +
              std::to_string(monoids) +
              " random monoids: all reduction orders agree exactly");
}

Outcome criterion_identities() { return run_suite("identities"); }

Outcome criterion_suspension() {
  for (unsigned q = 1; q <= 3; ++q) {
    auto B = classifying_space(trivial_monoid(q), 4);
    auto h = space_homology(*B, 3, true);
    auto bad = homology_mismatch(h, {0, static_cast<int>(q), 0, 0},
                                 {{}, {}, {}, {}},
                                 "free rank " + std::to_string(q));
    if (!bad.empty()) return fail(bad);
  }
  return pass("sum-free labels on q points: reduced homology is Z^q in "
              "degree 1 and zero elsewhere through degree 3, q = 1..3, exact");
}

Outcome criterion_group_homology() {
  for (unsigned q = 2; q <= 3; ++q) {
    auto B = classifying_space(cyclic_group(q), 5);
    auto h = space_homology(*B, 4);
    const int iq = static_cast<int>(q);
    auto bad = homology_mismatch(h, {1, 0, 0, 0, 0},
                                 {{}, {iq}, {}, {iq}, {}},
                                 "order " + std::to_string(q) + " classical");
    if (!bad.empty()) return fail(bad);
    auto oracle = homology(oracles::bar_complex(q, 5));
    auto cmp = compare_homology(h, oracle, 4);
    if (!cmp.equal)
      return fail("order " + std::to_string(q) +
                  " disagrees with the bar-complex oracle: " + cmp.detail);
  }
  return pass("cyclic groups of order 2 and 3 through degree 4: classical "
              "values and the bar-complex oracle agree, exact");
}

Outcome criterion_nerve_circle() { return run_suite("nerve-circle"); }

Outcome criterion_trivial_smash() { return run_suite("trivial-smash"); }

Outcome criterion_symmetric_square() {
  auto base = sphere(2, 5);
  auto two = dold_thom_space(truncated_naturals(2), base, std::nullopt, 5);
  auto h = space_homology(*two.space, 4);
  auto bad = homology_mismatch(h, {1, 0, 1, 0, 1}, {{}, {}, {}, {}, {}},
                               "two-point labels");
  if (!bad.empty()) return fail(bad);
  auto cmp = compare_homology(h, homology(oracles::cp2_complex()), 4);
  if (!cmp.equal)
    return fail("differs from the projective-plane model: " + cmp.detail);

  // With at most one point the configuration space is the base itself:
  // site -> {site = 1} is a levelwise bijection commuting with everything.
  auto one = dold_thom_space(truncated_naturals(1), base, std::nullopt, 5);
  SimplicialMap iso;
  iso.source = base;
  iso.target = one.space;
  iso.assignment.resize(6);
  ElemId unit = one.monoid->require("1");
  for (int k = 0; k <= 5; ++k) {
    if (one.configs[k].size() != base->level(k).size())
      return fail("one-point labels give the wrong count at level " +
                  std::to_string(k));
    iso.assignment[k].resize(base->level(k).size());
    for (SimplexId s = 0; s < base->level(k).size(); ++s) {
      Configuration c;
      if (!base->is_basepoint(k, s)) c.labels.push_back({s, unit});
      auto id = one.find_config(k, c);
      if (!id) return fail("one-point labels miss a site configuration");
      iso.assignment[k][s] = *id;
    }
  }
  auto problems = iso.validate();
  if (!problems.empty())
    return fail("one-point comparison is not simplicial: " + problems.front());
  auto same = compare_homology(space_homology(*one.space, 4),
                               space_homology(*base, 4), 4);
  if (!same.equal) return fail("one-point labels change homology: " +
                               same.detail);
  return pass("two-point labels on the two-sphere give betti (1,0,1,0,1), "
              "matching the projective-plane model; one-point labels return "
              "the base space, exact");
}

Outcome criterion_group_label_prediction() {
  for (unsigned q = 2; q <= 3; ++q)
    for (int n = 1; n <= 2; ++n) {
      auto dt = dold_thom_space(cyclic_group(q), sphere(n, n + 1),
                                std::nullopt, n + 1);
      auto h = space_homology(*dt.space, n, true);
      std::vector<int> betti(n + 1, 0);
      std::vector<std::vector<int>> torsion(n + 1);
      torsion[n] = {static_cast<int>(q)};
      auto bad = homology_mismatch(h, betti, torsion,
                                   "order " + std::to_string(q) + " on the " +
                                       std::to_string(n) + "-sphere");
      if (!bad.empty()) return fail(bad);
    }
  return pass("group labels of order q on the n-sphere, q in {2,3}, n in "
              "{1,2}: reduced homology vanishes below n and is Z/q at n, "
              "exact");
}

Outcome criterion_functoriality() { return run_suite("functoriality"); }

Outcome criterion_linear_algebra() {
  // Boundary-squared gate over every chain complex the fixtures produce
  // (normalized_chains itself throws if the composite is nonzero).
  int complexes = 0;
  auto gate = [&](const SimplicialSet& X, int max_deg) -> bool {
    auto c = normalized_chains(X, max_deg);
    ++complexes;
    return boundary_condition_holds(c);
  };
  std::vector<PartialMonoid> monoids = {
      cyclic_group(1),       cyclic_group(2),       cyclic_group(3),
      trivial_monoid(1),     trivial_monoid(2),     trivial_monoid(3),
      truncated_naturals(1), truncated_naturals(2), truncated_naturals(3),
      single_sum_monoid()};
  for (const auto& m : monoids)
    if (!gate(*classifying_space(m, 4), 4))
      return fail("boundary gate failed on a classifying space");
  if (!gate(*sphere(3, 4), 4)) return fail("boundary gate failed on a sphere");
  if (!gate(*dold_thom_space(cyclic_group(2), sphere(1, 4), std::nullopt, 4)
                 .space,
            4))
    return fail("boundary gate failed on a configuration space");
  if (!gate(*dold_thom_space(truncated_naturals(2), sphere(2, 4), std::nullopt,
                             4)
                 .space,
            4))
    return fail("boundary gate failed on a configuration space");

  std::mt19937 rng(1729);
  const int trials = 500;
  int oracle_checked = 0;
  for (int t = 0; t < trials; ++t) {
    auto a = oracles::random_sparse_matrix(rng, 12, 9);
    std::string why;
    auto dense = smith_normal_form(a, SnfMode::dense);
    auto sparse = smith_normal_form(a, SnfMode::sparse);
    if (!oracles::snf_postconditions(a, dense, &why))
      return fail("dense elimination: " + why);
    if (!oracles::snf_postconditions(a, sparse, &why))
      return fail("sparse elimination: " + why);
    if (dense.diagonal != sparse.diagonal)
      return fail("dense and sparse eliminations disagree");
    if (a.rows <= 4 && a.cols <= 4) {
      ++oracle_checked;
      if (dense.diagonal != oracles::minors_invariant_factors(a))
        return fail("diagonal disagrees with the minor-gcd oracle");
    }
  }
  return pass(std::to_string(complexes) + " chain complexes pass the "
              "boundary gate; " + std::to_string(trials) + " random matrices "
              "pass exact transform postconditions on both elimination paths "
              "(" + std::to_string(oracle_checked) +
              " cross-checked against minor gcds)");
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"reduction-coherence", criterion_reduction_coherence},
      {"simplicial-identities", criterion_identities},
      {"suspension", criterion_suspension},
      {"group-homology", criterion_group_homology},
      {"nerve-circle", criterion_nerve_circle},
      {"trivial-smash", criterion_trivial_smash},
      {"symmetric-square", criterion_symmetric_square},
      {"group-label-prediction", criterion_group_label_prediction},
      {"functoriality", criterion_functoriality},
      {"integer-linear-algebra", criterion_linear_algebra},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::printf("[%s] %2zu %-24s %s (%.0f ms)\n",
                outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str(), ms);
    if (!outcome.ok) ++failures;
  }
  if (failures) std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
