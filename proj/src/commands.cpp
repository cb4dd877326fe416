#include <chrono>
#include <fstream>
#include <sstream>

#include "pamdt/commands.hpp"
#include "pamdt/dold_thom.hpp"
#include "pamdt/homology.hpp"
#include "pamdt/monoid.hpp"
#include "pamdt/nerve.hpp"
#include "pamdt/util.hpp"
#include "pamdt/verify.hpp"

namespace pamdt {

namespace {

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return hex64(fnv1a64(buf.str()));
}

std::string join_violations(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) {
    if (i) s += "; ";
    s += v[i];
  }
  if (v.size() > 3) s += "; and " + std::to_string(v.size() - 3) + " more";
  return s;
}

struct LoadedMonoid {
  std::optional<PartialMonoid> plain;
  std::optional<FilteredPartialMonoid> filtered;
  std::vector<std::string> violations;

  const PartialMonoid& top() const {
    return plain ? *plain : filtered->top();
  }
  bool ok() const { return violations.empty(); }
};

LoadedMonoid load_monoid(const std::string& path) {
  LoadedMonoid out;
  RawMonoid raw = parse_monoid_file(path);
  if (raw.filtered) {
    auto res = validate_filtered_monoid(raw);
    out.violations = res.violations;
    if (res.ok()) out.filtered = std::move(res.monoid);
  } else {
    auto res = validate_monoid(raw);
    out.violations = res.violations;
    if (res.ok()) out.plain = std::move(res.monoid);
  }
  return out;
}

nlohmann::ordered_json homology_json(const HomologyResult& h) {
  nlohmann::ordered_json j;
  j["reduced"] = h.reduced;
  j["betti"] = h.betti;
  auto torsion = nlohmann::ordered_json::array();
  for (const auto& degree : h.torsion) {
    auto t = nlohmann::ordered_json::array();
    for (const auto& d : degree) t.push_back(d.str());
    torsion.push_back(t);
  }
  j["torsion"] = torsion;
  j["pretty"] = h.to_string();
  return j;
}

nlohmann::ordered_json space_json(const SimplicialSet& X) {
  nlohmann::ordered_json j;
  j["max-dim"] = X.max_dim();
  auto sizes = nlohmann::ordered_json::array();
  auto nondeg = nlohmann::ordered_json::array();
  for (int k = 0; k <= X.max_dim(); ++k) {
    sizes.push_back(X.levels[k].size());
    nondeg.push_back(X.nondegenerate_count(k));
  }
  j["level-sizes"] = sizes;
  j["nondegenerate"] = nondeg;
  j["hash"] = hex64(X.hash());
  return j;
}

// Writes the space, reparses it and reports whether the round trip is
// bit-exact.
Check write_with_round_trip(const SimplicialSet& X, const std::string& path) {
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write space file: " + path);
    write_simplicial_set(out, X);
  }
  auto back = load_simplicial_set(path);
  return make_check("round-trip", "bit-exact",
                    back->canonical_text() == X.canonical_text() ? "bit-exact"
                                                                 : "differs");
}

void dump_chains(const SimplicialSet& X, int max_deg,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write chain file: " + path);
  auto chains = normalized_chains(X, max_deg);
  for (int k = 1; k <= chains.max_deg(); ++k) {
    out << "# boundary of degree " << k << '\n';
    write_matrix_triplets(out, chains.boundary[k]);
  }
}

}  // namespace

SpacePtr resolve_space_spec(const std::string& spec, int min_depth) {
  if (spec.rfind("sphere:", 0) == 0) {
    std::string num = spec.substr(7);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad sphere spec: " + spec);
    int n = std::stoi(num);
    return sphere(n, std::max(min_depth, n));
  }
  if (spec.rfind("wedge:", 0) == 0) {
    std::string rest = spec.substr(6);
    auto star = rest.rfind('*');
    if (star == std::string::npos)
      throw std::invalid_argument("bad wedge spec (need '*<copies>'): " + spec);
    std::string num = rest.substr(star + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad wedge copy count: " + spec);
    return wedge(resolve_space_spec(rest.substr(0, star), min_depth),
                 std::stoi(num));
  }
  auto X = load_simplicial_set(spec);
  if (X->max_dim() < min_depth)
    throw std::invalid_argument(
        "space file materialized to depth " + std::to_string(X->max_dim()) +
        "; need " + std::to_string(min_depth));
  auto problems = validate_identities(*X);
  if (!problems.empty())
    throw std::invalid_argument("space file violates the simplicial identities: " +
                                problems.front());
  return X;
}

RunReport cmd_validate(const std::string& monoid_path) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "validate " + monoid_path;
  rep.inputs = {{"monoid", monoid_path}, {"monoid-hash", file_hash(monoid_path)}};
  auto loaded = load_monoid(monoid_path);
  rep.checks.push_back(make_check(
      "monoid-valid", "valid",
      loaded.ok() ? "valid" : join_violations(loaded.violations)));
  if (loaded.ok()) {
    const auto& m = loaded.top();
    rep.results["elements"] = m.size();
    rep.results["zero"] = m.name(m.zero());
    rep.results["defined-pairs"] = m.defined_pairs().size();
    rep.results["filtered-stages"] =
        loaded.filtered ? loaded.filtered->level_count() : 1;
    rep.results["canonical-hash"] =
        hex64(loaded.filtered ? loaded.filtered->hash() : loaded.plain->hash());
  } else {
    rep.results["violations"] = loaded.violations;
  }
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

RunReport cmd_nerve(const std::string& monoid_path, const NerveOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "nerve " + monoid_path;
  rep.inputs = {{"monoid", monoid_path}, {"monoid-hash", file_hash(monoid_path)}};
  auto loaded = load_monoid(monoid_path);
  if (!loaded.ok())
    throw std::invalid_argument("invalid monoid: " +
                                join_violations(loaded.violations));
  if (loaded.filtered)
    throw std::invalid_argument(
        "nerve expects a plain monoid; got a filtered description");
  auto X = classifying_space(*loaded.plain, opt.max_dim);
  rep.checks.push_back(
      make_check("identities", "ok",
                 validate_identities(*X).empty() ? "ok" : "violated"));
  rep.results["space"] = space_json(*X);
  if (opt.homology_through) {
    auto h = space_homology(*X, *opt.homology_through, opt.reduced);
    rep.results["homology"] = homology_json(h);
  }
  if (!opt.out_path.empty())
    rep.checks.push_back(write_with_round_trip(*X, opt.out_path));
  if (!opt.dump_chains_path.empty())
    dump_chains(*X, opt.homology_through ? *opt.homology_through + 1
                                         : opt.max_dim,
                opt.dump_chains_path);
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

RunReport cmd_dold_thom(const std::string& monoid_path,
                        const std::string& space_spec,
                        const DoldThomOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "dold-thom " + monoid_path + " " + space_spec;
  rep.inputs = {{"monoid", monoid_path},
                {"monoid-hash", file_hash(monoid_path)},
                {"space", space_spec}};
  auto loaded = load_monoid(monoid_path);
  if (!loaded.ok())
    throw std::invalid_argument("invalid monoid: " +
                                join_violations(loaded.violations));
  auto base = resolve_space_spec(space_spec, opt.max_dim);
  rep.inputs.push_back({"space-hash", hex64(base->hash())});
  DoldThomSpace dt =
      loaded.filtered
          ? dold_thom_space(*loaded.filtered, base, opt.bound, opt.max_dim)
          : dold_thom_space(*loaded.plain, base, opt.bound, opt.max_dim);
  rep.checks.push_back(
      make_check("identities", "ok",
                 validate_identities(*dt.space).empty() ? "ok" : "violated"));
  rep.results["space"] = space_json(*dt.space);
  rep.results["bound"] = opt.bound ? std::to_string(*opt.bound) : "unbounded";
  if (loaded.filtered) {
    rep.results["filtered-stages"] = loaded.filtered->level_count();
    auto admit = nlohmann::ordered_json::array();
    for (int k = 0; k <= dt.space->max_dim(); ++k) {
      // Count of configurations first admitted at each stage, per level.
      std::vector<std::size_t> counts(loaded.filtered->level_count(), 0);
      for (auto lv : dt.admit_level[k]) ++counts[lv];
      admit.push_back(counts);
    }
    rep.results["admitted-per-stage"] = admit;
  }
  if (opt.homology_through) {
    auto h = space_homology(*dt.space, *opt.homology_through, opt.reduced);
    rep.results["homology"] = homology_json(h);
  }
  if (!opt.out_path.empty())
    rep.checks.push_back(write_with_round_trip(*dt.space, opt.out_path));
  if (!opt.dump_chains_path.empty())
    dump_chains(*dt.space, opt.homology_through ? *opt.homology_through + 1
                                                : opt.max_dim,
                opt.dump_chains_path);
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

RunReport cmd_verify(const std::string& suite) {
  auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "verify " + suite;
  rep.inputs = {{"suite", suite}};
  rep.checks = run_verify_suite(suite);
  std::size_t passed = 0;
  for (const auto& c : rep.checks)
    if (c.pass) ++passed;
  rep.results["passed"] = passed;
  rep.results["total"] = rep.checks.size();
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

}  // namespace pamdt
