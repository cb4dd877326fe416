#include <algorithm>
#include <map>
#include <stdexcept>

#include "pamdt/dold_thom.hpp"
#include "pamdt/util.hpp"

namespace pamdt {

Multiset Configuration::label_multiset() const {
  Multiset m;
  m.reserve(labels.size());
  for (auto [s, e] : labels) m.push_back(e);
  return canonical_multiset(std::move(m));
}

std::optional<SimplexId> DoldThomSpace::find_config(
    int k, const Configuration& c) const {
  if (k < 0 || k >= static_cast<int>(lookup_.size())) return std::nullopt;
  auto it = lookup_[k].find(c);
  if (it == lookup_[k].end()) return std::nullopt;
  return it->second;
}

namespace {

std::string config_name(const SimplexLevel& base, const Configuration& c,
                        const PartialMonoid& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i) s += ",";
    s += base.names[c.labels[i].first] + "=" + m.name(c.labels[i].second);
  }
  return s + "}";
}

}  // namespace

struct DoldThomBuilder {
  const PartialMonoid& m;
  const FilteredPartialMonoid* filtration;  // null for plain labels
  const SimplicialSet& base;
  std::optional<int> bound;
  int max_dim;
  DoldThomSpace out;

  DoldThomBuilder(const PartialMonoid& monoid,
                  const FilteredPartialMonoid* filt, const SpacePtr& X,
                  std::optional<int> point_bound, int depth)
      : m(monoid), filtration(filt), base(*X), bound(point_bound),
        max_dim(depth) {
    if (depth < 0) throw std::invalid_argument("max_dim must be nonnegative");
    if (base.max_dim() < depth)
      throw std::invalid_argument(
          "base space materialized to depth " +
          std::to_string(base.max_dim()) + "; need " + std::to_string(depth));
    if (bound && *bound < 0)
      throw std::invalid_argument("point bound must be nonnegative");
    if (!base.connected())
      throw std::invalid_argument(
          "configuration spaces need a connected base space");
    out.base = X;
  }

  // All composable configurations on the nonbasepoint simplices of one
  // level: support-size ascending, then lexicographic by (simplex, label).
  std::vector<Configuration> enumerate(int k) const {
    std::vector<SimplexId> sites;
    for (SimplexId s = 0; s < base.levels[k].size(); ++s)
      if (s != base.levels[k].basepoint) sites.push_back(s);
    std::vector<ElemId> labels;
    for (ElemId e = 0; e < m.size(); ++e)
      if (e != m.zero()) labels.push_back(e);
    int cap = static_cast<int>(sites.size());
    if (bound) cap = std::min(cap, *bound);

    std::vector<Configuration> out_configs;
    Configuration cur;
    Multiset used;
    // Support chosen in ascending order; the label multiset of every prefix
    // must compose, which prunes soundly by downward closure.
    auto dfs = [&](auto&& self, std::size_t next_site, int remaining) -> void {
      if (remaining == 0) {
        out_configs.push_back(cur);
        return;
      }
      for (std::size_t i = next_site;
           i + remaining <= sites.size(); ++i) {
        for (ElemId e : labels) {
          used.insert(std::upper_bound(used.begin(), used.end(), e), e);
          if (m.composable(used)) {
            cur.labels.push_back({sites[i], e});
            self(self, i + 1, remaining - 1);
            cur.labels.pop_back();
          }
          used.erase(std::find(used.begin(), used.end(), e));
        }
      }
    };
    for (int size = 0; size <= cap; ++size) dfs(dfs, 0, size);
    return out_configs;
  }

  Configuration push_face(int k, int i, const Configuration& c) const {
    // Bucket labels by their image simplex, sum each bucket, keep nonzero
    // sums away from the basepoint.
    std::map<SimplexId, Multiset> buckets;
    for (auto [s, e] : c.labels) {
      SimplexId img = base.face(k, i, s);
      if (img == base.levels[k - 1].basepoint) continue;
      auto& b = buckets[img];
      b.insert(std::upper_bound(b.begin(), b.end(), e), e);
    }
    Configuration f;
    for (auto& [s, b] : buckets) {
      ElemId total = m.multiset_sum(b);
      if (total != m.zero()) f.labels.push_back({s, total});
    }
    return f;
  }

  Configuration push_degen(int k, int i, const Configuration& c) const {
    Configuration d;
    for (auto [s, e] : c.labels) d.labels.push_back({base.degen(k, i, s), e});
    std::sort(d.labels.begin(), d.labels.end());
    return d;
  }

  void build() {
    auto space = std::make_shared<SimplicialSet>();
    space->levels.resize(max_dim + 1);
    out.configs.resize(max_dim + 1);
    out.lookup_.resize(max_dim + 1);
    if (filtration) out.admit_level.resize(max_dim + 1);
    for (int k = 0; k <= max_dim; ++k) {
      out.configs[k] = enumerate(k);
      auto& lv = space->levels[k];
      for (std::size_t i = 0; i < out.configs[k].size(); ++i) {
        out.lookup_[k][out.configs[k][i]] = static_cast<SimplexId>(i);
        lv.names.push_back(config_name(base.levels[k], out.configs[k][i], m));
      }
      lv.basepoint = 0;  // the empty configuration enumerates first
      if (filtration)
        for (const auto& c : out.configs[k])
          out.admit_level[k].push_back(
              filtration->composable_level(c.label_multiset()).value());
    }
    for (int k = 0; k <= max_dim; ++k) {
      auto& lv = space->levels[k];
      std::size_t n = lv.size();
      if (k >= 1) {
        lv.face.assign(k + 1, std::vector<SimplexId>(n, 0));
        for (std::size_t s = 0; s < n; ++s)
          for (int i = 0; i <= k; ++i)
            lv.face[i][s] = out.lookup_[k - 1].at(push_face(k, i, out.configs[k][s]));
      }
      if (k < max_dim) {
        lv.degen.assign(k + 1, std::vector<SimplexId>(n, 0));
        for (std::size_t s = 0; s < n; ++s)
          for (int i = 0; i <= k; ++i)
            lv.degen[i][s] =
                out.lookup_[k + 1].at(push_degen(k, i, out.configs[k][s]));
      }
    }
    space->recompute_degeneracy_flags();
    space->meta = {{"kind", "dold-thom"},
                   {"monoid", hex64(filtration ? filtration->hash() : m.hash())},
                   {"base", hex64(base.hash())},
                   {"bound", bound ? std::to_string(*bound) : "unbounded"}};
    out.space = space;
  }
};

DoldThomSpace dold_thom_space(const PartialMonoid& m, const SpacePtr& X,
                              std::optional<int> point_bound, int max_dim) {
  if (!X) throw std::invalid_argument("base space is required");
  DoldThomBuilder b(m, nullptr, X, point_bound, max_dim);
  b.build();
  b.out.monoid = std::make_shared<PartialMonoid>(m);
  b.out.bound = point_bound;
  return std::move(b.out);
}

DoldThomSpace dold_thom_space(const FilteredPartialMonoid& f, const SpacePtr& X,
                              std::optional<int> point_bound, int max_dim) {
  if (!X) throw std::invalid_argument("base space is required");
  DoldThomBuilder b(f.top(), &f, X, point_bound, max_dim);
  b.build();
  b.out.monoid = std::make_shared<PartialMonoid>(f.top());
  b.out.filtration = std::make_shared<FilteredPartialMonoid>(f);
  b.out.bound = point_bound;
  return std::move(b.out);
}

SimplicialMap induced_map(const SimplicialMap& f, const DoldThomSpace& source,
                          const DoldThomSpace& target) {
  if (!f.source || !f.target)
    throw std::invalid_argument("induced_map requires a materialized map");
  if (f.source != source.base && f.source->hash() != source.base->hash())
    throw std::invalid_argument("map source disagrees with source base space");
  if (f.target != target.base && f.target->hash() != target.base->hash())
    throw std::invalid_argument("map target disagrees with target base space");
  if (source.monoid->hash() != target.monoid->hash())
    throw std::invalid_argument("configuration spaces use different monoids");
  if (target.bound && (!source.bound || *source.bound > *target.bound))
    throw std::invalid_argument("target support bound is too small");

  const PartialMonoid& m = *source.monoid;
  std::size_t depth = std::min({source.configs.size(), target.configs.size(),
                                f.assignment.size()});
  SimplicialMap g;
  g.source = source.space;
  g.target = target.space;
  g.assignment.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    const SimplexLevel& target_base = f.target->levels[k];
    g.assignment[k].resize(source.configs[k].size());
    for (std::size_t s = 0; s < source.configs[k].size(); ++s) {
      std::map<SimplexId, Multiset> buckets;
      for (auto [site, e] : source.configs[k][s].labels) {
        SimplexId img = f.apply(static_cast<int>(k), site);
        if (img == target_base.basepoint) continue;
        auto& b = buckets[img];
        b.insert(std::upper_bound(b.begin(), b.end(), e), e);
      }
      Configuration c;
      for (auto& [site, b] : buckets) {
        ElemId total = m.multiset_sum(b);
        if (total != m.zero()) c.labels.push_back({site, total});
      }
      auto id = target.find_config(static_cast<int>(k), c);
      if (!id)
        throw std::logic_error("pushforward configuration missing from target");
      g.assignment[k][s] = *id;
    }
  }
  return g;
}

SimplicialMap filtration_inclusion(const DoldThomSpace& smaller,
                                   const DoldThomSpace& larger) {
  if (smaller.base->hash() != larger.base->hash())
    throw std::invalid_argument("inclusion requires a shared base space");
  // The monoids may differ by filtration stage, but the carrier must match;
  // any configuration actually missing from the larger space is caught below.
  if (smaller.monoid->element_names() != larger.monoid->element_names() ||
      smaller.monoid->zero() != larger.monoid->zero())
    throw std::invalid_argument("inclusion requires a shared carrier");
  if (larger.bound && (!smaller.bound || *smaller.bound > *larger.bound))
    throw std::invalid_argument("inclusion requires a nondecreasing bound");
  if (smaller.configs.size() != larger.configs.size())
    throw std::invalid_argument("inclusion requires matching depths");
  SimplicialMap g;
  g.source = smaller.space;
  g.target = larger.space;
  g.assignment.resize(smaller.configs.size());
  for (std::size_t k = 0; k < smaller.configs.size(); ++k) {
    g.assignment[k].resize(smaller.configs[k].size());
    for (std::size_t s = 0; s < smaller.configs[k].size(); ++s) {
      auto id = larger.find_config(static_cast<int>(k), smaller.configs[k][s]);
      if (!id)
        throw std::invalid_argument(
            "configuration missing from the larger space");
      g.assignment[k][s] = *id;
    }
  }
  return g;
}

}  // namespace pamdt
