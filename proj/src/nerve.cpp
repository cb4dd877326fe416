#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pamdt/nerve.hpp"
#include "pamdt/util.hpp"

namespace pamdt {

namespace {

struct TupleHash {
  std::size_t operator()(const std::vector<ElemId>& t) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (ElemId e : t) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::string tuple_name(const PartialMonoid& m, const std::vector<ElemId>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += m.name(t[i]);
  }
  return s + ")";
}

}  // namespace

SpacePtr classifying_space(const PartialMonoid& m, int max_dim) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
  auto X = std::make_shared<SimplicialSet>();
  X->levels.resize(max_dim + 1);
  std::vector<std::vector<std::vector<ElemId>>> tuples(max_dim + 1);
  std::vector<std::unordered_map<std::vector<ElemId>, SimplexId, TupleHash>>
      lookup(max_dim + 1);
  for (int k = 0; k <= max_dim; ++k) {
    auto& lv = X->levels[k];
    for (auto& ct : m.composable_tuples(k)) {
      lookup[k][ct.entries] = static_cast<SimplexId>(tuples[k].size());
      lv.names.push_back(tuple_name(m, ct.entries));
      tuples[k].push_back(std::move(ct.entries));
    }
    std::vector<ElemId> zeros(k, m.zero());
    lv.basepoint = lookup[k].at(zeros);
  }
  for (int k = 0; k <= max_dim; ++k) {
    auto& lv = X->levels[k];
    std::size_t n = lv.size();
    if (k >= 1) {
      lv.face.assign(k + 1, std::vector<SimplexId>(n, 0));
      for (std::size_t s = 0; s < n; ++s) {
        const auto& t = tuples[k][s];
        for (int i = 0; i <= k; ++i) {
          std::vector<ElemId> f;
          f.reserve(k - 1);
          if (i == 0) {
            f.assign(t.begin() + 1, t.end());
          } else if (i == k) {
            f.assign(t.begin(), t.end() - 1);
          } else {
            f.assign(t.begin(), t.begin() + (i - 1));
            auto merged = m.sum(t[i - 1], t[i]);
            if (!merged)
              throw std::logic_error("composable tuple with undefined "
                                     "adjacent sum");
            f.push_back(*merged);
            f.insert(f.end(), t.begin() + i + 1, t.end());
          }
          lv.face[i][s] = lookup[k - 1].at(f);
        }
      }
    }
    if (k < max_dim) {
      lv.degen.assign(k + 1, std::vector<SimplexId>(n, 0));
      for (std::size_t s = 0; s < n; ++s) {
        const auto& t = tuples[k][s];
        for (int i = 0; i <= k; ++i) {
          std::vector<ElemId> d = t;
          d.insert(d.begin() + i, m.zero());
          lv.degen[i][s] = lookup[k + 1].at(d);
        }
      }
    }
  }
  X->recompute_degeneracy_flags();
  X->meta = {{"kind", "nerve"}, {"monoid", hex64(m.hash())}};
  return X;
}

NerveCircleComparison nerve_to_circle_comparison(const PartialMonoid& m,
                                                 int depth) {
  if (depth < 1)
    throw std::invalid_argument("circle comparison needs depth >= 1");
  NerveCircleComparison cmp;
  cmp.nerve = classifying_space(m, depth);
  auto circle = sphere(1, depth);
  cmp.circle_space = dold_thom_space(m, circle, std::nullopt, depth);

  SimplicialMap align;
  align.source = cmp.nerve;
  align.target = cmp.circle_space.space;
  align.assignment.resize(depth + 1);
  bool total = true;
  for (int k = 0; k <= depth && total; ++k) {
    // jump_id[t]: the level-k circle simplex whose value sequence steps from
    // 0 to 1 at position t (t = 1..k).
    std::vector<SimplexId> jump_id(k + 1, 0);
    for (int t = 1; t <= k; ++t) {
      std::string name(t, '0');
      name += std::string(k + 1 - t, '1');
      auto id = circle->levels[k].find(name);
      if (!id) {
        total = false;
        break;
      }
      jump_id[t] = *id;
    }
    if (!total) break;
    auto tuples = m.composable_tuples(k);
    align.assignment[k].resize(tuples.size());
    for (std::size_t s = 0; s < tuples.size(); ++s) {
      Configuration c;
      for (int t = 1; t <= k; ++t) {
        ElemId e = tuples[s].entries[t - 1];
        if (e != m.zero()) c.labels.push_back({jump_id[t], e});
      }
      std::sort(c.labels.begin(), c.labels.end());
      auto id = cmp.circle_space.find_config(k, c);
      if (!id) {
        total = false;
        break;
      }
      align.assignment[k][s] = *id;
    }
  }
  if (total) {
    bool bijective = true;
    for (int k = 0; k <= depth && bijective; ++k) {
      if (align.assignment[k].size() != cmp.circle_space.space->levels[k].size())
        bijective = false;
      std::vector<char> hit(align.assignment[k].size(), 0);
      for (SimplexId img : align.assignment[k]) {
        if (img >= hit.size() || hit[img]) {
          bijective = false;
          break;
        }
        hit[img] = 1;
      }
    }
    if (bijective && align.validate().empty())
      cmp.alignment = std::move(align);
  }
  return cmp;
}

}  // namespace pamdt
