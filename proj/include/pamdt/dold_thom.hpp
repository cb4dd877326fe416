#ifndef PAMDT_DOLD_THOM_HPP
#define PAMDT_DOLD_THOM_HPP

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pamdt/monoid.hpp"
#include "pamdt/simplicial.hpp"

namespace pamdt {

// A labeled configuration on one level of a base space: finitely many
// nonbasepoint simplices carrying nonzero labels, sorted by simplex id.
// The multiset of labels is always composable.
struct Configuration {
  std::vector<std::pair<SimplexId, ElemId>> labels;

  bool operator==(const Configuration& o) const { return labels == o.labels; }
  Multiset label_multiset() const;

  struct Hash {
    std::size_t operator()(const Configuration& c) const {
      std::uint64_t h = 0xcbf29ce484222325ull;
      for (auto [s, e] : c.labels) {
        h ^= (std::uint64_t(s) << 32) | e;
        h *= 0x100000001b3ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
};

// The labeled configuration space of a base space X with labels in a partial
// monoid M, materialized levelwise: level k lists every configuration on the
// nonbasepoint k-simplices whose label multiset is composable (and whose
// support is at most `bound` when bounded).  Faces push labels along the
// base face maps, summing labels that collide and deleting zero sums and
// labels landing on the basepoint; degeneracies relabel along the injective
// base degeneracies.
struct DoldThomSpace {
  SpacePtr space;  // the resulting pointed simplicial set
  SpacePtr base;
  std::shared_ptr<const PartialMonoid> monoid;  // top level when filtered
  std::shared_ptr<const FilteredPartialMonoid> filtration;  // null when plain
  std::optional<int> bound;
  std::vector<std::vector<Configuration>> configs;  // space-level order
  // For filtered labels: least filtration level admitting each configuration.
  std::vector<std::vector<std::size_t>> admit_level;

  std::optional<SimplexId> find_config(int k, const Configuration& c) const;

 private:
  friend struct DoldThomBuilder;
  std::vector<std::unordered_map<Configuration, SimplexId, Configuration::Hash>>
      lookup_;
};

// Builds the configuration space through dimension max_dim.  The base space
// must be pointed, connected and materialized to max_dim.  `point_bound`
// caps the support size (nullopt = unbounded).
DoldThomSpace dold_thom_space(const PartialMonoid& m, const SpacePtr& X,
                              std::optional<int> point_bound, int max_dim);
DoldThomSpace dold_thom_space(const FilteredPartialMonoid& f, const SpacePtr& X,
                              std::optional<int> point_bound, int max_dim);

// Functorial pushforward of a pointed simplicial map f : X -> Y between base
// spaces: labels move along f, labels that collide are summed, labels landing
// on the basepoint are discarded.  Requires matching monoids and a target
// bound at least the source bound.
SimplicialMap induced_map(const SimplicialMap& f, const DoldThomSpace& source,
                          const DoldThomSpace& target);

// Inclusion of a configuration space with a smaller support bound (or a
// lower filtration stage) into a larger one over the same monoid and base.
SimplicialMap filtration_inclusion(const DoldThomSpace& smaller,
                                   const DoldThomSpace& larger);

}  // namespace pamdt

#endif
