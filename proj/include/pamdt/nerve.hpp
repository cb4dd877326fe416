#ifndef PAMDT_NERVE_HPP
#define PAMDT_NERVE_HPP

#include <optional>

#include "pamdt/dold_thom.hpp"
#include "pamdt/monoid.hpp"
#include "pamdt/simplicial.hpp"

namespace pamdt {

// Classifying space of a partial monoid: level k holds the composable
// k-tuples in composable_tuples order, with
//   d_0 drop-first, d_k drop-last, inner d_i sum of adjacent entries,
//   s_i insertion of zero after position i.
// The basepoint is the all-zero tuple.
SpacePtr classifying_space(const PartialMonoid& m, int max_dim);

// The classifying space against the configuration space of a circle.  The
// canonical alignment sends a tuple (m_1, ..., m_k) to the configuration
// labeling the level-k circle simplex with value jump at position t by m_t,
// dropping zero entries.  When that assignment is a levelwise bijection
// commuting with all structure maps it is returned; otherwise `alignment`
// stays empty and homology comparison remains as the fallback route.
struct NerveCircleComparison {
  SpacePtr nerve;
  DoldThomSpace circle_space;
  std::optional<SimplicialMap> alignment;
};

NerveCircleComparison nerve_to_circle_comparison(const PartialMonoid& m,
                                                 int depth);

}  // namespace pamdt

#endif
