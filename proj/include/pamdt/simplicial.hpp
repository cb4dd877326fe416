#ifndef PAMDT_SIMPLICIAL_HPP
#define PAMDT_SIMPLICIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pamdt {

using SimplexId = std::uint32_t;

// One simplicial level: simplex names plus face and degeneracy tables.
// face[i][s] is the i-th face of simplex s (0 <= i <= k, targets one level
// down); degen[i][s] is the i-th degeneracy (targets one level up, absent at
// the top materialized level).  `degenerate` flags simplices that occur as a
// degeneracy image; the basepoint is the unique distinguished simplex.
struct SimplexLevel {
  std::vector<std::string> names;
  std::vector<std::vector<SimplexId>> face;
  std::vector<std::vector<SimplexId>> degen;
  std::vector<bool> degenerate;
  SimplexId basepoint = 0;

  std::size_t size() const { return names.size(); }
  std::optional<SimplexId> find(std::string_view name) const;
};

// A finite pointed simplicial set materialized through dimension max_dim().
struct SimplicialSet {
  std::vector<SimplexLevel> levels;
  std::map<std::string, std::string> meta;

  int max_dim() const { return static_cast<int>(levels.size()) - 1; }
  const SimplexLevel& level(int k) const { return levels.at(k); }
  SimplexId face(int k, int i, SimplexId s) const {
    return levels.at(k).face.at(i).at(s);
  }
  SimplexId degen(int k, int i, SimplexId s) const {
    return levels.at(k).degen.at(i).at(s);
  }
  bool is_basepoint(int k, SimplexId s) const {
    return levels.at(k).basepoint == s;
  }
  bool is_degenerate(int k, SimplexId s) const {
    return levels.at(k).degenerate.at(s);
  }
  std::size_t nondegenerate_count(int k) const;

  // Marks exactly the simplices that occur in some degeneracy image.
  void recompute_degeneracy_flags();

  // True when every vertex is connected to the basepoint through the
  // endpoints of 1-simplices.  A 0-dimensional set counts as connected only
  // when it has a single vertex.
  bool connected() const;

  std::string canonical_text() const;
  std::uint64_t hash() const;
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

// Structural checks plus all simplicial identities expressible within the
// materialized range; each violation names the identity, level and simplex.
std::vector<std::string> validate_identities(const SimplicialSet& X);

// The n-sphere as the quotient of the standard n-simplex by its boundary:
// one nonbasepoint simplex per monotone surjection [k] -> [n] at level k.
// Requires 1 <= n <= 9 and levels >= n.
SpacePtr sphere(int n, int levels);

// One-point union of `copies` copies of X.  Level layout: basepoint first,
// then the nonbasepoint simplices of each copy in X's order, copy by copy.
SpacePtr wedge(const SpacePtr& X, int copies);

// A levelwise assignment of simplices; valid when it is pointed and commutes
// with faces and degeneracies (see validate()).
struct SimplicialMap {
  SpacePtr source, target;
  std::vector<std::vector<SimplexId>> assignment;

  int depth() const { return static_cast<int>(assignment.size()) - 1; }
  SimplexId apply(int k, SimplexId s) const {
    return assignment.at(k).at(s);
  }
  std::vector<std::string> validate() const;
  bool same_assignment(const SimplicialMap& other) const {
    return assignment == other.assignment;
  }
};

SimplicialMap identity_map(const SpacePtr& X);

// Composite f . g (apply g first).  Requires g.target and f.source to be the
// same space (matched by content hash).
SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g);

// Levelwise membership flags for a pointed subcomplex.
struct Subcomplex {
  std::vector<std::vector<char>> member;
  bool contains(int k, SimplexId s) const { return member.at(k).at(s) != 0; }
};

Subcomplex basepoint_subcomplex(const SimplicialSet& X);

// Smallest subcomplex containing the seeds (and the basepoint), closed under
// faces and degeneracies within the materialized range.
Subcomplex subcomplex_closure(
    const SimplicialSet& X,
    const std::vector<std::pair<int, SimplexId>>& seeds);

std::vector<std::string> validate_subcomplex(const SimplicialSet& X,
                                             const Subcomplex& A);

struct CollapseResult {
  SpacePtr quotient;
  SimplicialMap projection;  // X -> X/A
};

// Collapses a pointed subcomplex to the basepoint.  Throws
// std::invalid_argument when A is not closed under faces and degeneracies.
CollapseResult collapse_map(const SpacePtr& X, const Subcomplex& A);

// Companions to wedge(): the fold map W -> X restricting to the identity on
// every copy, the inclusion of one copy, and the subcomplex spanned by one
// copy.  `which` is 1-based.
SimplicialMap wedge_fold_map(const SpacePtr& W, const SpacePtr& X, int copies);
SimplicialMap wedge_include_copy(const SpacePtr& X, const SpacePtr& W,
                                 int copies, int which);
Subcomplex wedge_copy_subcomplex(const SimplicialSet& W,
                                 const SimplicialSet& X, int copies,
                                 int which);

// Interchange text format (round-trips bit-exactly):
//   simplicial-set
//   meta: <key> <value>
//   max-dim: <D>
//   level: <k>
//   simplex: <name> [basepoint] [faces: i0 .. ik] [degens: j0 .. jk]
// Indices reference the adjacent levels; names are whitespace-free, unique
// per level and may not contain ',', '=', '{' or '}'.
void write_simplicial_set(std::ostream& out, const SimplicialSet& X);
std::shared_ptr<SimplicialSet> parse_simplicial_set(std::istream& in);
std::shared_ptr<SimplicialSet> load_simplicial_set(const std::string& path);

}  // namespace pamdt

#endif
