#ifndef PAMDT_HOMOLOGY_HPP
#define PAMDT_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "pamdt/simplicial.hpp"

namespace pamdt {

using Int = boost::multiprecision::cpp_int;

// Integer matrix in sorted coordinate form: (row, col, value) with value
// nonzero and coordinates unique.
struct SparseIntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, Int>> entries;

  void add(int r, int c, Int v);  // accumulates; call normalize() afterwards
  void normalize();               // sort, merge duplicates, drop zeros
  Int at(int r, int c) const;
  std::size_t nonzeros() const { return entries.size(); }
  bool is_zero() const { return entries.empty(); }
};

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

enum class SnfMode { automatic, dense, sparse };

// Smith normal form U * A * V = diag(d_1, ..., d_r, 0, ...) with d_i >= 0,
// d_i dividing d_{i+1}, and U, V unimodular.
struct SmithResult {
  std::vector<Int> diagonal;           // length min(rows, cols)
  std::vector<std::vector<Int>> U, V;  // rows x rows and cols x cols

  int rank() const;
  // Diagonal entries exceeding 1: the torsion part of the cokernel.
  std::vector<Int> torsion_factors() const;
};

// Exact integer Smith normal form.  Matrices up to 64 rows and columns run
// on a dense working copy; larger ones on a sparse row-map representation.
// `mode` forces one path (used by the cross-validation tests).
SmithResult smith_normal_form(const SparseIntMatrix& a,
                              SnfMode mode = SnfMode::automatic);

// Chain complex in nonnegative degrees 0..max_deg().  boundary[k] maps
// degree k to degree k-1 (boundary[0] has zero rows).  basis[k] optionally
// records the simplex ids behind the degree-k basis.
struct ChainComplex {
  std::vector<std::size_t> basis_size;
  std::vector<SparseIntMatrix> boundary;
  std::vector<std::vector<SimplexId>> basis;

  int max_deg() const { return static_cast<int>(boundary.size()) - 1; }
};

// Degreewise composite boundary[k] * boundary[k+1] == 0.
bool boundary_condition_holds(const ChainComplex& c);

// Normalized chains: one generator per nondegenerate simplex, boundary the
// alternating face sum with degenerate faces dropped.  Requires the space to
// be materialized at least to max_deg; verifies the boundary condition.
ChainComplex normalized_chains(const SimplicialSet& X, int max_deg);

// Integral homology of degrees 0..max_deg()-1 of a complex (the top degree
// needs the incoming boundary and is not reported).  `reduced` removes one
// free rank in degree 0.
struct HomologyResult {
  std::vector<int> betti;
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per degree
  bool reduced = false;

  int through_deg() const { return static_cast<int>(betti.size()) - 1; }
  std::string to_string() const;
  bool operator==(const HomologyResult& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
};

HomologyResult homology(const ChainComplex& c, bool reduced = false);

// Convenience: normalized chains through degree through_deg + 1, then
// homology.  Requires X materialized to through_deg + 1.
HomologyResult space_homology(const SimplicialSet& X, int through_deg,
                              bool reduced = false);

struct HomologyComparison {
  bool equal = true;
  int first_difference = -1;
  std::string detail;
};

// Compares degrees 0..through_deg; throws std::invalid_argument when either
// result covers a smaller range.
HomologyComparison compare_homology(const HomologyResult& a,
                                    const HomologyResult& b, int through_deg);

// Triplet text format:
//   matrix <rows> <cols> <nnz>
//   <row> <col> <value>
void write_matrix_triplets(std::ostream& out, const SparseIntMatrix& a);
SparseIntMatrix parse_matrix_triplets(std::istream& in);

}  // namespace pamdt

#endif
