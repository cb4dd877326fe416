#include <atomic>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pamdt/homology.hpp"
#include "pamdt/util.hpp"

namespace pamdt {

bool boundary_condition_holds(const ChainComplex& c) {
  for (int k = 1; k + 1 <= c.max_deg(); ++k)
    if (!multiply(c.boundary[k], c.boundary[k + 1]).is_zero()) return false;
  return true;
}

ChainComplex normalized_chains(const SimplicialSet& X, int max_deg) {
  if (max_deg < 0)
    throw std::invalid_argument("chain degree must be nonnegative");
  if (X.max_dim() < max_deg)
    throw std::invalid_argument(
        "space materialized to depth " + std::to_string(X.max_dim()) +
        "; normalized chains need depth " + std::to_string(max_deg));
  ChainComplex c;
  c.basis.resize(max_deg + 1);
  c.basis_size.resize(max_deg + 1);
  std::vector<std::vector<int>> row_of(max_deg + 1);
  for (int k = 0; k <= max_deg; ++k) {
    row_of[k].assign(X.levels[k].size(), -1);
    for (SimplexId s = 0; s < X.levels[k].size(); ++s)
      if (!X.is_degenerate(k, s)) {
        row_of[k][s] = static_cast<int>(c.basis[k].size());
        c.basis[k].push_back(s);
      }
    c.basis_size[k] = c.basis[k].size();
  }
  c.boundary.resize(max_deg + 1);
  c.boundary[0].rows = 0;
  c.boundary[0].cols = static_cast<int>(c.basis_size[0]);
  for (int k = 1; k <= max_deg; ++k) {
    auto& d = c.boundary[k];
    d.rows = static_cast<int>(c.basis_size[k - 1]);
    d.cols = static_cast<int>(c.basis_size[k]);
    for (std::size_t j = 0; j < c.basis[k].size(); ++j) {
      SimplexId s = c.basis[k][j];
      for (int i = 0; i <= k; ++i) {
        SimplexId t = X.face(k, i, s);
        int row = row_of[k - 1][t];
        if (row >= 0) d.add(row, static_cast<int>(j), (i % 2 == 0) ? 1 : -1);
      }
    }
    d.normalize();
  }
  if (!boundary_condition_holds(c))
    throw std::logic_error("boundary condition violated in normalized chains");
  return c;
}

namespace {

std::string degree_string(int betti, const std::vector<Int>& torsion) {
  std::string s;
  auto append = [&](const std::string& part) {
    if (!s.empty()) s += "+";
    s += part;
  };
  if (betti == 1) append("Z");
  if (betti > 1) append("Z^" + std::to_string(betti));
  for (const auto& d : torsion) append("Z/" + d.str());
  return s.empty() ? "0" : s;
}

}  // namespace

std::string HomologyResult::to_string() const {
  std::string s;
  for (int k = 0; k <= through_deg(); ++k) {
    if (k) s += ", ";
    s += "H" + std::to_string(k) + "=" + degree_string(betti[k], torsion[k]);
  }
  return s;
}

HomologyResult homology(const ChainComplex& c, bool reduced) {
  const int D = c.max_deg();
  if (D < 0) throw std::invalid_argument("homology of an empty complex");
  for (int k = 0; k <= D; ++k) {
    if (c.boundary[k].cols != static_cast<int>(c.basis_size[k]))
      throw std::invalid_argument("boundary shape disagrees with basis sizes");
    if (k >= 1 && c.boundary[k].rows != static_cast<int>(c.basis_size[k - 1]))
      throw std::invalid_argument("boundary shape disagrees with basis sizes");
  }
  if (!boundary_condition_holds(c))
    throw std::invalid_argument("boundary condition violated");

  std::vector<int> rank(D + 1, 0);
  std::vector<std::vector<Int>> factors(D + 1);
  const int workers = std::min(thread_count(), D);
  if (workers <= 1) {
    for (int k = 1; k <= D; ++k) {
      auto snf = smith_normal_form(c.boundary[k]);
      rank[k] = snf.rank();
      factors[k] = snf.torsion_factors();
    }
  } else {
    std::atomic<int> next{1};
    auto worker = [&]() {
      for (int k = next.fetch_add(1); k <= D; k = next.fetch_add(1)) {
        auto snf = smith_normal_form(c.boundary[k]);
        rank[k] = snf.rank();
        factors[k] = snf.torsion_factors();
      }
    };
    std::vector<std::future<void>> futs;
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
  }

  HomologyResult res;
  res.reduced = reduced;
  res.betti.resize(D);
  res.torsion.resize(D);
  for (int k = 0; k < D; ++k) {
    res.betti[k] = static_cast<int>(c.basis_size[k]) - rank[k] - rank[k + 1];
    res.torsion[k] = factors[k + 1];
    if (res.betti[k] < 0)
      throw std::logic_error("negative betti number: corrupt complex");
  }
  if (reduced && D > 0) {
    if (res.betti[0] < 1)
      throw std::invalid_argument("reduced homology of an empty space");
    res.betti[0] -= 1;
  }
  return res;
}

HomologyResult space_homology(const SimplicialSet& X, int through_deg,
                              bool reduced) {
  if (through_deg < 0)
    throw std::invalid_argument("homology degree must be nonnegative");
  return homology(normalized_chains(X, through_deg + 1), reduced);
}

HomologyComparison compare_homology(const HomologyResult& a,
                                    const HomologyResult& b,
                                    int through_deg) {
  if (a.through_deg() < through_deg || b.through_deg() < through_deg)
    throw std::invalid_argument("degree range mismatch in homology comparison");
  HomologyComparison cmp;
  for (int k = 0; k <= through_deg; ++k) {
    if (a.betti[k] != b.betti[k] || a.torsion[k] != b.torsion[k]) {
      cmp.equal = false;
      cmp.first_difference = k;
      cmp.detail = "degree " + std::to_string(k) + ": " +
                   degree_string(a.betti[k], a.torsion[k]) + " vs " +
                   degree_string(b.betti[k], b.torsion[k]);
      return cmp;
    }
  }
  return cmp;
}

void write_matrix_triplets(std::ostream& out, const SparseIntMatrix& a) {
  out << "matrix " << a.rows << ' ' << a.cols << ' ' << a.nonzeros() << '\n';
  for (const auto& [r, c, v] : a.entries)
    out << r << ' ' << c << ' ' << v << '\n';
}

SparseIntMatrix parse_matrix_triplets(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream is(line);
      toks.clear();
      std::string t;
      while (is >> t) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<std::string> toks;
  if (!next_tokens(toks) || toks.size() != 4 || toks[0] != "matrix")
    throw ParseError("expected 'matrix <rows> <cols> <nnz>' header", line_no);
  SparseIntMatrix a;
  long long nnz = 0;
  try {
    a.rows = std::stoi(toks[1]);
    a.cols = std::stoi(toks[2]);
    nnz = std::stoll(toks[3]);
  } catch (const std::exception&) {
    throw ParseError("malformed matrix header", line_no);
  }
  if (a.rows < 0 || a.cols < 0 || nnz < 0)
    throw ParseError("malformed matrix header", line_no);
  for (long long i = 0; i < nnz; ++i) {
    if (!next_tokens(toks) || toks.size() != 3)
      throw ParseError("expected '<row> <col> <value>'", line_no);
    try {
      int r = std::stoi(toks[0]);
      int c = std::stoi(toks[1]);
      if (r < 0 || r >= a.rows || c < 0 || c >= a.cols)
        throw ParseError("matrix entry outside declared shape", line_no);
      a.add(r, c, Int(toks[2]));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed matrix entry", line_no);
    }
  }
  a.normalize();
  return a;
}

}  // namespace pamdt
