#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pamdt/homology.hpp"

namespace pamdt {

void SparseIntMatrix::add(int r, int c, Int v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("matrix entry outside declared shape");
  if (v != 0) entries.emplace_back(r, c, std::move(v));
}

void SparseIntMatrix::normalize() {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              return std::pair{std::get<0>(a), std::get<1>(a)} <
                     std::pair{std::get<0>(b), std::get<1>(b)};
            });
  std::vector<std::tuple<int, int, Int>> merged;
  for (auto& e : entries) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
        std::get<1>(merged.back()) == std::get<1>(e)) {
      std::get<2>(merged.back()) += std::get<2>(e);
    } else {
      merged.push_back(std::move(e));
    }
  }
  entries.clear();
  for (auto& e : merged)
    if (std::get<2>(e) != 0) entries.push_back(std::move(e));
}

Int SparseIntMatrix::at(int r, int c) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), std::pair{r, c},
      [](const auto& e, const std::pair<int, int>& key) {
        return std::pair{std::get<0>(e), std::get<1>(e)} < key;
      });
  if (it != entries.end() && std::get<0>(*it) == r && std::get<1>(*it) == c)
    return std::get<2>(*it);
  return 0;
}

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix shape mismatch in multiply");
  std::vector<std::vector<std::pair<int, const Int*>>> b_rows(b.rows);
  for (const auto& [r, c, v] : b.entries) b_rows[r].push_back({c, &v});
  SparseIntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  std::map<std::pair<int, int>, Int> acc;
  for (const auto& [r, k, va] : a.entries)
    for (const auto& [c, vb] : b_rows[k]) acc[{r, c}] += va * (*vb);
  for (auto& [rc, v] : acc)
    if (v != 0) out.entries.emplace_back(rc.first, rc.second, std::move(v));
  return out;
}

int SmithResult::rank() const {
  int r = 0;
  for (const auto& d : diagonal)
    if (d != 0) ++r;
  return r;
}

std::vector<Int> SmithResult::torsion_factors() const {
  std::vector<Int> out;
  for (const auto& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

using boost::multiprecision::abs;

// Quotient minimizing the remainder magnitude: |a - q*b| <= |b| / 2.
Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

std::vector<std::vector<Int>> identity_matrix(int n) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Both elimination drivers implement the same scheme.  Pivot selection takes
// the entry of least magnitude in the trailing submatrix (lexicographic
// tie-break); row and column clearing with nearest quotients swaps any
// nonzero remainder into the pivot slot, which strictly shrinks it; after a
// pivot cleans its row and column, a divisibility sweep folds a witness row
// into the pivot row until the pivot divides the whole trailing submatrix.

struct DenseSnf {
  int R, C;
  std::vector<std::vector<Int>> A, U, V;

  explicit DenseSnf(const SparseIntMatrix& in)
      : R(in.rows),
        C(in.cols),
        A(in.rows, std::vector<Int>(in.cols, 0)),
        U(identity_matrix(in.rows)),
        V(identity_matrix(in.cols)) {
    for (const auto& [r, c, v] : in.entries) A[r][c] = v;
  }

  void swap_rows(int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  }
  void swap_cols(int a, int b) {
    for (int r = 0; r < R; ++r) std::swap(A[r][a], A[r][b]);
    for (int r = 0; r < C; ++r) std::swap(V[r][a], V[r][b]);
  }
  void addmul_row(int dst, int src, const Int& q) {
    for (int c = 0; c < C; ++c) A[dst][c] += q * A[src][c];
    for (int c = 0; c < R; ++c) U[dst][c] += q * U[src][c];
  }
  void addmul_col(int dst, int src, const Int& q) {
    for (int r = 0; r < R; ++r) A[r][dst] += q * A[r][src];
    for (int r = 0; r < C; ++r) V[r][dst] += q * V[r][src];
  }
  void negate_row(int r) {
    for (int c = 0; c < C; ++c) A[r][c] = -A[r][c];
    for (int c = 0; c < R; ++c) U[r][c] = -U[r][c];
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int r = t; r < R; ++r)
      for (int c = t; c < C; ++c) {
        if (A[r][c] == 0) continue;
        Int v = abs(A[r][c]);
        if (!found || v < best) {
          found = true;
          best = v;
          pr = r;
          pc = c;
        }
      }
    return found;
  }

  bool find_nondivisible(int t, int& br) const {
    for (int r = t + 1; r < R; ++r)
      for (int c = t + 1; c < C; ++c)
        if (A[r][c] % A[t][t] != 0) {
          br = r;
          return true;
        }
    return false;
  }

  Int entry(int r, int c) const { return A[r][c]; }
  Int diag(int k) const { return A[k][k]; }
};

struct SparseSnf {
  int R, C;
  std::vector<std::map<int, Int>> A;
  std::vector<std::set<int>> colpat;
  std::vector<std::vector<Int>> U, V;

  explicit SparseSnf(const SparseIntMatrix& in)
      : R(in.rows),
        C(in.cols),
        A(in.rows),
        colpat(in.cols),
        U(identity_matrix(in.rows)),
        V(identity_matrix(in.cols)) {
    for (const auto& [r, c, v] : in.entries) {
      A[r][c] = v;
      colpat[c].insert(r);
    }
  }

  Int get(int r, int c) const {
    auto it = A[r].find(c);
    return it == A[r].end() ? Int(0) : it->second;
  }
  void set(int r, int c, const Int& v) {
    if (v == 0) {
      A[r].erase(c);
      colpat[c].erase(r);
    } else {
      A[r][c] = v;
      colpat[c].insert(r);
    }
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (const auto& [c, v] : A[a]) colpat[c].erase(a);
    for (const auto& [c, v] : A[b]) colpat[c].erase(b);
    std::swap(A[a], A[b]);
    for (const auto& [c, v] : A[a]) colpat[c].insert(a);
    for (const auto& [c, v] : A[b]) colpat[c].insert(b);
    std::swap(U[a], U[b]);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    std::set<int> touched = colpat[a];
    touched.insert(colpat[b].begin(), colpat[b].end());
    for (int r : touched) {
      Int va = get(r, a), vb = get(r, b);
      set(r, a, vb);
      set(r, b, va);
    }
    for (int r = 0; r < C; ++r) std::swap(V[r][a], V[r][b]);
  }
  void addmul_row(int dst, int src, const Int& q) {
    for (const auto& [c, v] : A[src]) set(dst, c, get(dst, c) + q * v);
    for (int c = 0; c < R; ++c) U[dst][c] += q * U[src][c];
  }
  void addmul_col(int dst, int src, const Int& q) {
    std::vector<int> rows(colpat[src].begin(), colpat[src].end());
    for (int r : rows) set(r, dst, get(r, dst) + q * A[r].at(src));
    for (int r = 0; r < C; ++r) V[r][dst] += q * V[r][src];
  }
  void negate_row(int r) {
    for (auto& [c, v] : A[r]) v = -v;
    for (int c = 0; c < R; ++c) U[r][c] = -U[r][c];
  }

  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int r = t; r < R; ++r)
      for (auto it = A[r].lower_bound(t); it != A[r].end(); ++it) {
        Int v = abs(it->second);
        if (!found || v < best ||
            (v == best && std::pair{r, it->first} < std::pair{pr, pc})) {
          found = true;
          best = v;
          pr = r;
          pc = it->first;
        }
      }
    return found;
  }

  bool find_nondivisible(int t, int& br) const {
    Int d = get(t, t);
    for (int r = t + 1; r < R; ++r)
      for (auto it = A[r].lower_bound(t + 1); it != A[r].end(); ++it)
        if (it->second % d != 0) {
          br = r;
          return true;
        }
    return false;
  }

  Int entry(int r, int c) const { return get(r, c); }
  Int diag(int k) const { return get(k, k); }
};

template <typename Self>
void run_elimination(Self& self) {
  const int m = std::min(self.R, self.C);
  for (int t = 0; t < m; ++t) {
    int pr = 0, pc = 0;
    if (!self.find_pivot(t, pr, pc)) break;
    self.swap_rows(t, pr);
    self.swap_cols(t, pc);
    for (;;) {
      bool restart = false;
      for (int r = 0; r < self.R && !restart; ++r) {
        if (r == t) continue;
        Int v = self.entry(r, t);
        if (v == 0) continue;
        Int q = round_div(v, self.diag(t));
        if (q != 0) self.addmul_row(r, t, -q);
        if (self.entry(r, t) != 0) {
          self.swap_rows(t, r);
          restart = true;
        }
      }
      if (restart) continue;
      for (int c = 0; c < self.C && !restart; ++c) {
        if (c == t) continue;
        Int v = self.entry(t, c);
        if (v == 0) continue;
        Int q = round_div(v, self.diag(t));
        if (q != 0) self.addmul_col(c, t, -q);
        if (self.entry(t, c) != 0) {
          self.swap_cols(t, c);
          restart = true;
        }
      }
      if (restart) continue;
      int br = 0;
      if (self.find_nondivisible(t, br)) {
        self.addmul_row(t, br, 1);
        continue;
      }
      break;
    }
  }
  for (int k = 0; k < m; ++k)
    if (self.diag(k) < 0) self.negate_row(k);
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& a, SnfMode mode) {
  if (mode == SnfMode::automatic)
    mode = std::max(a.rows, a.cols) <= 64 ? SnfMode::dense : SnfMode::sparse;
  SmithResult res;
  auto finish = [&](auto& driver) {
    run_elimination(driver);
    const int m = std::min(a.rows, a.cols);
    res.diagonal.reserve(m);
    for (int k = 0; k < m; ++k) res.diagonal.push_back(driver.diag(k));
    res.U = std::move(driver.U);
    res.V = std::move(driver.V);
  };
  if (mode == SnfMode::dense) {
    DenseSnf driver(a);
    finish(driver);
  } else {
    SparseSnf driver(a);
    finish(driver);
  }
  return res;
}

}  // namespace pamdt
