#include "pamdt/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pamdt/util.hpp"

namespace pamdt {

std::optional<SimplexId> SimplexLevel::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<SimplexId>(i);
  return std::nullopt;
}

std::size_t SimplicialSet::nondegenerate_count(int k) const {
  const auto& flags = levels.at(k).degenerate;
  return static_cast<std::size_t>(
      std::count(flags.begin(), flags.end(), false));
}

void SimplicialSet::recompute_degeneracy_flags() {
  for (auto& lv : levels) lv.degenerate.assign(lv.size(), false);
  for (int k = 0; k + 1 <= max_dim(); ++k) {
    const auto& lv = levels[k];
    for (const auto& table : lv.degen)
      for (SimplexId img : table) levels[k + 1].degenerate[img] = true;
  }
}

bool SimplicialSet::connected() const {
  if (levels.empty()) return false;
  std::size_t n = levels[0].size();
  if (n <= 1) return n == 1;
  if (max_dim() < 1) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < levels[1].size(); ++e)
    parent[root(levels[1].face[0][e])] = root(levels[1].face[1][e]);
  std::size_t base = root(levels[0].basepoint);
  for (std::size_t v = 0; v < n; ++v)
    if (root(v) != base) return false;
  return true;
}

std::uint64_t SimplicialSet::hash() const { return fnv1a64(canonical_text()); }

// ---------------------------------------------------------------------------
// Identity validation

namespace {

std::string at(int level, SimplexId s) {
  return "level " + std::to_string(level) + " simplex " + std::to_string(s);
}

}  // namespace

std::vector<std::string> validate_identities(const SimplicialSet& X) {
  std::vector<std::string> out;
  const int D = X.max_dim();
  if (D < 0) return {"simplicial set has no levels"};

  // Table shapes, index ranges, basepoints, name uniqueness.
  for (int k = 0; k <= D; ++k) {
    const auto& lv = X.levels[k];
    std::size_t n = lv.size();
    if (n == 0) {
      out.push_back("level " + std::to_string(k) + " is empty");
      return out;
    }
    if (lv.basepoint >= n)
      out.push_back("level " + std::to_string(k) + " basepoint out of range");
    std::set<std::string> names(lv.names.begin(), lv.names.end());
    if (names.size() != n)
      out.push_back("level " + std::to_string(k) + " has duplicate names");
    std::size_t want_faces = k == 0 ? 0 : static_cast<std::size_t>(k) + 1;
    if (lv.face.size() != want_faces)
      out.push_back("level " + std::to_string(k) + " has " +
                    std::to_string(lv.face.size()) + " face tables, expected " +
                    std::to_string(want_faces));
    std::size_t want_degens = k == D ? 0 : static_cast<std::size_t>(k) + 1;
    if (lv.degen.size() != want_degens)
      out.push_back("level " + std::to_string(k) + " has " +
                    std::to_string(lv.degen.size()) +
                    " degeneracy tables, expected " +
                    std::to_string(want_degens));
    for (const auto& table : lv.face) {
      if (table.size() != n) {
        out.push_back("level " + std::to_string(k) + " face table size mismatch");
        continue;
      }
      if (k == 0) continue;
      for (SimplexId img : table)
        if (img >= X.levels[k - 1].size())
          out.push_back("level " + std::to_string(k) + " face index out of range");
    }
    for (const auto& table : lv.degen) {
      if (table.size() != n) {
        out.push_back("level " + std::to_string(k) +
                      " degeneracy table size mismatch");
        continue;
      }
      if (k == D) continue;
      for (SimplexId img : table)
        if (img >= X.levels[k + 1].size())
          out.push_back("level " + std::to_string(k) +
                        " degeneracy index out of range");
    }
    if (lv.degenerate.size() != n)
      out.push_back("level " + std::to_string(k) +
                    " degenerate-flag vector size mismatch");
  }
  if (!out.empty()) return out;

  // Basepoint closure: faces and degeneracies of the basepoint stay at the
  // basepoint.
  for (int k = 0; k <= D; ++k) {
    SimplexId bp = X.levels[k].basepoint;
    for (int i = 0; i < static_cast<int>(X.levels[k].face.size()); ++i)
      if (X.face(k, i, bp) != X.levels[k - 1].basepoint)
        out.push_back("basepoint face d_" + std::to_string(i) + " at level " +
                      std::to_string(k) + " leaves the basepoint");
    for (int i = 0; i < static_cast<int>(X.levels[k].degen.size()); ++i)
      if (X.degen(k, i, bp) != X.levels[k + 1].basepoint)
        out.push_back("basepoint degeneracy s_" + std::to_string(i) +
                      " at level " + std::to_string(k) +
                      " leaves the basepoint");
  }

  // d_i d_j = d_{j-1} d_i for i < j.
  for (int k = 2; k <= D; ++k)
    for (SimplexId s = 0; s < X.levels[k].size(); ++s)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          if (X.face(k - 1, i, X.face(k, j, s)) !=
              X.face(k - 1, j - 1, X.face(k, i, s)))
            out.push_back("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                          " != d_" + std::to_string(j - 1) + " d_" +
                          std::to_string(i) + " at " + at(k, s));

  // s_i s_j = s_{j+1} s_i for i <= j.
  for (int k = 0; k + 2 <= D; ++k)
    for (SimplexId s = 0; s < X.levels[k].size(); ++s)
      for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= j; ++i)
          if (X.degen(k + 1, i, X.degen(k, j, s)) !=
              X.degen(k + 1, j + 1, X.degen(k, i, s)))
            out.push_back("s_" + std::to_string(i) + " s_" + std::to_string(j) +
                          " != s_" + std::to_string(j + 1) + " s_" +
                          std::to_string(i) + " at " + at(k, s));

  // d_i s_j: identity on the middle pair, shifted degeneracy otherwise.
  for (int k = 0; k + 1 <= D; ++k)
    for (SimplexId s = 0; s < X.levels[k].size(); ++s)
      for (int j = 0; j <= k; ++j) {
        SimplexId sj = X.degen(k, j, s);
        for (int i = 0; i <= k + 1; ++i) {
          SimplexId got = X.face(k + 1, i, sj);
          if (i == j || i == j + 1) {
            if (got != s)
              out.push_back("d_" + std::to_string(i) + " s_" +
                            std::to_string(j) + " != id at " + at(k, s));
          } else if (i < j) {
            if (got != X.degen(k - 1, j - 1, X.face(k, i, s)))
              out.push_back("d_" + std::to_string(i) + " s_" +
                            std::to_string(j) + " != s_" +
                            std::to_string(j - 1) + " d_" + std::to_string(i) +
                            " at " + at(k, s));
          } else {
            if (got != X.degen(k - 1, j, X.face(k, i - 1, s)))
              out.push_back("d_" + std::to_string(i) + " s_" +
                            std::to_string(j) + " != s_" + std::to_string(j) +
                            " d_" + std::to_string(i - 1) + " at " + at(k, s));
          }
        }
      }

  // Degenerate flags must match the degeneracy images.
  SimplicialSet copy;
  copy.levels = X.levels;
  copy.recompute_degeneracy_flags();
  for (int k = 0; k <= D; ++k)
    if (copy.levels[k].degenerate != X.levels[k].degenerate)
      out.push_back("level " + std::to_string(k) +
                    " degenerate flags disagree with degeneracy images");
  return out;
}

// ---------------------------------------------------------------------------
// Spheres

namespace {

std::string surjection_name(const std::vector<int>& vals) {
  std::string s;
  for (int v : vals) s += static_cast<char>('0' + v);
  return s;
}

bool is_surjection(const std::vector<int>& vals, int n) {
  if (vals.front() != 0 || vals.back() != n) return false;
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] - vals[i - 1] > 1 || vals[i] < vals[i - 1]) return false;
  return true;
}

// Monotone surjections [k] -> [n] in lexicographic order by value sequence.
std::vector<std::vector<int>> surjections(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur{0};
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k + 1) {
      if (cur.back() == n) out.push_back(cur);
      return;
    }
    int remaining = k + 1 - static_cast<int>(cur.size());
    for (int step = 0; step <= 1; ++step) {
      int v = cur.back() + step;
      if (v > n || n - v > remaining) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  if (k >= 0 && n >= 0) dfs(dfs);
  return out;
}

}  // namespace

SpacePtr sphere(int n, int levels) {
  if (n < 1)
    throw std::invalid_argument("sphere dimension must be at least 1");
  if (n > 9) throw std::invalid_argument("sphere dimension at most 9 supported");
  if (levels < n)
    throw std::invalid_argument(
        "sphere must be materialized at least to its dimension");
  auto X = std::make_shared<SimplicialSet>();
  std::vector<std::vector<std::vector<int>>> cells(levels + 1);
  std::vector<std::map<std::string, SimplexId>> lookup(levels + 1);
  X->levels.resize(levels + 1);
  for (int k = 0; k <= levels; ++k) {
    auto& lv = X->levels[k];
    lv.names.push_back("*");
    cells[k] = surjections(k, n);
    for (const auto& vals : cells[k]) {
      lookup[k][surjection_name(vals)] =
          static_cast<SimplexId>(lv.names.size());
      lv.names.push_back(surjection_name(vals));
    }
    lv.basepoint = 0;
  }
  for (int k = 0; k <= levels; ++k) {
    auto& lv = X->levels[k];
    if (k >= 1) {
      lv.face.assign(k + 1, std::vector<SimplexId>(lv.size(), 0));
      for (std::size_t s = 0; s < cells[k].size(); ++s)
        for (int i = 0; i <= k; ++i) {
          std::vector<int> f = cells[k][s];
          f.erase(f.begin() + i);
          SimplexId img = 0;
          if (is_surjection(f, n)) img = lookup[k - 1].at(surjection_name(f));
          lv.face[i][s + 1] = img;
        }
    }
    if (k < levels) {
      lv.degen.assign(k + 1, std::vector<SimplexId>(lv.size(), 0));
      for (std::size_t s = 0; s < cells[k].size(); ++s)
        for (int i = 0; i <= k; ++i) {
          std::vector<int> d = cells[k][s];
          d.insert(d.begin() + i, d[i]);
          lv.degen[i][s + 1] = lookup[k + 1].at(surjection_name(d));
        }
    }
  }
  X->recompute_degeneracy_flags();
  X->meta = {{"kind", "sphere"}, {"dimension", std::to_string(n)}};
  return X;
}

// ---------------------------------------------------------------------------
// Wedges

namespace {

// Indices of the nonbasepoint simplices of each level, in level order.
std::vector<std::vector<SimplexId>> nonbase_lists(const SimplicialSet& X) {
  std::vector<std::vector<SimplexId>> out(X.levels.size());
  for (std::size_t k = 0; k < X.levels.size(); ++k)
    for (SimplexId s = 0; s < X.levels[k].size(); ++s)
      if (s != X.levels[k].basepoint) out[k].push_back(s);
  return out;
}

// Position of each simplex within its level's nonbasepoint list (-1 for the
// basepoint).
std::vector<std::vector<int>> nonbase_positions(const SimplicialSet& X) {
  auto lists = nonbase_lists(X);
  std::vector<std::vector<int>> pos(X.levels.size());
  for (std::size_t k = 0; k < X.levels.size(); ++k) {
    pos[k].assign(X.levels[k].size(), -1);
    for (std::size_t p = 0; p < lists[k].size(); ++p) pos[k][lists[k][p]] = p;
  }
  return pos;
}

}  // namespace

SpacePtr wedge(const SpacePtr& X, int copies) {
  if (!X || X->levels.empty())
    throw std::invalid_argument("wedge requires a materialized space");
  if (copies < 1) throw std::invalid_argument("wedge requires copies >= 1");
  const int D = X->max_dim();
  auto lists = nonbase_lists(*X);
  auto pos = nonbase_positions(*X);
  auto tag = [&](int k, int copy, SimplexId x) -> SimplexId {
    // Image of copy `copy` of nonbasepoint simplex x at level k.
    return static_cast<SimplexId>(1 + (copy - 1) * lists[k].size() +
                                  pos[k][x]);
  };
  auto W = std::make_shared<SimplicialSet>();
  W->levels.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    auto& lv = W->levels[k];
    lv.names.push_back("*");
    for (int c = 1; c <= copies; ++c)
      for (SimplexId x : lists[k])
        lv.names.push_back("c" + std::to_string(c) + ":" +
                           X->levels[k].names[x]);
    lv.basepoint = 0;
    std::size_t n = lv.size();
    if (k >= 1) {
      lv.face.assign(k + 1, std::vector<SimplexId>(n, 0));
      for (int c = 1; c <= copies; ++c)
        for (SimplexId x : lists[k])
          for (int i = 0; i <= k; ++i) {
            SimplexId y = X->face(k, i, x);
            lv.face[i][tag(k, c, x)] =
                y == X->levels[k - 1].basepoint ? 0 : tag(k - 1, c, y);
          }
    }
    if (k < D) {
      lv.degen.assign(k + 1, std::vector<SimplexId>(n, 0));
      for (int c = 1; c <= copies; ++c)
        for (SimplexId x : lists[k])
          for (int i = 0; i <= k; ++i) {
            SimplexId y = X->degen(k, i, x);
            lv.degen[i][tag(k, c, x)] =
                y == X->levels[k + 1].basepoint ? 0 : tag(k + 1, c, y);
          }
    }
  }
  W->recompute_degeneracy_flags();
  W->meta = {{"kind", "wedge"},
             {"copies", std::to_string(copies)},
             {"base", hex64(X->hash())}};
  return W;
}

// ---------------------------------------------------------------------------
// Maps

SimplicialMap identity_map(const SpacePtr& X) {
  if (!X) throw std::invalid_argument("identity_map requires a space");
  SimplicialMap f;
  f.source = f.target = X;
  f.assignment.resize(X->levels.size());
  for (std::size_t k = 0; k < X->levels.size(); ++k) {
    f.assignment[k].resize(X->levels[k].size());
    std::iota(f.assignment[k].begin(), f.assignment[k].end(), 0);
  }
  return f;
}

SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g) {
  if (!f.source || !g.target)
    throw std::invalid_argument("compose_maps requires materialized maps");
  if (f.source != g.target && f.source->hash() != g.target->hash())
    throw std::invalid_argument("compose_maps: middle spaces disagree");
  SimplicialMap h;
  h.source = g.source;
  h.target = f.target;
  std::size_t depth = std::min(f.assignment.size(), g.assignment.size());
  h.assignment.resize(depth);
  for (std::size_t k = 0; k < depth; ++k) {
    h.assignment[k].resize(g.assignment[k].size());
    for (std::size_t s = 0; s < g.assignment[k].size(); ++s)
      h.assignment[k][s] = f.assignment[k][g.assignment[k][s]];
  }
  return h;
}

std::vector<std::string> SimplicialMap::validate() const {
  std::vector<std::string> out;
  if (!source || !target) return {"map missing source or target"};
  if (assignment.size() != source->levels.size())
    return {"assignment depth differs from source depth"};
  if (target->levels.size() < assignment.size())
    return {"target is materialized to a smaller depth than the source"};
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (assignment[k].size() != source->levels[k].size())
      return {"assignment size mismatch at level " + std::to_string(k)};
    for (SimplexId img : assignment[k])
      if (img >= target->levels[k].size())
        return {"assignment out of range at level " + std::to_string(k)};
  }
  const int D = static_cast<int>(assignment.size()) - 1;
  for (int k = 0; k <= D; ++k)
    if (assignment[k][source->levels[k].basepoint] !=
        target->levels[k].basepoint)
      out.push_back("map does not preserve the basepoint at level " +
                    std::to_string(k));
  for (int k = 1; k <= D; ++k)
    for (SimplexId s = 0; s < source->levels[k].size(); ++s)
      for (int i = 0; i <= k; ++i)
        if (assignment[k - 1][source->face(k, i, s)] !=
            target->face(k, i, assignment[k][s]))
          out.push_back("map does not commute with d_" + std::to_string(i) +
                        " at " + at(k, s));
  for (int k = 0; k < D; ++k)
    for (SimplexId s = 0; s < source->levels[k].size(); ++s)
      for (int i = 0; i <= k; ++i)
        if (assignment[k + 1][source->degen(k, i, s)] !=
            target->degen(k, i, assignment[k][s]))
          out.push_back("map does not commute with s_" + std::to_string(i) +
                        " at " + at(k, s));
  return out;
}

// ---------------------------------------------------------------------------
// Subcomplexes and collapse

Subcomplex basepoint_subcomplex(const SimplicialSet& X) {
  Subcomplex A;
  A.member.resize(X.levels.size());
  for (std::size_t k = 0; k < X.levels.size(); ++k) {
    A.member[k].assign(X.levels[k].size(), 0);
    A.member[k][X.levels[k].basepoint] = 1;
  }
  return A;
}

Subcomplex subcomplex_closure(
    const SimplicialSet& X,
    const std::vector<std::pair<int, SimplexId>>& seeds) {
  Subcomplex A = basepoint_subcomplex(X);
  std::vector<std::pair<int, SimplexId>> work;
  for (auto [k, s] : seeds) {
    if (k < 0 || k > X.max_dim() || s >= X.levels[k].size())
      throw std::invalid_argument("subcomplex seed out of range");
    if (!A.member[k][s]) {
      A.member[k][s] = 1;
      work.push_back({k, s});
    }
  }
  for (std::size_t k = 0; k < X.levels.size(); ++k)
    work.push_back({static_cast<int>(k), X.levels[k].basepoint});
  while (!work.empty()) {
    auto [k, s] = work.back();
    work.pop_back();
    if (k >= 1)
      for (int i = 0; i <= k; ++i) {
        SimplexId y = X.face(k, i, s);
        if (!A.member[k - 1][y]) {
          A.member[k - 1][y] = 1;
          work.push_back({k - 1, y});
        }
      }
    if (k < X.max_dim())
      for (int i = 0; i <= k; ++i) {
        SimplexId y = X.degen(k, i, s);
        if (!A.member[k + 1][y]) {
          A.member[k + 1][y] = 1;
          work.push_back({k + 1, y});
        }
      }
  }
  return A;
}

std::vector<std::string> validate_subcomplex(const SimplicialSet& X,
                                             const Subcomplex& A) {
  std::vector<std::string> out;
  if (A.member.size() != X.levels.size())
    return {"subcomplex depth differs from the ambient space"};
  for (std::size_t k = 0; k < X.levels.size(); ++k)
    if (A.member[k].size() != X.levels[k].size())
      return {"subcomplex size mismatch at level " + std::to_string(k)};
  for (std::size_t k = 0; k < X.levels.size(); ++k)
    if (!A.member[k][X.levels[k].basepoint])
      out.push_back("subcomplex misses the basepoint at level " +
                    std::to_string(k));
  for (int k = 0; k <= X.max_dim(); ++k)
    for (SimplexId s = 0; s < X.levels[k].size(); ++s) {
      if (!A.member[k][s]) continue;
      if (k >= 1)
        for (int i = 0; i <= k; ++i)
          if (!A.member[k - 1][X.face(k, i, s)])
            out.push_back("subcomplex not closed under d_" +
                          std::to_string(i) + " at " + at(k, s));
      if (k < X.max_dim())
        for (int i = 0; i <= k; ++i)
          if (!A.member[k + 1][X.degen(k, i, s)])
            out.push_back("subcomplex not closed under s_" +
                          std::to_string(i) + " at " + at(k, s));
    }
  return out;
}

CollapseResult collapse_map(const SpacePtr& X, const Subcomplex& A) {
  if (!X) throw std::invalid_argument("collapse_map requires a space");
  auto problems = validate_subcomplex(*X, A);
  if (!problems.empty()) throw std::invalid_argument(problems.front());
  const int D = X->max_dim();
  auto Q = std::make_shared<SimplicialSet>();
  Q->levels.resize(D + 1);
  std::vector<std::vector<SimplexId>> qid(D + 1);
  for (int k = 0; k <= D; ++k) {
    auto& lv = Q->levels[k];
    lv.names.push_back(X->levels[k].names[X->levels[k].basepoint]);
    lv.basepoint = 0;
    qid[k].assign(X->levels[k].size(), 0);
    for (SimplexId s = 0; s < X->levels[k].size(); ++s)
      if (!A.member[k][s]) {
        qid[k][s] = static_cast<SimplexId>(lv.names.size());
        lv.names.push_back(X->levels[k].names[s]);
      }
  }
  for (int k = 0; k <= D; ++k) {
    auto& lv = Q->levels[k];
    if (k >= 1) {
      lv.face.assign(k + 1, std::vector<SimplexId>(lv.size(), 0));
      for (SimplexId s = 0; s < X->levels[k].size(); ++s)
        if (!A.member[k][s])
          for (int i = 0; i <= k; ++i)
            lv.face[i][qid[k][s]] = qid[k - 1][X->face(k, i, s)];
    }
    if (k < D) {
      lv.degen.assign(k + 1, std::vector<SimplexId>(lv.size(), 0));
      for (SimplexId s = 0; s < X->levels[k].size(); ++s)
        if (!A.member[k][s])
          for (int i = 0; i <= k; ++i)
            lv.degen[i][qid[k][s]] = qid[k + 1][X->degen(k, i, s)];
    }
  }
  Q->recompute_degeneracy_flags();
  Q->meta = {{"kind", "quotient"}, {"base", hex64(X->hash())}};
  CollapseResult res;
  res.quotient = Q;
  res.projection.source = X;
  res.projection.target = Q;
  res.projection.assignment = std::move(qid);
  return res;
}

// ---------------------------------------------------------------------------
// Wedge companions

namespace {

void check_wedge_shape(const SimplicialSet& W, const SimplicialSet& X,
                       int copies) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  if (W.levels.size() != X.levels.size())
    throw std::invalid_argument("wedge and base depth disagree");
  for (std::size_t k = 0; k < X.levels.size(); ++k)
    if (W.levels[k].size() !=
        1 + static_cast<std::size_t>(copies) * (X.levels[k].size() - 1))
      throw std::invalid_argument("space is not a wedge of the given base");
}

}  // namespace

SimplicialMap wedge_fold_map(const SpacePtr& W, const SpacePtr& X,
                             int copies) {
  if (!W || !X) throw std::invalid_argument("wedge_fold_map requires spaces");
  check_wedge_shape(*W, *X, copies);
  auto lists = nonbase_lists(*X);
  SimplicialMap f;
  f.source = W;
  f.target = X;
  f.assignment.resize(X->levels.size());
  for (std::size_t k = 0; k < X->levels.size(); ++k) {
    f.assignment[k].assign(W->levels[k].size(), X->levels[k].basepoint);
    SimplexId w = 1;
    for (int c = 1; c <= copies; ++c)
      for (SimplexId x : lists[k]) f.assignment[k][w++] = x;
  }
  return f;
}

SimplicialMap wedge_include_copy(const SpacePtr& X, const SpacePtr& W,
                                 int copies, int which) {
  if (!W || !X)
    throw std::invalid_argument("wedge_include_copy requires spaces");
  check_wedge_shape(*W, *X, copies);
  if (which < 1 || which > copies)
    throw std::invalid_argument("copy index out of range");
  auto lists = nonbase_lists(*X);
  auto pos = nonbase_positions(*X);
  SimplicialMap f;
  f.source = X;
  f.target = W;
  f.assignment.resize(X->levels.size());
  for (std::size_t k = 0; k < X->levels.size(); ++k) {
    f.assignment[k].assign(X->levels[k].size(), 0);
    for (SimplexId x : lists[k])
      f.assignment[k][x] = static_cast<SimplexId>(
          1 + (which - 1) * lists[k].size() + pos[k][x]);
  }
  return f;
}

Subcomplex wedge_copy_subcomplex(const SimplicialSet& W,
                                 const SimplicialSet& X, int copies,
                                 int which) {
  check_wedge_shape(W, X, copies);
  if (which < 1 || which > copies)
    throw std::invalid_argument("copy index out of range");
  auto lists = nonbase_lists(X);
  Subcomplex A = basepoint_subcomplex(W);
  for (std::size_t k = 0; k < X.levels.size(); ++k) {
    std::size_t first = 1 + (which - 1) * lists[k].size();
    for (std::size_t p = 0; p < lists[k].size(); ++p)
      A.member[k][first + p] = 1;
  }
  return A;
}

}  // namespace pamdt
