#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "pamdt/simplicial.hpp"
#include "pamdt/util.hpp"

namespace pamdt {

namespace {

// Names are single whitespace-delimited tokens and '#' opens a comment, so
// only those two classes of characters can break the round trip.
bool simplex_name_allowed(const std::string& n) {
  if (n.empty()) return false;
  for (char c : n)
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

void write_simplicial_set(std::ostream& out, const SimplicialSet& X) {
  out << "simplicial-set\n";
  for (const auto& [k, v] : X.meta) out << "meta: " << k << ' ' << v << '\n';
  out << "max-dim: " << X.max_dim() << '\n';
  for (int k = 0; k <= X.max_dim(); ++k) {
    const auto& lv = X.levels[k];
    out << "level: " << k << '\n';
    for (SimplexId s = 0; s < lv.size(); ++s) {
      out << "simplex: " << lv.names[s];
      if (s == lv.basepoint) out << " basepoint";
      if (!lv.face.empty()) {
        out << " faces:";
        for (int i = 0; i <= k; ++i) out << ' ' << lv.face[i][s];
      }
      if (!lv.degen.empty()) {
        out << " degens:";
        for (int i = 0; i <= k; ++i) out << ' ' << lv.degen[i][s];
      }
      out << '\n';
    }
  }
}

std::string SimplicialSet::canonical_text() const {
  std::ostringstream os;
  write_simplicial_set(os, *this);
  return os.str();
}

std::shared_ptr<SimplicialSet> parse_simplicial_set(std::istream& in) {
  auto X = std::make_shared<SimplicialSet>();
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
  if (!next_tokens(toks) || toks.size() != 1 || toks[0] != "simplicial-set")
    throw ParseError("expected 'simplicial-set' header", line_no);

  int max_dim = -1;
  int current_level = -1;
  std::vector<bool> saw_basepoint;
  bool have_max_dim = false;
  while (next_tokens(toks)) {
    if (toks[0] == "meta:") {
      if (have_max_dim)
        throw ParseError("'meta:' must precede 'max-dim:'", line_no);
      if (toks.size() != 3)
        throw ParseError("'meta:' requires a key and a value", line_no);
      if (!X->meta.emplace(toks[1], toks[2]).second)
        throw ParseError("duplicate meta key '" + toks[1] + "'", line_no);
      continue;
    }
    if (toks[0] == "max-dim:") {
      if (have_max_dim) throw ParseError("duplicate 'max-dim:'", line_no);
      if (toks.size() != 2 ||
          toks[1].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("'max-dim:' requires a nonnegative integer", line_no);
      max_dim = std::stoi(toks[1]);
      X->levels.resize(max_dim + 1);
      saw_basepoint.assign(max_dim + 1, false);
      have_max_dim = true;
      continue;
    }
    if (toks[0] == "level:") {
      if (!have_max_dim)
        throw ParseError("'level:' before 'max-dim:'", line_no);
      if (toks.size() != 2 ||
          toks[1].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("'level:' requires a nonnegative integer", line_no);
      int k = std::stoi(toks[1]);
      if (k != current_level + 1)
        throw ParseError("levels must appear consecutively from 0; got level " +
                             toks[1],
                         line_no);
      if (k > max_dim)
        throw ParseError("level exceeds declared max-dim", line_no);
      current_level = k;
      auto& lv = X->levels[k];
      if (k >= 1) lv.face.assign(k + 1, {});
      if (k < max_dim) lv.degen.assign(k + 1, {});
      continue;
    }
    if (toks[0] == "simplex:") {
      if (current_level < 0)
        throw ParseError("'simplex:' before any 'level:'", line_no);
      auto& lv = X->levels[current_level];
      std::size_t pos = 1;
      if (pos >= toks.size())
        throw ParseError("'simplex:' requires a name", line_no);
      std::string name = toks[pos++];
      if (!simplex_name_allowed(name))
        throw ParseError("simplex name not allowed: '" + name + "'", line_no);
      SimplexId id = static_cast<SimplexId>(lv.names.size());
      lv.names.push_back(name);
      if (pos < toks.size() && toks[pos] == "basepoint") {
        if (saw_basepoint[current_level])
          throw ParseError("duplicate basepoint at level " +
                               std::to_string(current_level),
                           line_no);
        saw_basepoint[current_level] = true;
        lv.basepoint = id;
        ++pos;
      }
      auto read_block = [&](const std::string& tag,
                            std::vector<std::vector<SimplexId>>& tables,
                            bool expected) {
        if (pos < toks.size() && toks[pos] == tag) {
          if (!expected)
            throw ParseError("unexpected '" + tag + "' block at level " +
                                 std::to_string(current_level),
                             line_no);
          ++pos;
          for (int i = 0; i <= current_level; ++i) {
            if (pos >= toks.size() ||
                toks[pos].find_first_not_of("0123456789") != std::string::npos)
              throw ParseError("'" + tag + "' requires " +
                                   std::to_string(current_level + 1) +
                                   " indices",
                               line_no);
            tables[i].push_back(
                static_cast<SimplexId>(std::stoul(toks[pos++])));
          }
        } else if (expected) {
          throw ParseError("missing '" + tag + "' block at level " +
                               std::to_string(current_level),
                           line_no);
        }
      };
      read_block("faces:", lv.face, current_level >= 1);
      read_block("degens:", lv.degen, current_level < max_dim);
      if (pos != toks.size())
        throw ParseError("trailing tokens on simplex line", line_no);
      continue;
    }
    throw ParseError("unrecognized directive: '" + toks[0] + "'", line_no);
  }
  if (!have_max_dim) throw ParseError("missing 'max-dim:'", line_no);
  if (current_level != max_dim)
    throw ParseError("missing levels: expected " + std::to_string(max_dim + 1),
                     line_no);
  for (int k = 0; k <= max_dim; ++k) {
    const auto& lv = X->levels[k];
    if (lv.names.empty())
      throw ParseError("level " + std::to_string(k) + " has no simplices",
                       line_no);
    if (!saw_basepoint[k])
      throw ParseError("level " + std::to_string(k) + " has no basepoint",
                       line_no);
    std::set<std::string> unique(lv.names.begin(), lv.names.end());
    if (unique.size() != lv.names.size())
      throw ParseError("duplicate simplex name at level " + std::to_string(k),
                       line_no);
    for (const auto& table : lv.face)
      for (SimplexId img : table)
        if (img >= X->levels[k - 1].size())
          throw ParseError("face index out of range at level " +
                               std::to_string(k),
                           line_no);
    for (const auto& table : lv.degen)
      for (SimplexId img : table)
        if (img >= X->levels[k + 1].size())
          throw ParseError("degeneracy index out of range at level " +
                               std::to_string(k),
                           line_no);
  }
  X->recompute_degeneracy_flags();
  return X;
}

std::shared_ptr<SimplicialSet> load_simplicial_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open space file: " + path);
  return parse_simplicial_set(in);
}

}  // namespace pamdt
