#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pamdt/monoid.hpp"
#include "pamdt/util.hpp"

namespace pamdt {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  auto hash = body.find('#');
  if (hash != std::string::npos) body.erase(hash);
  std::istringstream is(body);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

RawMonoid parse_monoid_text(std::istream& in) {
  RawMonoid raw;
  raw.levels.clear();
  bool saw_zero = false;
  bool saw_plain_sum = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "elements:") {
      if (toks.size() < 2)
        throw ParseError("'elements:' requires at least one name", line_no);
      raw.elements.insert(raw.elements.end(), toks.begin() + 1, toks.end());
      continue;
    }
    if (toks[0] == "zero:") {
      if (toks.size() != 2)
        throw ParseError("'zero:' requires exactly one name", line_no);
      if (saw_zero) throw ParseError("duplicate 'zero:' directive", line_no);
      raw.zero = toks[1];
      saw_zero = true;
      continue;
    }
    if (toks[0] == "level") {
      if (toks.size() != 2 || toks[1].size() < 2 || toks[1].back() != ':')
        throw ParseError("malformed level header; expected 'level <k>:'",
                         line_no);
      std::string num = toks[1].substr(0, toks[1].size() - 1);
      if (num.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed level header; expected 'level <k>:'",
                         line_no);
      if (!raw.filtered && saw_plain_sum)
        throw ParseError("sum entries are not allowed before the first level "
                         "header in a filtered description",
                         line_no);
      std::size_t k = std::stoul(num);
      if (k != raw.levels.size())
        throw ParseError("level headers must be consecutive starting at 0; "
                         "got level " + num,
                         line_no);
      raw.filtered = true;
      raw.levels.emplace_back();
      continue;
    }
    if (toks.size() == 5 && toks[1] == "+" && toks[3] == "=") {
      if (!raw.filtered) {
        if (raw.levels.empty()) raw.levels.emplace_back();
        saw_plain_sum = true;
      }
      raw.levels.back().push_back({toks[0], toks[2], toks[4], line_no});
      continue;
    }
    throw ParseError("unrecognized directive: '" + toks[0] + "'", line_no);
  }
  if (raw.elements.empty())
    throw ParseError("missing 'elements:' directive", line_no);
  if (!saw_zero) throw ParseError("missing 'zero:' directive", line_no);
  if (raw.levels.empty()) raw.levels.emplace_back();
  return raw;
}

RawMonoid parse_monoid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open monoid file: " + path);
  return parse_monoid_text(in);
}

}  // namespace pamdt
