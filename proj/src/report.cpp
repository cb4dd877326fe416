#include "pamdt/report.hpp"

namespace pamdt {

Check make_check(std::string name, std::string expected, std::string computed) {
  Check c;
  c.pass = expected == computed;
  c.name = std::move(name);
  c.expected = std::move(expected);
  c.computed = std::move(computed);
  return c;
}

bool RunReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["engine"] = std::string(kEngineName) + "/" + kEngineVersion;
  j["command"] = command;
  auto in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  j["inputs"] = in;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["pass"] = c.pass;
    cs.push_back(cj);
  }
  j["checks"] = cs;
  j["results"] = results;
  j["pass"] = pass();
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace pamdt
