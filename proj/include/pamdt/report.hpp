#ifndef PAMDT_REPORT_HPP
#define PAMDT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pamdt {

inline constexpr const char* kEngineName = "pamdt";
inline constexpr const char* kEngineVersion = "0.1.0";

// One named check with its expected and computed values rendered as text.
struct Check {
  std::string name, expected, computed;
  bool pass = false;
};

Check make_check(std::string name, std::string expected, std::string computed);

// Machine-diffable run report with a stable key order.  Everything except
// timing_ms is deterministic for fixed inputs.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // label -> value
  std::vector<Check> checks;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  double timing_ms = 0.0;

  bool pass() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace pamdt

#endif
