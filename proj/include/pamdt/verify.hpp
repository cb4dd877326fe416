#ifndef PAMDT_VERIFY_HPP
#define PAMDT_VERIFY_HPP

#include <string>
#include <vector>

#include "pamdt/report.hpp"

namespace pamdt {

// Built-in verification suites over the stock fixtures.  Each returns one
// check per property; unknown names throw std::invalid_argument.
std::vector<std::string> verify_suite_names();
std::vector<Check> run_verify_suite(const std::string& name);

std::vector<Check> verify_identities();     // simplicial identities everywhere
std::vector<Check> verify_nerve_circle();   // classifying space vs circle
std::vector<Check> verify_trivial_smash();  // trivial labels give wedges
std::vector<Check> verify_functoriality();  // induced maps
std::vector<Check> verify_filtration();     // filtered labels and bounds

}  // namespace pamdt

#endif
