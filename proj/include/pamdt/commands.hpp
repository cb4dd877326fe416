#ifndef PAMDT_COMMANDS_HPP
#define PAMDT_COMMANDS_HPP

#include <optional>
#include <string>

#include "pamdt/report.hpp"
#include "pamdt/simplicial.hpp"

namespace pamdt {

// Space mini-language: "sphere:<n>", "wedge:<spec>*<copies>", or a path to
// an interchange file.  The result is materialized at least to min_depth.
SpacePtr resolve_space_spec(const std::string& spec, int min_depth);

struct NerveOptions {
  int max_dim = 3;
  std::optional<int> homology_through;
  bool reduced = false;
  std::string out_path;          // interchange output, empty = none
  std::string dump_chains_path;  // boundary matrices, empty = none
};

struct DoldThomOptions : NerveOptions {
  std::optional<int> bound;
};

// Each command returns a full report; exit codes are decided by the caller.
RunReport cmd_validate(const std::string& monoid_path);
RunReport cmd_nerve(const std::string& monoid_path, const NerveOptions& opt);
RunReport cmd_dold_thom(const std::string& monoid_path,
                        const std::string& space_spec,
                        const DoldThomOptions& opt);
RunReport cmd_verify(const std::string& suite);

}  // namespace pamdt

#endif
