#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pamdt/commands.hpp"
#include "pamdt/util.hpp"
#include "pamdt/verify.hpp"

namespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

void emit(const pamdt::RunReport& rep, const std::string& report_path) {
  auto text = rep.to_json().dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write report: " + report_path);
    out << text;
  }
}

int resolve_depth(std::optional<int> max_dim, std::optional<int> through,
                  int fallback) {
  if (max_dim) {
    if (through && *max_dim < *through + 1)
      throw std::invalid_argument(
          "homology through degree " + std::to_string(*through) +
          " needs max-dim at least " + std::to_string(*through + 1));
    return *max_dim;
  }
  return through ? *through + 1 : fallback;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial abelian monoids: validation, classifying spaces, "
               "labeled configuration spaces and integral homology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pamdt::kEngineName) + " " +
                                        pamdt::kEngineVersion);

  std::string monoid_path, space_spec, report_path, out_path, chains_path;
  std::optional<int> max_dim, through, bound;
  bool reduced = false;
  std::string suite;

  auto* validate = app.add_subcommand("validate", "check a monoid description");
  validate->add_option("monoid", monoid_path, "monoid description file")
      ->required();
  validate->add_option("--report", report_path, "write the JSON report here");

  auto* nerve = app.add_subcommand("nerve", "build a classifying space");
  nerve->add_option("monoid", monoid_path, "monoid description file")
      ->required();
  nerve->add_option("--max-dim", max_dim, "materialization depth");
  nerve->add_option("--homology-through", through,
                    "report homology through this degree");
  nerve->add_flag("--reduced", reduced, "report reduced homology");
  nerve->add_option("--out", out_path, "write the space in interchange form");
  nerve->add_option("--dump-chains", chains_path,
                    "write boundary matrices in triplet form");
  nerve->add_option("--report", report_path, "write the JSON report here");

  auto* dold = app.add_subcommand(
      "dold-thom", "build a labeled configuration space");
  dold->add_option("monoid", monoid_path, "monoid description file")
      ->required();
  dold->add_option("space", space_spec,
                   "sphere:<n>, wedge:<spec>*<k>, or an interchange file")
      ->required();
  dold->add_option("--bound", bound, "support bound (default unbounded)");
  dold->add_option("--max-dim", max_dim, "materialization depth");
  dold->add_option("--homology-through", through,
                   "report homology through this degree");
  dold->add_flag("--reduced", reduced, "report reduced homology");
  dold->add_option("--out", out_path, "write the space in interchange form");
  dold->add_option("--dump-chains", chains_path,
                   "write boundary matrices in triplet form");
  dold->add_option("--report", report_path, "write the JSON report here");

  auto* verify = app.add_subcommand("verify", "run a built-in check suite");
  std::string suite_help = "one of:";
  for (const auto& name : pamdt::verify_suite_names())
    suite_help += " " + name;
  verify->add_option("suite", suite, suite_help)->required();
  verify->add_option("--report", report_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  pamdt::RunReport rep;
  rep.command = join_args(argc, argv);
  try {
    if (validate->parsed()) {
      rep = pamdt::cmd_validate(monoid_path);
    } else if (nerve->parsed()) {
      pamdt::NerveOptions opt;
      opt.max_dim = resolve_depth(max_dim, through, 3);
      opt.homology_through = through;
      opt.reduced = reduced;
      opt.out_path = out_path;
      opt.dump_chains_path = chains_path;
      rep = pamdt::cmd_nerve(monoid_path, opt);
    } else if (dold->parsed()) {
      pamdt::DoldThomOptions opt;
      opt.max_dim = resolve_depth(max_dim, through, 3);
      opt.homology_through = through;
      opt.reduced = reduced;
      opt.out_path = out_path;
      opt.dump_chains_path = chains_path;
      opt.bound = bound;
      rep = pamdt::cmd_dold_thom(monoid_path, space_spec, opt);
    } else {
      rep = pamdt::cmd_verify(suite);
    }
    rep.command = join_args(argc, argv);
  } catch (const std::exception& err) {
    rep.checks.clear();
    rep.checks.push_back(pamdt::make_check("input", "ok", err.what()));
    try {
      emit(rep, report_path);
    } catch (const std::exception& emit_err) {
      std::cerr << emit_err.what() << '\n';
    }
    return kInputError;
  }
  try {
    emit(rep, report_path);
  } catch (const std::exception& err) {
    std::cerr << err.what() << '\n';
    return kInputError;
  }
  return rep.pass() ? kPass : kCheckFailed;
}
