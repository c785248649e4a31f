// Copyright 2026 The quotascan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quotascan: tests whether minority counts across units are consistent with
// share-driven random allocation or point to implicit per-unit quotas.
//
// Subcommands: test, bootstrap, diagnose, simulate-quota, generate, report.
// Exit codes: 0 success, 1 validation/usage error, 2 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quotascan/errors.hpp"
#include "quotascan/fixtures.hpp"
#include "quotascan/report.hpp"

namespace {

using quotascan::RunConfig;

struct CliOptions {
  RunConfig config;
  std::string sided = "two-sided";
  // generate
  quotascan::CorpusSpec corpus;
  std::string regime = "null";
  std::string emit = "departments";
};

void add_input_flags(CLI::App* cmd, CliOptions& opt, bool required = true) {
  auto* input = cmd->add_option("--input,-i", opt.config.input_path,
                                "Input CSV file");
  input->envname("QUOTASCAN_INPUT");
  if (required) input->required();
  cmd->add_option("--format", opt.config.input_format,
                  "Input format: departments (discipline,university,size,women) "
                  "or roster (discipline,university,gender)")
      ->check(CLI::IsMember({"departments", "roster"}))
      ->envname("QUOTASCAN_FORMAT")
      ->capture_default_str();
  cmd->add_option("--minority-symbol", opt.config.minority_symbol,
                  "Gender symbol counted as the minority (roster format)")
      ->envname("QUOTASCAN_MINORITY_SYMBOL")
      ->capture_default_str();
  cmd->add_option("--majority-symbol", opt.config.majority_symbol,
                  "The other gender symbol (roster format)")
      ->envname("QUOTASCAN_MAJORITY_SYMBOL")
      ->capture_default_str();
  cmd->add_option("--min-dept-size", opt.config.min_dept_size,
                  "Drop departments smaller than this (dropped units are "
                  "counted in the report)")
      ->envname("QUOTASCAN_MIN_DEPT_SIZE")
      ->capture_default_str();
  cmd->add_option("--attributes", opt.config.attribute_path,
                  "Optional stratum attribute CSV (discipline,key,value)")
      ->envname("QUOTASCAN_ATTRIBUTES");
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--z-max", opt.config.z_max,
                  "Largest minority count given its own row; larger counts go "
                  "to the residual bucket")
      ->envname("QUOTASCAN_Z_MAX")
      ->capture_default_str();
  cmd->add_option("--sided", opt.sided, "Test sidedness: two-sided or one-sided")
      ->check(CLI::IsMember({"two-sided", "one-sided"}))
      ->envname("QUOTASCAN_SIDED")
      ->capture_default_str();
  cmd->add_option("--seed", opt.config.seed, "Seed for all random streams")
      ->envname("QUOTASCAN_SEED")
      ->capture_default_str();
  cmd->add_option("--out,-o", opt.config.out_path,
                  "Write the report here instead of stdout")
      ->envname("QUOTASCAN_OUT");
  cmd->add_option("--output-format", opt.config.output_format,
                  "Report format: json (canonical) or csv (flat projection)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("QUOTASCAN_OUTPUT_FORMAT")
      ->capture_default_str();
  cmd->add_option("--threads", opt.config.threads,
                  "Bootstrap worker threads (0 = auto); results do not depend "
                  "on this")
      ->envname("QUOTASCAN_THREADS")
      ->capture_default_str();
}

void add_bootstrap_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--draws,-B", opt.config.bootstrap_draws,
                  "Bootstrap replications (minimum 100)")
      ->envname("QUOTASCAN_DRAWS")
      ->capture_default_str();
  cmd->add_option("--level", opt.config.interval_level,
                  "Empirical interval level")
      ->envname("QUOTASCAN_LEVEL")
      ->capture_default_str();
  cmd->add_option("--export-draws", opt.config.export_draws_path,
                  "Write raw draws (z,replication,deviation) to this CSV")
      ->envname("QUOTASCAN_EXPORT_DRAWS");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw quotascan::IoError("cannot open output file `" + path + "`");
  out << text;
  if (!out) throw quotascan::IoError("failed writing `" + path + "`");
}

int run_sections(CliOptions& opt, const quotascan::ReportSections& sections) {
  opt.config.sidedness = quotascan::stats::sidedness_from_string(opt.sided);
  const quotascan::Dataset dataset = quotascan::load_dataset(opt.config);
  const auto output = quotascan::run_analysis(dataset, opt.config, sections);
  const std::string text = opt.config.output_format == "json"
                               ? quotascan::render_json(output.report)
                               : quotascan::render_csv(output, sections);
  write_text(opt.config.out_path, text);
  if (!opt.config.export_draws_path.empty() && output.bootstrap) {
    std::ofstream out(opt.config.export_draws_path, std::ios::binary);
    if (!out)
      throw quotascan::IoError("cannot open draw export file `" +
                               opt.config.export_draws_path + "`");
    quotascan::write_draws_csv(*output.bootstrap, out);
  }
  return 0;
}

int run_generate(CliOptions& opt) {
  opt.corpus.regime = quotascan::regime_from_string(opt.regime);
  opt.corpus.quota = opt.config.quota;
  opt.corpus.seed = opt.config.seed;
  opt.corpus.min_dept_size = opt.config.min_dept_size;
  const quotascan::Dataset dataset = quotascan::generate(opt.corpus);
  std::ostringstream out;
  if (opt.emit == "roster")
    quotascan::write_roster_csv(dataset, out,
                                {opt.config.minority_symbol, opt.config.majority_symbol});
  else
    quotascan::write_department_csv(dataset, out);
  write_text(opt.config.out_path, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quotascan: detect implicit per-department minority quotas from count "
      "data.\nCompares observed counts of departments with exactly z minority "
      "members\nagainst share-driven expectations, with an asymptotic normal "
      "test, a\nparametric bootstrap, independence diagnostics and "
      "counterfactual quota\nsimulation. Reports are deterministic in (input, "
      "config, seed)."};
  app.require_subcommand(1);
  CliOptions opt;

  auto* cmd_test = app.add_subcommand(
      "test", "Deviation table with asymptotic p-values, overall and per stratum");
  add_input_flags(cmd_test, opt);
  add_common_flags(cmd_test, opt);

  auto* cmd_bootstrap = app.add_subcommand(
      "bootstrap", "Parametric bootstrap: empirical intervals and p-values");
  add_input_flags(cmd_bootstrap, opt);
  add_common_flags(cmd_bootstrap, opt);
  add_bootstrap_flags(cmd_bootstrap, opt);

  auto* cmd_diagnose = app.add_subcommand(
      "diagnose",
      "Leave-one-out dispersion, share-equality tests and correlations");
  add_input_flags(cmd_diagnose, opt);
  add_common_flags(cmd_diagnose, opt);
  cmd_diagnose->add_option("--alpha", opt.config.alpha,
                           "Level for the leave-one-out equality test")
      ->envname("QUOTASCAN_ALPHA")
      ->capture_default_str();
  cmd_diagnose->add_option("--correlation-z", opt.config.correlation_z,
                           "z values for the deviation-sign correlations")
      ->envname("QUOTASCAN_CORRELATION_Z")
      ->capture_default_str();

  auto* cmd_quota = app.add_subcommand(
      "simulate-quota", "Counterfactual shares under a fixed per-department quota");
  add_input_flags(cmd_quota, opt);
  add_common_flags(cmd_quota, opt);
  cmd_quota->add_option("--quota,-q", opt.config.quota,
                        "Minority members forced per department (capped at size)")
      ->envname("QUOTASCAN_QUOTA")
      ->capture_default_str();

  auto* cmd_generate = app.add_subcommand(
      "generate", "Emit a synthetic corpus CSV (null, hard-quota or soft-quota)");
  add_common_flags(cmd_generate, opt);
  cmd_generate->add_option("--strata", opt.corpus.n_strata, "Number of strata")
      ->capture_default_str();
  cmd_generate
      ->add_option("--departments", opt.corpus.departments_per_stratum,
                   "Departments per stratum (min max)")
      ->capture_default_str();
  cmd_generate
      ->add_option("--size-range", opt.corpus.size_range,
                   "Department size range (min max)")
      ->capture_default_str();
  cmd_generate
      ->add_option("--share-range", opt.corpus.share_range,
                   "Stratum share range (min max)")
      ->capture_default_str();
  cmd_generate->add_option("--regime", opt.regime,
                           "null, hard-quota or soft-quota")
      ->check(CLI::IsMember({"null", "hard-quota", "soft-quota"}))
      ->capture_default_str();
  cmd_generate->add_option("--quota,-q", opt.config.quota, "Quota level")
      ->capture_default_str();
  cmd_generate->add_option("--leak", opt.corpus.leak,
                           "Soft-quota leak probability")
      ->capture_default_str();
  cmd_generate->add_option("--min-dept-size", opt.config.min_dept_size,
                           "Minimum department size")
      ->capture_default_str();
  cmd_generate->add_option("--emit", opt.emit, "Output CSV kind")
      ->check(CLI::IsMember({"departments", "roster"}))
      ->capture_default_str();

  auto* cmd_report = app.add_subcommand(
      "report", "Full document: test + bootstrap + diagnose + simulate-quota");
  add_input_flags(cmd_report, opt);
  add_common_flags(cmd_report, opt);
  add_bootstrap_flags(cmd_report, opt);
  cmd_report->add_option("--quota,-q", opt.config.quota, "Quota level")
      ->envname("QUOTASCAN_QUOTA")
      ->capture_default_str();
  cmd_report->add_option("--alpha", opt.config.alpha,
                         "Level for the leave-one-out equality test")
      ->envname("QUOTASCAN_ALPHA")
      ->capture_default_str();
  cmd_report->add_option("--correlation-z", opt.config.correlation_z,
                         "z values for the deviation-sign correlations")
      ->envname("QUOTASCAN_CORRELATION_Z")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_test)) return run_sections(opt, {.test = true});
    if (app.got_subcommand(cmd_bootstrap))
      return run_sections(opt, {.bootstrap = true});
    if (app.got_subcommand(cmd_diagnose))
      return run_sections(opt, {.diagnostics = true});
    if (app.got_subcommand(cmd_quota)) return run_sections(opt, {.quota = true});
    if (app.got_subcommand(cmd_generate)) return run_generate(opt);
    if (app.got_subcommand(cmd_report))
      return run_sections(opt, {.test = true,
                                .bootstrap = true,
                                .diagnostics = true,
                                .quota = true});
  } catch (const quotascan::IoError& e) {
    std::cerr << "quotascan: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "quotascan: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
