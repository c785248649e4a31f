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

#include "quotascan/report.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "quotascan/errors.hpp"
#include "quotascan/ingest.hpp"

namespace quotascan {

namespace {

using nlohmann::ordered_json;

ordered_json number_or_null(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["input_path"] = c.input_path;
  j["input_format"] = c.input_format;
  j["minority_symbol"] = c.minority_symbol;
  j["majority_symbol"] = c.majority_symbol;
  j["min_dept_size"] = c.min_dept_size;
  j["z_max"] = c.z_max;
  j["sidedness"] = stats::to_string(c.sidedness);
  j["bootstrap_draws"] = c.bootstrap_draws;
  j["seed"] = c.seed;
  j["interval_level"] = c.interval_level;
  j["quota"] = c.quota;
  j["alpha"] = c.alpha;
  j["correlation_z"] = c.correlation_z;
  j["weighted_means"] = c.weighted_means;
  j["output_format"] = c.output_format;
  j["attribute_path"] = c.attribute_path;
  j["threads"] = c.threads;
  j["draw_storage_cap"] = c.draw_storage_cap;
  return j;
}

ordered_json table_json(const DeviationTable& table) {
  ordered_json j;
  j["scope"] = table.scope;
  if (table.degenerate_scope) j["degenerate"] = true;
  j["total_units"] = table.total_units;
  j["residual_count"] = table.residual_count;
  if (table.scope == "overall")
    j["excluded_degenerate"] = table.excluded_degenerate;
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r;
    r["z"] = row.z;
    r["observed"] = row.observed;
    r["expected"] = row.expected;
    r["variance"] = row.variance;
    r["deviation"] = row.deviation;
    r["statistic"] = number_or_null(row.statistic);
    r["p_value"] = number_or_null(row.p_value);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json bootstrap_json(const BootstrapResult& result, const RunConfig& c) {
  ordered_json j;
  j["module"] = "bootstrap";
  j["parameters"] = {{"draws", c.bootstrap_draws},
                     {"seed", c.seed},
                     {"level", c.interval_level},
                     {"z_max", c.z_max},
                     {"sidedness", stats::to_string(c.sidedness)}};
  j["draws_retained"] = result.draws_retained;
  j["warnings"] = result.warnings;
  ordered_json rows = ordered_json::array();
  for (const auto& s : result.summaries) {
    ordered_json r;
    r["z"] = s.z;
    r["draws"] = s.draws;
    r["interval"] = {s.interval_lo, s.interval_hi};
    r["empirical_p"] = s.empirical_p;
    r["observed_deviation"] = s.observed_deviation;
    r["mean_of_draws"] = s.mean_of_draws;
    rows.push_back(std::move(r));
  }
  j["summaries"] = std::move(rows);
  return j;
}

ordered_json correlation_json(const CorrelationReport& r) {
  ordered_json j;
  j["kind"] = to_string(r.kind);
  if (r.z) j["z"] = *r.z;
  if (r.attribute) j["attribute"] = *r.attribute;
  j["defined"] = r.defined;
  if (r.defined) {
    j["rho"] = r.rho;
    j["p_value"] = r.p_value;
    j["ci_95"] = {r.ci_lo, r.ci_hi};
    j["ci_degenerate"] = r.ci_degenerate;
    j["n"] = r.n;
  }
  return j;
}

ordered_json diagnostics_json(const Dataset& dataset, const RunConfig& c) {
  ordered_json j;
  j["module"] = "diagnostics";
  j["parameters"] = {{"alpha", c.alpha},
                     {"loo_std_dev_kind", "population"},
                     {"equality_test", "two_proportion_pooled_z"},
                     {"correlation_z", c.correlation_z}};

  ordered_json loo_rows = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  for (const auto& stratum : dataset.strata) {
    if (stratum.n_units() < 2) {
      skipped.push_back({{"stratum", stratum.key},
                         {"reason", "fewer than two departments"}});
      continue;
    }
    const LooReport loo = leave_one_out(stratum, c.alpha);
    ordered_json r;
    r["discipline"] = loo.stratum_key;
    r["loo_std_dev"] = loo.std_dev;
    r["share"] = stratum.share();
    r["reject_fraction"] = loo.reject_fraction;
    r["n_units"] = stratum.n_units();
    loo_rows.push_back(std::move(r));
  }
  j["leave_one_out"] = std::move(loo_rows);
  if (!skipped.empty()) j["leave_one_out_skipped"] = std::move(skipped);

  int z_needed = c.z_max;
  for (int z : c.correlation_z) z_needed = std::max(z_needed, z);
  const auto tables = per_stratum_tables(dataset, z_needed, c.sidedness);
  ordered_json correlations = ordered_json::array();
  correlations.push_back(correlation_json(size_share_correlation(dataset)));
  std::set<std::string> attribute_keys;
  for (const auto& stratum : dataset.strata)
    for (const auto& [key, value] : stratum.attributes) attribute_keys.insert(key);
  for (int z : c.correlation_z) {
    correlations.push_back(
        correlation_json(deviation_sign_correlation(dataset, tables, z)));
    for (const auto& key : attribute_keys)
      correlations.push_back(
          correlation_json(attribute_deviation_correlation(dataset, tables, z, key)));
  }
  j["correlations"] = std::move(correlations);
  return j;
}

ordered_json quota_json(const QuotaScenario& scenario, const RunConfig& c) {
  ordered_json j;
  j["module"] = "quota_sim";
  j["parameters"] = {{"quota", scenario.quota},
                     {"weighted_means", c.weighted_means}};
  j["mean_share_actual"] = scenario.mean_share_actual;
  j["mean_share_sim"] = scenario.mean_share_sim;
  if (c.weighted_means) {
    j["weighted_mean_share_actual"] = scenario.weighted_mean_share_actual;
    j["weighted_mean_share_sim"] = scenario.weighted_mean_share_sim;
  }
  ordered_json strata = ordered_json::array();
  for (std::size_t i = 0; i < scenario.stratum_keys.size(); ++i) {
    ordered_json r;
    r["key"] = scenario.stratum_keys[i];
    r["actual_share"] = scenario.actual_shares[i];
    r["simulated_share"] = scenario.simulated_shares[i];
    r["department_counts"] = scenario.department_counts[i];
    strata.push_back(std::move(r));
  }
  j["strata"] = std::move(strata);
  return j;
}

}  // namespace

Dataset load_dataset(const RunConfig& config) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in)
    throw IoError("cannot open input file `" + config.input_path + "`");
  std::vector<DepartmentRecord> records;
  if (config.input_format == "roster") {
    records = parse_roster(in, {config.minority_symbol, config.majority_symbol});
  } else if (config.input_format == "departments") {
    records = parse_departments(in);
  } else {
    throw ValidationError("unknown input format `" + config.input_format + "`");
  }
  Dataset dataset = build_dataset(std::move(records), config.min_dept_size);
  if (!config.attribute_path.empty()) {
    std::ifstream attr(config.attribute_path, std::ios::binary);
    if (!attr)
      throw IoError("cannot open attribute file `" + config.attribute_path + "`");
    attach_attributes(dataset, parse_attributes(attr));
  }
  return dataset;
}

AnalysisOutput run_analysis(const Dataset& dataset, const RunConfig& config,
                            const ReportSections& sections) {
  AnalysisOutput output;
  ordered_json& report = output.report;
  report["version"] = kReportSchemaVersion;
  report["config"] = config_json(config);

  ordered_json dropped = ordered_json::array();
  for (const auto& unit : dataset.dropped)
    dropped.push_back({{"stratum", unit.stratum_key},
                       {"unit", unit.unit_key},
                       {"size", unit.size}});
  report["dropped_units"] = {{"count", dataset.dropped.size()},
                             {"units", std::move(dropped)}};
  report["degenerate_strata"] = dataset.degenerate_keys();

  if (sections.test) {
    const ordered_json parameters = {
        {"z_max", config.z_max},
        {"sidedness", stats::to_string(config.sidedness)}};
    const auto overall = deviation_table(dataset, config.z_max, config.sidedness);
    ordered_json t = table_json(overall);
    t["module"] = "test";
    t["parameters"] = parameters;
    report["deviation_table"] = std::move(t);
    ordered_json tables = ordered_json::array();
    for (const auto& table : per_stratum_tables(dataset, config.z_max, config.sidedness))
      tables.push_back(table_json(table));
    report["per_stratum_tables"] = {{"module", "test"},
                                    {"parameters", parameters},
                                    {"tables", std::move(tables)}};
  }
  if (sections.bootstrap) {
    BootstrapOptions options;
    options.z_max = config.z_max;
    options.draws = config.bootstrap_draws;
    options.seed = config.seed;
    options.level = config.interval_level;
    options.sidedness = config.sidedness;
    options.draw_storage_cap = config.draw_storage_cap;
    options.threads = config.threads;
    output.bootstrap = run_bootstrap(dataset, options);
    report["bootstrap"] = bootstrap_json(*output.bootstrap, config);
  }
  if (sections.diagnostics) report["diagnostics"] = diagnostics_json(dataset, config);
  if (sections.quota) {
    output.quota = apply_quota(dataset, config.quota);
    report["quota_scenario"] = quota_json(*output.quota, config);
  }
  return output;
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

std::string render_csv(const AnalysisOutput& output, const ReportSections& sections) {
  std::ostringstream out;
  const ordered_json& report = output.report;
  if (sections.test) {
    out << "scope,z,observed,expected,variance,deviation,statistic,p_value\n";
    // Rebuild rows from the report so the CSV is a projection of the same
    // numbers the JSON carries.
    auto write_rows = [&out](const ordered_json& t) {
      for (const auto& row : t.at("rows")) {
        out << t.at("scope").get<std::string>() << ',' << row.at("z") << ','
            << row.at("observed") << ','
            << format_double(row.at("expected").get<double>()) << ','
            << format_double(row.at("variance").get<double>()) << ','
            << format_double(row.at("deviation").get<double>()) << ','
            << (row.at("statistic").is_null()
                    ? std::string()
                    : format_double(row.at("statistic").get<double>()))
            << ','
            << (row.at("p_value").is_null()
                    ? std::string()
                    : format_double(row.at("p_value").get<double>()))
            << '\n';
      }
    };
    write_rows(report.at("deviation_table"));
    for (const auto& t : report.at("per_stratum_tables").at("tables"))
      write_rows(t);
    return out.str();
  }
  if (sections.bootstrap) {
    out << "z,draws,interval_lo,interval_hi,empirical_p,observed_deviation,"
           "mean_of_draws\n";
    for (const auto& s : output.bootstrap->summaries) {
      out << s.z << ',' << s.draws << ',' << format_double(s.interval_lo) << ','
          << format_double(s.interval_hi) << ',' << format_double(s.empirical_p)
          << ',' << format_double(s.observed_deviation) << ','
          << format_double(s.mean_of_draws) << '\n';
    }
    return out.str();
  }
  if (sections.diagnostics) {
    out << "discipline,loo_std_dev,share\n";
    for (const auto& row : report.at("diagnostics").at("leave_one_out")) {
      out << row.at("discipline").get<std::string>() << ','
          << format_double(row.at("loo_std_dev").get<double>()) << ','
          << format_double(row.at("share").get<double>()) << '\n';
    }
    return out.str();
  }
  if (sections.quota) {
    std::ostringstream share;
    write_share_csv(*output.quota, share);
    return share.str();
  }
  return out.str();
}

}  // namespace quotascan
