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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quotascan/bootstrap.hpp"
#include "quotascan/deviation.hpp"
#include "quotascan/diagnostics.hpp"
#include "quotascan/errors.hpp"
#include "quotascan/fixtures.hpp"
#include "quotascan/ingest.hpp"
#include "quotascan/pbd.hpp"
#include "quotascan/quota.hpp"
#include "quotascan/report.hpp"
#include "quotascan/rng.hpp"
#include "quotascan/stats.hpp"

namespace py = pybind11;
using namespace quotascan;

namespace {

Dataset dataset_from_departments_csv(const std::string& text, int min_size) {
  std::istringstream in(text);
  return build_dataset(parse_departments(in), min_size);
}

Dataset dataset_from_roster_csv(const std::string& text, int min_size,
                                const std::string& minority,
                                const std::string& majority) {
  std::istringstream in(text);
  return build_dataset(parse_roster(in, {minority, majority}), min_size);
}

std::string dataset_to_departments_csv(const Dataset& dataset) {
  std::ostringstream out;
  write_department_csv(dataset, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Implicit-quota detection on stratified count data";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<DepartmentRecord>(m, "DepartmentRecord")
      .def(py::init<const std::string&, const std::string&, int, int>(),
           py::arg("stratum_key"), py::arg("unit_key"), py::arg("size"),
           py::arg("minority"))
      .def_readwrite("stratum_key", &DepartmentRecord::stratum_key)
      .def_readwrite("unit_key", &DepartmentRecord::unit_key)
      .def_readwrite("size", &DepartmentRecord::size)
      .def_readwrite("minority", &DepartmentRecord::minority)
      .def("__repr__", [](const DepartmentRecord& r) {
        return "DepartmentRecord(" + r.stratum_key + ", " + r.unit_key + ", size=" +
               std::to_string(r.size) + ", minority=" + std::to_string(r.minority) +
               ")";
      });

  py::class_<Stratum>(m, "Stratum")
      .def_readonly("key", &Stratum::key)
      .def_readonly("departments", &Stratum::departments)
      .def_readonly("total_size", &Stratum::total_size)
      .def_readonly("total_minority", &Stratum::total_minority)
      .def_readonly("degenerate", &Stratum::degenerate)
      .def_readonly("attributes", &Stratum::attributes)
      .def_property_readonly("n_units", &Stratum::n_units)
      .def_property_readonly("share", &Stratum::share)
      .def_property_readonly("mean_size", &Stratum::mean_size)
      .def("sizes", &Stratum::sizes);

  py::class_<DroppedUnit>(m, "DroppedUnit")
      .def_readonly("stratum_key", &DroppedUnit::stratum_key)
      .def_readonly("unit_key", &DroppedUnit::unit_key)
      .def_readonly("size", &DroppedUnit::size);

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("strata", &Dataset::strata)
      .def_readonly("min_dept_size", &Dataset::min_dept_size)
      .def_readonly("dropped", &Dataset::dropped)
      .def_property_readonly("n_strata", &Dataset::n_strata)
      .def_property_readonly("total_units", &Dataset::total_units)
      .def("degenerate_keys", &Dataset::degenerate_keys)
      .def("to_departments_csv", &dataset_to_departments_csv);

  m.def("from_departments_csv", &dataset_from_departments_csv, py::arg("text"),
        py::arg("min_dept_size") = 3,
        "Build a dataset from department-table CSV text");
  m.def("from_roster_csv", &dataset_from_roster_csv, py::arg("text"),
        py::arg("min_dept_size") = 3, py::arg("minority_symbol") = "F",
        py::arg("majority_symbol") = "M",
        "Build a dataset from individual roster CSV text");
  m.def(
      "build_dataset",
      [](std::vector<DepartmentRecord> records, int min_size) {
        return build_dataset(std::move(records), min_size);
      },
      py::arg("records"), py::arg("min_dept_size") = 3);

  // numerical kernels
  m.def("binomial_pmf", &pbd::binomial_pmf, py::arg("n"), py::arg("z"), py::arg("p"));
  m.def(
      "poisson_binomial_exact",
      [](const std::vector<double>& probs, std::size_t cap) {
        return pbd::poisson_binomial_exact(probs, cap).probs;
      },
      py::arg("probs"), py::arg("cap") = pbd::kDefaultConvolutionCap,
      "Exact pmf of a sum of independent Bernoulli variables");
  m.def(
      "z_moment",
      [](const Stratum& stratum, int z) {
        const auto m_ = pbd::z_moment(stratum, z);
        return py::make_tuple(m_.mean, m_.variance);
      },
      py::arg("stratum"), py::arg("z"),
      "(mean, variance) of the count of z-minority departments");
  m.def(
      "sample_department",
      [](int size, double p, std::uint64_t seed, std::uint32_t replication,
         std::uint32_t stratum, std::uint32_t department) {
        rng::Stream stream(seed, replication, stratum, department);
        return pbd::sample_department(size, p, stream);
      },
      py::arg("size"), py::arg("p"), py::arg("seed"), py::arg("replication") = 0,
      py::arg("stratum") = 0, py::arg("department") = 0);
  m.def("normal_cdf", &stats::normal_cdf, py::arg("x"));
  m.def(
      "normal_p_value",
      [](double statistic, const std::string& sidedness) {
        return stats::normal_p_value(statistic,
                                     stats::sidedness_from_string(sidedness));
      },
      py::arg("statistic"), py::arg("sidedness") = "two-sided");

  py::class_<DeviationRow>(m, "DeviationRow")
      .def_readonly("z", &DeviationRow::z)
      .def_readonly("observed", &DeviationRow::observed)
      .def_readonly("expected", &DeviationRow::expected)
      .def_readonly("variance", &DeviationRow::variance)
      .def_readonly("deviation", &DeviationRow::deviation)
      .def_readonly("statistic", &DeviationRow::statistic)
      .def_readonly("p_value", &DeviationRow::p_value);

  py::class_<DeviationTable>(m, "DeviationTable")
      .def_readonly("scope", &DeviationTable::scope)
      .def_readonly("z_max", &DeviationTable::z_max)
      .def_readonly("rows", &DeviationTable::rows)
      .def_readonly("residual_count", &DeviationTable::residual_count)
      .def_readonly("total_units", &DeviationTable::total_units)
      .def_readonly("excluded_degenerate", &DeviationTable::excluded_degenerate)
      .def_readonly("degenerate_scope", &DeviationTable::degenerate_scope);

  m.def(
      "observed_count",
      [](const Stratum& s, int z) { return observed_count(s, z); },
      py::arg("stratum"), py::arg("z"));
  m.def(
      "deviation_table",
      [](const Dataset& d, int z_max, const std::string& sidedness) {
        return deviation_table(d, z_max, stats::sidedness_from_string(sidedness));
      },
      py::arg("dataset"), py::arg("z_max") = 10, py::arg("sidedness") = "two-sided");
  m.def(
      "per_stratum_tables",
      [](const Dataset& d, int z_max, const std::string& sidedness) {
        return per_stratum_tables(d, z_max, stats::sidedness_from_string(sidedness));
      },
      py::arg("dataset"), py::arg("z_max") = 10, py::arg("sidedness") = "two-sided");

  py::class_<BootstrapSummary>(m, "BootstrapSummary")
      .def_readonly("z", &BootstrapSummary::z)
      .def_readonly("draws", &BootstrapSummary::draws)
      .def_readonly("interval_lo", &BootstrapSummary::interval_lo)
      .def_readonly("interval_hi", &BootstrapSummary::interval_hi)
      .def_readonly("empirical_p", &BootstrapSummary::empirical_p)
      .def_readonly("observed_deviation", &BootstrapSummary::observed_deviation)
      .def_readonly("mean_of_draws", &BootstrapSummary::mean_of_draws);

  py::class_<BootstrapResult>(m, "BootstrapResult")
      .def_readonly("summaries", &BootstrapResult::summaries)
      .def_readonly("draws", &BootstrapResult::draws)
      .def_readonly("draws_retained", &BootstrapResult::draws_retained)
      .def_readonly("warnings", &BootstrapResult::warnings);

  m.def(
      "run_bootstrap",
      [](const Dataset& dataset, int z_max, int draws, std::uint64_t seed,
         double level, const std::string& sidedness, std::size_t cap,
         unsigned threads) {
        BootstrapOptions options;
        options.z_max = z_max;
        options.draws = draws;
        options.seed = seed;
        options.level = level;
        options.sidedness = stats::sidedness_from_string(sidedness);
        options.draw_storage_cap = cap;
        options.threads = threads;
        return run_bootstrap(dataset, options);
      },
      py::arg("dataset"), py::arg("z_max") = 10, py::arg("draws") = 10'000,
      py::arg("seed") = 0, py::arg("level") = 0.90,
      py::arg("sidedness") = "two-sided", py::arg("draw_storage_cap") = 1'000'000,
      py::arg("threads") = 1);
  m.def(
      "empirical_interval",
      [](const std::vector<double>& draws, double level) {
        return empirical_interval(draws, level);
      },
      py::arg("draws"), py::arg("level") = 0.90);

  py::class_<LooReport>(m, "LooReport")
      .def_readonly("stratum_key", &LooReport::stratum_key)
      .def_readonly("loo_shares", &LooReport::loo_shares)
      .def_readonly("std_dev", &LooReport::std_dev)
      .def_readonly("reject_fraction", &LooReport::reject_fraction)
      .def_readonly("alpha", &LooReport::alpha);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_property_readonly("kind",
                             [](const CorrelationReport& r) { return to_string(r.kind); })
      .def_readonly("z", &CorrelationReport::z)
      .def_readonly("attribute", &CorrelationReport::attribute)
      .def_readonly("defined", &CorrelationReport::defined)
      .def_readonly("rho", &CorrelationReport::rho)
      .def_readonly("p_value", &CorrelationReport::p_value)
      .def_readonly("ci_lo", &CorrelationReport::ci_lo)
      .def_readonly("ci_hi", &CorrelationReport::ci_hi)
      .def_readonly("ci_degenerate", &CorrelationReport::ci_degenerate)
      .def_readonly("n", &CorrelationReport::n);

  m.def("leave_one_out", &leave_one_out, py::arg("stratum"), py::arg("alpha") = 0.05);
  m.def("deviation_sign_correlation", &deviation_sign_correlation,
        py::arg("dataset"), py::arg("tables"), py::arg("z"));
  m.def("size_share_correlation", &size_share_correlation, py::arg("dataset"));
  m.def("attribute_deviation_correlation", &attribute_deviation_correlation,
        py::arg("dataset"), py::arg("tables"), py::arg("z"), py::arg("attribute_key"));

  py::class_<QuotaScenario>(m, "QuotaScenario")
      .def_readonly("quota", &QuotaScenario::quota)
      .def_readonly("stratum_keys", &QuotaScenario::stratum_keys)
      .def_readonly("actual_shares", &QuotaScenario::actual_shares)
      .def_readonly("simulated_shares", &QuotaScenario::simulated_shares)
      .def_readonly("department_counts", &QuotaScenario::department_counts)
      .def_readonly("mean_share_actual", &QuotaScenario::mean_share_actual)
      .def_readonly("mean_share_sim", &QuotaScenario::mean_share_sim)
      .def_readonly("weighted_mean_share_actual",
                    &QuotaScenario::weighted_mean_share_actual)
      .def_readonly("weighted_mean_share_sim",
                    &QuotaScenario::weighted_mean_share_sim);

  m.def("apply_quota", &apply_quota, py::arg("dataset"), py::arg("quota"));
  m.def("share_vectors", &share_vectors, py::arg("dataset"), py::arg("scenario"));

  py::class_<StratumPlan>(m, "StratumPlan")
      .def_readonly("key", &StratumPlan::key)
      .def_readonly("n_departments", &StratumPlan::n_departments)
      .def_readonly("target_share", &StratumPlan::target_share);

  const auto make_spec = [](int n_strata, std::pair<int, int> departments,
                            std::pair<int, int> sizes,
                            std::pair<double, double> shares,
                            const std::string& regime, int quota, double leak,
                            std::uint64_t seed, int min_dept_size) {
    CorpusSpec spec;
    spec.n_strata = n_strata;
    spec.departments_per_stratum = departments;
    spec.size_range = sizes;
    spec.share_range = shares;
    spec.regime = regime_from_string(regime);
    spec.quota = quota;
    spec.leak = leak;
    spec.seed = seed;
    spec.min_dept_size = min_dept_size;
    return spec;
  };
  m.def(
      "generate",
      [make_spec](int n_strata, std::pair<int, int> departments,
                  std::pair<int, int> sizes, std::pair<double, double> shares,
                  const std::string& regime, int quota, double leak,
                  std::uint64_t seed, int min_dept_size) {
        return generate(make_spec(n_strata, departments, sizes, shares, regime,
                                  quota, leak, seed, min_dept_size));
      },
      py::arg("n_strata") = 50, py::arg("departments") = std::pair<int, int>{30, 30},
      py::arg("sizes") = std::pair<int, int>{5, 40},
      py::arg("shares") = std::pair<double, double>{0.07, 0.49},
      py::arg("regime") = "null", py::arg("quota") = 2, py::arg("leak") = 0.0,
      py::arg("seed") = 0, py::arg("min_dept_size") = 3,
      "Generate a synthetic corpus (deterministic in the seed)");
  m.def(
      "generation_plan",
      [make_spec](int n_strata, std::pair<int, int> departments,
                  std::pair<int, int> sizes, std::pair<double, double> shares,
                  const std::string& regime, int quota, double leak,
                  std::uint64_t seed, int min_dept_size) {
        return generation_plan(make_spec(n_strata, departments, sizes, shares,
                                         regime, quota, leak, seed,
                                         min_dept_size));
      },
      py::arg("n_strata") = 50, py::arg("departments") = std::pair<int, int>{30, 30},
      py::arg("sizes") = std::pair<int, int>{5, 40},
      py::arg("shares") = std::pair<double, double>{0.07, 0.49},
      py::arg("regime") = "null", py::arg("quota") = 2, py::arg("leak") = 0.0,
      py::arg("seed") = 0, py::arg("min_dept_size") = 3,
      "Per-stratum target shares and department counts of a generation run");

  m.def(
      "report_json",
      [](const Dataset& dataset, int z_max, int draws, std::uint64_t seed,
         double level, const std::string& sidedness, int quota, double alpha,
         const std::vector<int>& correlation_z, unsigned threads) {
        RunConfig config;
        config.input_path = "<in-memory>";
        config.z_max = z_max;
        config.bootstrap_draws = draws;
        config.seed = seed;
        config.interval_level = level;
        config.sidedness = stats::sidedness_from_string(sidedness);
        config.quota = quota;
        config.alpha = alpha;
        config.correlation_z = correlation_z;
        config.threads = threads;
        const auto output = run_analysis(
            dataset, config,
            {.test = true, .bootstrap = true, .diagnostics = true, .quota = true});
        return render_json(output.report);
      },
      py::arg("dataset"), py::arg("z_max") = 10, py::arg("draws") = 10'000,
      py::arg("seed") = 0, py::arg("level") = 0.90,
      py::arg("sidedness") = "two-sided", py::arg("quota") = 2,
      py::arg("alpha") = 0.05, py::arg("correlation_z") = std::vector<int>{0, 3},
      py::arg("threads") = 1,
      "Full analysis document as canonical JSON text");
}
