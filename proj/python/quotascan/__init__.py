# Copyright 2026 The quotascan authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Implicit-quota detection on stratified count data.

Thin python surface over the C++ core: build a dataset from CSV text or the
synthetic generator, then run the deviation test, the parametric bootstrap,
independence diagnostics, or the counterfactual quota simulation.
"""

from quotascan._core import (
    BootstrapResult,
    BootstrapSummary,
    CorrelationReport,
    Dataset,
    DepartmentRecord,
    DeviationRow,
    DeviationTable,
    DroppedUnit,
    IoError,
    LooReport,
    ParseError,
    QuotaScenario,
    Stratum,
    StratumPlan,
    ValidationError,
    apply_quota,
    attribute_deviation_correlation,
    binomial_pmf,
    build_dataset,
    deviation_sign_correlation,
    deviation_table,
    empirical_interval,
    from_departments_csv,
    from_roster_csv,
    generate,
    generation_plan,
    leave_one_out,
    normal_cdf,
    normal_p_value,
    observed_count,
    per_stratum_tables,
    poisson_binomial_exact,
    report_json,
    run_bootstrap,
    sample_department,
    share_vectors,
    size_share_correlation,
    z_moment,
)

__all__ = [
    "BootstrapResult",
    "BootstrapSummary",
    "CorrelationReport",
    "Dataset",
    "DepartmentRecord",
    "DeviationRow",
    "DeviationTable",
    "DroppedUnit",
    "IoError",
    "LooReport",
    "ParseError",
    "QuotaScenario",
    "Stratum",
    "StratumPlan",
    "ValidationError",
    "apply_quota",
    "attribute_deviation_correlation",
    "binomial_pmf",
    "build_dataset",
    "deviation_sign_correlation",
    "deviation_table",
    "empirical_interval",
    "from_departments_csv",
    "from_roster_csv",
    "generate",
    "generation_plan",
    "leave_one_out",
    "normal_cdf",
    "normal_p_value",
    "observed_count",
    "per_stratum_tables",
    "poisson_binomial_exact",
    "report_json",
    "run_bootstrap",
    "sample_department",
    "share_vectors",
    "size_share_correlation",
    "z_moment",
]
