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

#include "quotascan/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "quotascan/errors.hpp"
#include "quotascan/pbd.hpp"
#include "quotascan/rng.hpp"

namespace quotascan {

namespace {

// Stratum-level draws use the department slot below, which no real
// department index reaches.
constexpr std::uint32_t kStratumSlot = 0xFFFFFFFFu;

std::string make_key(char prefix, int index, int width) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%c%0*d", prefix, std::min(width, 10), index);
  return buf;
}

int key_width(int count) {
  int width = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++width;
  return std::max(width, 2);
}

void validate(const CorpusSpec& spec) {
  if (spec.n_strata < 1) throw ValidationError("corpus needs at least one stratum");
  if (spec.departments_per_stratum.first < 1 ||
      spec.departments_per_stratum.second < spec.departments_per_stratum.first)
    throw ValidationError("departments_per_stratum range is infeasible");
  if (spec.size_range.first < std::max(1, spec.min_dept_size) ||
      spec.size_range.second < spec.size_range.first)
    throw ValidationError("size_range is infeasible for the minimum department size");
  if (!(spec.share_range.first >= 0.0 && spec.share_range.second <= 1.0 &&
        spec.share_range.first <= spec.share_range.second))
    throw ValidationError("share_range must be an ordered subrange of [0, 1]");
  if (spec.regime != Regime::null_random && spec.quota < 0)
    throw ValidationError("quota must be non-negative");
  if (spec.regime == Regime::soft_quota && !(spec.leak >= 0.0 && spec.leak <= 1.0))
    throw ValidationError("leak probability must lie in [0, 1]");
}

}  // namespace

Regime regime_from_string(const std::string& name) {
  if (name == "null" || name == "null_random") return Regime::null_random;
  if (name == "hard-quota" || name == "hard_quota") return Regime::hard_quota;
  if (name == "soft-quota" || name == "soft_quota") return Regime::soft_quota;
  throw std::invalid_argument("unknown regime `" + name + "`");
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::null_random: return "null_random";
    case Regime::hard_quota: return "hard_quota";
    case Regime::soft_quota: return "soft_quota";
  }
  return "unknown";
}

std::vector<StratumPlan> generation_plan(const CorpusSpec& spec) {
  validate(spec);
  const int stratum_width = key_width(spec.n_strata);
  std::vector<StratumPlan> plan;
  plan.reserve(spec.n_strata);
  for (int s = 0; s < spec.n_strata; ++s) {
    rng::Stream stream(spec.seed, 0, static_cast<std::uint32_t>(s), kStratumSlot);
    StratumPlan entry;
    entry.key = make_key('s', s, stratum_width);
    entry.n_departments = stream.next_int(spec.departments_per_stratum.first,
                                          spec.departments_per_stratum.second);
    entry.target_share = spec.share_range.first +
                         stream.next_uniform() * (spec.share_range.second -
                                                  spec.share_range.first);
    plan.push_back(std::move(entry));
  }
  return plan;
}

Dataset generate(const CorpusSpec& spec) {
  const auto plan = generation_plan(spec);
  const int dept_width = key_width(spec.departments_per_stratum.second);

  std::vector<DepartmentRecord> records;
  for (int s = 0; s < spec.n_strata; ++s) {
    const int n_departments = plan[s].n_departments;
    const double share = plan[s].target_share;
    const std::string& stratum_key = plan[s].key;
    for (int d = 0; d < n_departments; ++d) {
      rng::Stream stream(spec.seed, 0, static_cast<std::uint32_t>(s),
                         static_cast<std::uint32_t>(d));
      DepartmentRecord rec;
      rec.stratum_key = stratum_key;
      rec.unit_key = make_key('u', d, dept_width);
      rec.size = stream.next_int(spec.size_range.first, spec.size_range.second);
      switch (spec.regime) {
        case Regime::null_random:
          rec.minority = pbd::sample_department(rec.size, share, stream);
          break;
        case Regime::hard_quota:
          rec.minority = std::min(spec.quota, rec.size);
          break;
        case Regime::soft_quota: {
          const bool leaks = stream.next_uniform() < spec.leak;
          rec.minority = leaks ? pbd::sample_department(rec.size, share, stream)
                               : std::min(spec.quota, rec.size);
          break;
        }
      }
      records.push_back(std::move(rec));
    }
  }
  return build_dataset(std::move(records), spec.min_dept_size);
}

void write_department_csv(const Dataset& dataset, std::ostream& out) {
  out << "discipline,university,size,women\n";
  for (const auto& stratum : dataset.strata)
    for (const auto& dept : stratum.departments)
      out << dept.stratum_key << ',' << dept.unit_key << ',' << dept.size << ','
          << dept.minority << '\n';
}

void write_roster_csv(const Dataset& dataset, std::ostream& out,
                      const RosterFormat& format) {
  out << "discipline,university,gender\n";
  for (const auto& stratum : dataset.strata) {
    for (const auto& dept : stratum.departments) {
      for (int i = 0; i < dept.minority; ++i)
        out << dept.stratum_key << ',' << dept.unit_key << ','
            << format.minority_symbol << '\n';
      for (int i = dept.minority; i < dept.size; ++i)
        out << dept.stratum_key << ',' << dept.unit_key << ','
            << format.majority_symbol << '\n';
    }
  }
}

}  // namespace quotascan
