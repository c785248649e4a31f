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

#ifndef QUOTASCAN_TYPES_HPP
#define QUOTASCAN_TYPES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace quotascan {

/// One unit: all members of one minority-trackable group (e.g. a department,
/// identified by discipline x university) with its headcount and observed
/// minority count.
struct DepartmentRecord {
  std::string stratum_key;  // e.g. discipline code
  std::string unit_key;     // e.g. university code
  int size = 0;             // headcount, >= 0
  int minority = 0;         // observed minority members, 0 <= minority <= size

  friend bool operator==(const DepartmentRecord&, const DepartmentRecord&) = default;
};

/// One stratum (e.g. a discipline): the units that share a single hiring pool
/// and hence a single hiring probability. The share is carried as the exact
/// integer pair (total_minority, total_size); `share()` is the one place it
/// is converted to floating point.
struct Stratum {
  std::string key;
  std::vector<DepartmentRecord> departments;  // ordered by unit key
  long long total_size = 0;                   // sum of department sizes
  long long total_minority = 0;               // sum of department minority counts
  bool degenerate = false;                    // share is exactly 0 or exactly 1
  std::map<std::string, std::string> attributes;

  int n_units() const { return static_cast<int>(departments.size()); }

  std::vector<int> sizes() const {
    std::vector<int> out;
    out.reserve(departments.size());
    for (const auto& d : departments) out.push_back(d.size);
    return out;
  }

  double share() const {
    return total_size == 0 ? 0.0
                           : static_cast<double>(total_minority) /
                                 static_cast<double>(total_size);
  }

  double mean_size() const {
    return departments.empty() ? 0.0
                               : static_cast<double>(total_size) /
                                     static_cast<double>(departments.size());
  }

  int max_size() const {
    int m = 0;
    for (const auto& d : departments) m = d.size > m ? d.size : m;
    return m;
  }
};

/// A unit removed by the minimum-size filter; reported, never silently lost.
struct DroppedUnit {
  std::string stratum_key;
  std::string unit_key;
  int size = 0;
};

/// The validated, stratified data model all analyses run on.
struct Dataset {
  std::vector<Stratum> strata;  // ordered by stratum key
  int min_dept_size = 3;        // the filter the dataset was built with
  std::vector<DroppedUnit> dropped;

  int n_strata() const { return static_cast<int>(strata.size()); }

  long long total_units() const {
    long long n = 0;
    for (const auto& s : strata) n += s.n_units();
    return n;
  }

  std::vector<std::string> degenerate_keys() const {
    std::vector<std::string> keys;
    for (const auto& s : strata)
      if (s.degenerate) keys.push_back(s.key);
    return keys;
  }

  const Stratum* find(const std::string& key) const {
    for (const auto& s : strata)
      if (s.key == key) return &s;
    return nullptr;
  }
};

}  // namespace quotascan

#endif  // QUOTASCAN_TYPES_HPP
