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

#ifndef QUOTASCAN_INGEST_HPP
#define QUOTASCAN_INGEST_HPP

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "quotascan/types.hpp"

namespace quotascan {

/// Gender-column alphabet for roster files. The minority symbol is the one
/// that is counted; every cell must match one of the two symbols exactly.
struct RosterFormat {
  std::string minority_symbol = "F";
  std::string majority_symbol = "M";
};

/// Parses an individual roster (header `discipline,university,gender`) and
/// aggregates it into one record per distinct (discipline, university) pair,
/// ordered lexicographically. Throws ParseError with the offending line on
/// malformed rows, unknown gender symbols, or empty input.
std::vector<DepartmentRecord> parse_roster(std::istream& in,
                                           const RosterFormat& format = {});

/// Parses a pre-aggregated department table (header
/// `discipline,university,size,women`), preserving file order. Throws
/// ParseError on non-integer fields, minority > size, duplicate keys, or
/// empty input.
std::vector<DepartmentRecord> parse_departments(std::istream& in);

/// stratum key -> (attribute key -> value)
using AttributeTable = std::map<std::string, std::map<std::string, std::string>>;

/// Parses an optional stratum attribute file (header `discipline,key,value`).
AttributeTable parse_attributes(std::istream& in);

/// Builds the stratified data model: drops units below `min_size` (recording
/// them), canonically sorts by (stratum, unit), assembles per-stratum totals,
/// and flags strata whose share is exactly 0 or 1 as degenerate. The result
/// does not depend on the input record order. Throws ValidationError when
/// nothing survives the filter or a record is internally inconsistent.
Dataset build_dataset(std::vector<DepartmentRecord> records, int min_size = 3);

/// Attaches attribute rows to matching strata; rows naming unknown strata are
/// ignored (attribute files may cover more disciplines than the dataset).
void attach_attributes(Dataset& dataset, const AttributeTable& attributes);

}  // namespace quotascan

#endif  // QUOTASCAN_INGEST_HPP
