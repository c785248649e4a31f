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

#include "quotascan/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "quotascan/csv.hpp"
#include "quotascan/errors.hpp"

namespace quotascan {

namespace {

void expect_header(csv::Reader& reader, const std::vector<std::string>& expected,
                   const char* what) {
  std::vector<std::string> fields;
  if (!reader.next(fields))
    throw ParseError(std::string("empty input: expected ") + what + " header");
  if (fields != expected) {
    std::string want;
    for (const auto& f : expected) {
      if (!want.empty()) want += ',';
      want += f;
    }
    throw ParseError(std::string("expected header `") + want + "`", reader.line());
  }
}

int parse_non_negative_int(const std::string& text, const char* column, long line) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || value < 0)
    throw ParseError(std::string("column `") + column +
                         "`: expected a non-negative integer, got `" + text + "`",
                     line);
  return value;
}

}  // namespace

std::vector<DepartmentRecord> parse_roster(std::istream& in,
                                           const RosterFormat& format) {
  csv::Reader reader(in);
  expect_header(reader, {"discipline", "university", "gender"}, "roster");

  // (discipline, university) -> (size, minority)
  std::map<std::pair<std::string, std::string>, std::pair<int, int>> groups;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (fields.size() != 3)
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                       reader.line());
    const std::string& gender = fields[2];
    if (gender != format.minority_symbol && gender != format.majority_symbol)
      throw ParseError("unknown gender symbol `" + gender + "` (expected `" +
                           format.minority_symbol + "` or `" +
                           format.majority_symbol + "`)",
                       reader.line());
    auto& group = groups[{fields[0], fields[1]}];
    group.first += 1;
    if (gender == format.minority_symbol) group.second += 1;
  }
  if (groups.empty()) throw ParseError("no records");

  std::vector<DepartmentRecord> records;
  records.reserve(groups.size());
  for (const auto& [key, counts] : groups)
    records.push_back({key.first, key.second, counts.first, counts.second});
  return records;  // map iteration is already lexicographic
}

std::vector<DepartmentRecord> parse_departments(std::istream& in) {
  csv::Reader reader(in);
  expect_header(reader, {"discipline", "university", "size", "women"}, "department");

  std::vector<DepartmentRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (fields.size() != 4)
      throw ParseError("expected 4 fields, got " + std::to_string(fields.size()),
                       reader.line());
    DepartmentRecord rec;
    rec.stratum_key = fields[0];
    rec.unit_key = fields[1];
    rec.size = parse_non_negative_int(fields[2], "size", reader.line());
    rec.minority = parse_non_negative_int(fields[3], "women", reader.line());
    if (rec.minority > rec.size)
      throw ParseError("minority exceeds size (" + std::to_string(rec.minority) +
                           " > " + std::to_string(rec.size) + ")",
                       reader.line());
    if (!seen.insert({rec.stratum_key, rec.unit_key}).second)
      throw ParseError("duplicate department (" + rec.stratum_key + ", " +
                           rec.unit_key + ")",
                       reader.line());
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw ParseError("no records");
  return records;
}

AttributeTable parse_attributes(std::istream& in) {
  csv::Reader reader(in);
  expect_header(reader, {"discipline", "key", "value"}, "attribute");

  AttributeTable table;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (fields.size() != 3)
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                       reader.line());
    table[fields[0]][fields[1]] = fields[2];
  }
  return table;
}

Dataset build_dataset(std::vector<DepartmentRecord> records, int min_size) {
  if (min_size < 0) throw ValidationError("min_size must be non-negative");
  for (const auto& rec : records) {
    if (rec.size < 0 || rec.minority < 0 || rec.minority > rec.size)
      throw ValidationError("record (" + rec.stratum_key + ", " + rec.unit_key +
                            "): minority must lie in [0, size]");
  }

  // Canonical order: results must not depend on how the input was arranged.
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.stratum_key, a.unit_key) < std::tie(b.stratum_key, b.unit_key);
  });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].stratum_key == records[i - 1].stratum_key &&
        records[i].unit_key == records[i - 1].unit_key)
      throw ValidationError("duplicate department (" + records[i].stratum_key +
                            ", " + records[i].unit_key + ")");
  }

  Dataset dataset;
  dataset.min_dept_size = min_size;
  for (auto& rec : records) {
    if (rec.size < min_size) {
      dataset.dropped.push_back({rec.stratum_key, rec.unit_key, rec.size});
      continue;
    }
    if (dataset.strata.empty() || dataset.strata.back().key != rec.stratum_key) {
      dataset.strata.emplace_back();
      dataset.strata.back().key = rec.stratum_key;
    }
    Stratum& stratum = dataset.strata.back();
    stratum.total_size += rec.size;
    stratum.total_minority += rec.minority;
    stratum.departments.push_back(std::move(rec));
  }
  if (dataset.strata.empty())
    throw ValidationError("all records filtered out (min department size " +
                          std::to_string(min_size) + ")");

  for (auto& stratum : dataset.strata)
    stratum.degenerate = stratum.total_minority == 0 ||
                         stratum.total_minority == stratum.total_size;
  return dataset;
}

void attach_attributes(Dataset& dataset, const AttributeTable& attributes) {
  for (auto& stratum : dataset.strata) {
    auto it = attributes.find(stratum.key);
    if (it != attributes.end()) stratum.attributes = it->second;
  }
}

}  // namespace quotascan
