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

#ifndef QUOTASCAN_CSV_HPP
#define QUOTASCAN_CSV_HPP

#include <istream>
#include <string>
#include <vector>

namespace quotascan::csv {

// Minimal comma-separated reader. Unquoted fields are taken verbatim;
// RFC 4180 quoting (embedded commas, doubled quotes, embedded newlines)
// is accepted. CRLF and LF line endings both work.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // Throws ParseError on malformed quoting. `line()` afterwards reports
  // the 1-based line on which the record started.
  bool next(std::vector<std::string>& fields);

  long line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  long current_line_ = 1;
  long record_line_ = 0;
};

}  // namespace quotascan::csv

#endif  // QUOTASCAN_CSV_HPP
