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

#include "quotascan/csv.hpp"

#include "quotascan/errors.hpp"

namespace quotascan::csv {

bool Reader::next(std::vector<std::string>& fields) {
  fields.clear();

  int c = in_.get();
  // Skip blank lines between records.
  while (c == '\n' || c == '\r') {
    if (c == '\n') ++current_line_;
    c = in_.get();
  }
  if (c == std::istream::traits_type::eof()) return false;

  record_line_ = current_line_;
  std::string field;
  bool quoted = false;

  while (true) {
    if (c == std::istream::traits_type::eof()) {
      if (quoted) throw ParseError("unterminated quoted field", record_line_);
      fields.push_back(std::move(field));
      return true;
    }
    char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        int peek = in_.peek();
        if (peek == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++current_line_;
        field.push_back(ch);
      }
    } else if (ch == '"' && field.empty()) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (ch == '\r') {
      // swallowed; the '\n' (if any) terminates below
    } else if (ch == '\n') {
      ++current_line_;
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(ch);
    }
    c = in_.get();
  }
}

}  // namespace quotascan::csv
