// Copyright 2026 The plaq authors
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

#ifndef PLAQ_IO_HPP
#define PLAQ_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace plaq {

// Deterministic stream mixer used to derive per-task seeds from one run
// seed; advances the state.
std::uint64_t splitmix64(std::uint64_t& state);

// Shortest decimal string that round-trips to the same double. Keeps CSV
// output byte-stable across runs.
std::string format_double(double v);

// CSV with a versioned "# schema:" header comment, fixed columns, and
// deterministic formatting.
class CsvWriter {
 public:
  CsvWriter(std::string schema, std::vector<std::string> columns);

  // Extra "# ..." header lines (run parameters, provenance).
  void add_comment(const std::string& text);

  // One row; must match the column count.
  void add_row(const std::vector<std::string>& cells);

  std::size_t rows() const { return rows_.size(); }
  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::string> comments_;
  std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Creates the directory (and parents) if needed; returns the path.
std::string ensure_directory(const std::string& path);

}  // namespace plaq

#endif  // PLAQ_IO_HPP
