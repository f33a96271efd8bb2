// Copyright 2026 The weakprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weakprobe::cli {

/// Failure carrying the process exit code (2 validation, 3 numerical, 4 I/O).
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Shortest form that still round-trips a double: 17 significant digits.
std::string format_real(double value);

/// Accumulates CSV text; every number goes through format_real.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  CsvWriter& cell(double value);
  CsvWriter& cell(long long value);
  CsvWriter& cell(std::string_view text);
  void end_row();
  const std::string& text() const { return text_; }

 private:
  void separator();
  std::string text_;
  bool row_open_ = false;
};

/// Two-column (key,value) CSV.
std::string key_value_csv(const std::vector<std::pair<std::string, double>>& rows);

/// Writes to "<path>.tmp" then renames over path. Throws CliError (exit 4).
void write_atomically(const std::filesystem::path& path, std::string_view contents);

/// Output directory: explicit flag, else $WEAKPROBE_OUT_DIR, else ".".
std::filesystem::path resolve_output_dir(const std::string& flag_value);

}  // namespace weakprobe::cli
