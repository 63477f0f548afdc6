// Copyright 2026 The Framescope Authors.
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

// File helpers for the on-disk artifact formats.
//
// JSONL artifacts written by the pipeline start with one header line of the
// form {"_header": {...}} carrying provenance (manifest hash, backend). Every
// reader skips such lines, so record counts are always "lines minus header".

#ifndef FRAMESCOPE_IO_H_
#define FRAMESCOPE_IO_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace framescope {

using json = nlohmann::json;

constexpr std::string_view kHeaderKey = "_header";

// Throws std::runtime_error when the file cannot be read.
std::string ReadTextFile(const std::filesystem::path &path);

// Writes via a temporary file and rename, creating parent directories.
void WriteTextFile(const std::filesystem::path &path, std::string_view data);

// Calls `record` for each non-blank, non-header line. Lines that are not
// valid JSON objects are reported through `malformed` (1-based line number)
// and otherwise skipped.
void ReadJsonl(const std::filesystem::path &path,
               const std::function<void(const json &record, size_t line)> &record,
               const std::function<void(size_t line, const std::string &why)>
                   &malformed = nullptr);

// Returns the header object of a JSONL file, if the first line is one.
std::optional<json> ReadJsonlHeader(const std::filesystem::path &path);

// Serializes records one per line, preceded by the header when non-null.
std::string FormatJsonl(const json &header, const std::vector<json> &records);

// Stable serialization used for every artifact and every hash input.
std::string DumpCanonical(const json &value, int indent = -1);

// RFC 4180 CSV: quoted fields, doubled quotes, embedded newlines.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text);
std::string CsvEscape(std::string_view field);

}  // namespace framescope

#endif  // FRAMESCOPE_IO_H_
