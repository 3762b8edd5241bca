// Copyright 2026 The Armada Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARMADA_TEXT_UTIL_H_
#define ARMADA_TEXT_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace armada {

std::string_view StripLineEnd(std::string_view line);
std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitWhitespace(std::string_view s);
// Splits on '\n'. A trailing newline does not produce an empty last line.
std::vector<std::string_view> SplitLines(std::string_view text);
std::vector<std::string> SplitList(std::string_view s, char sep);

// Decimal or 0x-prefixed hex.
bool ParseU64(std::string_view s, uint64_t &out);
bool ParseI64(std::string_view s, int64_t &out);
bool ParseDouble(std::string_view s, double &out);
bool ParseBool(std::string_view s, bool &out);

// "%.17g"; reproduces the double exactly when parsed back.
std::string FormatDouble(double v);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view data);

}  // namespace armada

#endif  // ARMADA_TEXT_UTIL_H_
