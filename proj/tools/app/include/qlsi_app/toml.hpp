// Copyright 2026 The qlsi Authors
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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace qlsi::app {

/// Parses the TOML subset used by experiment files into JSON: comments, bare
/// and quoted keys, dotted keys, [table] headers, basic strings, integers,
/// floats (including inf and nan), booleans, arrays (multi-line, nested) and
/// inline tables. Throws qlsi::ParseError with a line number on failure.
nlohmann::json parse_toml(const std::string& text);

}  // namespace qlsi::app
