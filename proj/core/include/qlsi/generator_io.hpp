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

#include "qlsi/semigroup.hpp"

namespace qlsi {

/// Generator documents:
///   {"kind": "simple", "sigma": M}
///   {"kind": "davies", "sigma": M, "gamma10": g, "dephase": z}
///   {"kind": "tensor_sum", "factors": [doc, ...]}  or  {"kind": "tensor_sum", "base": doc, "n": k}
///   {"kind": "custom", "sigma": M, "rep": R}
/// with M, R matrix documents. An optional "perturb": eps adds a commutator term.
LindbladGenerator generator_from_json(const nlohmann::json& doc);

/// Simple and tensor-sum generators round-trip structurally; everything else
/// is written as a custom representation.
nlohmann::json generator_to_json(const LindbladGenerator& gen);

LindbladGenerator load_generator_file(const std::string& path);

}  // namespace qlsi
