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

#include "qlsi/operators.hpp"

namespace qlsi {

/// {"dim": d, "re": [[...]], "im": [[...]]}, rows first. "im" may be omitted
/// for real matrices. {"diag": [...]} is accepted as a shorthand on input.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& doc, Eigen::Index max_dim = kMaxDim);

nlohmann::json load_json_file(const std::string& path);
ComplexMatrix load_matrix_file(const std::string& path);

}  // namespace qlsi
