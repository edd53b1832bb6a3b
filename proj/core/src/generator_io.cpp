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

#include "qlsi/generator_io.hpp"

#include <vector>

#include "qlsi/errors.hpp"
#include "qlsi/matrix_io.hpp"

namespace qlsi {
namespace {

// Keys may sit at the top level or inside a "params" object.
const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
  if (doc.contains(key)) return doc[key];
  if (doc.contains("params") && doc["params"].is_object() && doc["params"].contains(key)) return doc["params"][key];
  throw ParseError(std::string("generator document: missing '") + key + "'");
}

bool has(const nlohmann::json& doc, const char* key) {
  return doc.contains(key) || (doc.contains("params") && doc["params"].is_object() && doc["params"].contains(key));
}

double number(const nlohmann::json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number()) throw ParseError(std::string("generator document: '") + key + "' must be a number");
  return v.get<double>();
}

DensityMatrix read_sigma(const nlohmann::json& doc) {
  try {
    return DensityMatrix(matrix_from_json(field(doc, "sigma")));
  } catch (const ParseError&) {
    throw;
  } catch (const ResourceError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("generator document: invalid sigma: ") + e.what());
  }
}

}  // namespace

LindbladGenerator generator_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("generator document must be an object");
  const auto& kind_node = field(doc, "kind");
  if (!kind_node.is_string()) throw ParseError("generator document: 'kind' must be a string");
  const std::string kind = kind_node.get<std::string>();

  auto build = [&]() -> LindbladGenerator {
    if (kind == "simple") return simple_generator(read_sigma(doc));
    if (kind == "davies") {
      const double dephase = has(doc, "dephase") ? number(doc, "dephase") : 0.0;
      return davies_qubit_generator(read_sigma(doc), number(doc, "gamma10"), dephase);
    }
    if (kind == "tensor_sum") {
      if (has(doc, "factors")) {
        const auto& fs = field(doc, "factors");
        if (!fs.is_array() || fs.empty()) throw ParseError("generator document: 'factors' must be a nonempty array");
        std::vector<LindbladGenerator> gens;
        for (const auto& f : fs) gens.push_back(generator_from_json(f));
        return tensor_sum(gens);
      }
      const auto& n = field(doc, "n");
      if (!n.is_number_integer() || n.get<int>() < 1) throw ParseError("generator document: 'n' must be a positive integer");
      return tensor_power(generator_from_json(field(doc, "base")), n.get<int>());
    }
    if (kind == "custom") {
      const DensityMatrix sigma = read_sigma(doc);
      const ComplexMatrix rep = matrix_from_json(field(doc, "rep"), kMaxDim * kMaxDim);
      return custom_generator(sigma, rep);
    }
    throw ParseError("generator document: unknown kind '" + kind + "'");
  };

  LindbladGenerator gen = build();
  if (has(doc, "perturb")) gen = commutator_perturbation(gen, number(doc, "perturb"));
  return gen;
}

nlohmann::json generator_to_json(const LindbladGenerator& gen) {
  switch (gen.kind()) {
    case GeneratorKind::Simple:
      return {{"kind", "simple"}, {"sigma", matrix_to_json(gen.sigma().matrix())}};
    case GeneratorKind::TensorSum: {
      nlohmann::json fs = nlohmann::json::array();
      for (const auto& f : gen.factors()) fs.push_back(generator_to_json(f));
      return {{"kind", "tensor_sum"}, {"factors", std::move(fs)}};
    }
    default:
      return {{"kind", "custom"},
              {"sigma", matrix_to_json(gen.sigma().matrix())},
              {"rep", matrix_to_json(gen.rep())}};
  }
}

LindbladGenerator load_generator_file(const std::string& path) { return generator_from_json(load_json_file(path)); }

}  // namespace qlsi
