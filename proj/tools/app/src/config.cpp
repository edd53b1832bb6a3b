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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qlsi/errors.hpp"
#include "qlsi/matrix_io.hpp"
#include "qlsi_app/experiment.hpp"
#include "qlsi_app/toml.hpp"

namespace qlsi::app {
namespace {

template <class T>
std::vector<T> read_grid(const nlohmann::json& doc, const char* key) {
  std::vector<T> out;
  if (!doc.contains(key)) return out;
  const auto& g = doc[key];
  if (!g.is_array()) throw ParseError(std::string("config: '") + key + "' must be an array");
  for (const auto& v : g) {
    if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ParseError(std::string("config: '") + key + "' must hold integers");
    } else {
      if (!v.is_number()) throw ParseError(std::string("config: '") + key + "' must hold numbers");
    }
    out.push_back(v.get<T>());
  }
  if (out.empty()) throw ParameterError(std::string("config: '") + key + "' must not be empty");
  return out;
}

int read_positive(const nlohmann::json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc[key];
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("config: '") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

void require(bool ok, const std::string& suite, const char* what) {
  if (!ok) throw ParameterError("config: suite '" + suite + "' requires " + what);
}

}  // namespace

double default_tolerance(const std::string& suite) {
  if (suite == "entropy") return 1e-5;
  if (suite == "lsi-estimate") return 1e-6;
  if (suite == "sv" || suite == "qht" || suite == "cq" || suite == "semigroup") return 1e-8;
  return 1e-9;
}

ExperimentConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("config: document must be a table");
  ExperimentConfig c;
  if (!doc.contains("suite") || !doc["suite"].is_string()) throw ParseError("config: missing string 'suite'");
  c.suite = doc["suite"].get<std::string>();
  if (std::find(std::begin(kSuites), std::end(kSuites), c.suite) == std::end(kSuites)) {
    throw ParameterError("config: unknown suite '" + c.suite + "'");
  }
  if (!doc.contains("seed")) throw ParseError("config: 'seed' is mandatory");
  if (!doc["seed"].is_number_integer() || doc["seed"].get<long long>() < 0) {
    throw ParseError("config: 'seed' must be a nonnegative integer");
  }
  c.seed = doc["seed"].get<std::uint64_t>();

  if (doc.contains("generator")) c.generator = doc["generator"];
  if (doc.contains("sigma")) c.sigma = doc["sigma"];
  if (doc.contains("instance")) c.instance = doc["instance"];
  c.p_grid = read_grid<double>(doc, "p_grid");
  c.q_grid = read_grid<double>(doc, "q_grid");
  c.t_grid = read_grid<double>(doc, "t_grid");
  if (doc.contains("t_factors")) c.t_factors = read_grid<double>(doc, "t_factors");
  c.eps_grid = read_grid<double>(doc, "eps_grid");
  c.n_grid = read_grid<int>(doc, "n_grid");
  c.message_grid = read_grid<int>(doc, "message_grid");
  c.samples = read_positive(doc, "samples", c.samples);
  c.starts = read_positive(doc, "starts", c.starts);
  c.codes_per_cell = read_positive(doc, "codes_per_cell", c.codes_per_cell);
  if (doc.contains("beta")) {
    c.beta = doc["beta"];
    const bool ok = c.beta.is_number() ||
                    (c.beta.is_string() && (c.beta == "gap-bound" || c.beta == "closed-form"));
    if (!ok) throw ParseError("config: 'beta' must be a number, \"gap-bound\" or \"closed-form\"");
  }
  if (doc.contains("alpha")) {
    if (!doc["alpha"].is_number() || !(doc["alpha"].get<double>() > 0.0)) {
      throw ParseError("config: 'alpha' must be a positive number");
    }
    c.alpha = doc["alpha"].get<double>();
  }
  c.tolerance = default_tolerance(c.suite);
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number()) throw ParseError("config: 'tolerance' must be a number");
    const double t = doc["tolerance"].get<double>();
    if (!(t >= c.tolerance)) {
      throw ParameterError("config: tolerance may only be raised above the default " + format_double(c.tolerance));
    }
    c.tolerance = t;
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw ParseError("config: 'output' must be a string");
    c.output = doc["output"].get<std::string>();
  }

  const std::string& s = c.suite;
  const bool needs_gen = s == "semigroup" || s == "lsi-estimate" || s == "lsi-verify" || s == "sv" || s == "hc" ||
                         s == "rhc";
  if (needs_gen) require(!c.generator.is_null(), s, "a 'generator'");
  if (s == "norms" || s == "entropy") require(!c.generator.is_null() || !c.sigma.is_null(), s, "'sigma' or 'generator'");
  if (s != "qht" && s != "cq") require(!c.p_grid.empty(), s, "'p_grid'");
  if (s == "semigroup") require(!c.t_grid.empty(), s, "'t_grid'");
  if (s == "hc" || s == "rhc") require(!c.q_grid.empty(), s, "'q_grid'");
  if (s == "qht") {
    require(c.instance.is_object() && c.instance.contains("rho") && c.instance.contains("sigma"), s,
            "an 'instance' with 'rho' and 'sigma'");
    require(!c.n_grid.empty() && !c.eps_grid.empty(), s, "'n_grid' and 'eps_grid'");
  }
  if (s == "cq") require(!c.n_grid.empty() && !c.message_grid.empty(), s, "'n_grid' and 'message_grid'");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool json_ext = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json_ext) {
    try {
      return parse_config(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("'" + path + "': " + e.what());
    }
  }
  nlohmann::json doc;
  try {
    doc = parse_toml(text);
  } catch (const ParseError& toml_error) {
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      throw ParseError("'" + path + "': " + toml_error.what());
    }
  }
  return parse_config(doc);
}

}  // namespace qlsi::app
