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

#include "qlsi/matrix_io.hpp"

#include <fstream>

#include "qlsi/errors.hpp"

namespace qlsi {
namespace {

void read_part(const nlohmann::json& rows, Eigen::Index d, bool imag, ComplexMatrix& out) {
  const char* name = imag ? "im" : "re";
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
    throw ParseError(std::string("matrix document: '") + name + "' must have dim rows");
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw ParseError(std::string("matrix document: row ") + std::to_string(i) + " of '" + name +
                       "' must have dim entries");
    }
    for (Eigen::Index j = 0; j < d; ++j) {
      const auto& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw ParseError("matrix document: non-numeric entry");
      const double x = v.get<double>();
      if (imag) {
        out(i, j) = Complex(out(i, j).real(), x);
      } else {
        out(i, j) = Complex(x, 0.0);
      }
    }
  }
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json rr = nlohmann::json::array();
    nlohmann::json ri = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc, Eigen::Index max_dim) {
  if (!doc.is_object()) throw ParseError("matrix document must be an object");
  if (doc.contains("diag")) {
    const auto& diag = doc["diag"];
    if (!diag.is_array() || diag.empty()) throw ParseError("matrix document: 'diag' must be a nonempty array");
    const auto d = static_cast<Eigen::Index>(diag.size());
    if (d > max_dim) throw ResourceError("matrix document: dimension exceeds " + std::to_string(max_dim));
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      const auto& v = diag[static_cast<std::size_t>(i)];
      if (!v.is_number()) throw ParseError("matrix document: non-numeric entry");
      m(i, i) = v.get<double>();
    }
    return m;
  }
  if (!doc.contains("re")) throw ParseError("matrix document: missing 're'");
  Eigen::Index d = 0;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer()) throw ParseError("matrix document: 'dim' must be an integer");
    d = doc["dim"].get<Eigen::Index>();
  } else if (doc["re"].is_array()) {
    d = static_cast<Eigen::Index>(doc["re"].size());
  }
  if (d < 1) throw ParseError("matrix document: 'dim' must be positive");
  if (d > max_dim) throw ResourceError("matrix document: dimension exceeds " + std::to_string(max_dim));
  ComplexMatrix m(d, d);
  read_part(doc["re"], d, false, m);
  if (doc.contains("im")) read_part(doc["im"], d, true, m);
  return m;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

ComplexMatrix load_matrix_file(const std::string& path) { return matrix_from_json(load_json_file(path)); }

}  // namespace qlsi
