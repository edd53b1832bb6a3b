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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qlsi/errors.hpp"
#include "qlsi/generator_io.hpp"
#include "qlsi/matrix_io.hpp"
#include "qlsi/semigroup.hpp"
#include "test_support.hpp"

namespace {

using nlohmann::json;

TEST(MatrixJson, RoundTrip) {
  qlsi::Rng rng(2);
  const auto m = qlsi::random_ginibre(3, rng);
  const auto back = qlsi::matrix_from_json(qlsi::matrix_to_json(m));
  EXPECT_TRUE(back == m);
}

TEST(MatrixJson, RowMajorRealImag) {
  const json doc = {{"dim", 2}, {"re", {{1, 2}, {3, 4}}}, {"im", {{0, 1}, {-1, 0}}}};
  const auto m = qlsi::matrix_from_json(doc);
  EXPECT_EQ(m(0, 1), qlsi::Complex(2, 1));
  EXPECT_EQ(m(1, 0), qlsi::Complex(3, -1));
}

TEST(MatrixJson, ImaginaryPartOptionalAndDiag) {
  const auto m = qlsi::matrix_from_json(json{{"re", {{1, 0}, {0, 2}}}});
  EXPECT_EQ(m(1, 1), qlsi::Complex(2, 0));
  const auto d = qlsi::matrix_from_json(json{{"diag", {0.25, 0.75}}});
  EXPECT_EQ(d(0, 0), qlsi::Complex(0.25, 0));
  EXPECT_EQ(d(0, 1), qlsi::Complex(0, 0));
}

TEST(MatrixJson, RejectsMalformed) {
  EXPECT_THROW(qlsi::matrix_from_json(json{{"dim", 2}, {"re", {{1, 2, 3}, {3, 4, 5}}}}), qlsi::ParseError);
  EXPECT_THROW(qlsi::matrix_from_json(json{{"dim", 2}, {"re", {{1, 2}}}}), qlsi::ParseError);
  EXPECT_THROW(qlsi::matrix_from_json(json{{"dim", 2}, {"re", {{1, 2}, {3, 4}}}, {"im", {{0}, {0}}}}),
               qlsi::ParseError);
  EXPECT_THROW(qlsi::matrix_from_json(json{{"dim", 2}, {"re", {{1, "a"}, {3, 4}}}}), qlsi::ParseError);
  EXPECT_THROW(qlsi::matrix_from_json(json::array()), qlsi::ParseError);
  EXPECT_THROW(qlsi::matrix_from_json(json{{"dim", 65}, {"re", json::array()}}), qlsi::ResourceError);
}

TEST(GeneratorJson, SimpleRoundTrip) {
  const auto g = qlsi::generator_from_json(json::parse(R"({"kind":"simple","sigma":{"diag":[0.25,0.75]}})"));
  EXPECT_EQ(g.kind(), qlsi::GeneratorKind::Simple);
  const auto back = qlsi::generator_from_json(qlsi::generator_to_json(g));
  EXPECT_LE(qlsi::max_abs(back.rep() - g.rep()), 1e-15);
}

TEST(GeneratorJson, DaviesParamsNestedOrFlat) {
  const auto a = qlsi::generator_from_json(
      json::parse(R"({"kind":"davies","sigma":{"diag":[0.25,0.75]},"params":{"gamma10":1.0,"dephase":0.3}})"));
  const auto b = qlsi::generator_from_json(
      json::parse(R"({"kind":"davies","sigma":{"diag":[0.25,0.75]},"gamma10":1.0,"dephase":0.3})"));
  EXPECT_EQ(a.kind(), qlsi::GeneratorKind::Davies);
  EXPECT_LE(qlsi::max_abs(a.rep() - b.rep()), 0.0);
}

TEST(GeneratorJson, TensorSumAndCustom) {
  const auto t = qlsi::generator_from_json(
      json::parse(R"({"kind":"tensor_sum","n":2,"base":{"kind":"simple","sigma":{"diag":[0.25,0.75]}}})"));
  EXPECT_EQ(t.dim(), 4);
  EXPECT_EQ(t.factors().size(), 2u);
  const auto d = qlsi::davies_qubit_generator(qlsi::DensityMatrix::diagonal({0.25, 0.75}), 1.0, 0.0);
  const auto c = qlsi::generator_from_json(qlsi::generator_to_json(d));
  EXPECT_EQ(c.kind(), qlsi::GeneratorKind::Custom);
  EXPECT_LE(qlsi::max_abs(c.rep() - d.rep()), 1e-15);
  EXPECT_NEAR(c.spectral_gap(), d.spectral_gap(), 1e-12);
}

TEST(GeneratorJson, Errors) {
  EXPECT_THROW(qlsi::generator_from_json(json::parse(R"({"kind":"nope","sigma":{"diag":[1]}})")), qlsi::ParseError);
  EXPECT_THROW(qlsi::generator_from_json(json::parse(R"({"sigma":{"diag":[0.5,0.5]}})")), qlsi::ParseError);
  EXPECT_THROW(qlsi::generator_from_json(json::parse(R"({"kind":"simple","sigma":{"diag":[0.5,0.6]}})")),
               qlsi::ParseError);
  EXPECT_THROW(qlsi::generator_from_json(json::parse(R"({"kind":"davies","sigma":{"diag":[0.5,0.5]}})")),
               qlsi::ParseError);
}

}  // namespace
