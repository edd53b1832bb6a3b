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

#include "classical_reduction.hpp"

namespace {

TEST(ClassicalReduction, EveryQuantityMatches) {
  const auto tab = qlsi::testing::classical_reduction(40, 17);
  EXPECT_GE(tab.worst().size(), 15u);
  for (const auto& [name, err] : tab.worst()) EXPECT_LE(err, 1e-8) << name;
}

TEST(ClassicalOracle, NeymanPearsonSanity) {
  EXPECT_NEAR(classical::neyman_pearson({0.3, 0.7}, {0.3, 0.7}, 2, 0.2), 0.8, 1e-14);
  // n = 1, eps = 0.1: accept outcome 0 (ratio 2) fully, then 0.4/0.5 of outcome 1
  EXPECT_NEAR(classical::neyman_pearson({0.5, 0.5}, {0.25, 0.75}, 1, 0.1), 0.25 + 0.8 * 0.75, 1e-14);
}

}  // namespace
