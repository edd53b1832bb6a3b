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

#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "qlsi/optimize.hpp"

namespace {

TEST(NelderMead, Quadratic) {
  auto f = [](const std::vector<double>& x) { return (x[0] - 1) * (x[0] - 1) + 4 * (x[1] + 2) * (x[1] + 2); };
  const auto r = qlsi::nelder_mead(f, {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -2.0, 1e-5);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  qlsi::SimplexOptions opts;
  opts.max_iter = 10000;
  const auto r = qlsi::nelder_mead(f, {-1.2, 1.0}, opts);
  EXPECT_NEAR(r.value, 0.0, 1e-8);
}

TEST(NelderMead, TreatsNonFiniteAsBarrier) {
  auto f = [](const std::vector<double>& x) {
    if (x[0] < 0.5) return std::numeric_limits<double>::quiet_NaN();
    return (x[0] - 1) * (x[0] - 1);
  };
  const auto r = qlsi::nelder_mead(f, {2.0});
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_TRUE(std::isfinite(r.value));
}

TEST(NelderMead, IterationCap) {
  auto f = [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1]; };
  qlsi::SimplexOptions opts;
  opts.max_iter = 3;
  const auto r = qlsi::nelder_mead(f, {5.0, 5.0}, opts);
  EXPECT_LE(r.iterations, 3);
  EXPECT_FALSE(r.converged);
}

}  // namespace
