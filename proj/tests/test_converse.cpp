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
#include <vector>

#include <gtest/gtest.h>

#include "classical_oracle.hpp"
#include "qlsi/converse.hpp"
#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "test_support.hpp"

namespace {

using qlsi::ComplexMatrix;
using qlsi::DensityMatrix;
using qlsi::HypothesisInstance;
using qlsi::testing::diag;

const auto kRho = DensityMatrix::diagonal({0.5, 0.5});
const auto kSigma = DensityMatrix::diagonal({0.25, 0.75});

TEST(Gamma, Examples) {
  EXPECT_NEAR(qlsi::gamma_infinity(kSigma, kSigma), 1.0, 1e-12);
  EXPECT_NEAR(qlsi::gamma_infinity(kRho, kSigma), 2.0, 1e-12);
  qlsi::Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto r = qlsi::random_density(3, rng, 0.02), s = qlsi::random_density(3, rng, 0.02);
    const ComplexMatrix isq = qlsi::apply_spectral(s.eig(), [](double v) { return 1.0 / std::sqrt(v); });
    const double radius = qlsi::eig_hermitian(ComplexMatrix(isq * r.matrix() * isq)).values(2);
    const double g = qlsi::gamma_infinity(r, s);
    EXPECT_GE(g, radius - 1e-10);
    EXPECT_GE(g, 1.0 - 1e-10);
  }
}

TEST(Instance, Fields) {
  HypothesisInstance inst(kRho, kSigma, 3);
  EXPECT_NEAR(inst.gamma, 2.0, 1e-12);
  EXPECT_NEAR(inst.rel_ent, classical::kl({0.5, 0.5}, {0.25, 0.75}), 1e-14);
  EXPECT_FALSE(inst.gamma_below_one);
  EXPECT_THROW(HypothesisInstance(kRho, kSigma, 7), qlsi::ResourceError);
  EXPECT_THROW(HypothesisInstance(DensityMatrix::diagonal({0.0, 1.0}), kSigma, 1), qlsi::ParameterError);
}

TEST(BoundRhs, Examples) {
  HypothesisInstance inst(kRho, kSigma, 4);
  EXPECT_NEAR(qlsi::qht_bound_rhs(inst, 1.0), -4 * inst.rel_ent, 1e-14);
  EXPECT_TRUE(std::isinf(qlsi::qht_bound_rhs(inst, 0.0)));
  HypothesisInstance same(kSigma, kSigma, 2);
  const double eps = 0.1;
  EXPECT_NEAR(qlsi::qht_bound_rhs(same, 1 - eps), std::log(1 - eps) - 2 * std::sqrt(2 * std::log(1 / (1 - eps))), 1e-12);
}

TEST(BetaBound, Examples) {
  HypothesisInstance inst(kRho, kSigma, 3);
  EXPECT_NEAR(qlsi::beta_lower_bound(inst, 1e-12), std::exp(-3 * inst.rel_ent), 1e-5);
  EXPECT_LE(qlsi::beta_lower_bound(inst, 0.1), qlsi::np_oracle(kRho, kSigma, 3, 0.1).beta);
  HypothesisInstance same(kSigma, kSigma, 2);
  EXPECT_LE(qlsi::beta_lower_bound(same, 0.2), 0.8);
  EXPECT_THROW(qlsi::beta_lower_bound(inst, 1.0), qlsi::ParameterError);
}

TEST(ExponentF, Examples) {
  EXPECT_DOUBLE_EQ(qlsi::strong_converse_exponent_f(2.0, 0.3, 0.3), 0.0);
  EXPECT_NEAR(qlsi::strong_converse_exponent_f(2.0, 1.3, 0.3), 5 - 2 * std::sqrt(6.0), 1e-14);
  double prev = 0.0;
  for (double r = 0.4; r < 3.0; r += 0.3) {
    const double f = qlsi::strong_converse_exponent_f(2.0, r, 0.3);
    EXPECT_GT(f, prev);
    prev = f;
  }
  EXPECT_THROW(qlsi::strong_converse_exponent_f(2.0, 0.1, 0.3), qlsi::ParameterError);
}

TEST(ExponentF, TypeOneErrorConsistency) {
  // tests with beta <= exp(-n r) must have alpha >= 1 - exp(-n f)
  HypothesisInstance base(kRho, kSigma, 1);
  for (int n = 1; n <= 5; ++n) {
    for (double eps : {0.05, 0.3, 0.6, 0.9}) {
      const auto np = qlsi::np_oracle(kRho, kSigma, n, eps);
      const double r = -std::log(np.beta) / n;
      if (r < base.rel_ent) continue;
      const double f = qlsi::strong_converse_exponent_f(base.gamma, r, base.rel_ent);
      EXPECT_GE(np.test.alpha(), 1 - std::exp(-n * f) - 1e-10) << n << " " << eps;
    }
  }
}

TEST(NeymanPearson, TrivialAndClassical) {
  for (double eps : {0.05, 0.3}) EXPECT_NEAR(qlsi::np_oracle(kSigma, kSigma, 2, eps).beta, 1 - eps, 1e-9);
  for (int n = 1; n <= 5; ++n) {
    for (double eps : {0.05, 0.1, 0.3}) {
      const auto r = qlsi::np_oracle(kRho, kSigma, n, eps);
      EXPECT_NEAR(r.beta, classical::neyman_pearson({0.5, 0.5}, {0.25, 0.75}, n, eps), 1e-8) << n << " " << eps;
      EXPECT_NEAR(r.test.alpha(), eps, 1e-9);
    }
  }
  EXPECT_THROW(qlsi::np_oracle(kRho, kSigma, 1, 0.0), qlsi::ParameterError);
}

TEST(NeymanPearson, GridCrossCheck) {
  const auto rotated = qlsi::testing::rotated(kSigma, M_PI / 8);
  for (double eps : {0.1, 0.3}) {
    const double exact = qlsi::np_oracle(kRho, rotated, 1, eps).beta;
    const double grid = qlsi::np_grid_search(kRho, rotated, eps);
    EXPECT_LE(exact, grid + 1e-9);
    EXPECT_NEAR(exact, grid, 1e-6);
  }
}

TEST(NeymanPearson, DominatesBound) {
  const auto rotated = qlsi::testing::rotated(kSigma, M_PI / 8);
  for (const auto& s : {kSigma, rotated}) {
    for (int n = 1; n <= 5; ++n) {
      HypothesisInstance inst(kRho, s, n);
      for (double eps : {0.05, 0.1, 0.3}) EXPECT_GE(qlsi::np_oracle(kRho, s, n, eps).beta, qlsi::beta_lower_bound(inst, eps));
    }
  }
}

TEST(QuantumTest, Validation) {
  const ComplexMatrix t = diag({1.0, 0.0});
  qlsi::QuantumTest q(t, kRho.matrix(), kSigma.matrix());
  EXPECT_NEAR(q.alpha(), 0.5, 1e-15);
  EXPECT_NEAR(q.beta(), 0.25, 1e-15);
  EXPECT_THROW(qlsi::QuantumTest(diag({1.5, 0.0}), kRho.matrix(), kSigma.matrix()), qlsi::ParameterError);
}

TEST(RandomTests, SatisfyBound) {
  const auto rotated = qlsi::testing::rotated(kSigma, M_PI / 8);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_GE(qlsi::qht_random_test_check(HypothesisInstance(kRho, kSigma, n), 300, n), -1e-8);
    EXPECT_GE(qlsi::qht_random_test_check(HypothesisInstance(kRho, rotated, n), 300, 10 + n), -1e-8);
  }
}

TEST(Alt, Examples) {
  qlsi::Rng rng(2);
  const qlsi::PositiveOperator a(qlsi::random_definite_sample(3, rng)), b(qlsi::random_definite_sample(3, rng));
  EXPECT_NEAR(qlsi::alt_check(a, b, 1.0), 0.0, 1e-9 * std::max(1.0, (a.matrix() * b.matrix()).trace().real()));
  const qlsi::PositiveOperator c(diag({2.0, 0.5})), d(diag({0.3, 4.0}));
  EXPECT_NEAR(qlsi::alt_check(c, d, 0.4), 0.0, 1e-10);
  double worst = 1.0;
  for (int i = 0; i < 2000; ++i) {
    const qlsi::PositiveOperator x(qlsi::random_definite_sample(2 + i % 3, rng)), y(qlsi::random_definite_sample(2 + i % 3, rng));
    worst = std::min(worst, qlsi::alt_check(x, y, 0.1 * (1 + i % 9)));
  }
  EXPECT_GE(worst, -1e-9);
  EXPECT_THROW(qlsi::alt_check(c, d, 1.5), qlsi::ParameterError);
}

TEST(MutualInformation, Examples) {
  const std::vector<double> uniform{0.5, 0.5};
  const std::vector<ComplexMatrix> same{kSigma.matrix(), kSigma.matrix()};
  EXPECT_NEAR(qlsi::mutual_information(same, uniform), 0.0, 1e-14);
  const std::vector<ComplexMatrix> orth{diag({1, 0}), diag({0, 1})};
  EXPECT_NEAR(qlsi::mutual_information(orth, uniform), std::log(2.0), 1e-14);
  std::vector<ComplexMatrix> prod;
  for (const auto& x : orth) {
    for (const auto& y : orth) prod.push_back(qlsi::kron(x, y));
  }
  EXPECT_NEAR(qlsi::mutual_information(prod, {0.25, 0.25, 0.25, 0.25}), 2 * std::log(2.0), 1e-13);
}

TEST(MutualInformation, Additivity) {
  qlsi::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const std::vector<ComplexMatrix> a{qlsi::random_density(2, rng, 0.0).matrix(), qlsi::random_density(2, rng, 0.0).matrix()};
    const std::vector<ComplexMatrix> b{qlsi::random_density(2, rng, 0.0).matrix(), qlsi::random_density(2, rng, 0.0).matrix(),
                                       qlsi::random_density(2, rng, 0.0).matrix()};
    const double pa = rng.uniform(0.1, 0.9), pb = rng.uniform(0.1, 0.5);
    const std::vector<double> da{pa, 1 - pa}, db{pb, 0.5 - pb / 2, 0.5 - pb / 2};
    std::vector<ComplexMatrix> ab;
    std::vector<double> dab;
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        ab.push_back(qlsi::kron(a[x], b[y]));
        dab.push_back(da[x] * db[y]);
      }
    }
    EXPECT_NEAR(qlsi::mutual_information(ab, dab), qlsi::mutual_information(a, da) + qlsi::mutual_information(b, db), 1e-8);
  }
}

qlsi::CQCode code_from(std::vector<ComplexMatrix> outputs, std::vector<std::vector<int>> words) {
  qlsi::CQCode c;
  c.outputs = std::move(outputs);
  c.codewords = std::move(words);
  return qlsi::pgm_decoder(c);
}

TEST(Pgm, Examples) {
  const std::vector<ComplexMatrix> orth{diag({1, 0}), diag({0, 1})};
  auto c = code_from(orth, {{0}, {1}});
  EXPECT_NEAR(c.p_max, 0.0, 1e-12);
  EXPECT_NEAR(qlsi::cq_converse_check(c), 0.0, 1e-12);
  EXPECT_NEAR(c.rate(), std::log(2.0), 1e-15);

  c = code_from({kSigma.matrix(), kRho.matrix()}, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  EXPECT_NEAR(c.p_max, 0.75, 1e-12);

  c = code_from(orth, {{0}});
  EXPECT_GE(qlsi::cq_converse_check(c), 0.0);

  qlsi::Rng rng(4);
  c = qlsi::pgm_decoder(qlsi::random_binary_qubit_code(3, 4, rng));
  EXPECT_LE(c.completeness_residual, 1e-9);
  for (const auto& p : c.povm) EXPECT_GE(qlsi::eig_hermitian(p).values(0), -1e-10);
  EXPECT_NEAR(c.p_max, qlsi::max_error_probability(c), 1e-15);
}

TEST(CqConverse, RandomCodes) {
  qlsi::Rng rng(5);
  for (int n = 2; n <= 4; ++n) {
    for (std::size_t m : {2u, 4u, 8u}) {
      for (int k = 0; k < 5; ++k) {
        const auto c = qlsi::pgm_decoder(qlsi::random_binary_qubit_code(n, m, rng));
        EXPECT_GE(qlsi::cq_converse_check(c), -1e-8);
        EXPECT_GE(qlsi::code_mutual_information(c), -1e-10);
      }
    }
  }
}

}  // namespace
