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
#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/semigroup.hpp"
#include "test_support.hpp"

namespace {

using qlsi::ComplexMatrix;
using qlsi::DensityMatrix;
using qlsi::WeightedSpace;
using qlsi::testing::diag;

const double kKlExample = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);

TEST(EntP, IdentityIsZero) {
  WeightedSpace w(DensityMatrix::diagonal({0.25, 0.75}));
  for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) EXPECT_NEAR(qlsi::ent_p(w, qlsi::identity(2), p).value, 0.0, 1e-14);
}

TEST(EntP, RelativeEntropyAtTwo) {
  const auto rho = DensityMatrix::diagonal({0.5, 0.5});
  WeightedSpace w(DensityMatrix::diagonal({0.25, 0.75}));
  const ComplexMatrix sqrt_rho = qlsi::apply_spectral(rho.eig(), [](double v) { return std::sqrt(v); });
  const ComplexMatrix x = qlsi::gamma_power(w, sqrt_rho, -0.5);
  EXPECT_NEAR(qlsi::ent_p(w, x, 2.0).value, kKlExample, 1e-12);
  EXPECT_NEAR(kKlExample, 0.143841, 1e-6);
}

TEST(EntP, ScalingLaw) {
  qlsi::Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    WeightedSpace w(qlsi::random_density(3, rng, 0.05));
    const ComplexMatrix x = qlsi::random_definite_sample(3, rng);
    const double c = rng.uniform(0.1, 5.0);
    for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      const double a = qlsi::ent_p(w, ComplexMatrix(c * x), p).value;
      const double b = std::pow(c, p) * qlsi::ent_p(w, x, p).value;
      EXPECT_NEAR(a, b, 1e-6 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(EntP, InvariantUnderPowerOperator) {
  qlsi::Rng rng(2);
  const std::vector<std::pair<double, double>> pairs{{1, 2}, {0.5, 2}, {1.5, 0.7}};
  for (int i = 0; i < 30; ++i) {
    WeightedSpace w(qlsi::random_density(3, rng, 0.05));
    const ComplexMatrix x = qlsi::random_definite_sample(3, rng);
    for (auto [p, q] : pairs) {
      const double a = qlsi::ent_p(w, qlsi::power_operator(w, x, p, 2.0), p).value;
      const double b = qlsi::ent_p(w, qlsi::power_operator(w, x, q, 2.0), q).value;
      EXPECT_NEAR(a, b, 1e-6 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(EntP, NonNegative) {
  qlsi::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    WeightedSpace w(qlsi::random_density(2 + i % 3, rng, 0.02));
    const ComplexMatrix x = qlsi::random_definite_sample(w.dim(), rng);
    for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) ASSERT_GE(qlsi::ent_p(w, x, p).value, -1e-9);
  }
}

TEST(EntP, CommutingMatchesClassical) {
  qlsi::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(0.05, 0.6), b = rng.uniform(0.05, 0.3);
    const classical::Vec s{a, b, 1 - a - b}, f{rng.uniform(0.1, 3), rng.uniform(0.1, 3), rng.uniform(0.1, 3)};
    WeightedSpace w(DensityMatrix::diagonal({s[0], s[1], s[2]}));
    for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      EXPECT_NEAR(qlsi::ent_p(w, diag(f), p).value, classical::ent(s, f, p), 1e-10);
    }
  }
}

TEST(EntP, Errors) {
  WeightedSpace w(DensityMatrix::diagonal({0.25, 0.75}));
  EXPECT_THROW(qlsi::ent_p(w, qlsi::identity(2), 0.0), qlsi::ParameterError);
  EXPECT_THROW(qlsi::ent_p(w, diag({0.0, 1.0}), -1.0), qlsi::DomainError);
  EXPECT_THROW(qlsi::ent_p(w, diag({-1.0, 1.0}), 2.0), qlsi::DomainError);
}

TEST(RelativeEntropy, Examples) {
  const auto rho = DensityMatrix::diagonal({0.5, 0.5});
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  EXPECT_NEAR(qlsi::relative_entropy(rho, rho), 0.0, 1e-14);
  EXPECT_NEAR(qlsi::relative_entropy(rho, sigma), kKlExample, 1e-14);
}

TEST(RelativeEntropy, MatchesEntOne) {
  qlsi::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const auto rho = qlsi::random_density(3, rng, 0.01);
    const auto sigma = qlsi::random_density(3, rng, 0.05);
    WeightedSpace w(sigma);
    const double d = qlsi::relative_entropy(rho, sigma);
    EXPECT_GE(d, -1e-10);
    EXPECT_NEAR(qlsi::ent_p(w, qlsi::gamma_power(w, rho.matrix(), -1.0), 1.0).value, d, 1e-9);
  }
}

TEST(Renyi, Examples) {
  const auto rho = DensityMatrix::diagonal({0.5, 0.5});
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  EXPECT_NEAR(qlsi::renyi_divergence(sigma, sigma, 0.3), 0.0, 1e-14);
  for (double p : {0.2, 0.5, 0.8}) {
    const double ref = -std::log(std::pow(0.25, p) * std::pow(0.5, 1 - p) + std::pow(0.75, p) * std::pow(0.5, 1 - p)) / p;
    EXPECT_NEAR(qlsi::renyi_divergence(rho, sigma, p), ref, 1e-13);
  }
  double prev = 0.0;
  for (double p : {1e-1, 1e-2, 1e-3}) {
    const double gap = std::abs(qlsi::renyi_divergence(rho, sigma, p) - kKlExample);
    if (prev > 0.0) EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_LE(prev, 1e-3);
  EXPECT_THROW(qlsi::renyi_divergence(rho, sigma, 1.0), qlsi::ParameterError);
}

double finite_difference(const WeightedSpace& w, const ComplexMatrix& x, double p) {
  const double h = 1e-4 * std::min(1.0, std::abs(p));
  return (qlsi::weighted_norm(w, x, p + h) - qlsi::weighted_norm(w, x, p - h)) / (2 * h);
}

TEST(NormDerivative, ScalarOperatorsAreFlat) {
  WeightedSpace w(DensityMatrix::diagonal({0.25, 0.75}));
  EXPECT_NEAR(qlsi::norm_derivative_p(w, qlsi::identity(2), 2.0), 0.0, 1e-14);
  EXPECT_NEAR(qlsi::norm_derivative_p(w, ComplexMatrix(3.0 * qlsi::identity(2)), 0.5), 0.0, 1e-12);
}

TEST(NormDerivative, MatchesFiniteDifference) {
  qlsi::Rng rng(6);
  for (int i = 0; i < 40; ++i) {
    WeightedSpace w(qlsi::random_density(3, rng, 0.05));
    const ComplexMatrix x = i % 2 ? qlsi::random_definite_sample(3, rng) : qlsi::random_ginibre(3, rng);
    for (double p : {0.5, 1.0, 2.0, 3.0}) {
      const double a = qlsi::norm_derivative_p(w, x, p);
      const double b = finite_difference(w, x, p);
      EXPECT_NEAR(a, b, 1e-5 * std::max(1.0, std::abs(b))) << p;
    }
  }
}

TEST(Variance, Examples) {
  WeightedSpace h(DensityMatrix::maximally_mixed(2));
  EXPECT_NEAR(qlsi::variance_sigma(h, qlsi::identity(2)), 0.0, 1e-15);
  EXPECT_NEAR(qlsi::variance_sigma(h, ComplexMatrix(4.0 * qlsi::identity(2))), 0.0, 1e-13);
  EXPECT_NEAR(qlsi::variance_sigma(h, diag({2, 1})), 0.25, 1e-14);
}

TEST(Dirichlet, Examples) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  WeightedSpace w(sigma);
  const auto gen = qlsi::simple_generator(sigma);
  for (double p : {-1.0, 0.5, 1.0, 2.0}) EXPECT_NEAR(qlsi::dirichlet_form(w, gen, qlsi::identity(2), p), 0.0, 1e-14);

  const auto half = DensityMatrix::maximally_mixed(2);
  WeightedSpace h(half);
  EXPECT_NEAR(qlsi::dirichlet_form(h, qlsi::simple_generator(half), diag({2, 1}), 2.0), 0.25, 1e-14);
}

TEST(Dirichlet, HomogeneityDualityAndTwo) {
  qlsi::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto sigma = qlsi::random_density(2, rng, 0.1);
    WeightedSpace w(sigma);
    const auto gen = i % 2 ? qlsi::simple_generator(sigma) : qlsi::davies_qubit_generator(sigma, 1.0, 0.3);
    const ComplexMatrix x = qlsi::random_definite_sample(2, rng);
    const double c = rng.uniform(0.2, 4.0);
    for (double p : {-1.0, 0.5, 1.0, 1.5, 2.0}) {
      const double a = qlsi::dirichlet_form(w, gen, ComplexMatrix(c * x), p);
      const double b = std::pow(c, p) * qlsi::dirichlet_form(w, gen, x, p);
      EXPECT_NEAR(a, b, 1e-6 * std::max(1.0, std::abs(b)));
    }
    EXPECT_NEAR(qlsi::dirichlet_form(w, gen, x, 2.0), qlsi::inner_sigma(w, x, gen.apply(x)).real(), 1e-10);
    for (double p : {0.5, 1.5}) {
      const double hat = qlsi::holder_conjugate(p);
      const double a = qlsi::dirichlet_form(w, gen, qlsi::power_operator(w, x, hat, 2.0), hat);
      const double b = qlsi::dirichlet_form(w, gen, qlsi::power_operator(w, x, p, 2.0), p);
      EXPECT_NEAR(a, b, 1e-6 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST(Dirichlet, OneIsLimit) {
  qlsi::Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const auto sigma = qlsi::random_density(3, rng, 0.05);
    WeightedSpace w(sigma);
    const auto gen = qlsi::simple_generator(sigma);
    const ComplexMatrix x = qlsi::random_definite_sample(3, rng);
    const double e1 = qlsi::dirichlet_form(w, gen, x, 1.0);
    const double lim = 0.5 * (qlsi::dirichlet_form(w, gen, x, 1.0 + 1e-4) + qlsi::dirichlet_form(w, gen, x, 1.0 - 1e-4));
    EXPECT_NEAR(e1, lim, 1e-6 * std::max(1.0, std::abs(e1)));
  }
}

TEST(Dirichlet, NonNegativeForStronglyReversible) {
  qlsi::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const auto sigma = qlsi::random_density(2, rng, 0.05);
    WeightedSpace w(sigma);
    const auto gen = i % 2 ? qlsi::simple_generator(sigma) : qlsi::davies_qubit_generator(sigma, rng.uniform(0.1, 2), 0.2);
    const ComplexMatrix x = qlsi::random_definite_sample(2, rng);
    for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      const double e = qlsi::dirichlet_form(w, gen, x, p);
      ASSERT_GE(e, -1e-9 * std::max(1.0, qlsi::max_abs(x))) << p;
    }
  }
}

TEST(Dirichlet, CommutingMatchesClassical) {
  qlsi::Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    const double a = rng.uniform(0.05, 0.9);
    const classical::Vec s{a, 1 - a}, f{rng.uniform(0.1, 3), rng.uniform(0.1, 3)};
    const auto sigma = DensityMatrix::diagonal({s[0], s[1]});
    WeightedSpace w(sigma);
    const auto gen = qlsi::simple_generator(sigma);
    for (double p : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
      EXPECT_NEAR(qlsi::dirichlet_form(w, gen, diag(f), p), classical::dirichlet_simple(s, f, p), 1e-10);
    }
  }
}

TEST(Dirichlet, RejectsMismatchedState) {
  WeightedSpace w(DensityMatrix::diagonal({0.25, 0.75}));
  const auto gen = qlsi::simple_generator(DensityMatrix::maximally_mixed(2));
  EXPECT_THROW(qlsi::dirichlet_form(w, gen, qlsi::identity(2), 2.0), qlsi::ContractError);
}

TEST(Convexity, EntOne) {
  WeightedSpace w(DensityMatrix::diagonal({0.3, 0.7}));
  qlsi::Rng rng(11);
  const ComplexMatrix x = qlsi::random_definite_sample(2, rng);
  EXPECT_NEAR(qlsi::ent1_convexity_check(w, x, x, 0, 1).min_margin, 0.0, 1e-12);
  EXPECT_GE(qlsi::ent1_convexity_check(w, x, ComplexMatrix(2.5 * x), 0, 1).min_margin, -1e-12);
  const auto r = qlsi::ent1_convexity_check(w, x, qlsi::random_definite_sample(2, rng), 1000, 3);
  EXPECT_TRUE(r.pass);
}

}  // namespace
