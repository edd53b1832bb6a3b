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

#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/semigroup.hpp"
#include "test_support.hpp"

namespace {

using qlsi::ComplexMatrix;
using qlsi::DensityMatrix;
using qlsi::LindbladGenerator;
using qlsi::testing::diag;

std::vector<LindbladGenerator> factories(qlsi::Rng& rng) {
  const auto s2 = qlsi::random_density(2, rng, 0.05);
  const auto s3 = qlsi::random_density(3, rng, 0.05);
  const auto d = qlsi::davies_qubit_generator(s2, rng.uniform(0.2, 2.0), rng.uniform(0.0, 1.0));
  const std::vector<LindbladGenerator> pair{qlsi::simple_generator(s2), qlsi::simple_generator(s3)};
  return {qlsi::simple_generator(s2), qlsi::simple_generator(s3), d, qlsi::tensor_sum(pair), qlsi::tensor_power(d, 2)};
}

TEST(Vectorization, SandwichRep) {
  qlsi::Rng rng(1);
  const ComplexMatrix a = qlsi::random_ginibre(3, rng), b = qlsi::random_ginibre(3, rng), x = qlsi::random_ginibre(3, rng);
  const ComplexMatrix y = qlsi::unvec(qlsi::sandwich_rep(a, b) * qlsi::vec(x), 3);
  EXPECT_LE(qlsi::max_abs(y - a * x * b), 1e-12);
  EXPECT_THROW(qlsi::unvec(qlsi::vec(x), 2), qlsi::DimensionError);
}

TEST(Simple, Examples) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const auto g = qlsi::simple_generator(sigma);
  EXPECT_LE(qlsi::max_abs(g.apply(qlsi::identity(2))), 1e-15);
  EXPECT_LE(qlsi::max_abs(g.apply(diag({2, 1})) - diag({0.75, -0.25})), 1e-14);
  qlsi::Rng rng(2);
  const ComplexMatrix x = qlsi::random_ginibre(2, rng);
  EXPECT_LE(qlsi::max_abs(g.apply(g.apply(x)) - g.apply(x)), 1e-9);
  EXPECT_TRUE(qlsi::check_reversible(g, sigma));
  EXPECT_TRUE(qlsi::check_strongly_reversible(g, sigma));
  EXPECT_NEAR(g.spectral_gap(), 1.0, 1e-12);
  EXPECT_THROW(qlsi::simple_generator(DensityMatrix::diagonal({0.0, 1.0})), qlsi::ParameterError);
}

TEST(Simple, Evolution) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const auto g = qlsi::simple_generator(sigma);
  EXPECT_LE(qlsi::max_abs(g.evolve(std::log(2.0), diag({2, 1})) - diag({1.625, 1.125})), 1e-12);
  EXPECT_LE(qlsi::max_abs(g.evolve(0.0, diag({2, 1})) - diag({2, 1})), 1e-15);
  EXPECT_LE(qlsi::max_abs(g.evolve(1e3, diag({2, 1})) - 1.25 * qlsi::identity(2)), 1e-6);
  EXPECT_THROW(g.evolve(-1.0, diag({2, 1})), qlsi::ParameterError);
}

TEST(Adjoint, SimpleAndInvolution) {
  qlsi::Rng rng(3);
  const auto sigma = qlsi::random_density(3, rng, 0.05);
  const auto g = qlsi::simple_generator(sigma);
  const auto adj = qlsi::adjoint_generator(g);
  const ComplexMatrix x = qlsi::random_ginibre(3, rng), y = qlsi::random_ginibre(3, rng);
  EXPECT_LE(qlsi::max_abs(adj.apply(x) - (x - x.trace() * sigma.matrix())), 1e-12);
  EXPECT_LE(std::abs((x.adjoint() * g.apply(y)).trace() - (adj.apply(x).adjoint() * y).trace()), 1e-9);
  EXPECT_LE(qlsi::max_abs(adj.adjoint().rep() - g.rep()), 1e-12);

  const auto u = qlsi::simple_generator(DensityMatrix::maximally_mixed(3));
  EXPECT_LE(qlsi::max_abs(qlsi::adjoint_generator(u).rep() - u.rep()), 1e-9);
}

TEST(Davies, Construction) {
  const auto half = DensityMatrix::maximally_mixed(2);
  EXPECT_THROW(qlsi::davies_qubit_generator(half, 0.0, 0.0), qlsi::ContractError);
  EXPECT_THROW(qlsi::davies_qubit_generator(half, -1.0, 0.0), qlsi::ParameterError);
  EXPECT_THROW(qlsi::davies_qubit_generator(DensityMatrix::maximally_mixed(3), 1.0, 0.0), qlsi::ParameterError);

  const auto d = qlsi::davies_qubit_generator(half, 1.0, 0.0);
  EXPECT_LE(qlsi::sigma_selfadjoint_residual(d.rep(), half), 1e-9);
  EXPECT_LE(qlsi::strong_reversibility_residual(d.rep(), half), 1e-9);

  qlsi::Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto sigma = qlsi::random_density(2, rng, 0.05);
    const auto g = qlsi::davies_qubit_generator(sigma, rng.uniform(0.1, 3.0), rng.uniform(0.0, 2.0));
    EXPECT_LE(qlsi::max_abs(g.apply_adjoint(sigma.matrix())), 1e-9);
    EXPECT_TRUE(g.reversible());
    EXPECT_TRUE(g.strongly_reversible());
  }
}

TEST(Davies, GapMatchesBruteForce) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const auto g = qlsi::davies_qubit_generator(sigma, 1.0, 0.3);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(g.rep());
  double gap = 1e300;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double re = es.eigenvalues()(i).real();
    if (re > 1e-9) gap = std::min(gap, re);
  }
  EXPECT_NEAR(g.spectral_gap(), gap, 1e-9);
}

TEST(Reversibility, ImplicationsAndNegativeControl) {
  qlsi::Rng rng(5);
  for (const auto& g : factories(rng)) {
    EXPECT_TRUE(g.strongly_reversible());
    EXPECT_TRUE(g.reversible());
    EXPECT_LE(qlsi::sigma_selfadjoint_residual(g.rep(), g.sigma()), 1e-8);
    EXPECT_LE(qlsi::modular_commutator_residual(g.rep(), g.sigma()), 1e-8);
  }
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const auto bad = qlsi::commutator_perturbation(qlsi::simple_generator(sigma), 1e-3);
  EXPECT_FALSE(qlsi::check_reversible(bad, sigma));
  EXPECT_FALSE(qlsi::check_strongly_reversible(bad, sigma));
  EXPECT_GT(qlsi::sigma_selfadjoint_residual(bad.rep(), sigma), 1e-8);
  EXPECT_THROW(bad.spectral_gap(), qlsi::ContractError);
}

TEST(Reversibility, SelfAdjointPropagator) {
  qlsi::Rng rng(6);
  for (const auto& g : factories(rng)) {
    qlsi::WeightedSpace w(g.sigma());
    const ComplexMatrix x = qlsi::random_ginibre(g.dim(), rng), y = qlsi::random_ginibre(g.dim(), rng);
    const auto a = qlsi::inner_sigma(w, x, g.evolve(0.4, y));
    const auto b = qlsi::inner_sigma(w, g.evolve(0.4, x), y);
    EXPECT_LE(std::abs(a - b), 1e-9);
  }
}

TEST(Evolution, SemigroupLawUnitalityAndCp) {
  qlsi::Rng rng(7);
  for (const auto& g : factories(rng)) {
    const ComplexMatrix x = qlsi::random_ginibre(g.dim(), rng);
    EXPECT_LE(qlsi::max_abs(g.evolve(0.3, g.evolve(0.5, x)) - g.evolve(0.8, x)), 1e-8);
    EXPECT_LE(qlsi::max_abs(g.evolve(1.1, qlsi::identity(g.dim())) - qlsi::identity(g.dim())), 1e-9);
    for (double t : {0.1, 1.0}) {
      const ComplexMatrix j = qlsi::choi_matrix(qlsi::Superoperator(g.dim(), g.propagator(t)));
      EXPECT_GE(qlsi::eig_hermitian(j).values(0), -1e-9);
    }
  }
}

TEST(TensorSum, FactorizedEvolutionAndGap) {
  qlsi::Rng rng(8);
  const auto s1 = qlsi::random_density(2, rng, 0.05), s2 = qlsi::random_density(2, rng, 0.05);
  const std::vector<LindbladGenerator> gens{qlsi::simple_generator(s1), qlsi::simple_generator(s2)};
  const auto k = qlsi::tensor_sum(gens);
  EXPECT_LE(qlsi::max_abs(k.sigma().matrix() - qlsi::kron(s1.matrix(), s2.matrix())), 1e-14);
  const ComplexMatrix x1 = qlsi::random_ginibre(2, rng), x2 = qlsi::random_ginibre(2, rng);
  const ComplexMatrix lhs = k.evolve(0.6, qlsi::kron(x1, x2));
  EXPECT_LE(qlsi::max_abs(lhs - qlsi::kron(gens[0].evolve(0.6, x1), gens[1].evolve(0.6, x2))), 1e-9);

  const std::vector<LindbladGenerator> one{gens[0]};
  EXPECT_LE(qlsi::max_abs(qlsi::tensor_sum(one).rep() - gens[0].rep()), 0.0);

  const auto d = qlsi::davies_qubit_generator(s1, 1.0, 0.3);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_NEAR(qlsi::tensor_power(gens[0], n).spectral_gap(), 1.0, 1e-9);
    EXPECT_NEAR(qlsi::tensor_power(d, n).spectral_gap(), d.spectral_gap(), 1e-9);
  }
  EXPECT_THROW(qlsi::tensor_power(gens[0], 7), qlsi::ResourceError);
}

TEST(Gap, MatchesSampledRayleighQuotient) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const auto g = qlsi::davies_qubit_generator(sigma, 1.0, 0.3);
  qlsi::WeightedSpace w(sigma);
  double best = 1e300;
  qlsi::Rng rng(9);
  for (int i = 0; i < 20000; ++i) {
    const ComplexMatrix x = qlsi::random_hermitian(2, rng).matrix();
    const double v = qlsi::variance_sigma(w, x);
    if (v > 1e-6) best = std::min(best, qlsi::inner_sigma(w, x, g.apply(x)).real() / v);
  }
  EXPECT_GE(best, g.spectral_gap() - 1e-9);
  EXPECT_LE(best, g.spectral_gap() * (1 + 1e-2));
}

TEST(Kraus, DepolarizingUnitWeights) {
  const auto g = qlsi::simple_generator(DensityMatrix::maximally_mixed(2));
  const auto dec = qlsi::choi_kraus_decomposition(g, 0.5);
  for (const auto& kp : dec.pairs) EXPECT_NEAR(kp.omega, 1.0, 1e-9);
}

TEST(Kraus, InvariantsOnRandomStates) {
  qlsi::Rng rng(10);
  for (int i = 0; i < 10; ++i) {
    const auto sigma = qlsi::random_density(2 + i % 2, rng, 0.05);
    const auto g = sigma.dim() == 2 && i % 4 == 0 ? qlsi::davies_qubit_generator(sigma, 1.0, 0.2) : qlsi::simple_generator(sigma);
    for (double t : {0.1, 0.7, 2.0}) {
      const auto dec = qlsi::choi_kraus_decomposition(g, t);
      const auto dg = qlsi::kraus_diagnostics(g, t, dec, 20, 1);
      EXPECT_LE(dg.weight_residual, 1e-8);
      EXPECT_LE(dg.completeness_residual, 1e-9);
      EXPECT_LE(dg.reconstruction_residual, 1e-8);
    }
  }
}

TEST(Kraus, RejectsNonStronglyReversible) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  // Heisenberg dual of rho -> tr(rho) sigma + c tr(A rho) X with tr(A sigma) = 0: sigma stays
  // stationary but off-diagonal inputs leak into the diagonal.
  const ComplexMatrix a = qlsi::testing::diag({0.75, -0.25});
  ComplexMatrix bx = ComplexMatrix::Zero(2, 2);
  bx(0, 1) = bx(1, 0) = 1.0;
  const ComplexMatrix phi = qlsi::vec(qlsi::identity(2)) * qlsi::vec(sigma.matrix()).adjoint() +
                            0.1 * qlsi::vec(a) * qlsi::vec(bx).adjoint();
  const ComplexMatrix rep = ComplexMatrix::Identity(4, 4) - phi;
  const auto bad = qlsi::custom_generator(sigma, rep);
  EXPECT_THROW(qlsi::choi_kraus_decomposition(bad, 0.7), qlsi::ContractError);
  EXPECT_THROW(qlsi::choi_kraus_decomposition(qlsi::simple_generator(sigma), 0.0), qlsi::ParameterError);
}

TEST(Contractivity, Examples) {
  const auto sigma = DensityMatrix::diagonal({0.25, 0.75});
  const std::vector<double> zero{0.0}, grid{0.1, 0.5, 2.0};
  EXPECT_NEAR(qlsi::contractivity_check(qlsi::simple_generator(sigma), 2.0, zero, 50, 1), 0.0, 1e-12);
  EXPECT_GE(qlsi::contractivity_check(qlsi::simple_generator(sigma), -1.0, grid, 1000, 2), -1e-9);
  EXPECT_GE(qlsi::contractivity_check(qlsi::davies_qubit_generator(sigma, 1.0, 0.3), 0.3, grid, 1000, 3), -1e-9);
}

}  // namespace
