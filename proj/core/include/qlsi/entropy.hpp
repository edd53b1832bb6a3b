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

#include <cstdint>

#include "qlsi/operators.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/weighted_lp.hpp"

namespace qlsi {

struct EntropyReport {
  double value = 0.0;          // nats
  double p = 0.0;
  double normalization = 0.0;  // ||X||_{p,sigma}^p
};

/// Ent_{p,sigma}(X) for positive X. With Y = (Gamma^{1/p} X)^p:
/// tr[Y log Y] - tr[Y log sigma] - tr(Y) log tr(Y).
/// p < 0 requires X definite; for p > 0 zero eigenvalues contribute 0 log 0 = 0.
EntropyReport ent_p(const WeightedSpace& w, const ComplexMatrix& x, double p);

double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const ComplexMatrix& rho);

/// D(rho||sigma) = tr rho log rho - tr rho log sigma. sigma must be definite.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// D_{1-p}(rho||sigma) = -(1/p) ln tr(sigma^p rho^{1-p}) for p in (0, 1).
double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double p);

/// d/dp ||X||_{p,sigma} from the entropy of the power operator I_{p,p}:
/// (1/p^2) ||X||_p^{1-p} (Ent_p(I_{p,p} X) + Ent_p(I_{p,p} X^dagger)) / 2.
double norm_derivative_p(const WeightedSpace& w, const ComplexMatrix& x, double p);

/// E_{p,L}(X) = (p p^/4) <I_{p^,p}(X), L(X)>_sigma, and at p = 1
/// (1/4) tr[Gamma(L X)(log Gamma(X) - log sigma)]. L must be reversible with
/// respect to the state of w. Throws DomainError if the imaginary part of the
/// pairing exceeds 1e-9 (relative to its scale).
double dirichlet_form(const WeightedSpace& w, const LindbladGenerator& gen, const ComplexMatrix& x, double p);

/// ||X||_{2,sigma}^2 - <X, I>_sigma^2.
double variance_sigma(const WeightedSpace& w, const ComplexMatrix& x);

struct ConvexityResult {
  double min_margin = 0.0;
  bool pass = false;
};

/// (Ent_1(X) + Ent_1(Y))/2 - Ent_1((X+Y)/2) on the given pair and on
/// sample_count random definite pairs.
ConvexityResult ent1_convexity_check(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y,
                                     int sample_count, std::uint64_t seed);

}  // namespace qlsi
