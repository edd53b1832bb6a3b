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
#include <limits>

#include "qlsi/operators.hpp"
#include "qlsi/random.hpp"

namespace qlsi {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Hoelder conjugate p/(p-1); +inf at p = 1 and 1 at p = +-inf.
double holder_conjugate(double p);

struct PExponent {
  double p;
  double hat_p;

  /// Throws ParameterError for p = 0 or NaN.
  static PExponent of(double p);
};

/// Faithful reference state with its spectral data cached. Immutable.
class WeightedSpace {
 public:
  /// Throws ParameterError if sigma is not definite.
  explicit WeightedSpace(const DensityMatrix& sigma);

  const DensityMatrix& sigma() const { return sigma_; }
  Eigen::Index dim() const { return sigma_.dim(); }
  /// Eigenvalues of sigma, ascending.
  const RealVector& spectrum() const { return sigma_.eig().values; }
  /// Columns are the eigenvectors of sigma.
  const ComplexMatrix& basis() const { return sigma_.eig().vectors; }
  double s_min() const { return spectrum()(0); }

  /// sigma^s.
  ComplexMatrix sigma_power(double s) const;
  ComplexMatrix to_eigenbasis(const ComplexMatrix& x) const;
  ComplexMatrix from_eigenbasis(const ComplexMatrix& x) const;
  const ComplexMatrix& sigma_sqrt() const { return sqrt_; }

 private:
  DensityMatrix sigma_;
  ComplexMatrix sqrt_;
};

/// sigma^{s/2} X sigma^{s/2}.
ComplexMatrix gamma_power(const WeightedSpace& w, const ComplexMatrix& x, double s);

/// tr[|Gamma^{1/p} X|^p]^{1/p} for finite p != 0. For p < 0, X must be Hermitian
/// positive definite. The result is the same for X and X^dagger bit for bit.
double weighted_norm(const WeightedSpace& w, const ComplexMatrix& x, double p);
double weighted_norm(const WeightedSpace& w, const ComplexMatrix& x, const PExponent& p);

/// |Y|^r computed from an eigendecomposition when Y is Hermitian and from an
/// SVD otherwise. r = 0 gives the projector onto the support of |Y|.
/// Negative r on a singular Y throws DomainError.
ComplexMatrix abs_power(const ComplexMatrix& y, double r);

/// I_{q,p}(X) = Gamma^{-1/q}(|Gamma^{1/p} X|^{p/q}). q may be +-inf.
ComplexMatrix power_operator(const WeightedSpace& w, const ComplexMatrix& x, double q, double p);

/// tr(sigma^{1/2} X^dagger sigma^{1/2} Y).
Complex inner_sigma(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y);
/// tr(sigma X^dagger Y).
Complex inner_one_sigma(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y);

/// <X,Y>_sigma - ||X||_p ||Y||_{p^}, p < 1, p != 0. Non-negative in theory.
double check_reverse_holder(const WeightedSpace& w, const PositiveOperator& x, const PositiveOperator& y,
                            double p);

/// ||X+Y||_p - ||X||_p - ||Y||_p, p < 1, p != 0. Non-negative in theory
/// (the p-norm is superadditive on positive operators below p = 1).
double check_reverse_minkowski(const WeightedSpace& w, const PositiveOperator& x, const PositiveOperator& y,
                               double p);

struct HolderVariationalResult {
  double norm = 0.0;                 // ||X||_p
  double max_sampled_ratio = 0.0;    // sup over samples of |<X,Y>| / ||Y||_{p^}
  double attainment_residual = 0.0;  // | ratio at I_{p^,p}(X) - ||X||_p |, 0 when X is not definite
  bool attainment_checked = false;
  bool pass = false;
};

/// Samples Y and checks |<X,Y>_sigma| <= ||X||_p ||Y||_{p^} for p in [1, inf);
/// for definite X also checks that Y = I_{p^,p}(X) attains equality.
HolderVariationalResult holder_variational_check(const WeightedSpace& w, const ComplexMatrix& x, double p,
                                                 int sample_count, std::uint64_t seed);

}  // namespace qlsi
