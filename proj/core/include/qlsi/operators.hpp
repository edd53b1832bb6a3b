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

// Dense complex Hermitian linear algebra used by every other module.
//
// All logarithms in the library are natural logarithms (nats).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qlsi/random.hpp"

namespace qlsi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenClipTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr Eigen::Index kMaxDim = 64;

enum class Strictness { Semidefinite, Definite };

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are orthonormal eigenvectors
};

/// Self-adjoint operator. The input is symmetrized as (M + M^dagger)/2; inputs
/// whose anti-Hermitian part is not at rounding level are rejected.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Positive semidefinite or definite operator. Eigenvalues in [-1e-10, 0) are
/// clipped to zero on construction; the eigendecomposition is kept.
class PositiveOperator {
 public:
  explicit PositiveOperator(const HermitianOperator& h, Strictness strictness = Strictness::Semidefinite);
  explicit PositiveOperator(const ComplexMatrix& m, Strictness strictness = Strictness::Semidefinite)
      : PositiveOperator(HermitianOperator(m), strictness) {}

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  const EigenDecomposition& eig() const { return eig_; }
  double min_eigenvalue() const { return eig_.values(0); }
  bool definite() const { return eig_.values(0) >= kEigenClipTol; }
  Strictness strictness() const { return strictness_; }

 private:
  ComplexMatrix m_;
  EigenDecomposition eig_;
  Strictness strictness_;
};

/// Unit-trace positive operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(const PositiveOperator& p);
  explicit DensityMatrix(const ComplexMatrix& m, Strictness strictness = Strictness::Semidefinite)
      : DensityMatrix(PositiveOperator(m, strictness)) {}

  /// diag(values); values must sum to one.
  static DensityMatrix diagonal(std::span<const double> values);
  static DensityMatrix diagonal(std::initializer_list<double> values);
  static DensityMatrix maximally_mixed(Eigen::Index dim);

  const ComplexMatrix& matrix() const { return p_.matrix(); }
  const PositiveOperator& positive() const { return p_; }
  const EigenDecomposition& eig() const { return p_.eig(); }
  Eigen::Index dim() const { return p_.dim(); }
  bool definite() const { return p_.definite(); }

 private:
  PositiveOperator p_;
};

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
/// Throws DecompositionError when the solver does not converge.
EigenDecomposition eig_hermitian(const HermitianOperator& h);
/// Same for a raw matrix that is Hermitian up to rounding; only the lower
/// triangle is read.
EigenDecomposition eig_hermitian(const ComplexMatrix& h);

/// V diag(f(lambda)) V^dagger. Throws DomainError when f returns a non-finite
/// value at some eigenvalue.
HermitianOperator mat_fn(const PositiveOperator& a, const std::function<double(double)>& f);
HermitianOperator mat_fn(const HermitianOperator& a, const std::function<double(double)>& f);
ComplexMatrix apply_spectral(const EigenDecomposition& eig, const std::function<double(double)>& f);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::span<const ComplexMatrix> factors);
/// n-fold tensor power.
ComplexMatrix kron_power(const ComplexMatrix& a, int n);

/// Partial trace keeping the subsystems listed in \p keep (in their original order).
ComplexMatrix partial_trace(const ComplexMatrix& x, std::span<const Eigen::Index> dims,
                            std::span<const Eigen::Index> keep);

// Small helpers.
double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);
ComplexMatrix identity(Eigen::Index dim);

// Seeded random instances. The (seed, stream) pair fixes the output bit for bit.
ComplexMatrix random_ginibre(Eigen::Index dim, Rng& rng);
ComplexMatrix haar_unitary(Eigen::Index dim, Rng& rng);
HermitianOperator random_hermitian(Eigen::Index dim, Rng& rng);
HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed);
/// Spectrum: min_eig + (1 - dim*min_eig) * (uniform point of the simplex), conjugated by a Haar unitary.
DensityMatrix random_density(Eigen::Index dim, Rng& rng, double min_eig);
DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed, double min_eig);
/// Spectrum uniform in [min_eig, min_eig + 1), conjugated by a Haar unitary.
PositiveOperator random_positive_definite(Eigen::Index dim, Rng& rng, double min_eig);
PositiveOperator random_positive_definite(Eigen::Index dim, std::uint64_t seed, double min_eig);
/// Definite operator drawn from a mix of spectral profiles (flat, wide log-scale,
/// near-identity, rank-one dominated), conjugated by a Haar unitary.
ComplexMatrix random_definite_sample(Eigen::Index dim, Rng& rng);

}  // namespace qlsi
