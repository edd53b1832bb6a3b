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

// Superoperators act on column-major vectorized operators: vec(A X B) = (B^T kron A) vec(X).
// Generators are in the Heisenberg picture with Phi_t = exp(-t L), L(I) = 0.

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "qlsi/operators.hpp"
#include "qlsi/weighted_lp.hpp"

namespace qlsi {

ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim);

/// Representation of X -> A X B.
ComplexMatrix sandwich_rep(const ComplexMatrix& a, const ComplexMatrix& b);

class Superoperator {
 public:
  Superoperator(Eigen::Index dim, ComplexMatrix rep);

  Eigen::Index dim() const { return dim_; }
  const ComplexMatrix& rep() const { return rep_; }
  ComplexMatrix apply(const ComplexMatrix& x) const;
  /// Hilbert-Schmidt adjoint: tr(X^dagger T(Y)) = tr(T*(X)^dagger Y).
  Superoperator adjoint() const { return Superoperator(dim_, rep_.adjoint()); }

 private:
  Eigen::Index dim_;
  ComplexMatrix rep_;
};

enum class GeneratorKind { Simple, Davies, TensorSum, Custom };
std::string_view to_string(GeneratorKind kind);

inline constexpr double kKernelTol = 1e-8;
inline constexpr double kBorderlineTol = 1e-6;
inline constexpr double kReversibleTol = 1e-8;

/// Primitive Lindblad generator with stationary state sigma. Immutable; copies
/// share lazily computed spectral data.
class LindbladGenerator {
 public:
  /// Validates L(I) = 0, L*(sigma) = 0 (both to 1e-9) and a one-dimensional
  /// kernel. Throws ContractError otherwise, including for borderline kernels
  /// (smallest nonzero singular value in (1e-8, 1e-6]).
  LindbladGenerator(GeneratorKind kind, const DensityMatrix& sigma, ComplexMatrix rep,
                    std::vector<LindbladGenerator> factors = {});

  GeneratorKind kind() const;
  Eigen::Index dim() const;
  const DensityMatrix& sigma() const;
  const ComplexMatrix& rep() const;
  /// Tensor factors for kind TensorSum, empty otherwise.
  const std::vector<LindbladGenerator>& factors() const;

  ComplexMatrix apply(const ComplexMatrix& x) const;
  ComplexMatrix apply_adjoint(const ComplexMatrix& x) const;

  bool reversible() const;
  bool strongly_reversible() const;
  /// max |Gamma L Gamma^{-1} - L*| and max |G1 L - L^dagger G1| with G1 the Gram matrix of <.,.>_{1,sigma}.
  double reversibility_residual() const;
  double strong_reversibility_residual() const;

  /// Throws ContractError unless reversible.
  double spectral_gap() const;

  /// exp(-t L) as a d^2 x d^2 matrix.
  ComplexMatrix propagator(double t) const;
  /// Phi_t(X).
  ComplexMatrix evolve(double t, const ComplexMatrix& x) const;

 private:
  struct Spectral;
  struct Data;
  const Spectral& spectral() const;

  std::shared_ptr<Data> data_;
};

LindbladGenerator simple_generator(const DensityMatrix& sigma);
/// Qubit generator with jumps between the eigenvectors of sigma. gamma10 is the
/// rate of the jump |1><0| (eigenvalues ascending); the reverse rate is fixed by
/// detailed balance. dephase is the rate of the sigma-diagonal Z jump.
LindbladGenerator davies_qubit_generator(const DensityMatrix& sigma, double gamma10, double dephase);
/// K_n = sum_i I..I L_i I..I on the tensor product, product dimension at most 64.
LindbladGenerator tensor_sum(std::span<const LindbladGenerator> gens);
LindbladGenerator tensor_power(const LindbladGenerator& gen, int n);
LindbladGenerator custom_generator(const DensityMatrix& sigma, const ComplexMatrix& rep);
/// L + i eps [sigma, .]; keeps L(I) = 0 and L*(sigma) = 0 but breaks detailed balance for eps != 0
/// when sigma is not a multiple of the identity.
LindbladGenerator commutator_perturbation(const LindbladGenerator& gen, double eps);

/// Hilbert-Schmidt adjoint L*. Not unital, so returned as a plain superoperator.
Superoperator adjoint_generator(const LindbladGenerator& gen);

bool check_reversible(const LindbladGenerator& gen, const DensityMatrix& sigma);
bool check_strongly_reversible(const LindbladGenerator& gen, const DensityMatrix& sigma);
double reversibility_residual(const ComplexMatrix& rep, const DensityMatrix& sigma);
double strong_reversibility_residual(const ComplexMatrix& rep, const DensityMatrix& sigma);
/// max |G T - T^dagger G| for G the Gram matrix of <.,.>_sigma.
double sigma_selfadjoint_residual(const ComplexMatrix& rep, const DensityMatrix& sigma);
/// max |D T - T D| for D the representation of X -> sigma X sigma^{-1}.
double modular_commutator_residual(const ComplexMatrix& rep, const DensityMatrix& sigma);

double spectral_gap(const LindbladGenerator& gen);
ComplexMatrix evolve(const LindbladGenerator& gen, double t, const ComplexMatrix& x);

/// J = sum_ij Phi(|i><j|) kron |i><j|.
ComplexMatrix choi_matrix(const Superoperator& phi);

struct KrausPair {
  ComplexMatrix r;
  double omega;
};

struct KrausDecomposition {
  std::vector<KrausPair> pairs;
  double commutator_residual = 0.0;  // max |[J, sigma^{-1} kron sigma^T]|
};

/// Kraus operators of Phi_t with sigma R_k = omega_k R_k sigma. Throws
/// ContractError if the Choi matrix does not commute with sigma^{-1} kron sigma^T
/// to 1e-6.
KrausDecomposition choi_kraus_decomposition(const LindbladGenerator& gen, double t);

struct KrausDiagnostics {
  double weight_residual = 0.0;        // max_k |sigma R_k - omega_k R_k sigma|
  double completeness_residual = 0.0;  // |sum R_k R_k^dagger - I|
  double reconstruction_residual = 0.0;
};
KrausDiagnostics kraus_diagnostics(const LindbladGenerator& gen, double t, const KrausDecomposition& dec,
                                   int sample_count, std::uint64_t seed);

/// For p >= 1: min ||X||_p - ||Phi_t X||_p; for p < 1: min ||Phi_t X||_p - ||X||_p,
/// over random definite X and every t in the grid.
double contractivity_check(const LindbladGenerator& gen, double p, std::span<const double> t_grid, int sample_count,
                           std::uint64_t seed);

}  // namespace qlsi
