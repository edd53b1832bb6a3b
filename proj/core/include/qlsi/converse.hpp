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
#include <vector>

#include "qlsi/operators.hpp"

namespace qlsi {

/// Pair of faithful states and a copy count for asymmetric hypothesis testing.
struct HypothesisInstance {
  DensityMatrix rho;
  DensityMatrix sigma;
  int n = 1;
  double gamma = 0.0;    // ||rho sigma^{-1}||_inf
  double rel_ent = 0.0;  // D(rho || sigma), nats
  bool gamma_below_one = false;  // flagged for inspection, never rejected

  /// Throws ParameterError unless both states are definite, n >= 1 and dim^n <= 64.
  HypothesisInstance(const DensityMatrix& rho, const DensityMatrix& sigma, int n);
};

/// Largest singular value of rho sigma^{-1}.
double gamma_infinity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Lower bound on ln tr(sigma^n T) given tr(rho^n T). -infinity when trace_rho_t = 0.
double qht_bound_rhs(const HypothesisInstance& inst, double trace_rho_t);

/// (1 - eps) exp(-n D - 2 sqrt(n gamma ln(1/(1 - eps)))).
double beta_lower_bound(const HypothesisInstance& inst, double epsilon);

/// (sqrt(gamma + r - D) - sqrt(gamma))^2; ParameterError if r < D.
double strong_converse_exponent_f(double gamma, double r, double rel_ent);

/// Test operator 0 <= T <= I with its two error probabilities.
class QuantumTest {
 public:
  /// Eigenvalues within 1e-10 of [0, 1] are clipped; ParameterError otherwise.
  QuantumTest(const ComplexMatrix& t, const ComplexMatrix& rho_n, const ComplexMatrix& sigma_n);
  const ComplexMatrix& matrix() const { return t_; }
  double alpha() const { return alpha_; }  // tr((I - T) rho^n)
  double beta() const { return beta_; }    // tr(T sigma^n)

 private:
  ComplexMatrix t_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

struct NeymanPearsonResult {
  double beta = 0.0;
  double lambda = 0.0;  // threshold of rho^n - lambda sigma^n
  double c = 0.0;       // weight of the null-space projector
  QuantumTest test;
};

/// Exact minimal type II error subject to type I error epsilon.
NeymanPearsonResult np_oracle(const DensityMatrix& rho, const DensityMatrix& sigma, int n, double epsilon);

/// Minimal type II error over single-copy qubit tests found by a dense grid over
/// (eigenbasis angles, one eigenvalue) with the other eigenvalue fixed by the
/// type I constraint, followed by local refinement.
double np_grid_search(const DensityMatrix& rho, const DensityMatrix& sigma, double epsilon, int resolution = 48);

/// ln tr(sigma^n T) minus qht_bound_rhs at tr(rho^n T).
double qht_margin(const HypothesisInstance& inst, const ComplexMatrix& t);

/// Random test operator on dimension dim: projector, spectral or threshold-like profiles.
ComplexMatrix random_test(Eigen::Index dim, Rng& rng);

/// min qht_margin over random tests.
double qht_random_test_check(const HypothesisInstance& inst, int sample_count, std::uint64_t seed);

/// tr(B^{1/2} A B^{1/2})^r - tr(B^{r/2} A^r B^{r/2}) for r in [0, 1].
double alt_check(const PositiveOperator& a, const PositiveOperator& b, double r);

/// H(sum_x P(x) rho_x) - sum_x P(x) H(rho_x).
double mutual_information(const std::vector<ComplexMatrix>& outputs, const std::vector<double>& distribution);

struct CQCode {
  std::vector<ComplexMatrix> outputs;       // rho_x for each input letter x
  std::vector<std::vector<int>> codewords;  // x^n(m)
  std::vector<ComplexMatrix> povm;          // Pi_m
  double p_max = 0.0;
  double completeness_residual = 0.0;

  std::size_t messages() const { return codewords.size(); }
  int length() const { return codewords.empty() ? 0 : static_cast<int>(codewords.front().size()); }
  Eigen::Index output_dim() const { return outputs.empty() ? 0 : outputs.front().rows(); }
  double rate() const;
};

/// rho_{x^n(m)} as a tensor product. ResourceError above dimension 64.
ComplexMatrix codeword_state(const CQCode& code, std::size_t m);

/// Pretty-good measurement S^{-1/2} rho_m S^{-1/2}; the projector onto ker S is
/// added to the first element. Fills povm, p_max and completeness_residual.
CQCode pgm_decoder(CQCode code);

/// p_max = max_m 1 - tr(Pi_m rho_{x^n(m)}), recomputed from the POVM.
double max_error_probability(const CQCode& code);

/// I(X^n; B^n) under uniform messages.
double code_mutual_information(const CQCode& code);

/// I(X^n; B^n) - [ln|M| - 2 sqrt(d n ln(1/(1 - eps))) - ln(1/(1 - eps))] with eps = p_max.
/// +infinity when p_max = 1 (the bound is vacuous).
double cq_converse_check(const CQCode& code);

/// Binary-input qubit code with random definite outputs and random codewords.
CQCode random_binary_qubit_code(int n, std::size_t messages, Rng& rng);

}  // namespace qlsi
