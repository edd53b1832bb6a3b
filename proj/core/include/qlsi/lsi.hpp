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
#include <span>
#include <string>
#include <vector>

#include "qlsi/entropy.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/weighted_lp.hpp"

namespace qlsi {

struct LsiOptions {
  int starts = 32;
  int max_iter = 3000;
  std::uint64_t seed = 0;
  double ent_floor = 1e-6;  // candidates with smaller entropy are rejected
  int floor_samples = 512;  // random samples for the sampled floor
};

struct LSIEstimate {
  double p = 0.0;
  double value = 0.0;          // best ratio found: an upper bound on alpha_p
  ComplexMatrix witness;       // positive definite operator attaining value
  double sampled_floor = 0.0;  // best ratio over random samples
  double diagonal_value = 0.0; // best ratio over operators commuting with sigma
  int starts = 0;
  bool converged = false;
};

/// E_p(X) / Ent_p(X), or +infinity when Ent_p(X) < ent_floor.
double lsi_ratio(const WeightedSpace& w, const LindbladGenerator& gen, const ComplexMatrix& x, double p,
                 double ent_floor = 1e-6);

/// Multi-start simplex search for alpha_p over X = exp(H), trace H = 0.
/// p must lie in [0.05, 2]. Throws EstimationError if no start yields an
/// admissible candidate.
LSIEstimate lsi_constant_estimate(const WeightedSpace& w, const LindbladGenerator& gen, double p,
                                  const LsiOptions& opts = {});

/// Same search for any p in [-5, 5] \ {0}; used for the conjugate side p^ < 0.
LSIEstimate lsi_ratio_search(const WeightedSpace& w, const LindbladGenerator& gen, double p,
                             const LsiOptions& opts = {});

struct LsiVerifyResult {
  double min_ratio = 0.0;
  ComplexMatrix witness;
  bool pass = false;
  int samples = 0;  // samples that cleared the entropy floor
};

/// Samples positive definite X (mixed spectral profiles plus operators commuting
/// with sigma) and any extra witnesses; passes iff min E_p/Ent_p >= beta - 1e-9.
LsiVerifyResult lsi_verify(const WeightedSpace& w, const LindbladGenerator& gen, double p, double beta,
                           int sample_count, std::uint64_t seed, std::span<const ComplexMatrix> witnesses = {},
                           double ent_floor = 1e-6);

/// (1 - 2s) / ln(1/s - 1), with the limit 1/2 at s = 1/2.
double alpha2_simple_exact(double s_min);
double alpha2_simple_exact(const DensityMatrix& sigma);

/// lambda(L) * alpha2_simple_exact(s_min) for a reversible qubit generator or a
/// tensor sum of copies of one. Throws ParameterError otherwise.
double alpha2_gap_lower_bound(const WeightedSpace& w, const LindbladGenerator& gen);

struct SvMonotonicityResult {
  std::vector<double> p_grid;  // sorted ascending
  std::vector<double> values;  // E_p(I_{p,2}(X))
  double max_violation = 0.0;  // max over p < q of E_q - E_p
  bool pass = false;
};

/// Requires a strongly reversible generator (ContractError otherwise).
SvMonotonicityResult sv_monotonicity_check(const WeightedSpace& w, const LindbladGenerator& gen,
                                           const ComplexMatrix& x, std::span<const double> p_grid,
                                           double tol = 1e-8);

/// (1 / 4 alpha) ln((p - 1)/(q - 1)) for 1 <= q <= p or p <= q < 1.
/// Infinite for q = 1 < p.
double hc_time_threshold(double alpha, double p, double q);

/// min ||X||_q - ||Phi_t X||_p over samples, 1 <= q <= p.
double hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                int sample_count, std::uint64_t seed);
/// min ||Phi_t X||_p - ||X||_q over positive definite samples, p <= q < 1.
double reverse_hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                        int sample_count, std::uint64_t seed);
/// min <X, Phi_t Y>_sigma - ||X||_p ||Y||_q over positive definite pairs, p, q <= 1.
double reverse_holder_hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                               int sample_count, std::uint64_t seed);
/// True when (1 - p)(1 - q) >= exp(-4 alpha1 t).
bool reverse_holder_hc_condition(double alpha1, double p, double q, double t);

struct SweepCell {
  double p = 0.0;
  double q = 0.0;
  double t = 0.0;
  double margin = 0.0;
  bool exploratory = false;  // t below the threshold: reported, not asserted
};

struct SweepReport {
  std::vector<SweepCell> cells;
  std::size_t worst = 0;  // index of the smallest margin among asserted cells
  bool pass = true;
};

enum class HcDirection { Forward, Reverse };

/// Runs hc_check or reverse_hc_check on every admissible (p, q) pair of the
/// grids at t = t_factor * threshold(alpha, p, q).
SweepReport hc_sweep(const WeightedSpace& w, const LindbladGenerator& gen, HcDirection dir, double alpha,
                     std::span<const double> p_grid, std::span<const double> q_grid, double t_factor,
                     int sample_count, std::uint64_t seed, double tol = 1e-9);

/// min E_1(X)/Ent_1(X) for the tensor sum of simple generators on the given states.
/// Samples include product operators X_1 (x) ... (x) X_n.
double alpha1_tensor_check(std::span<const DensityMatrix> sigmas, int sample_count, std::uint64_t seed);

/// Right side minus left side of the two-block entropy inequality for
/// X = [[A, C], [C^dagger, B]] and reference diag(theta, 1 - theta) (x) rho.
/// Throws ParameterError if X is not positive semidefinite and ContractError
/// if the matrix of block norms is not.
double block_entropy_inequality_check(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                       double theta, const DensityMatrix& rho);

/// <C, KC> + <C^dagger, KC^dagger> - E_2(I_{2,2}C) - E_2(I_{2,2}C^dagger) with the
/// rho-weighted inner product; rho is the stationary state of K.
double lemma_2positive_check(const ComplexMatrix& c, const LindbladGenerator& k);

}  // namespace qlsi
