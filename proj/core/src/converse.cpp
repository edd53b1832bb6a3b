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

#include "qlsi/converse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/optimize.hpp"
#include "qlsi/parallel.hpp"

namespace qlsi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix hermitize(const ComplexMatrix& x) { return 0.5 * (x + x.adjoint()); }

double trace_re(const ComplexMatrix& a, const ComplexMatrix& b) { return (a * b).trace().real(); }

Eigen::Index checked_power_dim(Eigen::Index d, int n, const char* what) {
  Eigen::Index total = 1;
  for (int i = 0; i < n; ++i) {
    total *= d;
    if (total > kMaxDim) throw ResourceError(std::string(what) + ": dimension exceeds " + std::to_string(kMaxDim));
  }
  return total;
}

// Projectors onto the positive part and the numerical null space of rho^n - lambda sigma^n.
struct ThresholdSplit {
  ComplexMatrix positive;
  ComplexMatrix null;
};

ThresholdSplit split(const ComplexMatrix& rho_n, const ComplexMatrix& sigma_n, double lambda) {
  const EigenDecomposition e = eig_hermitian(hermitize(rho_n - lambda * sigma_n));
  const double tol = 1e-9 * std::max(1.0, lambda) / static_cast<double>(rho_n.rows());
  const Eigen::Index d = rho_n.rows();
  ThresholdSplit s{ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)};
  for (Eigen::Index k = 0; k < d; ++k) {
    const ComplexMatrix proj = e.vectors.col(k) * e.vectors.col(k).adjoint();
    if (e.values(k) > tol) {
      s.positive += proj;
    } else if (e.values(k) >= -tol) {
      s.null += proj;
    }
  }
  return s;
}

double entropy_of(const ComplexMatrix& rho) { return von_neumann_entropy(hermitize(rho)); }

}  // namespace

HypothesisInstance::HypothesisInstance(const DensityMatrix& r, const DensityMatrix& s, int copies)
    : rho(r), sigma(s), n(copies) {
  if (!rho.definite() || !sigma.definite()) throw ParameterError("HypothesisInstance: states must be faithful");
  if (rho.dim() != sigma.dim()) throw DimensionError("HypothesisInstance: dimension mismatch");
  if (n < 1) throw ParameterError("HypothesisInstance: n must be positive");
  checked_power_dim(rho.dim(), n, "HypothesisInstance");
  gamma = gamma_infinity(rho, sigma);
  rel_ent = relative_entropy(rho, sigma);
  gamma_below_one = gamma < 1.0 - 1e-10;
}

double gamma_infinity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!sigma.definite()) throw ParameterError("gamma_infinity: sigma must be positive definite");
  if (rho.dim() != sigma.dim()) throw DimensionError("gamma_infinity: dimension mismatch");
  const ComplexMatrix inv = apply_spectral(sigma.eig(), [](double v) { return 1.0 / v; });
  return operator_norm(rho.matrix() * inv);
}

double qht_bound_rhs(const HypothesisInstance& inst, double trace_rho_t) {
  if (!(trace_rho_t >= 0.0 && trace_rho_t <= 1.0 + 1e-12)) {
    throw ParameterError("qht_bound_rhs: tr(rho^n T) must lie in [0, 1]");
  }
  if (trace_rho_t == 0.0) return -kInf;
  const double tr = std::min(trace_rho_t, 1.0);
  const double n = inst.n;
  return -n * inst.rel_ent - 2.0 * std::sqrt(n * inst.gamma * std::log(1.0 / tr)) + std::log(tr);
}

double beta_lower_bound(const HypothesisInstance& inst, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("beta_lower_bound: epsilon must lie in (0, 1)");
  const double n = inst.n;
  return (1.0 - epsilon) *
         std::exp(-n * inst.rel_ent - 2.0 * std::sqrt(n * inst.gamma * std::log(1.0 / (1.0 - epsilon))));
}

double strong_converse_exponent_f(double gamma, double r, double rel_ent) {
  if (!(gamma > 0.0)) throw ParameterError("strong_converse_exponent_f: gamma must be positive");
  if (r < rel_ent) throw ParameterError("strong_converse_exponent_f: rate below the relative entropy");
  const double s = std::sqrt(gamma + (r - rel_ent)) - std::sqrt(gamma);
  return s * s;
}

QuantumTest::QuantumTest(const ComplexMatrix& t, const ComplexMatrix& rho_n, const ComplexMatrix& sigma_n) {
  if (t.rows() != rho_n.rows() || t.rows() != sigma_n.rows()) throw DimensionError("QuantumTest: dimension mismatch");
  const double top = std::max(1.0, max_abs(t));
  if (hermiticity_residual(t) > 1e-10 * top) throw ParameterError("QuantumTest: test is not Hermitian");
  const EigenDecomposition e = eig_hermitian(hermitize(t));
  if (e.values(0) < -1e-10 || e.values(e.values.size() - 1) > 1.0 + 1e-10) {
    throw ParameterError("QuantumTest: eigenvalues outside [0, 1]");
  }
  t_ = apply_spectral(e, [](double v) { return std::clamp(v, 0.0, 1.0); });
  alpha_ = 1.0 - trace_re(t_, rho_n);
  beta_ = trace_re(t_, sigma_n);
}

NeymanPearsonResult np_oracle(const DensityMatrix& rho, const DensityMatrix& sigma, int n, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("np_oracle: epsilon must lie in (0, 1)");
  if (rho.dim() != sigma.dim()) throw DimensionError("np_oracle: dimension mismatch");
  if (n < 1) throw ParameterError("np_oracle: n must be positive");
  checked_power_dim(rho.dim(), n, "np_oracle");
  const ComplexMatrix rho_n = kron_power(rho.matrix(), n);
  const ComplexMatrix sigma_n = kron_power(sigma.matrix(), n);

  // Type I error of the test P_{>0}; nondecreasing in lambda.
  auto alpha_strict = [&](double lambda) { return 1.0 - trace_re(split(rho_n, sigma_n, lambda).positive, rho_n); };

  double lo = 0.0;
  double hi = 1.0;
  while (alpha_strict(hi) < epsilon) {
    hi *= 2.0;
    if (hi > 1e300) throw DecompositionError("np_oracle: threshold search diverged");
  }
  while (hi - lo > 1e-10 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (alpha_strict(mid) < epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // At hi the strict test has alpha >= eps; mixing in the null space lowers it to eps.
  const double lambda = hi;
  const ThresholdSplit s = split(rho_n, sigma_n, lambda);
  const double pos = trace_re(s.positive, rho_n);
  const double nul = trace_re(s.null, rho_n);
  double c = 0.0;
  if (nul > 0.0) c = std::clamp((1.0 - epsilon - pos) / nul, 0.0, 1.0);
  QuantumTest test(s.positive + c * s.null, rho_n, sigma_n);
  return {test.beta(), lambda, c, test};
}

double np_grid_search(const DensityMatrix& rho, const DensityMatrix& sigma, double epsilon, int resolution) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw ParameterError("np_grid_search: qubit states required");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("np_grid_search: epsilon must lie in (0, 1)");
  if (resolution < 2) throw ParameterError("np_grid_search: resolution must be at least 2");
  // T = a P_v + b (I - P_v) with v = (cos th/2, e^{i ph} sin th/2); b fixed by tr(T rho) = 1 - eps.
  auto beta_of = [&](const std::vector<double>& x) {
    const double th = x[0], ph = x[1], a = x[2];
    if (a < 0.0 || a > 1.0) return kInf;
    ComplexVector v(2);
    v << std::cos(th / 2), std::polar(std::sin(th / 2), ph);
    const ComplexMatrix pv = v * v.adjoint();
    const ComplexMatrix pw = identity(2) - pv;
    const double rv = trace_re(pv, rho.matrix());
    const double rw = trace_re(pw, rho.matrix());
    if (rw < 1e-14) return kInf;
    const double b = (1.0 - epsilon - a * rv) / rw;
    if (b < 0.0 || b > 1.0) return kInf;
    return a * trace_re(pv, sigma.matrix()) + b * trace_re(pw, sigma.matrix());
  };
  const double pi = std::numbers::pi;
  double best = kInf;
  std::vector<double> arg{0.0, 0.0, 0.0};
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j < 2 * resolution; ++j) {
      for (int k = 0; k <= resolution; ++k) {
        const std::vector<double> x{pi * i / resolution, pi * j / resolution, static_cast<double>(k) / resolution};
        const double v = beta_of(x);
        if (v < best) {
          best = v;
          arg = x;
        }
      }
    }
  }
  if (!std::isfinite(best)) return best;
  SimplexOptions so;
  so.initial_step = 0.5 / resolution;
  so.max_iter = 4000;
  so.x_tol = 1e-12;
  so.f_tol = 1e-15;
  const SimplexResult r = nelder_mead(beta_of, arg, so);
  return std::min(best, r.value);
}

double qht_margin(const HypothesisInstance& inst, const ComplexMatrix& t) {
  const ComplexMatrix rho_n = kron_power(inst.rho.matrix(), inst.n);
  const ComplexMatrix sigma_n = kron_power(inst.sigma.matrix(), inst.n);
  const QuantumTest test(t, rho_n, sigma_n);
  const double tr_rho = std::clamp(1.0 - test.alpha(), 0.0, 1.0);
  if (tr_rho == 0.0) return kInf;
  return std::log(test.beta()) - qht_bound_rhs(inst, tr_rho);
}

ComplexMatrix random_test(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix u = haar_unitary(dim, rng);
  RealVector ev(dim);
  switch (rng.below(3)) {
    case 0: {  // projector of random nonzero rank
      const auto rank = static_cast<Eigen::Index>(1 + rng.below(static_cast<std::uint64_t>(dim)));
      for (Eigen::Index i = 0; i < dim; ++i) ev(i) = i < rank ? 1.0 : 0.0;
      break;
    }
    case 1:
      for (Eigen::Index i = 0; i < dim; ++i) ev(i) = rng.uniform();
      break;
    default:  // mostly accepting, a few small weights
      for (Eigen::Index i = 0; i < dim; ++i) ev(i) = rng.uniform() < 0.7 ? 1.0 - 0.01 * rng.uniform() : 0.05 * rng.uniform();
      break;
  }
  return u * ev.cast<Complex>().asDiagonal() * u.adjoint();
}

double qht_random_test_check(const HypothesisInstance& inst, int sample_count, std::uint64_t seed) {
  const Eigen::Index dim = checked_power_dim(inst.rho.dim(), inst.n, "qht_random_test_check");
  const ComplexMatrix rho_n = kron_power(inst.rho.matrix(), inst.n);
  const ComplexMatrix sigma_n = kron_power(inst.sigma.matrix(), inst.n);
  const Rng base(seed);
  const auto vals = parallel_map<double>(static_cast<std::size_t>(std::max(sample_count, 0)), [&](std::size_t k) {
    Rng rng = base.substream(k);
    if (k % 4 == 3) {
      // Threshold tests sit on the optimal trade-off curve.
      const ThresholdSplit s = split(rho_n, sigma_n, std::exp(rng.uniform(-3.0, 3.0)));
      return qht_margin(inst, s.positive + rng.uniform() * s.null);
    }
    return qht_margin(inst, random_test(dim, rng));
  });
  double m = kInf;
  for (double v : vals) m = std::min(m, v);
  return m;
}

double alt_check(const PositiveOperator& a, const PositiveOperator& b, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("alt_check: r must lie in [0, 1]");
  if (a.dim() != b.dim()) throw DimensionError("alt_check: dimension mismatch");
  auto pw = [](double s) {
    return [s](double v) { return v > 0.0 ? std::pow(v, s) : (s == 0.0 ? 1.0 : 0.0); };
  };
  const ComplexMatrix bh = apply_spectral(b.eig(), pw(0.5));
  const EigenDecomposition inner = eig_hermitian(hermitize(bh * a.matrix() * bh));
  double lhs = 0.0;
  for (Eigen::Index i = 0; i < inner.values.size(); ++i) {
    const double v = std::max(inner.values(i), 0.0);
    lhs += v > 0.0 ? std::pow(v, r) : (r == 0.0 ? 1.0 : 0.0);
  }
  const ComplexMatrix br = apply_spectral(b.eig(), pw(r / 2.0));
  const ComplexMatrix ar = apply_spectral(a.eig(), pw(r));
  return lhs - trace_re(br * ar, br);
}

double mutual_information(const std::vector<ComplexMatrix>& outputs, const std::vector<double>& distribution) {
  if (outputs.empty() || outputs.size() != distribution.size()) {
    throw DimensionError("mutual_information: outputs and distribution must match");
  }
  const Eigen::Index d = outputs.front().rows();
  if (d > kMaxDim) throw ResourceError("mutual_information: dimension exceeds " + std::to_string(kMaxDim));
  double total = 0.0;
  for (double p : distribution) {
    if (!(p >= 0.0)) throw ParameterError("mutual_information: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ParameterError("mutual_information: distribution must sum to one");
  ComplexMatrix avg = ComplexMatrix::Zero(d, d);
  double cond = 0.0;
  for (std::size_t x = 0; x < outputs.size(); ++x) {
    if (outputs[x].rows() != d || outputs[x].cols() != d) throw DimensionError("mutual_information: dimension mismatch");
    if (distribution[x] == 0.0) continue;
    avg += distribution[x] * outputs[x];
    cond += distribution[x] * entropy_of(outputs[x]);
  }
  return entropy_of(avg) - cond;
}

double CQCode::rate() const {
  const int n = length();
  return n > 0 ? std::log(static_cast<double>(messages())) / n : 0.0;
}

ComplexMatrix codeword_state(const CQCode& code, std::size_t m) {
  if (m >= code.codewords.size()) throw ParameterError("codeword_state: message index out of range");
  const auto& word = code.codewords[m];
  checked_power_dim(code.output_dim(), static_cast<int>(word.size()), "codeword_state");
  std::vector<ComplexMatrix> parts;
  parts.reserve(word.size());
  for (int x : word) {
    if (x < 0 || static_cast<std::size_t>(x) >= code.outputs.size()) {
      throw ParameterError("codeword_state: letter outside the alphabet");
    }
    parts.push_back(code.outputs[static_cast<std::size_t>(x)]);
  }
  return kron(parts);
}

double max_error_probability(const CQCode& code) {
  if (code.povm.size() != code.messages()) throw DimensionError("max_error_probability: POVM size mismatch");
  double p = 0.0;
  for (std::size_t m = 0; m < code.messages(); ++m) {
    p = std::max(p, 1.0 - trace_re(code.povm[m], codeword_state(code, m)));
  }
  return std::clamp(p, 0.0, 1.0);
}

CQCode pgm_decoder(CQCode code) {
  if (code.codewords.empty()) throw ParameterError("pgm_decoder: no messages");
  std::vector<ComplexMatrix> states;
  for (std::size_t m = 0; m < code.messages(); ++m) states.push_back(codeword_state(code, m));
  const Eigen::Index dim = states.front().rows();
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (const auto& st : states) s += st;
  const EigenDecomposition e = eig_hermitian(hermitize(s));
  const double cut = 1e-12 * std::max(1.0, e.values(dim - 1));
  const ComplexMatrix s_inv_half = apply_spectral(e, [cut](double v) { return v > cut ? 1.0 / std::sqrt(v) : 0.0; });
  code.povm.clear();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& st : states) {
    code.povm.push_back(hermitize(s_inv_half * st * s_inv_half));
    sum += code.povm.back();
  }
  const ComplexMatrix kernel = apply_spectral(e, [cut](double v) { return v > cut ? 0.0 : 1.0; });
  code.povm.front() += kernel;
  code.completeness_residual = max_abs(sum + kernel - identity(dim));
  code.p_max = max_error_probability(code);
  return code;
}

double code_mutual_information(const CQCode& code) {
  std::vector<ComplexMatrix> states;
  for (std::size_t m = 0; m < code.messages(); ++m) states.push_back(codeword_state(code, m));
  const std::vector<double> uniform(states.size(), 1.0 / static_cast<double>(states.size()));
  return mutual_information(states, uniform);
}

double cq_converse_check(const CQCode& code) {
  const double eps = max_error_probability(code);
  if (eps >= 1.0) return kInf;
  const double d = static_cast<double>(code.output_dim());
  const double n = code.length();
  const double l = std::log(1.0 / (1.0 - eps));
  const double bound = std::log(static_cast<double>(code.messages())) - 2.0 * std::sqrt(d * n * l) - l;
  return code_mutual_information(code) - bound;
}

CQCode random_binary_qubit_code(int n, std::size_t messages, Rng& rng) {
  if (n < 1 || messages < 1) throw ParameterError("random_binary_qubit_code: n and messages must be positive");
  CQCode code;
  for (int x = 0; x < 2; ++x) code.outputs.push_back(random_density(2, rng, 0.02).matrix());
  for (std::size_t m = 0; m < messages; ++m) {
    std::vector<int> word(static_cast<std::size_t>(n));
    for (auto& l : word) l = static_cast<int>(rng.below(2));
    code.codewords.push_back(std::move(word));
  }
  return code;
}

}  // namespace qlsi
