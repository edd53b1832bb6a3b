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

#include "qlsi/lsi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qlsi/errors.hpp"
#include "qlsi/optimize.hpp"
#include "qlsi/parallel.hpp"

namespace qlsi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Trace-free Hermitian matrix from d^2 - 1 real parameters.
ComplexMatrix hermitian_from_params(const std::vector<double>& v, Eigen::Index d) {
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  std::size_t k = 0;
  double tr = 0.0;
  for (Eigen::Index i = 0; i + 1 < d; ++i) {
    h(i, i) = v[k];
    tr += v[k++];
  }
  h(d - 1, d - 1) = -tr;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      h(i, j) = Complex(v[k], v[k + 1]);
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  }
  return h;
}

std::vector<double> params_from_hermitian(const ComplexMatrix& h) {
  const Eigen::Index d = h.rows();
  const double mean = h.trace().real() / static_cast<double>(d);
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(d * d - 1));
  for (Eigen::Index i = 0; i + 1 < d; ++i) v.push_back(h(i, i).real() - mean);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      v.push_back(h(i, j).real());
      v.push_back(h(i, j).imag());
    }
  }
  return v;
}

// Largest log-condition number admitted by the search; beyond it the
// entropy and form lose all relative precision.
constexpr double kMaxLogSpread = 25.0;

// exp(H) scaled to unit top eigenvalue; empty when the spectrum of H is too wide.
ComplexMatrix exp_hermitian(const ComplexMatrix& h) {
  const EigenDecomposition e = eig_hermitian(h);
  const double top = e.values(e.values.size() - 1);
  if (top - e.values(0) > kMaxLogSpread) return {};
  return apply_spectral(e, [top](double x) { return std::exp(x - top); });
}

// exp of a diagonal (in the eigenbasis of sigma) trace-free operator.
ComplexMatrix diagonal_exp(const WeightedSpace& w, const std::vector<double>& v) {
  const Eigen::Index d = w.dim();
  RealVector h(d);
  double tr = 0.0;
  for (Eigen::Index i = 0; i + 1 < d; ++i) {
    h(i) = v[static_cast<std::size_t>(i)];
    tr += h(i);
  }
  h(d - 1) = -tr;
  const double top = h.maxCoeff();
  if (top - h.minCoeff() > kMaxLogSpread) return {};
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = std::exp(h(i) - top);
  return w.from_eigenbasis(m);
}

ComplexMatrix sigma_diagonal_sample(const WeightedSpace& w, Rng& rng) {
  const Eigen::Index d = w.dim();
  const double spread = std::exp(rng.uniform(std::log(0.05), std::log(4.0)));
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = std::exp(spread * rng.normal());
  return w.from_eigenbasis(m);
}

// Positive definite verification sample number k.
ComplexMatrix definite_sample(const WeightedSpace& w, Rng& rng, std::size_t k) {
  if (k % 4 == 3) return sigma_diagonal_sample(w, rng);
  return random_definite_sample(w.dim(), rng);
}

ComplexMatrix hermitize(const ComplexMatrix& x) { return 0.5 * (x + x.adjoint()); }

struct MinResult {
  double value = kInf;
  std::size_t index = 0;
};

// Order-independent min over per-index values.
MinResult min_of(const std::vector<double>& vals) {
  MinResult r;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < r.value) {
      r.value = vals[i];
      r.index = i;
    }
  }
  return r;
}

void require_state(const WeightedSpace& w, const LindbladGenerator& gen, const char* what) {
  if (gen.dim() != w.dim() || max_abs(gen.sigma().matrix() - w.sigma().matrix()) > 1e-10) {
    throw ContractError(std::string(what) + ": generator state differs from the reference state");
  }
}

void check_p(double p, double lo, double hi, const char* what) {
  if (!(p >= lo && p <= hi) || p == 0.0) {
    throw ParameterError(std::string(what) + ": p = " + std::to_string(p) + " outside [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "]");
  }
}

struct StartOutcome {
  double value = kInf;
  ComplexMatrix witness;
  bool converged = false;
};

StartOutcome refine(const std::function<double(const std::vector<double>&)>& f,
                    const std::function<ComplexMatrix(const std::vector<double>&)>& build, std::vector<double> x0,
                    int max_iter) {
  SimplexOptions so;
  so.max_iter = max_iter;
  so.initial_step = 0.3;
  SimplexResult r = nelder_mead(f, x0, so);
  // Restarts shake the simplex loose from degenerate shapes.
  for (int restart = 0; restart < 3 && std::isfinite(r.value); ++restart) {
    so.initial_step = 0.05;
    SimplexResult again = nelder_mead(f, r.x, so);
    const bool small_gain = !(again.value < r.value - 1e-12 * std::abs(r.value));
    if (again.value <= r.value) r = again;
    if (small_gain) break;
  }
  StartOutcome out;
  out.value = r.value;
  out.converged = r.converged;
  if (std::isfinite(r.value)) out.witness = build(r.x);
  return out;
}

LSIEstimate search(const WeightedSpace& w, const LindbladGenerator& gen, double p, const LsiOptions& opts) {
  require_state(w, gen, "lsi estimate");
  if (!gen.reversible()) throw ContractError("lsi estimate: generator is not reversible");
  if (opts.starts < 1) throw ParameterError("lsi estimate: starts must be positive");
  const Eigen::Index d = w.dim();
  const Rng base(opts.seed);

  auto ratio_of = [&](const ComplexMatrix& x) {
    if (x.size() == 0) return kInf;
    try {
      return lsi_ratio(w, gen, x, p, opts.ent_floor);
    } catch (const DomainError&) {
      return kInf;
    }
  };

  // Full search over X = exp(H).
  const auto full = parallel_map<StartOutcome>(static_cast<std::size_t>(opts.starts), [&](std::size_t k) {
    Rng rng = base.substream(k);
    const double scale = std::exp(rng.uniform(std::log(0.2), std::log(3.0)));
    const ComplexMatrix h = scale * random_hermitian(d, rng).matrix();
    auto build = [&](const std::vector<double>& v) { return exp_hermitian(hermitian_from_params(v, d)); };
    auto f = [&](const std::vector<double>& v) { return ratio_of(build(v)); };
    return refine(f, build, params_from_hermitian(h), opts.max_iter);
  });

  // Search restricted to operators commuting with sigma.
  const std::size_t diag_starts = static_cast<std::size_t>(std::min(opts.starts, 8));
  const auto diag = parallel_map<StartOutcome>(diag_starts, [&](std::size_t k) {
    Rng rng = base.substream(1000003 + k);
    const double scale = std::exp(rng.uniform(std::log(0.2), std::log(3.0)));
    std::vector<double> x0(static_cast<std::size_t>(d - 1));
    for (auto& v : x0) v = scale * rng.normal();
    auto build = [&](const std::vector<double>& v) { return diagonal_exp(w, v); };
    auto f = [&](const std::vector<double>& v) { return ratio_of(build(v)); };
    return refine(f, build, x0, opts.max_iter);
  });

  // Sampled floor.
  std::vector<ComplexMatrix> samples(static_cast<std::size_t>(std::max(opts.floor_samples, 0)));
  const auto floor_vals = parallel_map<double>(samples.size(), [&](std::size_t k) {
    Rng rng = base.substream(2000003 + k);
    samples[k] = definite_sample(w, rng, k);
    return ratio_of(samples[k]);
  });

  LSIEstimate est;
  est.p = p;
  est.starts = opts.starts;
  est.value = kInf;
  for (const auto& s : full) {
    if (s.value < est.value) {
      est.value = s.value;
      est.witness = s.witness;
      est.converged = s.converged;
    }
  }
  est.diagonal_value = kInf;
  for (const auto& s : diag) {
    if (s.value < est.diagonal_value) {
      est.diagonal_value = s.value;
      if (s.value < est.value) {
        est.value = s.value;
        est.witness = s.witness;
        est.converged = s.converged;
      }
    }
  }
  const MinResult fl = min_of(floor_vals);
  est.sampled_floor = fl.value;
  if (fl.value < est.value) {
    est.value = fl.value;
    est.witness = samples[fl.index];
    est.converged = false;
  }
  if (!std::isfinite(est.value)) {
    throw EstimationError("lsi estimate: every candidate fell below the entropy floor " +
                          std::to_string(opts.ent_floor) + " (starts " + std::to_string(opts.starts) + ", samples " +
                          std::to_string(samples.size()) + ")");
  }
  return est;
}

// E_p(I_{p,2}(X)). For p != 1 the conjugate power is taken directly as
// I_{p^,2}(X) = I_{p^,p}(I_{p,2}(X)) instead of composing two powers.
double sv_form(const WeightedSpace& w, const LindbladGenerator& gen, const ComplexMatrix& x, double p) {
  const ComplexMatrix y = power_operator(w, x, p, 2.0);
  if (p == 1.0) return dirichlet_form(w, gen, y, 1.0);
  const double hat = holder_conjugate(p);
  const Complex z = (p * hat / 4.0) * inner_sigma(w, power_operator(w, x, hat, 2.0), gen.apply(y));
  return z.real();
}

}  // namespace

double lsi_ratio(const WeightedSpace& w, const LindbladGenerator& gen, const ComplexMatrix& x, double p,
                 double ent_floor) {
  const double ent = ent_p(w, x, p).value;
  if (!(ent >= ent_floor) || !std::isfinite(ent)) return kInf;
  const double r = dirichlet_form(w, gen, x, p) / ent;
  return std::isfinite(r) ? r : kInf;
}

LSIEstimate lsi_constant_estimate(const WeightedSpace& w, const LindbladGenerator& gen, double p,
                                  const LsiOptions& opts) {
  check_p(p, 0.05, 2.0, "lsi_constant_estimate");
  return search(w, gen, p, opts);
}

LSIEstimate lsi_ratio_search(const WeightedSpace& w, const LindbladGenerator& gen, double p,
                             const LsiOptions& opts) {
  check_p(p, -5.0, 5.0, "lsi_ratio_search");
  return search(w, gen, p, opts);
}

LsiVerifyResult lsi_verify(const WeightedSpace& w, const LindbladGenerator& gen, double p, double beta,
                           int sample_count, std::uint64_t seed, std::span<const ComplexMatrix> witnesses,
                           double ent_floor) {
  require_state(w, gen, "lsi_verify");
  const Rng base(seed);
  const std::size_t n = static_cast<std::size_t>(std::max(sample_count, 0));
  std::vector<ComplexMatrix> xs(n + witnesses.size());
  for (std::size_t i = 0; i < witnesses.size(); ++i) xs[n + i] = witnesses[i];
  const auto vals = parallel_map<double>(xs.size(), [&](std::size_t k) {
    if (k < n) {
      Rng rng = base.substream(k);
      xs[k] = definite_sample(w, rng, k);
    }
    return lsi_ratio(w, gen, xs[k], p, ent_floor);
  });
  LsiVerifyResult r;
  for (double v : vals) r.samples += std::isfinite(v) ? 1 : 0;
  const MinResult m = min_of(vals);
  r.min_ratio = m.value;
  if (std::isfinite(m.value)) r.witness = xs[m.index];
  r.pass = !(m.value < beta - 1e-9);
  return r;
}

double alpha2_simple_exact(double s_min) {
  if (!(s_min > 0.0 && s_min <= 0.5)) throw ParameterError("alpha2_simple_exact: s_min must lie in (0, 1/2]");
  const double x = 1.0 - 2.0 * s_min;
  if (x < 1e-4) {
    // x / (2 atanh x) = 1 / (2 (1 + x^2/3 + x^4/5 + ...))
    const double x2 = x * x;
    return 0.5 / (1.0 + x2 / 3.0 + x2 * x2 / 5.0);
  }
  return x / (2.0 * std::atanh(x));
}

double alpha2_simple_exact(const DensityMatrix& sigma) {
  if (!sigma.definite()) throw ParameterError("alpha2_simple_exact: sigma must be positive definite");
  return alpha2_simple_exact(sigma.eig().values(0));
}

double alpha2_gap_lower_bound(const WeightedSpace& w, const LindbladGenerator& gen) {
  require_state(w, gen, "alpha2_gap_lower_bound");
  if (gen.dim() == 2) return gen.spectral_gap() * alpha2_simple_exact(w.s_min());
  if (gen.kind() == GeneratorKind::TensorSum && !gen.factors().empty()) {
    const LindbladGenerator& f0 = gen.factors().front();
    for (const auto& f : gen.factors()) {
      if (f.dim() != 2 || max_abs(f.rep() - f0.rep()) > 1e-12 ||
          max_abs(f.sigma().matrix() - f0.sigma().matrix()) > 1e-12) {
        throw ParameterError("alpha2_gap_lower_bound: tensor factors must be identical qubit generators");
      }
    }
    return f0.spectral_gap() * alpha2_simple_exact(f0.sigma());
  }
  throw ParameterError("alpha2_gap_lower_bound: requires a qubit generator (dimension " + std::to_string(gen.dim()) +
                       ")");
}

SvMonotonicityResult sv_monotonicity_check(const WeightedSpace& w, const LindbladGenerator& gen,
                                           const ComplexMatrix& x, std::span<const double> p_grid, double tol) {
  require_state(w, gen, "sv_monotonicity_check");
  if (!gen.strongly_reversible()) {
    throw ContractError("sv_monotonicity_check: generator is not strongly reversible (residual " +
                        std::to_string(gen.strong_reversibility_residual()) + ")");
  }
  SvMonotonicityResult r;
  r.p_grid.assign(p_grid.begin(), p_grid.end());
  std::sort(r.p_grid.begin(), r.p_grid.end());
  for (double p : r.p_grid) {
    if (!(p > 0.0 && p <= 2.0)) throw ParameterError("sv_monotonicity_check: grid must lie in (0, 2]");
    r.values.push_back(sv_form(w, gen, x, p));
  }
  double scale = 1.0;
  for (double v : r.values) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    for (std::size_t j = i + 1; j < r.values.size(); ++j) {
      r.max_violation = std::max(r.max_violation, r.values[j] - r.values[i]);
    }
  }
  r.pass = r.max_violation <= tol * scale;
  return r;
}

double hc_time_threshold(double alpha, double p, double q) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("hc_time_threshold: alpha must be positive");
  if (p == q) return 0.0;
  const bool forward = q >= 1.0 && p > q;
  const bool reverse = p < q && q < 1.0;
  if (!forward && !reverse) {
    throw ParameterError("hc_time_threshold: need 1 <= q <= p or p <= q < 1 (p = " + std::to_string(p) +
                         ", q = " + std::to_string(q) + ")");
  }
  if (forward && q == 1.0) return kInf;
  const double ratio = (p - 1.0) / (q - 1.0);
  if (!(ratio >= 1.0)) throw ParameterError("hc_time_threshold: logarithm argument below one");
  return std::log(ratio) / (4.0 * alpha);
}

double hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                int sample_count, std::uint64_t seed) {
  require_state(w, gen, "hc_check");
  if (!(q >= 1.0 && p >= q)) throw ParameterError("hc_check: need 1 <= q <= p");
  const Rng base(seed);
  const auto vals = parallel_map<double>(static_cast<std::size_t>(std::max(sample_count, 0)), [&](std::size_t k) {
    Rng rng = base.substream(k);
    ComplexMatrix x;
    switch (k % 3) {
      case 0: x = definite_sample(w, rng, k / 3); break;
      case 1: x = random_ginibre(w.dim(), rng); break;
      default: x = random_hermitian(w.dim(), rng).matrix(); break;
    }
    return weighted_norm(w, x, q) - weighted_norm(w, gen.evolve(t, x), p);
  });
  return min_of(vals).value;
}

double reverse_hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                        int sample_count, std::uint64_t seed) {
  require_state(w, gen, "reverse_hc_check");
  if (!(p <= q && q < 1.0) || p == 0.0 || q == 0.0) throw ParameterError("reverse_hc_check: need p <= q < 1, p, q != 0");
  const Rng base(seed);
  const auto vals = parallel_map<double>(static_cast<std::size_t>(std::max(sample_count, 0)), [&](std::size_t k) {
    Rng rng = base.substream(k);
    const ComplexMatrix x = definite_sample(w, rng, k);
    return weighted_norm(w, hermitize(gen.evolve(t, x)), p) - weighted_norm(w, x, q);
  });
  return min_of(vals).value;
}

bool reverse_holder_hc_condition(double alpha1, double p, double q, double t) {
  return (1.0 - p) * (1.0 - q) >= std::exp(-4.0 * alpha1 * t);
}

double reverse_holder_hc_check(const WeightedSpace& w, const LindbladGenerator& gen, double p, double q, double t,
                               int sample_count, std::uint64_t seed) {
  require_state(w, gen, "reverse_holder_hc_check");
  if (!(p <= 1.0 && q <= 1.0) || p == 0.0 || q == 0.0) {
    throw ParameterError("reverse_holder_hc_check: need p, q <= 1, nonzero");
  }
  const Rng base(seed);
  const auto vals = parallel_map<double>(static_cast<std::size_t>(std::max(sample_count, 0)), [&](std::size_t k) {
    Rng rng = base.substream(k);
    const ComplexMatrix x = definite_sample(w, rng, k);
    const ComplexMatrix y = definite_sample(w, rng, k + 1);
    const double lhs = inner_sigma(w, x, gen.evolve(t, y)).real();
    return lhs - weighted_norm(w, x, p) * weighted_norm(w, y, q);
  });
  return min_of(vals).value;
}

SweepReport hc_sweep(const WeightedSpace& w, const LindbladGenerator& gen, HcDirection dir, double alpha,
                     std::span<const double> p_grid, std::span<const double> q_grid, double t_factor,
                     int sample_count, std::uint64_t seed, double tol) {
  SweepReport rep;
  double worst = kInf;
  std::uint64_t cell_id = 0;
  for (double p : p_grid) {
    for (double q : q_grid) {
      const bool ok = dir == HcDirection::Forward ? (q > 1.0 && p >= q) || (q == 1.0 && p == 1.0)
                                                  : (p <= q && q < 1.0 && p != 0.0 && q != 0.0);
      if (!ok) continue;
      SweepCell c;
      c.p = p;
      c.q = q;
      c.t = t_factor * hc_time_threshold(alpha, p, q);
      c.exploratory = t_factor < 1.0;
      const std::uint64_t s = mix64(seed ^ mix64(++cell_id));
      c.margin = dir == HcDirection::Forward ? hc_check(w, gen, p, q, c.t, sample_count, s)
                                             : reverse_hc_check(w, gen, p, q, c.t, sample_count, s);
      if (!c.exploratory && c.margin < worst) {
        worst = c.margin;
        rep.worst = rep.cells.size();
      }
      if (!c.exploratory && c.margin < -tol) rep.pass = false;
      rep.cells.push_back(c);
    }
  }
  return rep;
}

double alpha1_tensor_check(std::span<const DensityMatrix> sigmas, int sample_count, std::uint64_t seed) {
  if (sigmas.empty()) throw ParameterError("alpha1_tensor_check: no states");
  std::vector<LindbladGenerator> gens;
  for (const auto& s : sigmas) gens.push_back(simple_generator(s));
  const LindbladGenerator k = gens.size() == 1 ? gens.front() : tensor_sum(gens);
  const WeightedSpace w(k.sigma());
  const Rng base(seed);
  const auto vals = parallel_map<double>(static_cast<std::size_t>(std::max(sample_count, 0)), [&](std::size_t i) {
    Rng rng = base.substream(i);
    ComplexMatrix x;
    if (i % 4 == 3 && sigmas.size() > 1) {
      std::vector<ComplexMatrix> parts;
      for (const auto& s : sigmas) parts.push_back(random_definite_sample(s.dim(), rng));
      x = kron(parts);
    } else {
      x = definite_sample(w, rng, i);
    }
    return lsi_ratio(w, k, x, 1.0);
  });
  return min_of(vals).value;
}

double block_entropy_inequality_check(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                                       double theta, const DensityMatrix& rho) {
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("block_entropy_inequality_check: theta must lie in (0, 1)");
  const Eigen::Index m = rho.dim();
  if (a.rows() != m || a.cols() != m || b.rows() != m || b.cols() != m || c.rows() != m || c.cols() != m) {
    throw DimensionError("block_entropy_inequality_check: block dimension mismatch");
  }
  ComplexMatrix x(2 * m, 2 * m);
  x << a, c, c.adjoint(), b;
  const double top = std::max(1.0, max_abs(x));
  if (hermiticity_residual(x) > 1e-10 * top || eig_hermitian(hermitize(x)).values(0) < -1e-10 * top) {
    throw ParameterError("block_entropy_inequality_check: block matrix is not positive semidefinite");
  }
  x = hermitize(x);
  const DensityMatrix sigma = DensityMatrix::diagonal({theta, 1.0 - theta});
  const WeightedSpace ws(sigma);
  const WeightedSpace wr(rho);
  const WeightedSpace wx(DensityMatrix(kron(sigma.matrix(), rho.matrix()), Strictness::Definite));

  ComplexMatrix mm(2, 2);
  mm(0, 0) = weighted_norm(wr, a, 2.0);
  mm(0, 1) = weighted_norm(wr, c, 2.0);
  mm(1, 0) = weighted_norm(wr, c.adjoint(), 2.0);
  mm(1, 1) = weighted_norm(wr, b, 2.0);
  const double mtop = std::max(1.0, max_abs(mm));
  if (eig_hermitian(hermitize(mm)).values(0) < -1e-10 * mtop || std::abs(mm(0, 1) - mm(1, 0)) > 1e-10 * mtop) {
    throw ContractError("block_entropy_inequality_check: matrix of block norms is not positive semidefinite");
  }
  const double cross = std::sqrt(theta * (1.0 - theta));
  const double rhs = ent_p(ws, hermitize(mm), 2.0).value + theta * ent_p(wr, hermitize(a), 2.0).value +
                     (1.0 - theta) * ent_p(wr, hermitize(b), 2.0).value +
                     cross * ent_p(wr, power_operator(wr, c, 2.0, 2.0), 2.0).value +
                     cross * ent_p(wr, power_operator(wr, c.adjoint(), 2.0, 2.0), 2.0).value;
  return rhs - ent_p(wx, x, 2.0).value;
}

double lemma_2positive_check(const ComplexMatrix& c, const LindbladGenerator& k) {
  if (!k.reversible()) {
    throw ContractError("lemma_2positive_check: generator is not reversible (residual " +
                        std::to_string(k.reversibility_residual()) + ")");
  }
  if (c.rows() != k.dim() || c.cols() != k.dim()) throw DimensionError("lemma_2positive_check: dimension mismatch");
  const WeightedSpace w(k.sigma());
  const ComplexMatrix cd = c.adjoint();
  const double quad = inner_sigma(w, c, k.apply(c)).real() + inner_sigma(w, cd, k.apply(cd)).real();
  const double e = dirichlet_form(w, k, power_operator(w, c, 2.0, 2.0), 2.0) +
                   dirichlet_form(w, k, power_operator(w, cd, 2.0, 2.0), 2.0);
  return quad - e;
}

}  // namespace qlsi
