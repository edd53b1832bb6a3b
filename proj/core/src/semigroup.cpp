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

#include "qlsi/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qlsi/errors.hpp"

namespace qlsi {
namespace {

ComplexMatrix sigma_pow(const DensityMatrix& sigma, double s) {
  return apply_spectral(sigma.eig(), [s](double x) { return std::pow(x, s); });
}

double rep_scale(const ComplexMatrix& rep) { return std::max(1.0, max_abs(rep)); }

void require_definite(const DensityMatrix& sigma, const char* what) {
  if (!sigma.definite()) throw ParameterError(std::string(what) + ": sigma must be positive definite");
}

void require_matching(const ComplexMatrix& rep, const DensityMatrix& sigma, const char* what) {
  const Eigen::Index d2 = sigma.dim() * sigma.dim();
  if (rep.rows() != d2 || rep.cols() != d2) {
    throw DimensionError(std::string(what) + ": representation must be " + std::to_string(d2) + "x" +
                         std::to_string(d2));
  }
}

}  // namespace

ComplexVector vec(const ComplexMatrix& x) { return Eigen::Map<const ComplexVector>(x.data(), x.size()); }

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) throw DimensionError("unvec: length is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix sandwich_rep(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(b.transpose(), a); }

Superoperator::Superoperator(Eigen::Index dim, ComplexMatrix rep) : dim_(dim), rep_(std::move(rep)) {
  if (rep_.rows() != dim * dim || rep_.cols() != dim * dim) {
    throw DimensionError("Superoperator: representation must be dim^2 x dim^2");
  }
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw DimensionError("Superoperator::apply: operator dimension mismatch");
  return unvec(rep_ * vec(x), dim_);
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Simple: return "simple";
    case GeneratorKind::Davies: return "davies";
    case GeneratorKind::TensorSum: return "tensor_sum";
    case GeneratorKind::Custom: return "custom";
  }
  return "unknown";
}

double reversibility_residual(const ComplexMatrix& rep, const DensityMatrix& sigma) {
  require_matching(rep, sigma, "reversibility_residual");
  const ComplexMatrix g = sandwich_rep(sigma_pow(sigma, 0.5), sigma_pow(sigma, 0.5));
  const ComplexMatrix ginv = sandwich_rep(sigma_pow(sigma, -0.5), sigma_pow(sigma, -0.5));
  return max_abs(g * rep * ginv - rep.adjoint()) / rep_scale(rep);
}

double strong_reversibility_residual(const ComplexMatrix& rep, const DensityMatrix& sigma) {
  require_matching(rep, sigma, "strong_reversibility_residual");
  const ComplexMatrix g1 = kron(sigma.matrix().transpose(), identity(sigma.dim()));
  return max_abs(g1 * rep - rep.adjoint() * g1) / rep_scale(rep);
}

double sigma_selfadjoint_residual(const ComplexMatrix& rep, const DensityMatrix& sigma) {
  require_matching(rep, sigma, "sigma_selfadjoint_residual");
  const ComplexMatrix g = sandwich_rep(sigma_pow(sigma, 0.5), sigma_pow(sigma, 0.5));
  return max_abs(g * rep - rep.adjoint() * g) / rep_scale(rep);
}

double modular_commutator_residual(const ComplexMatrix& rep, const DensityMatrix& sigma) {
  require_matching(rep, sigma, "modular_commutator_residual");
  const ComplexMatrix delta = sandwich_rep(sigma.matrix(), sigma_pow(sigma, -1.0));
  return max_abs(delta * rep - rep * delta) / rep_scale(rep);
}

struct LindbladGenerator::Spectral {
  double rev_residual = 0.0;
  double strong_residual = 0.0;
  bool reversible = false;
  bool strongly_reversible = false;
  // Reversible case: S = G^{1/2} L G^{-1/2} is Hermitian, S = V diag(lambda) V^dagger.
  RealVector lambda;
  ComplexMatrix v;
  ComplexMatrix sigma_quarter;
  ComplexMatrix sigma_neg_quarter;
  double gap = 0.0;
};

struct LindbladGenerator::Data {
  GeneratorKind kind;
  DensityMatrix sigma;
  ComplexMatrix rep;
  std::vector<LindbladGenerator> factors;
  std::once_flag once;
  std::unique_ptr<Spectral> spectral;

  Data(GeneratorKind k, const DensityMatrix& s, ComplexMatrix r, std::vector<LindbladGenerator> f)
      : kind(k), sigma(s), rep(std::move(r)), factors(std::move(f)) {}
};

GeneratorKind LindbladGenerator::kind() const { return data_->kind; }
Eigen::Index LindbladGenerator::dim() const { return data_->sigma.dim(); }
const DensityMatrix& LindbladGenerator::sigma() const { return data_->sigma; }
const ComplexMatrix& LindbladGenerator::rep() const { return data_->rep; }
const std::vector<LindbladGenerator>& LindbladGenerator::factors() const { return data_->factors; }

LindbladGenerator::LindbladGenerator(GeneratorKind kind, const DensityMatrix& sigma, ComplexMatrix rep,
                                     std::vector<LindbladGenerator> factors)
    : data_(std::make_shared<Data>(kind, sigma, std::move(rep), std::move(factors))) {
  const Eigen::Index d = sigma.dim();
  require_definite(sigma, "LindbladGenerator");
  require_matching(data_->rep, sigma, "LindbladGenerator");
  if (!data_->rep.allFinite()) throw DomainError("LindbladGenerator: representation has non-finite entries");
  const double scale = rep_scale(data_->rep);
  const double unital = max_abs(data_->rep * vec(identity(d)));
  if (unital > 1e-9 * scale) {
    throw ContractError("LindbladGenerator: L(I) != 0 (residual " + std::to_string(unital) + ")");
  }
  const double stationary = max_abs(data_->rep.adjoint() * vec(sigma.matrix()));
  if (stationary > 1e-9 * scale) {
    throw ContractError("LindbladGenerator: L*(sigma) != 0 (residual " + std::to_string(stationary) + ")");
  }
  Eigen::BDCSVD<ComplexMatrix> svd(data_->rep);
  const RealVector& sv = svd.singularValues();
  int kernel = 0;
  double smallest_nonzero = kInfinity;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= kKernelTol) {
      ++kernel;
    } else {
      smallest_nonzero = std::min(smallest_nonzero, sv(i));
    }
  }
  if (kernel != 1) {
    throw ContractError("LindbladGenerator: not primitive (kernel dimension " + std::to_string(kernel) + ")");
  }
  if (smallest_nonzero <= kBorderlineTol) {
    throw ContractError("LindbladGenerator: primitivity is numerically borderline (singular value " +
                        std::to_string(smallest_nonzero) + ")");
  }
}

const LindbladGenerator::Spectral& LindbladGenerator::spectral() const {
  std::call_once(data_->once, [this] {
    auto s = std::make_unique<Spectral>();
    const DensityMatrix& sigma = data_->sigma;
    const ComplexMatrix& rep = data_->rep;
    s->rev_residual = qlsi::reversibility_residual(rep, sigma);
    s->strong_residual = qlsi::strong_reversibility_residual(rep, sigma);
    s->reversible = s->rev_residual <= kReversibleTol;
    s->strongly_reversible = s->strong_residual <= kReversibleTol;
    if (s->reversible) {
      s->sigma_quarter = sigma_pow(sigma, 0.25);
      s->sigma_neg_quarter = sigma_pow(sigma, -0.25);
      const ComplexMatrix gh = sandwich_rep(s->sigma_quarter, s->sigma_quarter);
      const ComplexMatrix ghinv = sandwich_rep(s->sigma_neg_quarter, s->sigma_neg_quarter);
      ComplexMatrix sym = gh * rep * ghinv;
      sym = 0.5 * (sym + sym.adjoint()).eval();
      EigenDecomposition e = eig_hermitian(sym);
      s->lambda = std::move(e.values);
      s->v = std::move(e.vectors);

      // Restrict to the complement of vec(sigma^{1/2}), the image of vec(I).
      const ComplexVector u = vec(sigma_pow(sigma, 0.5)).normalized();
      Eigen::HouseholderQR<ComplexMatrix> qr(u);
      const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(u.size(), u.size());
      const ComplexMatrix qc = q.rightCols(u.size() - 1);
      ComplexMatrix restricted = qc.adjoint() * sym * qc;
      restricted = 0.5 * (restricted + restricted.adjoint()).eval();
      s->gap = restricted.size() ? eig_hermitian(restricted).values(0) : 0.0;
    }
    data_->spectral = std::move(s);
  });
  return *data_->spectral;
}

ComplexMatrix LindbladGenerator::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) throw DimensionError("LindbladGenerator::apply: dimension mismatch");
  return unvec(data_->rep * vec(x), dim());
}

ComplexMatrix LindbladGenerator::apply_adjoint(const ComplexMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim()) {
    throw DimensionError("LindbladGenerator::apply_adjoint: dimension mismatch");
  }
  return unvec(data_->rep.adjoint() * vec(x), dim());
}

bool LindbladGenerator::reversible() const { return spectral().reversible; }
bool LindbladGenerator::strongly_reversible() const { return spectral().strongly_reversible; }
double LindbladGenerator::reversibility_residual() const { return spectral().rev_residual; }
double LindbladGenerator::strong_reversibility_residual() const { return spectral().strong_residual; }

double LindbladGenerator::spectral_gap() const {
  const Spectral& s = spectral();
  if (!s.reversible) {
    throw ContractError("spectral_gap: generator is not reversible (residual " + std::to_string(s.rev_residual) + ")");
  }
  return s.gap;
}

ComplexMatrix LindbladGenerator::propagator(double t) const {
  if (!(t >= 0.0)) throw ParameterError("propagator: t must be nonnegative");
  const Eigen::Index n = data_->rep.rows();
  if (t == 0.0) return ComplexMatrix::Identity(n, n);
  const Spectral& s = spectral();
  if (s.reversible) {
    const ComplexMatrix gh = sandwich_rep(s.sigma_quarter, s.sigma_quarter);
    const ComplexMatrix ghinv = sandwich_rep(s.sigma_neg_quarter, s.sigma_neg_quarter);
    const Eigen::VectorXcd decay = (-t * s.lambda.array()).exp().matrix().cast<Complex>();
    return ghinv * (s.v * decay.asDiagonal() * s.v.adjoint()) * gh;
  }
  const ComplexMatrix a = -t * data_->rep;
  return a.exp();
}

ComplexMatrix LindbladGenerator::evolve(double t, const ComplexMatrix& x) const {
  if (!(t >= 0.0)) throw ParameterError("evolve: t must be nonnegative");
  if (x.rows() != dim() || x.cols() != dim()) throw DimensionError("evolve: dimension mismatch");
  if (t == 0.0) return x;
  const Spectral& s = spectral();
  if (s.reversible) {
    const ComplexMatrix y = s.sigma_quarter * x * s.sigma_quarter;
    const Eigen::VectorXcd decay = (-t * s.lambda.array()).exp().matrix().cast<Complex>();
    const ComplexVector w = s.v * (decay.asDiagonal() * (s.v.adjoint() * vec(y)));
    return s.sigma_neg_quarter * unvec(w, dim()) * s.sigma_neg_quarter;
  }
  return unvec(propagator(t) * vec(x), dim());
}

LindbladGenerator simple_generator(const DensityMatrix& sigma) {
  require_definite(sigma, "simple_generator");
  const Eigen::Index d = sigma.dim();
  const ComplexVector vi = vec(identity(d));
  const ComplexVector vs = vec(sigma.matrix().transpose());
  ComplexMatrix rep = ComplexMatrix::Identity(d * d, d * d) - vi * vs.transpose();
  return LindbladGenerator(GeneratorKind::Simple, sigma, std::move(rep));
}

namespace {

ComplexMatrix dissipator_rep(const ComplexMatrix& l, double rate) {
  const Eigen::Index d = l.rows();
  const ComplexMatrix ldl = l.adjoint() * l;
  const ComplexMatrix id = identity(d);
  return rate * (0.5 * (sandwich_rep(ldl, id) + sandwich_rep(id, ldl)) - sandwich_rep(l.adjoint(), l));
}

}  // namespace

LindbladGenerator davies_qubit_generator(const DensityMatrix& sigma, double gamma10, double dephase) {
  if (sigma.dim() != 2) throw ParameterError("davies_qubit_generator: sigma must be a qubit state");
  require_definite(sigma, "davies_qubit_generator");
  if (!(gamma10 >= 0.0) || !(dephase >= 0.0) || !std::isfinite(gamma10) || !std::isfinite(dephase)) {
    throw ParameterError("davies_qubit_generator: rates must be finite and nonnegative");
  }
  const RealVector& s = sigma.eig().values;
  const ComplexMatrix& u = sigma.eig().vectors;
  const double gamma01 = gamma10 * s(0) / s(1);
  const ComplexMatrix lower = u.col(0) * u.col(1).adjoint();  // |0><1|
  const ComplexMatrix raise = u.col(1) * u.col(0).adjoint();  // |1><0|
  const ComplexMatrix z = u.col(0) * u.col(0).adjoint() - u.col(1) * u.col(1).adjoint();
  ComplexMatrix rep = dissipator_rep(lower, gamma01) + dissipator_rep(raise, gamma10) + dissipator_rep(z, dephase);
  return LindbladGenerator(GeneratorKind::Davies, sigma, std::move(rep));
}

LindbladGenerator tensor_sum(std::span<const LindbladGenerator> gens) {
  if (gens.empty()) throw ParameterError("tensor_sum: empty generator list");
  Eigen::Index total = 1;
  std::vector<Eigen::Index> dims;
  for (const auto& g : gens) {
    total *= g.dim();
    dims.push_back(g.dim());
    if (total > kMaxDim) {
      throw ResourceError("tensor_sum: product dimension exceeds " + std::to_string(kMaxDim));
    }
  }
  const auto n = dims.size();
  const Eigen::Index big = total * total;

  // Generator on the Kronecker product of the factor vec spaces.
  ComplexMatrix kron_rep = ComplexMatrix::Zero(big, big);
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::Index pre = 1, post = 1;
    for (std::size_t j = 0; j < i; ++j) pre *= dims[j] * dims[j];
    for (std::size_t j = i + 1; j < n; ++j) post *= dims[j] * dims[j];
    kron_rep += kron(kron(identity(pre), gens[i].rep()), identity(post));
  }

  // perm[a]: position in the Kronecker vec space of column-major index a.
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(big));
  std::vector<Eigen::Index> rd(n), cd(n);
  for (Eigen::Index a = 0; a < big; ++a) {
    Eigen::Index r = a % total, c = a / total;
    for (std::size_t s = n; s-- > 0;) {
      rd[s] = r % dims[s];
      r /= dims[s];
      cd[s] = c % dims[s];
      c /= dims[s];
    }
    Eigen::Index idx = 0;
    for (std::size_t s = 0; s < n; ++s) idx = idx * dims[s] * dims[s] + rd[s] + dims[s] * cd[s];
    perm[static_cast<std::size_t>(a)] = idx;
  }
  ComplexMatrix rep(big, big);
  for (Eigen::Index b = 0; b < big; ++b) {
    for (Eigen::Index a = 0; a < big; ++a) {
      rep(a, b) = kron_rep(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    }
  }

  ComplexMatrix sigma = gens[0].sigma().matrix();
  for (std::size_t i = 1; i < n; ++i) sigma = kron(sigma, gens[i].sigma().matrix());
  return LindbladGenerator(GeneratorKind::TensorSum, DensityMatrix(sigma, Strictness::Definite), std::move(rep),
                           std::vector<LindbladGenerator>(gens.begin(), gens.end()));
}

LindbladGenerator tensor_power(const LindbladGenerator& gen, int n) {
  if (n < 1) throw ParameterError("tensor_power: n must be positive");
  std::vector<LindbladGenerator> gens(static_cast<std::size_t>(n), gen);
  return tensor_sum(gens);
}

LindbladGenerator custom_generator(const DensityMatrix& sigma, const ComplexMatrix& rep) {
  return LindbladGenerator(GeneratorKind::Custom, sigma, rep);
}

LindbladGenerator commutator_perturbation(const LindbladGenerator& gen, double eps) {
  const ComplexMatrix& s = gen.sigma().matrix();
  const ComplexMatrix id = identity(gen.dim());
  const ComplexMatrix comm = sandwich_rep(s, id) - sandwich_rep(id, s);
  return custom_generator(gen.sigma(), gen.rep() + Complex(0.0, eps) * comm);
}

Superoperator adjoint_generator(const LindbladGenerator& gen) { return Superoperator(gen.dim(), gen.rep().adjoint()); }

bool check_reversible(const LindbladGenerator& gen, const DensityMatrix& sigma) {
  return reversibility_residual(gen.rep(), sigma) <= kReversibleTol;
}

bool check_strongly_reversible(const LindbladGenerator& gen, const DensityMatrix& sigma) {
  return strong_reversibility_residual(gen.rep(), sigma) <= kReversibleTol;
}

double spectral_gap(const LindbladGenerator& gen) { return gen.spectral_gap(); }

ComplexMatrix evolve(const LindbladGenerator& gen, double t, const ComplexMatrix& x) { return gen.evolve(t, x); }

ComplexMatrix choi_matrix(const Superoperator& phi) {
  const Eigen::Index d = phi.dim();
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) {
      ComplexMatrix e = ComplexMatrix::Zero(d, d);
      e(i, k) = 1.0;
      const ComplexMatrix out = phi.apply(e);
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) j(a * d + i, b * d + k) = out(a, b);
      }
    }
  }
  return j;
}

KrausDecomposition choi_kraus_decomposition(const LindbladGenerator& gen, double t) {
  if (!(t > 0.0)) throw ParameterError("choi_kraus_decomposition: t must be positive");
  const Eigen::Index d = gen.dim();
  const DensityMatrix& sigma = gen.sigma();
  ComplexMatrix j = choi_matrix(Superoperator(d, gen.propagator(t)));
  j = 0.5 * (j + j.adjoint()).eval();
  const ComplexMatrix k = kron(sigma_pow(sigma, -1.0), sigma.matrix().transpose());

  KrausDecomposition out;
  out.commutator_residual = max_abs(j * k - k * j);
  if (out.commutator_residual > 1e-6) {
    throw ContractError("choi_kraus_decomposition: Choi matrix does not commute with sigma^{-1} x sigma^T (residual " +
                        std::to_string(out.commutator_residual) + "); generator is not strongly reversible");
  }

  // Eigenvectors of K are u_a kron conj(u_b) with eigenvalue s_b / s_a.
  const RealVector& s = sigma.eig().values;
  const ComplexMatrix& u = sigma.eig().vectors;
  struct Mode {
    double ratio;
    Eigen::Index a, b;
  };
  std::vector<Mode> modes;
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) modes.push_back({s(b) / s(a), a, b});
  }
  std::stable_sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) { return x.ratio < y.ratio; });

  const double jscale = std::max(1.0, max_abs(j));
  std::size_t start = 0;
  while (start < modes.size()) {
    std::size_t end = start + 1;
    while (end < modes.size() && modes[end].ratio - modes[start].ratio <= 1e-9 * modes[start].ratio) ++end;
    const auto m = static_cast<Eigen::Index>(end - start);
    ComplexMatrix q(d * d, m);
    double mean_ratio = 0.0;
    for (Eigen::Index c = 0; c < m; ++c) {
      const Mode& md = modes[start + static_cast<std::size_t>(c)];
      q.col(c) = kron(ComplexMatrix(u.col(md.a)), ComplexMatrix(u.col(md.b).conjugate()));
      mean_ratio += md.ratio;
    }
    mean_ratio /= static_cast<double>(m);
    ComplexMatrix block = q.adjoint() * j * q;
    block = 0.5 * (block + block.adjoint()).eval();
    const EigenDecomposition e = eig_hermitian(block);
    for (Eigen::Index c = 0; c < m; ++c) {
      const double lam = e.values(c);
      if (lam < -1e-9 * jscale) {
        throw ContractError("choi_kraus_decomposition: Choi matrix is not positive (eigenvalue " +
                            std::to_string(lam) + ")");
      }
      if (lam <= 1e-14 * jscale) continue;
      const ComplexVector v = q * e.vectors.col(c);
      ComplexMatrix r(d, d);
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) r(a, b) = v(a * d + b);
      }
      out.pairs.push_back({std::sqrt(lam) * r, 1.0 / mean_ratio});
    }
    start = end;
  }
  return out;
}

KrausDiagnostics kraus_diagnostics(const LindbladGenerator& gen, double t, const KrausDecomposition& dec,
                                   int sample_count, std::uint64_t seed) {
  const Eigen::Index d = gen.dim();
  const ComplexMatrix& sigma = gen.sigma().matrix();
  KrausDiagnostics diag;
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  for (const auto& kp : dec.pairs) {
    diag.weight_residual = std::max(diag.weight_residual, max_abs(sigma * kp.r - kp.omega * kp.r * sigma));
    completeness += kp.r * kp.r.adjoint();
  }
  diag.completeness_residual = max_abs(completeness - identity(d));
  const Rng base(seed);
  for (int n = 0; n < sample_count; ++n) {
    Rng rng = base.substream(static_cast<std::uint64_t>(n));
    const ComplexMatrix x = random_ginibre(d, rng);
    ComplexMatrix y = ComplexMatrix::Zero(d, d);
    for (const auto& kp : dec.pairs) y += kp.r * x * kp.r.adjoint();
    diag.reconstruction_residual = std::max(diag.reconstruction_residual, max_abs(y - gen.evolve(t, x)));
  }
  return diag;
}

double contractivity_check(const LindbladGenerator& gen, double p, std::span<const double> t_grid, int sample_count,
                           std::uint64_t seed) {
  const WeightedSpace w(gen.sigma());
  double worst = kInfinity;
  const Rng base(seed);
  for (int n = 0; n < sample_count; ++n) {
    Rng rng = base.substream(static_cast<std::uint64_t>(n));
    const ComplexMatrix x = random_definite_sample(gen.dim(), rng);
    const double nx = weighted_norm(w, x, p);
    for (double t : t_grid) {
      ComplexMatrix y = gen.evolve(t, x);
      y = 0.5 * (y + y.adjoint()).eval();
      const double ny = weighted_norm(w, y, p);
      worst = std::min(worst, p >= 1.0 ? nx - ny : ny - nx);
    }
  }
  return worst;
}

}  // namespace qlsi
