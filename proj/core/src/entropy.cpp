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

#include "qlsi/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlsi/errors.hpp"

namespace qlsi {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

ComplexMatrix log_definite(const ComplexMatrix& h, const char* what) {
  const EigenDecomposition e = eig_hermitian(ComplexMatrix(0.5 * (h + h.adjoint())));
  if (!(e.values(0) > 0.0)) {
    throw DomainError(std::string(what) + ": logarithm of a singular operator (eigenvalue " +
                      std::to_string(e.values(0)) + ")");
  }
  return apply_spectral(e, [](double v) { return std::log(v); });
}

double checked_real(Complex z, const char* what) {
  if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z.real()))) {
    throw DomainError(std::string(what) + ": imaginary residue " + std::to_string(z.imag()) + " exceeds tolerance");
  }
  return z.real();
}

}  // namespace

EntropyReport ent_p(const WeightedSpace& w, const ComplexMatrix& x, double p) {
  if (std::isnan(p) || p == 0.0 || std::isinf(p)) throw ParameterError("ent_p: p must be finite and nonzero");
  if (x.rows() != w.dim() || x.cols() != w.dim()) throw DimensionError("ent_p: dimension mismatch");
  const RealVector& s = w.spectrum();
  const Eigen::VectorXcd scale = s.array().pow(1.0 / (2.0 * p)).matrix().cast<Complex>();
  ComplexMatrix a = scale.asDiagonal() * w.to_eigenbasis(x) * scale.asDiagonal();
  a = 0.5 * (a + a.adjoint()).eval();
  const EigenDecomposition e = eig_hermitian(a);
  const double top = std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
  if (e.values(0) < -kEigenClipTol * std::max(1.0, top)) {
    throw DomainError("ent_p: operator is not positive (eigenvalue " + std::to_string(e.values(0)) + ")");
  }
  if (p < 0.0 && !(e.values(0) > 0.0)) {
    throw DomainError("ent_p: negative p requires a positive definite operator");
  }

  const Eigen::Index d = w.dim();
  RealVector ap(d);
  double t1 = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double ak = std::max(e.values(k), 0.0);
    ap(k) = ak > 0.0 ? std::pow(ak, p) : 0.0;
    if (ak > 0.0) t1 += ap(k) * p * std::log(ak);
  }
  double t2 = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    double yii = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) yii += std::norm(e.vectors(i, k)) * ap(k);
    t2 += yii * std::log(s(i));
  }
  const double norm_p = ap.sum();
  return {t1 - t2 - xlogx(norm_p), p, norm_p};
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  const EigenDecomposition e = eig_hermitian(ComplexMatrix(0.5 * (rho + rho.adjoint())));
  double h = 0.0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) h -= xlogx(std::max(e.values(i), 0.0));
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < rho.eig().values.size(); ++i) h -= xlogx(rho.eig().values(i));
  return h;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionError("relative_entropy: dimension mismatch");
  if (!sigma.definite()) throw ParameterError("relative_entropy: sigma must be positive definite");
  const ComplexMatrix log_sigma = apply_spectral(sigma.eig(), [](double v) { return std::log(v); });
  return -von_neumann_entropy(rho) - (rho.matrix() * log_sigma).trace().real();
}

double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("renyi_divergence: p must lie in (0, 1)");
  if (rho.dim() != sigma.dim()) throw DimensionError("renyi_divergence: dimension mismatch");
  const ComplexMatrix sp = apply_spectral(sigma.eig(), [p](double v) { return v > 0.0 ? std::pow(v, p) : 0.0; });
  const ComplexMatrix rp =
      apply_spectral(rho.eig(), [p](double v) { return v > 0.0 ? std::pow(v, 1.0 - p) : 0.0; });
  const double q = (sp * rp).trace().real();
  if (!(q > 0.0)) throw DomainError("renyi_divergence: states have orthogonal supports");
  return -std::log(q) / p;
}

double norm_derivative_p(const WeightedSpace& w, const ComplexMatrix& x, double p) {
  if (std::isnan(p) || p == 0.0 || std::isinf(p)) throw ParameterError("norm_derivative_p: p must be finite and nonzero");
  const double n = weighted_norm(w, x, p);
  if (!(n > 0.0)) throw DomainError("norm_derivative_p: X must be nonzero");
  const double e1 = ent_p(w, power_operator(w, x, p, p), p).value;
  const double e2 = ent_p(w, power_operator(w, x.adjoint(), p, p), p).value;
  return std::pow(n, 1.0 - p) * 0.5 * (e1 + e2) / (p * p);
}

double dirichlet_form(const WeightedSpace& w, const LindbladGenerator& gen, const ComplexMatrix& x, double p) {
  if (std::isnan(p) || p == 0.0 || std::isinf(p)) throw ParameterError("dirichlet_form: p must be finite and nonzero");
  if (gen.dim() != w.dim() || max_abs(gen.sigma().matrix() - w.sigma().matrix()) > 1e-10) {
    throw ContractError("dirichlet_form: generator state differs from the reference state");
  }
  if (!gen.reversible()) {
    throw ContractError("dirichlet_form: generator is not reversible (residual " +
                        std::to_string(gen.reversibility_residual()) + ")");
  }
  const ComplexMatrix lx = gen.apply(x);
  if (p == 1.0) {
    const ComplexMatrix log_sigma = apply_spectral(w.sigma().eig(), [](double v) { return std::log(v); });
    const ComplexMatrix g = gamma_power(w, x, 1.0);
    const Complex z = 0.25 * (gamma_power(w, lx, 1.0) * (log_definite(g, "dirichlet_form") - log_sigma)).trace();
    return checked_real(z, "dirichlet_form");
  }
  const double hat = holder_conjugate(p);
  const Complex z = (p * hat / 4.0) * inner_sigma(w, power_operator(w, x, hat, p), lx);
  return checked_real(z, "dirichlet_form");
}

double variance_sigma(const WeightedSpace& w, const ComplexMatrix& x) {
  const ComplexMatrix id = identity(w.dim());
  return inner_sigma(w, x, x).real() - std::norm(inner_sigma(w, id, x));
}

ConvexityResult ent1_convexity_check(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y,
                                     int sample_count, std::uint64_t seed) {
  auto margin = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * (ent_p(w, a, 1.0).value + ent_p(w, b, 1.0).value) - ent_p(w, 0.5 * (a + b), 1.0).value;
  };
  ConvexityResult r;
  r.min_margin = margin(x, y);
  const Rng base(seed);
  for (int k = 0; k < sample_count; ++k) {
    Rng rng = base.substream(static_cast<std::uint64_t>(k));
    const ComplexMatrix a = random_definite_sample(w.dim(), rng);
    const ComplexMatrix b = random_definite_sample(w.dim(), rng);
    r.min_margin = std::min(r.min_margin, margin(a, b));
  }
  r.pass = r.min_margin >= -1e-9;
  return r;
}

}  // namespace qlsi
