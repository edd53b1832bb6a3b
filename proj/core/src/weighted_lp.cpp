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

#include "qlsi/weighted_lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlsi/errors.hpp"

namespace qlsi {
namespace {

// Entries scaled as X_ij (s_i s_j)^a; X given in the eigenbasis of sigma.
ComplexMatrix scale_eigenbasis(const RealVector& s, const ComplexMatrix& xt, double a) {
  if (a == 0.0) return xt;
  const Eigen::VectorXcd v = s.array().pow(a).matrix().cast<Complex>();
  return v.asDiagonal() * xt * v.asDiagonal();
}

bool nearly_hermitian(const ComplexMatrix& x) {
  return hermiticity_residual(x) <= 1e-14 * std::max(1.0, max_abs(x));
}

// Lexicographic order on (re, im) of the column-major entries.
bool lex_less(const ComplexMatrix& a, const ComplexMatrix& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const Complex u = a.data()[k];
    const Complex v = b.data()[k];
    if (u.real() != v.real()) return u.real() < v.real();
    if (u.imag() != v.imag()) return u.imag() < v.imag();
  }
  return false;
}

void check_shape(const WeightedSpace& w, const ComplexMatrix& x, const char* what) {
  if (x.rows() != w.dim() || x.cols() != w.dim()) {
    throw DimensionError(std::string(what) + ": operator dimension " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + " does not match sigma dimension " +
                         std::to_string(w.dim()));
  }
}

double norm_in_eigenbasis(const WeightedSpace& w, const ComplexMatrix& xt, bool hermitian, double p) {
  const ComplexMatrix yt = scale_eigenbasis(w.spectrum(), xt, 1.0 / (2.0 * p));
  RealVector sv;
  if (hermitian) {
    const EigenDecomposition e = eig_hermitian(ComplexMatrix(0.5 * (yt + yt.adjoint())));
    if (p < 0.0) {
      if (!(e.values(0) > 0.0)) {
        throw DomainError("weighted_norm: negative exponent requires a positive definite operator (eigenvalue " +
                          std::to_string(e.values(0)) + ")");
      }
      sv = e.values;
    } else {
      sv = e.values.cwiseAbs();
    }
  } else {
    if (p < 0.0) throw DomainError("weighted_norm: negative exponent requires a Hermitian positive definite operator");
    Eigen::JacobiSVD<ComplexMatrix> svd(yt);
    sv = svd.singularValues();
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return std::pow(acc, 1.0 / p);
}

double infinity_norm(const ComplexMatrix& y) { return operator_norm(y); }

}  // namespace

double holder_conjugate(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfinity;
  return p / (p - 1.0);
}

PExponent PExponent::of(double p) {
  if (std::isnan(p) || p == 0.0) throw ParameterError("exponent p must be a nonzero number");
  return {p, holder_conjugate(p)};
}

WeightedSpace::WeightedSpace(const DensityMatrix& sigma) : sigma_(sigma) {
  if (!sigma.definite()) {
    throw ParameterError("WeightedSpace: sigma must be positive definite (min eigenvalue " +
                         std::to_string(sigma.eig().values(0)) + ")");
  }
  sqrt_ = sigma_power(0.5);
}

ComplexMatrix WeightedSpace::sigma_power(double s) const {
  return apply_spectral(sigma_.eig(), [s](double x) { return std::pow(x, s); });
}

ComplexMatrix WeightedSpace::to_eigenbasis(const ComplexMatrix& x) const { return basis().adjoint() * x * basis(); }

ComplexMatrix WeightedSpace::from_eigenbasis(const ComplexMatrix& x) const {
  return basis() * x * basis().adjoint();
}

ComplexMatrix gamma_power(const WeightedSpace& w, const ComplexMatrix& x, double s) {
  check_shape(w, x, "gamma_power");
  if (s == 0.0) return x;
  return w.from_eigenbasis(scale_eigenbasis(w.spectrum(), w.to_eigenbasis(x), 0.5 * s));
}

double weighted_norm(const WeightedSpace& w, const ComplexMatrix& x, double p) {
  check_shape(w, x, "weighted_norm");
  if (std::isnan(p) || p == 0.0) throw ParameterError("weighted_norm: p = 0 is not supported");
  if (std::isinf(p)) throw ParameterError("weighted_norm: infinite p is not supported");
  const ComplexMatrix xa = x.adjoint();
  const ComplexMatrix& canon = lex_less(xa, x) ? xa : x;
  return norm_in_eigenbasis(w, w.to_eigenbasis(canon), nearly_hermitian(canon), p);
}

double weighted_norm(const WeightedSpace& w, const ComplexMatrix& x, const PExponent& p) {
  return weighted_norm(w, x, p.p);
}

ComplexMatrix abs_power(const ComplexMatrix& y, double r) {
  const Eigen::Index d = y.rows();
  RealVector mag;
  ComplexMatrix v;
  if (nearly_hermitian(y)) {
    EigenDecomposition e = eig_hermitian(ComplexMatrix(0.5 * (y + y.adjoint())));
    mag = e.values.cwiseAbs();
    v = std::move(e.vectors);
  } else {
    Eigen::JacobiSVD<ComplexMatrix> svd(y, Eigen::ComputeFullV);
    mag = svd.singularValues();
    v = svd.matrixV();
  }
  const double top = mag.size() ? mag.maxCoeff() : 0.0;
  const double zero_tol = 1e-14 * top;
  RealVector f(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double m = mag(i);
    if (r == 0.0) {
      f(i) = m > std::max(zero_tol, 1e-300) ? 1.0 : 0.0;
    } else if (r < 0.0) {
      if (!(m > zero_tol) || m == 0.0) {
        throw DomainError("abs_power: negative power of a singular operator (singular value " +
                          std::to_string(m) + ")");
      }
      f(i) = std::pow(m, r);
    } else {
      f(i) = std::pow(m, r);
    }
  }
  ComplexMatrix out = v * f.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix power_operator(const WeightedSpace& w, const ComplexMatrix& x, double q, double p) {
  check_shape(w, x, "power_operator");
  if (std::isnan(p) || std::isnan(q) || p == 0.0 || q == 0.0) {
    throw ParameterError("power_operator: exponents must be nonzero");
  }
  if (std::isinf(p)) throw ParameterError("power_operator: p must be finite");
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const ComplexMatrix yt = scale_eigenbasis(w.spectrum(), w.to_eigenbasis(x), 1.0 / (2.0 * p));
  const ComplexMatrix zt = scale_eigenbasis(w.spectrum(), abs_power(yt, p * inv_q), -0.5 * inv_q);
  ComplexMatrix out = w.from_eigenbasis(zt);
  return 0.5 * (out + out.adjoint());
}

Complex inner_sigma(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y) {
  check_shape(w, x, "inner_sigma");
  check_shape(w, y, "inner_sigma");
  return (w.sigma_sqrt() * x.adjoint() * w.sigma_sqrt() * y).trace();
}

Complex inner_one_sigma(const WeightedSpace& w, const ComplexMatrix& x, const ComplexMatrix& y) {
  check_shape(w, x, "inner_one_sigma");
  check_shape(w, y, "inner_one_sigma");
  return (w.sigma().matrix() * x.adjoint() * y).trace();
}

double check_reverse_holder(const WeightedSpace& w, const PositiveOperator& x, const PositiveOperator& y,
                            double p) {
  if (std::isnan(p) || p >= 1.0) throw ParameterError("check_reverse_holder: p must be below 1");
  if (p == 0.0) throw ParameterError("check_reverse_holder: p = 0 is not supported");
  if (!y.definite()) throw DomainError("check_reverse_holder: Y must be positive definite");
  const double hat = holder_conjugate(p);
  // For p < 0 the norm of a singular X is 0 in the limit.
  const double nx = (p < 0.0 && !x.definite()) ? 0.0 : weighted_norm(w, x.matrix(), p);
  const double ny = weighted_norm(w, y.matrix(), hat);
  return inner_sigma(w, x.matrix(), y.matrix()).real() - nx * ny;
}

double check_reverse_minkowski(const WeightedSpace& w, const PositiveOperator& x, const PositiveOperator& y,
                               double p) {
  if (std::isnan(p) || p >= 1.0) throw ParameterError("check_reverse_minkowski: p must be below 1");
  if (p == 0.0) throw ParameterError("check_reverse_minkowski: p = 0 is not supported");
  const ComplexMatrix sum = x.matrix() + y.matrix();
  return weighted_norm(w, sum, p) - weighted_norm(w, x.matrix(), p) - weighted_norm(w, y.matrix(), p);
}

HolderVariationalResult holder_variational_check(const WeightedSpace& w, const ComplexMatrix& x, double p,
                                                 int sample_count, std::uint64_t seed) {
  check_shape(w, x, "holder_variational_check");
  if (std::isnan(p) || p < 1.0 || std::isinf(p)) {
    throw ParameterError("holder_variational_check: p must lie in [1, inf)");
  }
  const double hat = holder_conjugate(p);
  auto dual_norm = [&](const ComplexMatrix& y) {
    return std::isinf(hat) ? infinity_norm(y) : weighted_norm(w, y, hat);
  };
  HolderVariationalResult r;
  r.norm = weighted_norm(w, x, p);
  const double tol = 1e-9 * std::max(1.0, r.norm);

  auto ratio = [&](const ComplexMatrix& y) {
    const double n = dual_norm(y);
    return n > 0.0 ? std::abs(inner_sigma(w, x, y)) / n : 0.0;
  };
  r.max_sampled_ratio = std::max(ratio(identity(w.dim())), ratio(x));
  const Rng base(seed);
  for (int k = 0; k < sample_count; ++k) {
    Rng rng = base.substream(static_cast<std::uint64_t>(k));
    r.max_sampled_ratio = std::max(r.max_sampled_ratio, ratio(random_ginibre(w.dim(), rng)));
  }

  bool attained = true;
  if (nearly_hermitian(x)) {
    const EigenDecomposition e = eig_hermitian(ComplexMatrix(0.5 * (x + x.adjoint())));
    if (e.values(0) >= kEigenClipTol) {
      const ComplexMatrix ystar = power_operator(w, x, hat, p);
      r.attainment_residual = std::abs(ratio(ystar) - r.norm);
      r.attainment_checked = true;
      attained = r.attainment_residual <= tol;
    }
  }
  r.pass = r.max_sampled_ratio <= r.norm + tol && attained;
  return r;
}

}  // namespace qlsi
