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

#include "qlsi/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qlsi/errors.hpp"

namespace qlsi {
namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
  if (m.rows() > kMaxDim) {
    throw ResourceError(std::string(what) + ": dimension " + std::to_string(m.rows()) +
                        " exceeds the supported maximum " + std::to_string(kMaxDim));
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw DomainError(std::string(what) + ": matrix has non-finite entries");
}

}  // namespace

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double hermiticity_residual(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  require_square(m, "HermitianOperator");
  require_finite(m, "HermitianOperator");
  const double skew = hermiticity_residual(m);
  if (skew > 1e-8 * std::max(1.0, max_abs(m))) {
    throw DomainError("HermitianOperator: input is not Hermitian (max |M - M^dagger| = " +
                      std::to_string(skew) + ")");
  }
  m_ = 0.5 * (m + m.adjoint());
  for (Eigen::Index i = 0; i < m_.rows(); ++i) m_(i, i) = Complex(m_(i, i).real(), 0.0);
}

EigenDecomposition eig_hermitian(const ComplexMatrix& h) {
  require_square(h, "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eig_hermitian: solver did not converge (dim " << h.rows() << ", max |entry| "
       << max_abs(h) << ", finite " << (h.allFinite() ? "yes" : "no") << ")";
    throw DecompositionError(os.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

EigenDecomposition eig_hermitian(const HermitianOperator& h) { return eig_hermitian(h.matrix()); }

PositiveOperator::PositiveOperator(const HermitianOperator& h, Strictness strictness)
    : m_(h.matrix()), eig_(eig_hermitian(h)), strictness_(strictness) {
  const double lo = eig_.values(0);
  if (lo < -kEigenClipTol) {
    throw DomainError("PositiveOperator: eigenvalue " + std::to_string(lo) + " is negative");
  }
  if (strictness == Strictness::Definite && lo < kEigenClipTol) {
    throw DomainError("PositiveOperator: eigenvalue " + std::to_string(lo) +
                      " is below the definiteness floor");
  }
  bool clipped = false;
  for (Eigen::Index i = 0; i < eig_.values.size(); ++i) {
    if (eig_.values(i) < 0.0) {
      eig_.values(i) = 0.0;
      clipped = true;
    }
  }
  if (clipped) {
    m_ = eig_.vectors * eig_.values.cast<Complex>().asDiagonal() * eig_.vectors.adjoint();
    m_ = 0.5 * (m_ + m_.adjoint()).eval();
  }
}

DensityMatrix::DensityMatrix(const PositiveOperator& p) : p_(p) {
  const double tr = p.matrix().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw DomainError("DensityMatrix: trace " + std::to_string(tr) + " differs from 1");
  }
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
  }
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

ComplexMatrix apply_spectral(const EigenDecomposition& eig, const std::function<double(double)>& f) {
  const Eigen::Index d = eig.values.size();
  RealVector fv(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    fv(i) = f(eig.values(i));
    if (!std::isfinite(fv(i))) {
      throw DomainError("matrix function is not finite at eigenvalue " + std::to_string(eig.values(i)));
    }
  }
  ComplexMatrix out = eig.vectors * fv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

HermitianOperator mat_fn(const PositiveOperator& a, const std::function<double(double)>& f) {
  return HermitianOperator(apply_spectral(a.eig(), f));
}

HermitianOperator mat_fn(const HermitianOperator& a, const std::function<double(double)>& f) {
  return HermitianOperator(apply_spectral(eig_hermitian(a), f));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DimensionError("kron: empty factor list");
  ComplexMatrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, int n) {
  if (n < 1) throw ParameterError("kron_power: n must be positive");
  ComplexMatrix out = a;
  for (int i = 1; i < n; ++i) out = kron(out, a);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, std::span<const Eigen::Index> dims,
                            std::span<const Eigen::Index> keep) {
  if (x.rows() != x.cols()) throw DimensionError("partial_trace: matrix is not square");
  if (dims.empty()) throw DimensionError("partial_trace: empty dimension list");
  Eigen::Index total = 1;
  for (auto d : dims) {
    if (d < 1) throw DimensionError("partial_trace: subsystem dimensions must be positive");
    total *= d;
  }
  if (total != x.rows()) {
    throw DimensionError("partial_trace: subsystem dimensions multiply to " + std::to_string(total) +
                         " but the matrix has dimension " + std::to_string(x.rows()));
  }
  const auto n = static_cast<Eigen::Index>(dims.size());
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k < 0 || k >= n) throw DimensionError("partial_trace: keep index out of range");
    if (kept[static_cast<std::size_t>(k)]) throw DimensionError("partial_trace: repeated keep index");
    kept[static_cast<std::size_t>(k)] = true;
  }
  Eigen::Index out_dim = 1;
  for (Eigen::Index s = 0; s < n; ++s) {
    if (kept[static_cast<std::size_t>(s)]) out_dim *= dims[static_cast<std::size_t>(s)];
  }

  // Digits are most significant first, matching kron ordering.
  auto split = [&](Eigen::Index idx, Eigen::Index& kept_idx, Eigen::Index& traced_idx) {
    std::vector<Eigen::Index> digits(dims.size());
    for (Eigen::Index s = n - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = idx % dims[static_cast<std::size_t>(s)];
      idx /= dims[static_cast<std::size_t>(s)];
    }
    kept_idx = 0;
    traced_idx = 0;
    for (Eigen::Index s = 0; s < n; ++s) {
      const auto us = static_cast<std::size_t>(s);
      if (kept[us]) {
        kept_idx = kept_idx * dims[us] + digits[us];
      } else {
        traced_idx = traced_idx * dims[us] + digits[us];
      }
    }
  };

  std::vector<Eigen::Index> kidx(static_cast<std::size_t>(total)), tidx(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) {
    split(i, kidx[static_cast<std::size_t>(i)], tidx[static_cast<std::size_t>(i)]);
  }
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index i = 0; i < total; ++i) {
    for (Eigen::Index j = 0; j < total; ++j) {
      if (tidx[static_cast<std::size_t>(i)] == tidx[static_cast<std::size_t>(j)]) {
        out(kidx[static_cast<std::size_t>(i)], kidx[static_cast<std::size_t>(j)]) += x(i, j);
      }
    }
  }
  return out;
}

ComplexMatrix random_ginibre(Eigen::Index dim, Rng& rng) {
  if (dim < 1) throw ParameterError("random_ginibre: dim must be positive");
  ComplexMatrix g(dim, dim);
  const double s = std::sqrt(0.5);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(s * re, s * im);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

HermitianOperator random_hermitian(Eigen::Index dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  return HermitianOperator(0.5 * (g + g.adjoint()));
}

HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(dim, rng);
}

DensityMatrix random_density(Eigen::Index dim, Rng& rng, double min_eig) {
  if (dim < 1) throw ParameterError("random_density: dim must be positive");
  if (!(min_eig >= 0.0) || min_eig * static_cast<double>(dim) >= 1.0) {
    throw ParameterError("random_density: min_eig must lie in [0, 1/dim)");
  }
  RealVector w(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    w(i) = -std::log(u);
  }
  w /= w.sum();
  const RealVector lambda =
      RealVector::Constant(dim, min_eig) + (1.0 - static_cast<double>(dim) * min_eig) * w;
  const ComplexMatrix u = haar_unitary(dim, rng);
  ComplexMatrix m = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  m /= m.trace().real();
  return DensityMatrix(m, min_eig >= kEigenClipTol ? Strictness::Definite : Strictness::Semidefinite);
}

DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed, double min_eig) {
  Rng rng(seed);
  return random_density(dim, rng, min_eig);
}

PositiveOperator random_positive_definite(Eigen::Index dim, Rng& rng, double min_eig) {
  if (dim < 1) throw ParameterError("random_positive_definite: dim must be positive");
  if (!(min_eig >= kEigenClipTol)) {
    throw ParameterError("random_positive_definite: min_eig must be at least 1e-10");
  }
  RealVector lambda(dim);
  for (Eigen::Index i = 0; i < dim; ++i) lambda(i) = min_eig + rng.uniform();
  const ComplexMatrix u = haar_unitary(dim, rng);
  const ComplexMatrix m = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return PositiveOperator(0.5 * (m + m.adjoint()), Strictness::Definite);
}

PositiveOperator random_positive_definite(Eigen::Index dim, std::uint64_t seed, double min_eig) {
  Rng rng(seed);
  return random_positive_definite(dim, rng, min_eig);
}

ComplexMatrix random_definite_sample(Eigen::Index dim, Rng& rng) {
  RealVector lambda(dim);
  const auto profile = rng.below(4);
  for (Eigen::Index i = 0; i < dim; ++i) {
    switch (profile) {
      case 0: lambda(i) = rng.uniform(0.05, 1.0); break;
      case 1: lambda(i) = std::exp(rng.uniform(-5.0, 3.0)); break;
      case 2: lambda(i) = 1.0 + 0.2 * rng.uniform(-1.0, 1.0); break;
      default: lambda(i) = (i == 0 ? 1.0 : rng.uniform(1e-3, 0.05)); break;
    }
  }
  const ComplexMatrix u = haar_unitary(dim, rng);
  const ComplexMatrix m = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return 0.5 * (m + m.adjoint());
}

}  // namespace qlsi
