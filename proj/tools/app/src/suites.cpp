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

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>

#include "qlsi/converse.hpp"
#include "qlsi/entropy.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/generator_io.hpp"
#include "qlsi/lsi.hpp"
#include "qlsi/matrix_io.hpp"
#include "qlsi/parallel.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/weighted_lp.hpp"
#include "qlsi_app/experiment.hpp"

namespace qlsi::app {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Builder {
 public:
  explicit Builder(const ExperimentConfig& c) : c_(c) {
    report_.suite = c.suite;
    report_.seed = c.seed;
    report_.tolerance = c.tolerance;
  }

  ReportRow& row(const std::string& cell, const std::string& tag, double value, double margin, bool pass) {
    report_.rows.push_back({c_.suite, cell, tag, value, margin, pass ? "yes" : "no", std::nullopt});
    return report_.rows.back();
  }
  ReportRow& check(const std::string& cell, const std::string& tag, double value, double margin) {
    return row(cell, tag, value, margin, margin >= -c_.tolerance);
  }
  ReportRow& explore(const std::string& cell, const std::string& tag, double value, double margin) {
    report_.rows.push_back({c_.suite, cell, tag, value, margin, "exploratory", std::nullopt});
    return report_.rows.back();
  }
  void point(double x, double y, const std::string& series) { report_.plot.push_back({x, y, series}); }
  void witness(const std::string& cell, const ComplexMatrix& m) {
    if (m.size() == 0) return;
    report_.witnesses.push_back({{"cell", cell}, {"witness", matrix_to_json(m)}});
  }
  // Seed for a named cell, independent of evaluation order.
  std::uint64_t cell_seed(const std::string& cell) const {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a
    for (char ch : c_.suite + "/" + cell) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
    return mix64(c_.seed ^ h);
  }

  Report take() { return std::move(report_); }

 private:
  const ExperimentConfig& c_;
  Report report_;
};

std::string kv(const char* k, double v) { return std::string(k) + "=" + format_double(v); }
std::string kv(const char* k, double v, const char* k2, double v2) { return kv(k, v) + " " + kv(k2, v2); }

LindbladGenerator make_generator(const ExperimentConfig& c) { return generator_from_json(c.generator); }

DensityMatrix reference_state(const ExperimentConfig& c) {
  if (!c.generator.is_null()) return make_generator(c).sigma();
  return DensityMatrix(matrix_from_json(c.sigma), Strictness::Definite);
}

PositiveOperator definite(Eigen::Index d, Rng& rng) {
  return PositiveOperator(random_definite_sample(d, rng), Strictness::Definite);
}

double min_over(std::size_t n, const std::function<double(std::size_t)>& f) {
  const auto vals = parallel_map<double>(n, f);
  double m = kInf;
  for (double v : vals) m = std::min(m, v);
  return m;
}

void suite_norms(const ExperimentConfig& c, Builder& b) {
  const WeightedSpace w(reference_state(c));
  const auto n = static_cast<std::size_t>(c.samples);
  for (double p : c.p_grid) {
    const std::string cell = kv("p", p);
    const Rng base(b.cell_seed(cell));
    if (p < 1.0) {
      const double holder = min_over(n, [&](std::size_t k) {
        Rng rng = base.substream(k);
        const PositiveOperator x = definite(w.dim(), rng);
        return check_reverse_holder(w, x, definite(w.dim(), rng), p);
      });
      b.check(cell, "reverse-holder", holder, holder);
      const double mink = min_over(n, [&](std::size_t k) {
        Rng rng = base.substream(n + k);
        const PositiveOperator x = definite(w.dim(), rng);
        return check_reverse_minkowski(w, x, definite(w.dim(), rng), p);
      });
      b.check(cell, "reverse-minkowski", mink, mink);
    } else {
      const std::size_t ops = std::max<std::size_t>(1, n / 100);
      double margin = kInf, residual = 0.0;
      bool pass = true;
      for (std::size_t k = 0; k < ops; ++k) {
        Rng rng = base.substream(k);
        const auto r = holder_variational_check(w, random_ginibre(w.dim(), rng), p, 100, b.cell_seed(cell) ^ mix64(k));
        margin = std::min(margin, r.norm - r.max_sampled_ratio);
        residual = std::max(residual, r.attainment_residual);
        pass = pass && r.pass;
      }
      b.row(cell, "holder-duality", residual, margin, pass);
    }
  }
}

void suite_entropy(const ExperimentConfig& c, Builder& b) {
  const WeightedSpace w(reference_state(c));
  const auto n = static_cast<std::size_t>(std::max(1, c.samples / 10));
  for (double p : c.p_grid) {
    const std::string cell = kv("p", p);
    const Rng base(b.cell_seed(cell));
    const double h = 1e-4 * std::min(1.0, std::abs(p));
    const double worst = -min_over(n, [&](std::size_t k) {
      Rng rng = base.substream(k);
      const ComplexMatrix x = random_definite_sample(w.dim(), rng);
      const double fd = (weighted_norm(w, x, p + h) - weighted_norm(w, x, p - h)) / (2.0 * h);
      const double an = norm_derivative_p(w, x, p);
      const double scale = std::max(std::abs(an), 1e-6 * weighted_norm(w, x, p));
      return -std::abs(fd - an) / scale;
    });
    b.check(cell, "norm-derivative", worst, c.tolerance - worst);
  }
  const std::string cell = "p=1 convexity";
  Rng rng(b.cell_seed(cell));
  const ComplexMatrix x = random_definite_sample(w.dim(), rng);
  const ComplexMatrix y = random_definite_sample(w.dim(), rng);
  const auto r = ent1_convexity_check(w, x, y, c.samples, b.cell_seed(cell));
  b.row(cell, "ent1-convexity", r.min_margin, r.min_margin, r.pass);
}

void suite_semigroup(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  b.row("generator", "reversibility-residual", gen.reversibility_residual(), kReversibleTol - gen.reversibility_residual(),
        gen.reversible());
  if (gen.reversible()) {
    const double gap = gen.spectral_gap();
    b.row("generator", "spectral-gap", gap, gap, gap > 0.0);
  }
  for (double p : c.p_grid) {
    const std::string cell = kv("p", p);
    const double m = contractivity_check(gen, p, c.t_grid, c.samples, b.cell_seed(cell));
    b.check(cell, p >= 1.0 ? "contractivity" : "reverse-contractivity", m, m);
  }
  if (!gen.reversible()) return;
  for (double t : c.t_grid) {
    if (!(t > 0.0)) continue;
    const std::string cell = kv("t", t);
    const KrausDecomposition dec = choi_kraus_decomposition(gen, t);
    const KrausDiagnostics d = kraus_diagnostics(gen, t, dec, 20, b.cell_seed(cell));
    const double worst = std::max({d.weight_residual, d.completeness_residual, d.reconstruction_residual});
    b.check(cell, "kraus-structure", worst, c.tolerance - worst);
  }
}

void suite_lsi_estimate(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  const WeightedSpace w(gen.sigma());
  for (double p : c.p_grid) {
    const std::string cell = kv("p", p);
    LsiOptions o;
    o.starts = c.starts;
    o.seed = b.cell_seed(cell);
    const LSIEstimate e = lsi_constant_estimate(w, gen, p, o);
    b.check(cell, "lsi-estimate", e.value, e.sampled_floor - e.value);
    b.point(p, e.value, "estimate");
    b.point(p, e.sampled_floor, "sampled-floor");
  }
}

double resolve_beta(const ExperimentConfig& c, const WeightedSpace& w, const LindbladGenerator& gen) {
  if (c.beta.is_null()) return 0.0;
  if (c.beta.is_number()) return c.beta.get<double>();
  if (c.beta == "gap-bound") return alpha2_gap_lower_bound(w, gen);
  if (gen.kind() != GeneratorKind::Simple &&
      !(gen.kind() == GeneratorKind::TensorSum && !gen.factors().empty() &&
        std::all_of(gen.factors().begin(), gen.factors().end(),
                    [](const LindbladGenerator& f) { return f.kind() == GeneratorKind::Simple && f.dim() == 2; }))) {
    throw ParameterError("beta = \"closed-form\" requires simple qubit generators");
  }
  const DensityMatrix& s = gen.kind() == GeneratorKind::Simple ? gen.sigma() : gen.factors().front().sigma();
  double out = alpha2_simple_exact(s);
  for (const auto& f : gen.factors()) out = std::min(out, alpha2_simple_exact(f.sigma()));
  return out;
}

void suite_lsi_verify(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  const WeightedSpace w(gen.sigma());
  const double beta = resolve_beta(c, w, gen);
  for (double p : c.p_grid) {
    const std::string cell = kv("p", p, "beta", beta);
    const LsiVerifyResult r = lsi_verify(w, gen, p, beta, c.samples, b.cell_seed(cell));
    b.row(cell, "log-sobolev", r.min_ratio, r.min_ratio - beta, r.pass);
    if (!r.pass) b.witness(cell, r.witness);
  }
}

void suite_sv(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  const WeightedSpace w(gen.sigma());
  const std::string cell = "grid";
  const Rng base(b.cell_seed(cell));
  std::vector<ComplexMatrix> xs(static_cast<std::size_t>(c.samples));
  const auto viol = parallel_map<double>(xs.size(), [&](std::size_t k) {
    Rng rng = base.substream(k);
    xs[k] = random_definite_sample(w.dim(), rng);
    const auto r = sv_monotonicity_check(w, gen, xs[k], c.p_grid, c.tolerance);
    double scale = 1.0;
    for (double v : r.values) scale = std::max(scale, std::abs(v));
    return r.max_violation / scale;
  });
  const auto it = std::max_element(viol.begin(), viol.end());
  const double worst = it == viol.end() ? 0.0 : *it;
  b.check(cell, "stroock-varopoulos", worst, -worst);
  if (worst > c.tolerance) b.witness(cell, xs[static_cast<std::size_t>(it - viol.begin())]);
}

void sweep_rows(Builder& b, const SweepReport& rep, const char* tag) {
  for (const auto& cell : rep.cells) {
    const std::string name = kv("p", cell.p, "q", cell.q) + " " + kv("t", cell.t);
    if (cell.exploratory) {
      b.explore(name, tag, cell.margin, cell.margin);
    } else {
      b.check(name, tag, cell.margin, cell.margin);
    }
  }
}

void suite_hc(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  const WeightedSpace w(gen.sigma());
  const double alpha = c.alpha ? *c.alpha : alpha2_gap_lower_bound(w, gen);
  for (double f : c.t_factors) {
    const SweepReport rep = hc_sweep(w, gen, HcDirection::Forward, alpha, c.p_grid, c.q_grid, f, c.samples,
                                     b.cell_seed(kv("factor", f)), c.tolerance);
    sweep_rows(b, rep, "hypercontractivity");
  }
}

void suite_rhc(const ExperimentConfig& c, Builder& b) {
  const LindbladGenerator gen = make_generator(c);
  const WeightedSpace w(gen.sigma());
  const double alpha1 = c.alpha ? *c.alpha : 0.25;
  for (double f : c.t_factors) {
    const SweepReport rep = hc_sweep(w, gen, HcDirection::Reverse, alpha1, c.p_grid, c.q_grid, f, c.samples,
                                     b.cell_seed(kv("factor", f)), c.tolerance);
    sweep_rows(b, rep, "reverse-hypercontractivity");
  }
  for (double p : c.p_grid) {
    for (double q : c.q_grid) {
      if (p > 1.0 || q > 1.0 || p == 0.0 || q == 0.0) continue;
      for (double t : c.t_grid) {
        const std::string cell = kv("p", p, "q", q) + " " + kv("t", t);
        const double m = reverse_holder_hc_check(w, gen, p, q, t, c.samples, b.cell_seed(cell));
        if (reverse_holder_hc_condition(alpha1, p, q, t)) {
          b.check(cell, "reverse-holder-semigroup", m, m);
        } else {
          b.explore(cell, "reverse-holder-semigroup", m, m);
        }
      }
    }
  }
}

void suite_qht(const ExperimentConfig& c, Builder& b) {
  const DensityMatrix rho(matrix_from_json(c.instance["rho"]), Strictness::Definite);
  const DensityMatrix sigma(matrix_from_json(c.instance["sigma"]), Strictness::Definite);
  const HypothesisInstance one(rho, sigma, 1);
  b.row("instance", "relative-entropy", one.rel_ent, one.rel_ent, true).value_bits = one.rel_ent / std::numbers::ln2;
  b.row("instance", "gamma", one.gamma, one.gamma - 1.0, true);
  struct Cell {
    int n;
    double eps;
  };
  std::vector<Cell> cells;
  for (int n : c.n_grid) {
    for (double e : c.eps_grid) cells.push_back({n, e});
  }
  struct Out {
    double exact, bound;
  };
  const auto outs = parallel_map<Out>(cells.size(), [&](std::size_t i) {
    const HypothesisInstance inst(rho, sigma, cells[i].n);
    return Out{np_oracle(rho, sigma, cells[i].n, cells[i].eps).beta, beta_lower_bound(inst, cells[i].eps)};
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string cell = kv("n", cells[i].n, "eps", cells[i].eps);
    b.check(cell, "type2-exact-vs-bound", outs[i].exact, outs[i].exact - outs[i].bound);
    b.point(cells[i].n, outs[i].exact, "exact " + kv("eps", cells[i].eps));
    b.point(cells[i].n, outs[i].bound, "bound " + kv("eps", cells[i].eps));
  }
  for (int n : c.n_grid) {
    const std::string cell = kv("n", n);
    const HypothesisInstance inst(rho, sigma, n);
    const double m = qht_random_test_check(inst, c.samples, b.cell_seed(cell));
    b.check(cell, "random-test-bound", m, m).value_bits = m / std::numbers::ln2;
  }
}

void suite_cq(const ExperimentConfig& c, Builder& b) {
  for (int n : c.n_grid) {
    for (int m : c.message_grid) {
      const std::string cell = kv("n", n, "M", m);
      const Rng base(b.cell_seed(cell));
      const double margin = min_over(static_cast<std::size_t>(c.codes_per_cell), [&](std::size_t k) {
        Rng rng = base.substream(k);
        const CQCode code = pgm_decoder(random_binary_qubit_code(n, static_cast<std::size_t>(m), rng));
        return cq_converse_check(code);
      });
      b.check(cell, "cq-converse", margin, margin).value_bits = margin / std::numbers::ln2;
    }
  }
}

}  // namespace

Report run(const ExperimentConfig& c) {
  static const std::map<std::string, void (*)(const ExperimentConfig&, Builder&)> suites{
      {"norms", suite_norms}, {"entropy", suite_entropy},       {"semigroup", suite_semigroup},
      {"lsi-estimate", suite_lsi_estimate}, {"lsi-verify", suite_lsi_verify}, {"sv", suite_sv},
      {"hc", suite_hc},       {"rhc", suite_rhc},               {"qht", suite_qht},
      {"cq", suite_cq}};
  const auto it = suites.find(c.suite);
  if (it == suites.end()) throw ParameterError("unknown suite '" + c.suite + "'");
  Builder b(c);
  it->second(c, b);
  return b.take();
}

}  // namespace qlsi::app
