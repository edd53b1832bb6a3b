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

#include <benchmark/benchmark.h>

#include "qlsi/converse.hpp"
#include "qlsi/entropy.hpp"
#include "qlsi/lsi.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/weighted_lp.hpp"

namespace {

using namespace qlsi;

void BM_WeightedNorm(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  const WeightedSpace w(random_density(d, 1, 0.01));
  Rng rng(2);
  const ComplexMatrix x = random_definite_sample(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_norm(w, x, 1.7));
}
BENCHMARK(BM_WeightedNorm)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_EntP(benchmark::State& state) {
  const auto d = static_cast<Eigen::Index>(state.range(0));
  const WeightedSpace w(random_density(d, 3, 0.01));
  Rng rng(4);
  const ComplexMatrix x = random_definite_sample(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ent_p(w, x, 2.0).value);
}
BENCHMARK(BM_EntP)->Arg(2)->Arg(4)->Arg(8);

void BM_DirichletTensor(benchmark::State& state) {
  const DensityMatrix sigma = DensityMatrix::diagonal({0.25, 0.75});
  const LindbladGenerator g = tensor_power(simple_generator(sigma), static_cast<int>(state.range(0)));
  const WeightedSpace w(g.sigma());
  Rng rng(5);
  const ComplexMatrix x = random_definite_sample(g.dim(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_form(w, g, x, 2.0));
}
BENCHMARK(BM_DirichletTensor)->Arg(1)->Arg(2)->Arg(3);

void BM_Propagator(benchmark::State& state) {
  const LindbladGenerator g = davies_qubit_generator(DensityMatrix::diagonal({0.25, 0.75}), 1.0, 0.3);
  const LindbladGenerator k = tensor_power(g, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k.propagator(0.7));
}
BENCHMARK(BM_Propagator)->Arg(1)->Arg(2)->Arg(3);

void BM_LsiEstimate(benchmark::State& state) {
  const DensityMatrix sigma = DensityMatrix::diagonal({0.25, 0.75});
  const WeightedSpace w(sigma);
  const LindbladGenerator g = simple_generator(sigma);
  LsiOptions opts;
  opts.starts = 4;
  opts.seed = 6;
  for (auto _ : state) benchmark::DoNotOptimize(lsi_constant_estimate(w, g, 2.0, opts).value);
}
BENCHMARK(BM_LsiEstimate)->Unit(benchmark::kMillisecond);

void BM_NeymanPearson(benchmark::State& state) {
  const DensityMatrix rho = DensityMatrix::diagonal({0.5, 0.5});
  const DensityMatrix sigma = DensityMatrix::diagonal({0.25, 0.75});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(np_oracle(rho, sigma, n, 0.1).beta);
}
BENCHMARK(BM_NeymanPearson)->DenseRange(1, 5);

void BM_CqConverse(benchmark::State& state) {
  Rng rng(7);
  const CQCode code = pgm_decoder(random_binary_qubit_code(static_cast<int>(state.range(0)), 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(cq_converse_check(code));
}
BENCHMARK(BM_CqConverse)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
