// SPDX-License-Identifier: MIT
/**
 * @brief Microbenchmarks for kernel evaluation, quadrature, and integer
 *        backbone routines.
 *
 * These track the cost of the hot paths: closed-form kernel evaluation,
 * character-weighted group sums, Monte-Carlo throughput, and Smith normal
 * form on small integer matrices.  They are not registered with ctest.
 */
#include <complex>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "bergq/errors.hpp"
#include "bergq/group.hpp"
#include "bergq/intlin.hpp"
#include "bergq/kernels.hpp"
#include "bergq/maps.hpp"
#include "bergq/quad.hpp"

namespace {

using bergq::CVec;

CVec sample_point(std::mt19937_64& rng, int dim, double radius) {
  std::uniform_real_distribution<double> unif(-radius, radius);
  CVec z(dim);
  for (int j = 0; j < dim; ++j) {
    z(j) = std::complex<double>(unif(rng), unif(rng));
    // Keep coordinates separated so quotient kernels stay off their
    // singular sets.
    z(j) += std::complex<double>(0.12 * (j + 1), -0.07 * (j + 1));
  }
  return z;
}

void bench_symmetrized_det(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const bergq::KernelOracle kernel = bergq::symmetrized_kernel_det(d, 2.0);
  std::mt19937_64 rng(7);
  const CVec z = sample_point(rng, d, 0.25);
  const CVec w = sample_point(rng, d, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(z, w));
  }
}
BENCHMARK(bench_symmetrized_det)->Arg(2)->Arg(3)->Arg(4);

void bench_symmetrized_perm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const bergq::KernelOracle kernel = bergq::symmetrized_kernel_perm(d, 2.0);
  std::mt19937_64 rng(11);
  const CVec z = sample_point(rng, d, 0.25);
  const CVec w = sample_point(rng, d, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(z, w));
  }
}
BENCHMARK(bench_symmetrized_perm)->Arg(2)->Arg(3)->Arg(4);

void bench_group_sum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const bergq::FiniteGroup group = bergq::symmetric_group(d);
  const bergq::KernelOracle kernel = bergq::quotient_kernel_sign(
      group, bergq::symmetrization_map(d), bergq::base_kernel(bergq::polydisc(d)));
  std::mt19937_64 rng(13);
  const CVec z = sample_point(rng, d, 0.25);
  const CVec w = sample_point(rng, d, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(z, w));
  }
}
BENCHMARK(bench_group_sum)->Arg(2)->Arg(3)->Arg(4);

void bench_fat_hartogs(benchmark::State& state) {
  const int gamma = static_cast<int>(state.range(0));
  const bergq::KernelOracle kernel = bergq::fat_hartogs_kernel(gamma);
  const CVec z = (CVec(2) << std::complex<double>(0.3, 0.1),
                  std::complex<double>(0.55, -0.05))
                     .finished();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(z, z));
  }
}
BENCHMARK(bench_fat_hartogs)->Arg(1)->Arg(2)->Arg(3);

void bench_ellipsoid(benchmark::State& state) {
  const bergq::KernelOracle kernel = bergq::ellipsoid_kernel(
      static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const CVec z = (CVec(2) << std::complex<double>(0.35, 0.05),
                  std::complex<double>(0.25, -0.1))
                     .finished();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(z, z));
  }
}
BENCHMARK(bench_ellipsoid)->Args({2, 1})->Args({3, 2});

void bench_permanent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bergq::CMat m(n, n);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::complex<double>(unif(rng), unif(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergq::permanent(m));
  }
}
BENCHMARK(bench_permanent)->Arg(4)->Arg(6)->Arg(8);

void bench_mc_integrate(benchmark::State& state) {
  const auto domain = bergq::polydisc(2);
  const auto f = [](const CVec& z) { return z(0) * std::conj(z(0)) * z(1); };
  const auto n = static_cast<std::size_t>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bergq::mc_integrate(domain, f, bergq::WeightSpec::unit(), n, 42, threads));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}
BENCHMARK(bench_mc_integrate)->Args({100000, 1})->Args({100000, 4});

void bench_smith_normal_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long long> entry(-9, 9);
  std::vector<bergq::IMat> mats;
  while (mats.size() < 64) {
    bergq::IMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
    try {
      if (bergq::int_det(a) == 0) continue;
    } catch (const bergq::invalid_input_error&) {
      continue;
    }
    mats.push_back(a);
  }
  std::size_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergq::smith_normal_form(mats[idx]));
    idx = (idx + 1) % mats.size();
  }
}
BENCHMARK(bench_smith_normal_form)->Arg(3)->Arg(4)->Arg(5);

void bench_group_construction(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bergq::symmetric_group(d));
  }
}
BENCHMARK(bench_group_construction)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
