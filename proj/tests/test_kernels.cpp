// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "bergq/errors.hpp"
#include "bergq/group.hpp"
#include "bergq/intlin.hpp"
#include "bergq/kernels.hpp"
#include "bergq/maps.hpp"
#include "bergq/mpoly.hpp"

using namespace bergq;

namespace {

CVec point2(cplx a, cplx b) {
  CVec z(2);
  z << a, b;
  return z;
}

IMat mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IMat m(2, 2);
  m << a, b, c, d;
  return m;
}

double rel_err(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

/// Permutation-sum permanent for cross-checking (n <= 4).
cplx naive_permanent(const CMat& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  cplx sum{0.0, 0.0};
  do {
    cplx prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= m(i, idx[static_cast<std::size_t>(i)]);
    sum += prod;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return sum;
}

std::mt19937_64 rng(12345);

cplx rand_cplx(double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return cplx{u(rng), u(rng)};
}

CVec rand_point(int dim, double radius) {
  CVec z(dim);
  for (int i = 0; i < dim; ++i) z[i] = rand_cplx(radius);
  return z;
}

}  // namespace

TEST_CASE("base kernels") {
  const KernelOracle pd = base_kernel(polydisc(2));
  CHECK(std::abs(pd(CVec::Zero(2), CVec::Zero(2)) - cplx{1.0, 0.0}) < 1e-14);

  // prod (1 - z_j conj(w_j))^{-2} at a concrete pair.
  const CVec z = point2(cplx{0.5, 0.0}, cplx{0.0, 0.5});
  const CVec w = point2(cplx{0.25, 0.0}, cplx{0.0, -0.5});
  const cplx d1 = 1.0 - z[0] * std::conj(w[0]);
  const cplx d2 = 1.0 - z[1] * std::conj(w[1]);
  CHECK(rel_err(pd(z, w), 1.0 / (d1 * d1 * d2 * d2)) < 1e-14);

  const KernelOracle bl = base_kernel(ball(2));
  // (1 - <z, w>)^{-3} with <z, w> = sum z_j conj(w_j).
  const cplx inner = z[0] * std::conj(w[0]) + z[1] * std::conj(w[1]);
  CHECK(rel_err(bl(z, w), std::pow(1.0 - inner, -3.0)) < 1e-13);

  CHECK_THROWS_AS(base_kernel(polydisc(2), 1.0), invalid_input_error);
  CHECK_THROWS_AS(base_kernel(ball(2), 3.0), invalid_input_error);
  CHECK_THROWS_AS(pd(CVec::Zero(3), CVec::Zero(2)), invalid_input_error);
}

TEST_CASE("spot values from independent evaluations") {
  const CVec p = point2(cplx{0.5, 0.0}, cplx{0.0, 0.0});
  const CVec q = point2(cplx{0.0, 0.0}, cplx{0.5, 0.0});
  CHECK(rel_err(symmetrized_kernel_det(2, 2.0)(p, p), cplx{28.0 / 9.0, 0}) < 1e-9);
  CHECK(rel_err(symmetrized_kernel_perm(2, 2.0)(p, p), cplx{25.0 / 9.0, 0}) < 1e-9);
  CHECK(rel_err(dihedral_kernels(2).first(p, p), cplx{376.0 / 225.0, 0}) < 1e-9);
  CHECK(rel_err(fat_hartogs_kernel(1)(q, q), cplx{64.0 / 9.0, 0}) < 1e-9);
  CHECK(rel_err(ellipsoid_kernel(2, 1)(p, p), cplx{6272.0 / 3375.0, 0}) < 1e-9);
}

TEST_CASE("series-summed anchors for the monomial family") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const CVec a = point2(cplx{0.0, 0.0}, cplx{inv_sqrt2, 0.0});
  CHECK(rel_err(fat_hartogs_kernel(2)(a, a), cplx{40.0 / 9.0, 0}) < 1e-12);

  const CVec b = point2(cplx{0.3, 0.0}, cplx{0.6, 0.0});
  CHECK(std::abs(fat_hartogs_kernel(2)(b, b) - cplx{6.564935879380, 0}) < 1e-9);

  const CVec c = point2(cplx{0.25, 0.0}, cplx{0.55, 0.0});
  CHECK(std::abs(fat_hartogs_kernel(3)(c, c) - cplx{14.474014235654, 0}) < 1e-9);
}

TEST_CASE("Hermitian symmetry and diagonal positivity") {
  std::vector<std::pair<std::string, KernelOracle>> kernels;
  kernels.emplace_back("sym-det", symmetrized_kernel_det(2, 2.0));
  kernels.emplace_back("sym-perm", symmetrized_kernel_perm(2, 3.0));
  kernels.emplace_back("dihedral-sign", dihedral_kernels(3).first);
  kernels.emplace_back("dihedral-trivial", dihedral_kernels(3).second);
  kernels.emplace_back("fat-hartogs", fat_hartogs_kernel(2));
  kernels.emplace_back("ellipsoid", ellipsoid_kernel(2, 2));
  for (auto& [name, k] : kernels) {
    CAPTURE(name);
    for (int t = 0; t < 10; ++t) {
      const double radius = (name == "ellipsoid") ? 0.45 : 0.65;
      CVec z = rand_point(2, radius);
      CVec w = rand_point(2, radius);
      // Stay clear of the singular loci of the fiber coordinates.
      z[1] += cplx{1.2 * radius, 0.0};
      w[1] += cplx{1.2 * radius, 0.0};
      z[0] -= cplx{1.2 * radius, 0.0};
      w[0] -= cplx{1.2 * radius, 0.0};
      z *= 0.5;
      w *= 0.5;
      CHECK(std::abs(k(z, w) - std::conj(k(w, z))) <=
            1e-10 * std::max(1.0, std::abs(k(z, w))));
      CHECK(k(z, z).real() > 0.0);
      CHECK(std::abs(k(z, z).imag()) <= 1e-10 * k(z, z).real());
    }
  }
}

TEST_CASE("permanent") {
  CMat m(2, 2);
  m << cplx{1, 0}, cplx{2, 0}, cplx{3, 0}, cplx{4, 0};
  CHECK(std::abs(permanent(m) - cplx{10.0, 0.0}) < 1e-13);

  for (int n = 1; n <= 4; ++n) {
    for (int t = 0; t < 5; ++t) {
      CMat r(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = rand_cplx(1.0);
      CHECK(rel_err(permanent(r), naive_permanent(r)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(permanent(CMat::Identity(13, 13)), invalid_input_error);
}

TEST_CASE("closed forms equal averaged sums at hand-picked points") {
  SUBCASE("symmetrized polydisc, alternating part") {
    const FiniteGroup s2 = symmetric_group(2);
    const KernelOracle avg =
        quotient_kernel_sign(s2, symmetrization_map(2), base_kernel(polydisc(2)));
    const KernelOracle closed = symmetrized_kernel_det(2, 2.0);
    const CVec z = point2(cplx{0.5, 0.1}, cplx{-0.3, 0.2});
    const CVec w = point2(cplx{0.2, -0.4}, cplx{0.6, 0.0});
    CHECK(rel_err(closed(z, w), avg(z, w)) < 1e-10);
  }
  SUBCASE("symmetrized polydisc, symmetric part") {
    const FiniteGroup s2 = symmetric_group(2);
    const KernelOracle avg =
        quotient_kernel_sum(s2, trivial_character(s2),
                            MultiPoly::constant(2, cplx{1.0, 0.0}), base_kernel(polydisc(2)));
    const KernelOracle closed = symmetrized_kernel_perm(2, 2.0);
    const CVec z = point2(cplx{0.5, 0.1}, cplx{-0.3, 0.2});
    const CVec w = point2(cplx{0.2, -0.4}, cplx{0.6, 0.0});
    CHECK(rel_err(closed(z, w), avg(z, w)) < 1e-10);
  }
  SUBCASE("monomial polyhedron vs deck-group sum") {
    for (int gamma : {1, 2, 3}) {
      CAPTURE(gamma);
      const KernelOracle closed = fat_hartogs_kernel(gamma);
      const KernelOracle general = monomial_polyhedron_kernel(mat2(gamma, -1, 0, 1));
      const CVec z = point2(cplx{0.4, 0.1}, cplx{0.55, -0.1});
      const CVec w = point2(cplx{-0.3, 0.2}, cplx{0.5, 0.15});
      CHECK(rel_err(closed(z, w), general(z, w)) < 1e-10);
    }
  }
  SUBCASE("ellipsoid vs averaged ball kernel") {
    const FiniteGroup g = cyclic_product_group({2, 1});
    const KernelOracle closed = ellipsoid_kernel(2, 1);
    const KernelOracle avg =
        rudin_ball_kernel(g, identity_automorphism(2), power_map({2, 1}));
    const CVec z = point2(cplx{0.4, 0.1}, cplx{-0.3, 0.2});
    const CVec w = point2(cplx{0.35, -0.2}, cplx{0.25, 0.1});
    CHECK(rel_err(closed(z, w), avg(z, w)) < 1e-9);
  }
}

TEST_CASE("averaged kernel with a conjugating automorphism stays Hermitian") {
  const FiniteGroup g = cyclic_product_group({2, 2});
  const CVec a = point2(cplx{0.2, 0.1}, cplx{-0.15, 0.05});
  const BallAutomorphism psi = ball_automorphism(a, CMat::Identity(2, 2));
  const KernelOracle k = rudin_ball_kernel(g, psi, power_map({2, 2}));
  for (int t = 0; t < 5; ++t) {
    const CVec z = rand_point(2, 0.4);
    const CVec w = rand_point(2, 0.4);
    const cplx kzw = k(z, w);
    CHECK(std::abs(kzw - std::conj(k(w, z))) <= 1e-9 * std::max(1.0, std::abs(kzw)));
  }
}

TEST_CASE("degenerations collapse to the base kernels") {
  SUBCASE("unit-exponent ellipsoid is the ball") {
    const KernelOracle e = ellipsoid_kernel(1, 1);
    const KernelOracle b = base_kernel(ball(2));
    for (int t = 0; t < 5; ++t) {
      const CVec z = rand_point(2, 0.5);
      const CVec w = rand_point(2, 0.5);
      CHECK(rel_err(e(z, w), b(z, w)) < 1e-12);
    }
  }
  SUBCASE("identity exponent matrix is the polydisc") {
    const KernelOracle m = monomial_polyhedron_kernel(IMat::Identity(2, 2));
    const KernelOracle p = base_kernel(polydisc(2));
    for (int t = 0; t < 5; ++t) {
      const CVec z = rand_point(2, 0.6);
      const CVec w = rand_point(2, 0.6);
      CHECK(rel_err(m(z, w), p(z, w)) < 1e-12);
    }
  }
  SUBCASE("character reassembly recovers the base kernel") {
    const FiniteGroup g = cyclic_product_group({2, 3});
    const KernelOracle base = base_kernel(polydisc(2));
    const KernelOracle re = abelian_kernel_reassembly(g, base);
    const CVec z = point2(cplx{0.5, 0.2}, cplx{-0.4, 0.3});
    const CVec w = point2(cplx{0.3, -0.3}, cplx{0.5, 0.1});
    CHECK(rel_err(re(z, w), base(z, w)) < 1e-10);
  }
}

TEST_CASE("input validation and singular loci") {
  CHECK_THROWS_AS(symmetrized_kernel_det(13, 2.0), invalid_input_error);
  CHECK_THROWS_AS(symmetrized_kernel_det(2, 1.0), invalid_input_error);
  CHECK_THROWS_AS(dihedral_kernels(1), invalid_input_error);
  CHECK_THROWS_AS(fat_hartogs_kernel(0), invalid_input_error);
  CHECK_THROWS_AS(ellipsoid_kernel(0, 1), invalid_input_error);
  CHECK_THROWS_AS(monomial_polyhedron_kernel(mat2(1, 1, 1, 1)), invalid_input_error);
  // Negative entries of A = adj(B) make the polyhedron inadmissible.
  CHECK_THROWS_AS(monomial_polyhedron_kernel(mat2(-1, 0, 0, 1)), invalid_input_error);

  // Coincident coordinates sit on the Vandermonde zero set.
  const CVec diag = point2(cplx{0.3, 0.0}, cplx{0.3, 0.0});
  CHECK_THROWS_AS(symmetrized_kernel_det(2, 2.0)(diag, diag), near_singular_error);

  // The monomial prefactor blows up on the deleted axis.
  const CVec axis = point2(cplx{0.4, 0.0}, cplx{0.0, 0.0});
  CHECK_THROWS_AS(fat_hartogs_kernel(2)(axis, axis), near_singular_error);

  // The relative invariant denominator of the averaged form.
  const FiniteGroup s2 = symmetric_group(2);
  const KernelOracle avg =
      quotient_kernel_sign(s2, symmetrization_map(2), base_kernel(polydisc(2)));
  CHECK_THROWS_AS(avg(diag, diag), near_singular_error);

  // Character reassembly requires a complete one-dimensional dual.
  CHECK_THROWS_AS(abelian_kernel_reassembly(symmetric_group(3), base_kernel(polydisc(3))),
                  invalid_input_error);
}
