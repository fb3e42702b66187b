// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "bergq/errors.hpp"
#include "bergq/group.hpp"
#include "bergq/intlin.hpp"
#include "bergq/types.hpp"

using namespace bergq;

namespace {

IMat mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IMat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("checked integer arithmetic") {
  CHECK(checked_mul(1000000, 1000000) == 1000000000000LL);
  CHECK(checked_add(-5, 7) == 2);
  CHECK(checked_sub(0, 9) == -9);
  const std::int64_t big = INT64_MAX / 2 + 1;
  CHECK_THROWS_AS(checked_mul(big, 3), invalid_input_error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), invalid_input_error);
}

TEST_CASE("integer determinant") {
  CHECK(int_det(mat2(1, 2, 3, 4)) == -2);
  CHECK(int_det(IMat::Identity(5, 5)) == 1);
  IMat m(3, 3);
  m << 2, 0, 1, 1, 3, -1, 0, 4, 2;
  // 2*(6+4) - 0 + 1*(4-0) = 24
  CHECK(int_det(m) == 24);

  CHECK_THROWS_AS(int_det(IMat::Identity(9, 9)), invalid_input_error);
  IMat rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(int_det(rect), invalid_input_error);
}

TEST_CASE("adjugate examples") {
  CHECK(adjugate(mat2(3, -1, 0, 1)) == mat2(1, 1, 0, 3));
  CHECK(adjugate(mat2(2, 0, 0, 3)) == mat2(3, 0, 0, 2));
  CHECK(adjugate(IMat::Identity(4, 4)) == IMat::Identity(4, 4));
  IMat one(1, 1);
  one << 7;
  IMat unit(1, 1);
  unit << 1;
  CHECK(adjugate(one) == unit);
}

TEST_CASE("adjugate identity on random matrices") {
  std::mt19937_64 rng(2024);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  for (int trial = 0; trial < 50; ++trial) {
    const int n = draw(1, 4);
    IMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = draw(-5, 5);
    const std::int64_t det = int_det(b);
    const IMat prod = b * adjugate(b);
    CHECK(prod == (det * IMat::Identity(n, n)).eval());
  }
}

TEST_CASE("Smith normal form examples") {
  {
    const SNFResult s = smith_normal_form(mat2(2, 0, 0, 3));
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 6});
  }
  {
    const SNFResult s = smith_normal_form(IMat::Identity(2, 2));
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 1});
  }
  {
    const IMat a = mat2(1, 1, 0, 3);
    const SNFResult s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 3});
    CHECK((s.p * s.d * s.q).eval() == a);
    CHECK(std::llabs(int_det(s.p)) == 1);
    CHECK(std::llabs(int_det(s.q)) == 1);
  }
  CHECK_THROWS_AS(smith_normal_form(mat2(1, 2, 2, 4)), invalid_input_error);
}

TEST_CASE("Smith normal form invariants on random matrices") {
  std::mt19937_64 rng(77);
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  int tested = 0;
  while (tested < 60) {
    const int n = draw(1, 4);
    IMat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = draw(-6, 6);
    const std::int64_t det = int_det(a);
    if (det == 0) continue;
    ++tested;
    const SNFResult s = smith_normal_form(a);
    CHECK((s.p * s.d * s.q).eval() == a);
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] > 0);
      if (i + 1 < s.diagonal.size()) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      prod = checked_mul(prod, s.diagonal[i]);
    }
    CHECK(prod == std::llabs(det));
  }
}

TEST_CASE("deck group of a monomial map") {
  SUBCASE("triangular example has three rotations") {
    const FiniteGroup deck = monomial_deck_group(mat2(1, 1, 0, 3));
    REQUIRE(deck.order() == 3);
    // Elements diag(w3^{-k}, w3^k), k = 0, 1, 2.
    for (int k = 0; k < 3; ++k) {
      CMat m = CMat::Zero(2, 2);
      m(0, 0) = unit_root(-k, 3);
      m(1, 1) = unit_root(k, 3);
      CHECK(deck.find(m) >= 0);
    }
  }
  SUBCASE("identity matrix gives the trivial deck group") {
    CHECK(monomial_deck_group(IMat::Identity(2, 2)).order() == 1);
  }
  SUBCASE("diag(2,2) gives the four sign patterns") {
    const FiniteGroup deck = monomial_deck_group(mat2(2, 0, 0, 2));
    REQUIRE(deck.order() == 4);
    for (int s0 : {1, -1}) {
      for (int s1 : {1, -1}) {
        CMat m = CMat::Zero(2, 2);
        m(0, 0) = cplx{static_cast<double>(s0), 0.0};
        m(1, 1) = cplx{static_cast<double>(s1), 0.0};
        CHECK(deck.find(m) >= 0);
      }
    }
  }
  SUBCASE("every element satisfies the monomial condition") {
    const IMat a = mat2(2, 1, 0, 3);
    const FiniteGroup deck = monomial_deck_group(a);
    CHECK(deck.order() == std::llabs(int_det(a)));
    for (const GroupElement& el : deck.elements) {
      for (int i = 0; i < 2; ++i) {
        cplx prod{1.0, 0.0};
        for (int j = 0; j < 2; ++j) {
          prod *= std::pow(el.matrix(j, j), static_cast<double>(a(i, j)));
        }
        CHECK(std::abs(prod - cplx{1.0, 0.0}) < 1e-10);
      }
    }
  }
  SUBCASE("order cap raises group_too_large") {
    CHECK_THROWS_AS(monomial_deck_group(mat2(101, 0, 0, 101)), group_too_large_error);
  }
  SUBCASE("singular matrix is rejected") {
    CHECK_THROWS_AS(monomial_deck_group(mat2(1, 1, 1, 1)), invalid_input_error);
  }
}
