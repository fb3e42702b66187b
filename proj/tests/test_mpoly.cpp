// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include "bergq/errors.hpp"
#include "bergq/mpoly.hpp"

using namespace bergq;

namespace {

CVec point2(cplx a, cplx b) {
  CVec z(2);
  z << a, b;
  return z;
}

CVec point3(cplx a, cplx b, cplx c) {
  CVec z(3);
  z << a, b, c;
  return z;
}

}  // namespace

TEST_CASE("monomial and constant factories normalize") {
  CHECK(MultiPoly::zero(3).is_zero());
  CHECK(MultiPoly::monomial(2, {1, 0}, cplx{0.0, 0.0}).is_zero());
  CHECK(MultiPoly::constant(2, cplx{0.0, 0.0}).is_zero());
  CHECK(MultiPoly::zero(2).total_degree() == -1);
  CHECK(MultiPoly::constant(2, cplx{3.0, 0.0}).total_degree() == 0);
  CHECK(MultiPoly::monomial(2, {2, 3}, cplx{1.0, 0.0}).total_degree() == 5);
}

TEST_CASE("arithmetic expands exactly") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);

  // (x + 2y)^2 = x^2 + 4xy + 4y^2
  const MultiPoly p = (x + 2.0 * y).pow(2);
  CHECK(p.coeff({2, 0}) == cplx{1.0, 0.0});
  CHECK(p.coeff({1, 1}) == cplx{4.0, 0.0});
  CHECK(p.coeff({0, 2}) == cplx{4.0, 0.0});
  CHECK(p.coeff({0, 0}) == cplx{0.0, 0.0});
  CHECK(p.terms.size() == 3);

  // Cancellation removes the term entirely.
  const MultiPoly q = p - 4.0 * x * y;
  CHECK(q.coeff({1, 1}) == cplx{0.0, 0.0});
  CHECK(q.terms.size() == 2);

  // (1 + x)^3 has binomial coefficients.
  const MultiPoly cube = (MultiPoly::constant(2, cplx{1.0, 0.0}) + x).pow(3);
  CHECK(cube.coeff({0, 0}) == cplx{1.0, 0.0});
  CHECK(cube.coeff({1, 0}) == cplx{3.0, 0.0});
  CHECK(cube.coeff({2, 0}) == cplx{3.0, 0.0});
  CHECK(cube.coeff({3, 0}) == cplx{1.0, 0.0});

  CHECK((-p) + p == MultiPoly::zero(2));
}

TEST_CASE("poly_eval matches Horner-free expansion") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly p = x.pow(2) * y + 2.0 * y - MultiPoly::constant(2, cplx{5.0, 0.0});
  const cplx v = poly_eval(p, point2(cplx{2.0, 0.0}, cplx{3.0, 0.0}));
  CHECK(std::abs(v - cplx{13.0, 0.0}) < 1e-14);  // 4*3 + 6 - 5

  CHECK_THROWS_AS(poly_eval(p, CVec::Zero(3)), invalid_input_error);
}

TEST_CASE("elementary symmetric polynomials") {
  // e_2(1, 2, 3) = 1*2 + 1*3 + 2*3 = 11
  const cplx e2 = poly_eval(elementary_symmetric(3, 2),
                            point3(cplx{1, 0}, cplx{2, 0}, cplx{3, 0}));
  CHECK(std::abs(e2 - cplx{11.0, 0.0}) < 1e-14);

  CHECK(elementary_symmetric(3, 0) == MultiPoly::constant(3, cplx{1.0, 0.0}));
  CHECK(elementary_symmetric(4, 4) == MultiPoly::monomial(4, {1, 1, 1, 1}, cplx{1.0, 0.0}));
  CHECK(elementary_symmetric(3, 1).terms.size() == 3);
  CHECK_THROWS_AS(elementary_symmetric(3, 4), invalid_input_error);
  CHECK_THROWS_AS(elementary_symmetric(3, -1), invalid_input_error);
}

TEST_CASE("partial derivatives are exact") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  // d/dx (x^2 y^3) = 2 x y^3
  const MultiPoly d = poly_partial(x.pow(2) * y.pow(3), 0);
  CHECK(d == MultiPoly::monomial(2, {1, 3}, cplx{2.0, 0.0}));
  CHECK(poly_partial(y, 0).is_zero());
  CHECK_THROWS_AS(poly_partial(x, 2), invalid_input_error);
  CHECK_THROWS_AS(poly_partial(x, -1), invalid_input_error);
}

TEST_CASE("compose_linear substitutes z -> M z") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  CMat swap(2, 2);
  swap << cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0};
  // (x^2 y) with x -> y, y -> x gives y^2 x.
  CHECK((x.pow(2) * y).compose_linear(swap) == y.pow(2) * x);

  CMat scale(2, 2);
  scale << cplx{2, 0}, cplx{0, 0}, cplx{0, 0}, cplx{3, 0};
  CHECK((x * y).compose_linear(scale) == MultiPoly::monomial(2, {1, 1}, cplx{6.0, 0.0}));
}

TEST_CASE("jacobian determinant polynomials") {
  // (x^2, y^3): J = det diag(2x, 3y^2) = 6 x y^2.
  PolyMapExpr f;
  f.dim = 2;
  f.components = {MultiPoly::variable(2, 0).pow(2), MultiPoly::variable(2, 1).pow(3)};
  CHECK(jacobian_det_poly(f) == MultiPoly::monomial(2, {1, 2}, cplx{6.0, 0.0}));

  PolyMapExpr id3;
  id3.dim = 3;
  id3.components = {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1),
                    MultiPoly::variable(3, 2)};
  CHECK(jacobian_det_poly(id3) == MultiPoly::constant(3, cplx{1.0, 0.0}));

  PolyMapExpr rect;
  rect.dim = 2;
  rect.components = {MultiPoly::variable(2, 0)};
  CHECK_THROWS_AS(jacobian_det_poly(rect), invalid_input_error);
}

TEST_CASE("PolyMapExpr evaluation") {
  PolyMapExpr f;
  f.dim = 2;
  f.components = {MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1),
                  MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1)};
  const CVec u = f.eval(point2(cplx{1, 0}, cplx{2, 0}));
  CHECK(std::abs(u[0] - cplx{3, 0}) < 1e-14);
  CHECK(std::abs(u[1] - cplx{2, 0}) < 1e-14);
  CHECK(f.codim() == 2);
}

TEST_CASE("JSON round trip") {
  const MultiPoly x = MultiPoly::variable(2, 0);
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly p = x.pow(3) * y - cplx{0.0, 2.5} * y.pow(2) +
                      MultiPoly::constant(2, cplx{1.0, -1.0});
  CHECK(poly_from_json(poly_to_json(p)) == p);

  // Duplicate exponent rows accumulate; zero sums vanish.
  const nlohmann::json dup = {
      {"dim", 1},
      {"terms",
       {{{"exp", {2}}, {"re", 1.0}, {"im", 0.0}}, {{"exp", {2}}, {"re", -1.0}, {"im", 0.0}}}}};
  CHECK(poly_from_json(dup).is_zero());

  CHECK_THROWS_AS(poly_from_json(nlohmann::json{{"dim", 2}}), invalid_input_error);
  const nlohmann::json bad_len = {{"dim", 2},
                                  {"terms", {{{"exp", {1}}, {"re", 1.0}, {"im", 0.0}}}}};
  CHECK_THROWS_AS(poly_from_json(bad_len), invalid_input_error);
  const nlohmann::json neg = {{"dim", 1},
                              {"terms", {{{"exp", {-1}}, {"re", 1.0}, {"im", 0.0}}}}};
  CHECK_THROWS_AS(poly_from_json(neg), invalid_input_error);
}

TEST_CASE("to_string renders every term") {
  const MultiPoly p =
      MultiPoly::variable(2, 0).pow(2) - MultiPoly::constant(2, cplx{1.0, 0.0});
  const std::string s = p.to_string();
  CHECK(s.find("z0") != std::string::npos);
  CHECK_FALSE(s.empty());
  CHECK(MultiPoly::zero(2).to_string() == "0");
}
