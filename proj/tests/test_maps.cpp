// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bergq/errors.hpp"
#include "bergq/group.hpp"
#include "bergq/maps.hpp"
#include "bergq/mpoly.hpp"
#include "bergq/types.hpp"

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

}  // namespace

TEST_CASE("domain descriptions") {
  const DomainSpec pd = polydisc(2);
  CHECK(pd.dim == 2);
  CHECK(pd.measure_normalization() == doctest::Approx(kPi * kPi).epsilon(1e-14));
  CHECK(pd.contains(point2(cplx{0.9, 0.0}, cplx{0.0, 0.9})));
  CHECK_FALSE(pd.contains(point2(cplx{1.1, 0.0}, cplx{0.0, 0.0})));

  const DomainSpec b = ball(2);
  CHECK(b.measure_normalization() == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
  CHECK(b.contains(point2(cplx{0.7, 0.0}, cplx{0.0, 0.7})));
  CHECK_FALSE(b.contains(point2(cplx{0.9, 0.0}, cplx{0.0, 0.9})));
  CHECK(polydisc(3).label() != ball(3).label());

  CHECK_THROWS_AS(polydisc(0), invalid_input_error);
  CHECK_THROWS_AS(ball(-1), invalid_input_error);
}

TEST_CASE("polynomial quotient maps evaluate correctly") {
  // Elementary symmetric functions of (1, 2): e1 = 3, e2 = 2.
  const CVec u = symmetrization_map(2).eval(point2(cplx{1, 0}, cplx{2, 0}));
  CHECK(std::abs(u[0] - cplx{3, 0}) < 1e-14);
  CHECK(std::abs(u[1] - cplx{2, 0}) < 1e-14);

  // Elementary symmetric functions of (1, 2, 3): (6, 11, 6).
  CVec z3(3);
  z3 << cplx{1, 0}, cplx{2, 0}, cplx{3, 0};
  const CVec u3 = symmetrization_map(3).eval(z3);
  CHECK(std::abs(u3[0] - cplx{6, 0}) < 1e-13);
  CHECK(std::abs(u3[1] - cplx{11, 0}) < 1e-13);
  CHECK(std::abs(u3[2] - cplx{6, 0}) < 1e-13);

  // Dihedral basic invariants (z1^k + z2^k, z1 z2).
  const CVec ud = dihedral_map(3).eval(point2(cplx{2, 0}, cplx{-1, 0}));
  CHECK(std::abs(ud[0] - cplx{7, 0}) < 1e-13);
  CHECK(std::abs(ud[1] - cplx{-2, 0}) < 1e-13);

  // Power map raises coordinates.
  const CVec up = power_map({2, 3}).eval(point2(cplx{2, 0}, cplx{-1, 0}));
  CHECK(std::abs(up[0] - cplx{4, 0}) < 1e-13);
  CHECK(std::abs(up[1] - cplx{-1, 0}) < 1e-13);

  CHECK(identity_map(3).eval(z3).isApprox(z3));
  CHECK_THROWS_AS(power_map({0, 2}), invalid_input_error);
}

TEST_CASE("monomial maps from integer matrices") {
  // Rows (1,1) and (0,3): z -> (z1 z2, z2^3).
  const PolyMapExpr phi = monomial_map(mat2(1, 1, 0, 3));
  const CVec u = phi.eval(point2(cplx{2, 0}, cplx{1, 0}));
  CHECK(std::abs(u[0] - cplx{2, 0}) < 1e-14);
  CHECK(std::abs(u[1] - cplx{1, 0}) < 1e-14);

  // J = det [[z2, z1], [0, 3 z2^2]] = 3 z2^3.
  CHECK(jacobian_det_poly(phi) == MultiPoly::monomial(2, {0, 3}, cplx{3.0, 0.0}));

  CHECK_THROWS_AS(monomial_map(mat2(1, -1, 0, 1)), invalid_input_error);
}

TEST_CASE("finite differences agree with exact polynomial Jacobians") {
  const PolyMapExpr theta = symmetrization_map(3);
  const MultiPoly jpoly = jacobian_det_poly(theta);
  CVec z(3);
  z << cplx{0.3, 0.1}, cplx{-0.2, 0.4}, cplx{0.5, -0.3};
  const cplx exact = poly_eval(jpoly, z);
  const cplx fd = fd_jacobian_det([&theta](const CVec& v) { return theta.eval(v); }, z);
  CHECK(std::abs(exact - fd) < 1e-7);
}

TEST_CASE("ball automorphisms") {
  SUBCASE("identity automorphism") {
    const BallAutomorphism id = identity_automorphism(2);
    CHECK(id.is_identity());
    const CVec z = point2(cplx{0.2, 0.1}, cplx{-0.3, 0.2});
    CHECK(id.eval(z).isApprox(z));
    CHECK(std::abs(id.jacobian(z) - cplx{1.0, 0.0}) < 1e-14);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(ball_automorphism(point2(cplx{1.0, 0.0}, cplx{0.0, 0.0}),
                                      CMat::Identity(2, 2)),
                    invalid_input_error);
    CMat shear = CMat::Identity(2, 2);
    shear(0, 1) = cplx{0.5, 0.0};
    CHECK_THROWS_AS(ball_automorphism(point2(cplx{0.3, 0.0}, cplx{0.0, 0.0}), shear),
                    invalid_input_error);
  }
  SUBCASE("Moebius part swaps the center and the origin") {
    const CVec a = point2(cplx{0.4, 0.1}, cplx{-0.2, 0.3});
    const BallAutomorphism psi = ball_automorphism(a, CMat::Identity(2, 2));
    CHECK(psi.eval(CVec::Zero(2)).isApprox(a, 1e-12));
    CHECK(psi.eval(a).norm() < 1e-12);
  }
  SUBCASE("inverse round trip with a nontrivial unitary part") {
    const CVec a = point2(cplx{0.3, -0.2}, cplx{0.1, 0.25});
    CMat u(2, 2);
    const double c = std::cos(0.7), s = std::sin(0.7);
    u << cplx{c, 0}, cplx{-s, 0}, cplx{s, 0}, cplx{c, 0};
    const BallAutomorphism psi = ball_automorphism(a, u);
    const CVec z = point2(cplx{0.15, 0.3}, cplx{-0.25, -0.1});
    CHECK(psi.inverse_eval(psi.eval(z)).isApprox(z, 1e-12));
    CHECK(psi.eval(psi.inverse_eval(z)).isApprox(z, 1e-12));
  }
  SUBCASE("closed-form Jacobians match finite differences") {
    const CVec a = point2(cplx{0.3, -0.2}, cplx{0.1, 0.25});
    CMat u(2, 2);
    const double c = std::cos(0.4), s = std::sin(0.4);
    u << cplx{c, 0}, cplx{s, 0}, cplx{-s, 0}, cplx{c, 0};
    const BallAutomorphism psi = ball_automorphism(a, u);
    const CVec z = point2(cplx{0.2, 0.15}, cplx{-0.1, 0.3});
    const cplx jf = fd_jacobian_det([&psi](const CVec& v) { return psi.eval(v); }, z);
    CHECK(std::abs(psi.jacobian(z) - jf) < 1e-7);
    const cplx jb =
        fd_jacobian_det([&psi](const CVec& v) { return psi.inverse_eval(v); }, z);
    CHECK(std::abs(psi.inverse_jacobian(z) - jb) < 1e-7);
  }
  SUBCASE("one-dimensional closed form") {
    // J(z) = -(1 - |a|^2) / (1 - z conj(a))^2 for the involutive factor.
    CVec a(1);
    a << cplx{0.5, 0.0};
    const BallAutomorphism psi = ball_automorphism(a, CMat::Identity(1, 1));
    CVec z(1);
    z << cplx{0.2, 0.3};
    const cplx denom = 1.0 - z[0] * std::conj(a[0]);
    const cplx expected = -(1.0 - 0.25) / (denom * denom);
    CHECK(std::abs(psi.jacobian(z) - expected) < 1e-12);
  }
}

TEST_CASE("group elements conjugated through an automorphism") {
  SUBCASE("identity automorphism reduces to the inverse matrix action") {
    const FiniteGroup g = cyclic_product_group({4, 2});
    const BallAutomorphism id = identity_automorphism(2);
    const CVec z = point2(cplx{0.2, 0.1}, cplx{-0.3, 0.2});
    for (const GroupElement& el : g.elements) {
      const ConjugatedMap t = conjugated_map(id, el);
      CHECK(t.eval(z).isApprox((el.inverse * z).eval(), 1e-12));
      CHECK(std::abs(t.jacobian(z) - cplx{1.0, 0.0} / el.det) < 1e-12);
    }
  }
  SUBCASE("chain-rule Jacobian matches finite differences") {
    const FiniteGroup g = cyclic_product_group({3, 2});
    const CVec a = point2(cplx{0.25, 0.1}, cplx{-0.15, 0.2});
    const BallAutomorphism psi = ball_automorphism(a, CMat::Identity(2, 2));
    const CVec z = point2(cplx{0.3, -0.1}, cplx{0.2, 0.25});
    for (const GroupElement& el : g.elements) {
      const ConjugatedMap t = conjugated_map(psi, el);
      const cplx fd = fd_jacobian_det([&t](const CVec& v) { return t.eval(v); }, z);
      CHECK(std::abs(t.jacobian(z) - fd) < 1e-7);
    }
  }
  SUBCASE("assignment reverses products") {
    const FiniteGroup g = cyclic_product_group({4});
    const CVec a = CVec::Constant(1, cplx{0.3, 0.1});
    const BallAutomorphism psi = ball_automorphism(a, CMat::Identity(1, 1));
    CVec z(1);
    z << cplx{0.2, -0.3};
    for (const GroupElement& sig : g.elements) {
      for (const GroupElement& tau : g.elements) {
        const int prod = g.find(tau.matrix * sig.matrix);
        REQUIRE(prod >= 0);
        const ConjugatedMap lhs_outer = conjugated_map(psi, sig);
        const ConjugatedMap lhs_inner = conjugated_map(psi, tau);
        const ConjugatedMap rhs =
            conjugated_map(psi, g.elements[static_cast<std::size_t>(prod)]);
        CHECK(lhs_outer.eval(lhs_inner.eval(z)).isApprox(rhs.eval(z), 1e-11));
      }
    }
  }
}

TEST_CASE("integration weights") {
  const CVec z = point2(cplx{0.3, 0.2}, cplx{-0.4, 0.1});
  SUBCASE("unit and scaled") {
    CHECK(weight_eval(WeightSpec::unit(), z) == doctest::Approx(1.0));
    CHECK(weight_eval(WeightSpec::unit().scaled(2.5), z) == doctest::Approx(2.5));
  }
  SUBCASE("polydisc family evaluates the raw radial factor") {
    const double w = weight_eval(WeightSpec::polydisc_lambda(3.0), z);
    const double expect = (1.0 - std::norm(z[0])) * (1.0 - std::norm(z[1]));
    CHECK(w == doctest::Approx(expect).epsilon(1e-12));
    CHECK_THROWS_AS(WeightSpec::polydisc_lambda(1.0), invalid_input_error);
  }
  SUBCASE("relative weight reduces to the pullback for the sign invariant") {
    // For the coordinate transposition, ell equals J_theta, so the relative
    // factor |ell|^2 / |J|^2 is identically one.
    const PolyMapExpr theta = symmetrization_map(2);
    const MultiPoly ell = MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
    const WeightSpec rel =
        WeightSpec::relative(WeightSpec::polydisc_lambda(3.0), ell, theta);
    const WeightSpec pull = WeightSpec::pullback(WeightSpec::polydisc_lambda(3.0), theta);
    CHECK(weight_eval(rel, z) == doctest::Approx(weight_eval(pull, z)).epsilon(1e-12));
  }
  SUBCASE("relative weight guards the Jacobian zero set") {
    const PolyMapExpr theta = symmetrization_map(2);
    const MultiPoly ell = MultiPoly::constant(2, cplx{1.0, 0.0});
    const WeightSpec rel = WeightSpec::relative(WeightSpec::unit(), ell, theta);
    const CVec diag = point2(cplx{0.3, 0.1}, cplx{0.3, 0.1});
    CHECK_THROWS_AS(weight_eval(rel, diag), near_singular_error);
  }
}
