// SPDX-License-Identifier: MIT
#include "bergq/maps.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

constexpr double kJacobianGuard = 1e-9;
constexpr double kDenominatorGuard = 1e-12;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double DomainSpec::measure_normalization() const {
  const double pid = std::pow(kPi, dim);
  return kind == DomainKind::Polydisc ? pid : pid / factorial(dim);
}

bool DomainSpec::contains(const CVec& z) const {
  if (z.size() != dim) return false;
  if (kind == DomainKind::Polydisc) {
    for (int j = 0; j < dim; ++j) {
      if (std::abs(z[j]) >= 1.0) return false;
    }
    return true;
  }
  return z.squaredNorm() < 1.0;
}

std::string DomainSpec::label() const {
  return (kind == DomainKind::Polydisc ? "polydisc(" : "ball(") + std::to_string(dim) + ")";
}

DomainSpec polydisc(int dim) {
  if (dim < 1) throw invalid_input_error("domain dimension must be >= 1");
  return DomainSpec{DomainKind::Polydisc, dim};
}

DomainSpec ball(int dim) {
  if (dim < 1) throw invalid_input_error("domain dimension must be >= 1");
  return DomainSpec{DomainKind::Ball, dim};
}

PolyMapExpr identity_map(int d) {
  if (d < 1) throw invalid_input_error("map dimension must be >= 1");
  PolyMapExpr f;
  f.dim = d;
  for (int i = 0; i < d; ++i) f.components.push_back(MultiPoly::variable(d, i));
  return f;
}

PolyMapExpr symmetrization_map(int d) {
  if (d < 1) throw invalid_input_error("symmetrization map dimension must be >= 1");
  PolyMapExpr f;
  f.dim = d;
  for (int k = 1; k <= d; ++k) f.components.push_back(elementary_symmetric(d, k));
  return f;
}

PolyMapExpr dihedral_map(int k) {
  if (k < 2) throw invalid_input_error("dihedral map parameter must be >= 2");
  PolyMapExpr f;
  f.dim = 2;
  MultiPoly sum = MultiPoly::monomial(2, {k, 0}, cplx{1.0, 0.0}) +
                  MultiPoly::monomial(2, {0, k}, cplx{1.0, 0.0});
  f.components.push_back(std::move(sum));
  f.components.push_back(MultiPoly::monomial(2, {1, 1}, cplx{1.0, 0.0}));
  return f;
}

PolyMapExpr power_map(const std::vector<int>& exponents) {
  if (exponents.empty()) throw invalid_input_error("power map needs at least one exponent");
  const int d = static_cast<int>(exponents.size());
  PolyMapExpr f;
  f.dim = d;
  for (int i = 0; i < d; ++i) {
    if (exponents[i] < 1) throw invalid_input_error("power map exponents must be >= 1");
    std::vector<int> exp(d, 0);
    exp[i] = exponents[i];
    f.components.push_back(MultiPoly::monomial(d, std::move(exp), cplx{1.0, 0.0}));
  }
  return f;
}

PolyMapExpr monomial_map(const IMat& a) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw invalid_input_error("monomial map requires a square exponent matrix");
  }
  const int d = static_cast<int>(a.rows());
  PolyMapExpr f;
  f.dim = d;
  for (int i = 0; i < d; ++i) {
    std::vector<int> exp(d);
    for (int j = 0; j < d; ++j) {
      if (a(i, j) < 0) {
        throw invalid_input_error("monomial map exponents must be non-negative");
      }
      exp[j] = static_cast<int>(a(i, j));
    }
    f.components.push_back(MultiPoly::monomial(d, std::move(exp), cplx{1.0, 0.0}));
  }
  return f;
}

namespace {

/// Standard involutive Moebius map of B^d exchanging 0 and a (a != 0).
CVec mobius(const CVec& a, const CVec& z) {
  const cplx inner = a.dot(z);  // sum_j conj(a_j) z_j (Eigen conjugates the left side)
  const double a2 = a.squaredNorm();
  const cplx denom = 1.0 - inner;
  if (std::abs(denom) < kDenominatorGuard) {
    throw near_singular_error("Moebius map evaluated at a singular point");
  }
  const double s = std::sqrt(1.0 - a2);
  const CVec proj = (inner / a2) * a;
  const CVec orth = z - proj;
  return (a - proj - s * orth) / denom;
}

/// Holomorphic Jacobian determinant of the Moebius factor.
cplx mobius_jacobian(const CVec& a, const CVec& z) {
  const int d = static_cast<int>(a.size());
  const cplx inner = a.dot(z);
  const cplx denom = 1.0 - inner;
  if (std::abs(denom) < kDenominatorGuard) {
    throw near_singular_error("Moebius Jacobian evaluated at a singular point");
  }
  const double a2 = a.squaredNorm();
  const double sign = (d % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(1.0 - a2, 0.5 * (d + 1)) / std::pow(denom, d + 1);
}

}  // namespace

bool BallAutomorphism::is_identity() const {
  return center.norm() <= 1e-14 &&
         (unitary - CMat::Identity(dim(), dim())).norm() <= 1e-12;
}

CVec BallAutomorphism::eval(const CVec& z) const {
  if (z.size() != center.size()) {
    throw invalid_input_error("automorphism input dimension mismatch");
  }
  if (center.isZero(0.0)) return unitary * z;
  return unitary * mobius(center, z);
}

CVec BallAutomorphism::inverse_eval(const CVec& u) const {
  if (u.size() != center.size()) {
    throw invalid_input_error("automorphism input dimension mismatch");
  }
  const CVec v = unitary.adjoint() * u;
  if (center.isZero(0.0)) return v;
  return mobius(center, v);
}

cplx BallAutomorphism::jacobian(const CVec& z) const {
  const cplx du = CMat(unitary).determinant();
  if (center.isZero(0.0)) return du;
  return du * mobius_jacobian(center, z);
}

cplx BallAutomorphism::inverse_jacobian(const CVec& u) const {
  const cplx du = std::conj(CMat(unitary).determinant());
  if (center.isZero(0.0)) return du;
  return mobius_jacobian(center, unitary.adjoint() * u) * du;
}

BallAutomorphism identity_automorphism(int d) {
  if (d < 1) throw invalid_input_error("automorphism dimension must be >= 1");
  return BallAutomorphism{CVec::Zero(d), CMat::Identity(d, d)};
}

BallAutomorphism ball_automorphism(CVec center, CMat unitary) {
  if (center.size() < 1 || unitary.rows() != center.size() ||
      unitary.cols() != center.size()) {
    throw invalid_input_error("automorphism center and unitary shapes must agree");
  }
  if (center.norm() >= 1.0) {
    throw invalid_input_error("automorphism center must lie in the open unit ball");
  }
  const CMat gram = unitary.adjoint() * unitary;
  if ((gram - CMat::Identity(center.size(), center.size())).norm() > 1e-8) {
    throw invalid_input_error("automorphism matrix must be unitary");
  }
  return BallAutomorphism{std::move(center), std::move(unitary)};
}

CVec ball_automorphism_eval(const BallAutomorphism& psi, const CVec& z) {
  return psi.eval(z);
}

CVec ConjugatedMap::eval(const CVec& z) const {
  return psi.inverse_eval(sigma.inverse * psi.eval(z));
}

cplx ConjugatedMap::jacobian(const CVec& z) const {
  // Chain rule through Psi^{-1} o sigma^{-1} o Psi; the middle factor is
  // linear with constant determinant det(sigma^{-1}).
  const CVec u = psi.eval(z);
  const CVec su = sigma.inverse * u;
  return psi.inverse_jacobian(su) * (cplx{1.0, 0.0} / sigma.det) * psi.jacobian(z);
}

ConjugatedMap conjugated_map(const BallAutomorphism& psi, const GroupElement& sigma) {
  if (sigma.matrix.rows() != psi.center.size()) {
    throw invalid_input_error("automorphism and group element dimensions differ");
  }
  return ConjugatedMap{psi, sigma};
}

CMat fd_complex_jacobian(const std::function<CVec(const CVec&)>& f, const CVec& z,
                         double step) {
  const int d = static_cast<int>(z.size());
  const CVec f0 = f(z);
  const int m = static_cast<int>(f0.size());
  CMat jac(m, d);
  for (int j = 0; j < d; ++j) {
    CVec zp = z;
    CVec zm = z;
    zp[j] += step;
    zm[j] -= step;
    const CVec diff = (f(zp) - f(zm)) / (2.0 * step);
    jac.col(j) = diff;
  }
  return jac;
}

cplx fd_jacobian_det(const std::function<CVec(const CVec&)>& f, const CVec& z, double step) {
  const CMat jac = fd_complex_jacobian(f, z, step);
  if (jac.rows() != jac.cols()) {
    throw invalid_input_error("Jacobian determinant requires a square map");
  }
  return jac.determinant();
}

WeightSpec WeightSpec::unit() { return WeightSpec{}; }

WeightSpec WeightSpec::polydisc_lambda(double lambda) {
  if (!(lambda > 1.0)) {
    throw invalid_input_error("polydisc weight exponent must satisfy lambda > 1");
  }
  WeightSpec w;
  w.kind = Kind::PolydiscLambda;
  w.lambda = lambda;
  return w;
}

WeightSpec WeightSpec::pullback(WeightSpec base_weight, PolyMapExpr theta) {
  WeightSpec w;
  w.kind = Kind::Pullback;
  w.base = std::make_shared<WeightSpec>(std::move(base_weight));
  w.map = std::make_shared<PolyMapExpr>(std::move(theta));
  return w;
}

WeightSpec WeightSpec::relative(WeightSpec base_weight, MultiPoly ell, PolyMapExpr theta) {
  WeightSpec w;
  w.kind = Kind::Relative;
  w.base = std::make_shared<WeightSpec>(std::move(base_weight));
  w.numerator = std::make_shared<MultiPoly>(std::move(ell));
  w.map_jacobian = std::make_shared<MultiPoly>(jacobian_det_poly(theta));
  w.map = std::make_shared<PolyMapExpr>(std::move(theta));
  return w;
}

WeightSpec WeightSpec::scaled(double s) const {
  WeightSpec w = *this;
  w.scale *= s;
  return w;
}

double weight_eval(const WeightSpec& w, const CVec& z) {
  switch (w.kind) {
    case WeightSpec::Kind::Unit:
      return w.scale;
    case WeightSpec::Kind::PolydiscLambda: {
      double v = 1.0;
      for (Eigen::Index j = 0; j < z.size(); ++j) {
        v *= std::pow(1.0 - std::norm(z[j]), w.lambda - 2.0);
      }
      return w.scale * v;
    }
    case WeightSpec::Kind::Pullback:
      return w.scale * weight_eval(*w.base, w.map->eval(z));
    case WeightSpec::Kind::Relative: {
      const cplx jac = poly_eval(*w.map_jacobian, z);
      if (std::abs(jac) < kJacobianGuard) {
        throw near_singular_error("relative weight at a critical point of the quotient map");
      }
      const cplx ell = poly_eval(*w.numerator, z);
      const double ratio = std::norm(ell) / std::norm(jac);
      return w.scale * ratio * weight_eval(*w.base, w.map->eval(z));
    }
  }
  throw invalid_input_error("unknown weight kind");
}

}  // namespace bergq
