// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file maps.hpp
 * @brief Domains, proper quotient maps, ball automorphisms and weights.
 *
 * Throughout, the unit polydisc D^d and unit ball B^d carry normalized
 * Lebesgue measure: dV = (Lebesgue of C^d) / kappa with kappa = pi^d for the
 * polydisc and pi^d/d! for the ball, so that vol(domain) == 1.  A basic
 * quotient map theta identifies a domain Omega with Omega/G for a finite
 * pseudoreflection group G; integrals over the quotient are defined by
 * pulling back along theta and dividing by |G| (see quad.hpp).
 */

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bergq/group.hpp"
#include "bergq/mpoly.hpp"
#include "bergq/types.hpp"

namespace bergq {

enum class DomainKind { Polydisc, Ball };

/// Unit polydisc or unit ball in C^dim with normalized volume.
struct DomainSpec {
  DomainKind kind = DomainKind::Polydisc;
  int dim = 1;

  /// Lebesgue volume of the domain (the measure normalization constant).
  double measure_normalization() const;
  /// Strict interior membership.
  bool contains(const CVec& z) const;
  std::string label() const;
};

DomainSpec polydisc(int dim);
DomainSpec ball(int dim);

/// The identity map on C^d as a polynomial map.
PolyMapExpr identity_map(int d);

/**
 * @brief Elementary symmetric map s(z) = (e_1(z), ..., e_d(z)).
 *
 * Basic quotient map for the coordinate-permutation action on D^d; its image
 * is the symmetrized polydisc.  The Jacobian determinant equals the
 * Vandermonde product of the coordinates up to sign.
 */
PolyMapExpr symmetrization_map(int d);

/**
 * @brief Quotient map (z_1^k + z_2^k, z_1 z_2) for the dihedral action on D^2.
 *
 * Jacobian determinant: k (z_1^k - z_2^k).
 */
PolyMapExpr dihedral_map(int k);

/// Coordinate power map z -> (z_1^{p_1}, ..., z_d^{p_d}), all p_i >= 1.
PolyMapExpr power_map(const std::vector<int>& exponents);

/**
 * @brief Monomial map z -> (z^{a^1}, ..., z^{a^d}) for the rows a^i of A.
 *
 * Requires non-negative entries and nonsingular A.  The deck group of this
 * map is monomial_deck_group(A) and the map is constant on its orbits.
 */
PolyMapExpr monomial_map(const IMat& a);

/**
 * @brief Automorphism of the unit ball: a unitary composed with the standard
 *        involutive Moebius map exchanging 0 and `center`.
 *
 * With center == 0 the automorphism is the unitary itself (identity when the
 * unitary is the identity).  All Jacobian determinants are evaluated in
 * closed form.
 */
struct BallAutomorphism {
  CVec center;
  CMat unitary;

  int dim() const { return static_cast<int>(center.size()); }
  bool is_identity() const;
  /// Forward evaluation; `z` must lie in the closed unit ball.
  CVec eval(const CVec& z) const;
  /// Inverse automorphism evaluation.
  CVec inverse_eval(const CVec& u) const;
  /// Holomorphic Jacobian determinant of eval at `z`.
  cplx jacobian(const CVec& z) const;
  /// Holomorphic Jacobian determinant of inverse_eval at `u`.
  cplx inverse_jacobian(const CVec& u) const;
};

/// The identity automorphism of B^d.
BallAutomorphism identity_automorphism(int d);

/**
 * @brief Construct the ball automorphism with given center and unitary part.
 * @throws invalid_input_error unless |center| < 1 and the matrix is unitary.
 */
BallAutomorphism ball_automorphism(CVec center, CMat unitary);

/// Convenience: evaluate the automorphism with the given data at `z`.
CVec ball_automorphism_eval(const BallAutomorphism& psi, const CVec& z);

/**
 * @brief Twisted action Psi_sigma = Psi^{-1} o sigma^{-1} o Psi of a group
 *        element through a ball automorphism.
 *
 * The assignment sigma -> Psi_sigma reverses products
 * (Psi_sigma o Psi_tau = Psi_{tau sigma}), which leaves group-averaged sums
 * over sigma unchanged.  Jacobian determinants come from the chain rule with
 * the closed-form automorphism Jacobians.
 */
struct ConjugatedMap {
  BallAutomorphism psi;
  GroupElement sigma;

  CVec eval(const CVec& z) const;
  cplx jacobian(const CVec& z) const;
};

ConjugatedMap conjugated_map(const BallAutomorphism& psi, const GroupElement& sigma);

/**
 * @brief Central-difference Jacobian matrix of a holomorphic map (step along
 *        real coordinate directions; default step 1e-6).
 */
CMat fd_complex_jacobian(const std::function<CVec(const CVec&)>& f, const CVec& z,
                         double step = 1e-6);

/// Determinant of fd_complex_jacobian.
cplx fd_jacobian_det(const std::function<CVec(const CVec&)>& f, const CVec& z,
                     double step = 1e-6);

/**
 * @brief Admissible integration weights.
 *
 * - unit: the constant 1.
 * - polydisc_lambda: prod_j (1 - |z_j|^2)^(lambda - 2) on D^d (lambda > 1),
 *   the raw density whose kernel is prod_j (1 - z_j conj(w_j))^(-lambda)
 *   after the normalization factor (lambda - 1)^d.
 * - pullback: w(theta(z)) for a base weight w and polynomial map theta.
 * - relative: |ell(z)|^2 / |J_theta(z)|^2 * w(theta(z)), the fiber-level
 *   density representing the pushforward weight attached to a relative
 *   invariant ell on the quotient by the map theta.
 *
 * Every weight carries a constant `scale` factor (default 1).
 */
struct WeightSpec {
  enum class Kind { Unit, PolydiscLambda, Pullback, Relative };

  Kind kind = Kind::Unit;
  double lambda = 2.0;
  double scale = 1.0;
  std::shared_ptr<const WeightSpec> base;
  std::shared_ptr<const PolyMapExpr> map;        ///< theta (Pullback/Relative)
  std::shared_ptr<const MultiPoly> numerator;    ///< ell (Relative)
  std::shared_ptr<const MultiPoly> map_jacobian; ///< J_theta (Relative)

  static WeightSpec unit();
  static WeightSpec polydisc_lambda(double lambda);
  static WeightSpec pullback(WeightSpec base_weight, PolyMapExpr theta);
  static WeightSpec relative(WeightSpec base_weight, MultiPoly ell, PolyMapExpr theta);
  /// Same weight multiplied by the constant `s`.
  WeightSpec scaled(double s) const;
};

/**
 * @brief Evaluate a weight at a point.
 * @throws near_singular_error for relative weights when |J_theta(z)| < 1e-9.
 */
double weight_eval(const WeightSpec& w, const CVec& z);

}  // namespace bergq
