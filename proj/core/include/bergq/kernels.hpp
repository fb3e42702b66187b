// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file kernels.hpp
 * @brief Weighted Bergman kernels of quotient domains by group averaging,
 *        with closed forms for the classical families.
 *
 * Conventions.  Kernels of quotient domains are always evaluated in *fiber
 * coordinates*: for a basic quotient map theta : Omega -> Omega/G, the
 * callable K(z, w) returns the kernel of the quotient at (theta(z), theta(w)).
 * All base domains carry normalized volume (see maps.hpp), and quotient
 * integrals are pullbacks divided by |G| (see quad.hpp), which fixes every
 * constant below.
 *
 * The fundamental averaging formula: for a one-dimensional character rho
 * with minimal relative invariant ell_rho,
 *
 *   K_rho(z, w) = (1 / (ell_rho(z) conj(ell_rho(w))))
 *                 * sum_sigma rho(sigma^{-1}) B(sigma^{-1} . z, w),
 *
 * where B is the weighted kernel of the covering domain and the point action
 * is sigma . z = sigma^{-1} z.  The sign character with
 * ell_sign = J_theta recovers the Bergman kernel of the quotient domain with
 * the pushforward of the base weight; other characters give the kernels of
 * the weights |ell_rho|^2 / |J_theta|^2 pushed forward along theta.
 */

#include <functional>
#include <string>
#include <utility>

#include "bergq/group.hpp"
#include "bergq/intlin.hpp"
#include "bergq/maps.hpp"
#include "bergq/mpoly.hpp"
#include "bergq/types.hpp"

namespace bergq {

/// A kernel as a black-box sesquiholomorphic function of (z, w).
struct KernelOracle {
  std::string label;
  int dim = 0;
  std::function<cplx(const CVec&, const CVec&)> fn;

  /// Evaluate; validates argument dimensions.
  cplx operator()(const CVec& z, const CVec& w) const;
};

/**
 * @brief Weighted kernel of the base domain.
 *
 * Polydisc: prod_j (1 - z_j conj(w_j))^(-lambda); this reproduces against
 * the weight (lambda - 1)^d prod_j (1 - |z_j|^2)^(lambda - 2) under
 * normalized volume (lambda == 2 is the unweighted kernel).  Ball: only
 * lambda == 2 is supported, giving (1 - <z, w>)^(-(d+1)).
 *
 * @throws near_singular_error when a denominator is within 1e-12 of zero.
 */
KernelOracle base_kernel(const DomainSpec& domain, double lambda = 2.0);

/**
 * @brief Group-averaged kernel for a one-dimensional character.
 *
 * Implements the averaging formula of the file header with the supplied
 * minimal relative invariant `ell` (see relative_invariant()).
 *
 * @throws near_singular_error when |ell| < 1e-9 at either argument.
 */
KernelOracle quotient_kernel_sum(const FiniteGroup& group, const Character& chi,
                                 const MultiPoly& ell, KernelOracle base);

/**
 * @brief Sign-character specialization: ell = J_theta, rho = sign.
 *
 * `theta` must be a basic quotient map for the group action; its Jacobian
 * determinant is then the minimal sign-relative invariant, and the result is
 * the Bergman kernel of theta(Omega) with the pushforward weight, in fiber
 * coordinates.
 */
KernelOracle quotient_kernel_sign(const FiniteGroup& group, const PolyMapExpr& theta,
                                  KernelOracle base);

/**
 * @brief Averaged kernel for a group action conjugated by a ball automorphism.
 *
 *   K(z, w) = (1 / (jf(z) conj(jf(w)))) * sum_sigma J_{Psi_sigma}(z)
 *             * base(Psi_sigma(z), w),
 *
 * where Psi_sigma = Psi^{-1} o sigma^{-1} o Psi and jf is the Jacobian
 * determinant of the full proper map in use.
 */
KernelOracle conjugated_kernel(const FiniteGroup& group, const BallAutomorphism& psi,
                               std::function<cplx(const CVec&)> jf, KernelOracle base);

/**
 * @brief Kernel of the image of the unit ball under theta o Psi.
 *
 * Specializes conjugated_kernel to the unit-ball base kernel with
 * jf(z) = J_theta(Psi(z)) * J_Psi(z).
 */
KernelOracle rudin_ball_kernel(const FiniteGroup& group, const BallAutomorphism& psi,
                               const PolyMapExpr& theta);

/**
 * @brief Symmetrized polydisc kernel, determinant form:
 *        det[(1 - z_i conj(w_j))^(-lambda)] / (V(z) conj(V(w)))
 *        with V the Vandermonde product prod_{i<j} (z_i - z_j).
 *
 * Equals the sign-character average of the weighted polydisc kernel over the
 * coordinate-permutation group.
 *
 * @throws near_singular_error near coinciding coordinates (guard 1e-9).
 */
KernelOracle symmetrized_kernel_det(int d, double lambda);

/**
 * @brief Symmetrized polydisc kernel, permanent form:
 *        perm[(1 - z_i conj(w_j))^(-lambda)] (no denominator).
 *
 * Equals the trivial-character average of the weighted polydisc kernel.
 */
KernelOracle symmetrized_kernel_perm(int d, double lambda);

/**
 * @brief Closed-form dihedral quotient kernels {sign, trivial} on D^2.
 *
 * With w = exp(2*pi*i/k), u_1 = z_1 conj(w_1), u_2 = z_2 conj(w_2),
 * x_1 = z_2 conj(w_1), x_2 = z_1 conj(w_2):
 *
 *   sign:    (1 / (k^2 (z_1^k - z_2^k) conj(w_1^k - w_2^k)))
 *            * sum_{i=1}^{k} [ (1-w^i u_1)^{-2} (1-w^{k-i} u_2)^{-2}
 *                             - (1-w^i x_1)^{-2} (1-w^{k-i} x_2)^{-2} ]
 *   trivial: same sum with "+" and without the prefactor.
 */
std::pair<KernelOracle, KernelOracle> dihedral_kernels(int k);

/**
 * @brief Kernel of the monomial polyhedron determined by the integer matrix B,
 *        in fiber coordinates on D^d.
 *
 * Internally A = adjugate(B) defines the monomial quotient map
 * Phi_A(z) = (z^{a^1}, ..., z^{a^d}) with deck group monomial_deck_group(A):
 *
 *   K(z, w) = (1 / det(A)^2) * prod_j (z_j conj(w_j))^(1 - colsum_j(A))
 *             * sum_sigma det(sigma)^{-1} B_{D^d}(sigma^{-1} z, w).
 *
 * Determinants are taken from the deck element matrices.  Column sums equal
 * to one make the corresponding prefactor exponent vanish, so those
 * coordinates may be zero.
 *
 * @throws invalid_input_error when adjugate(B) has a negative entry.
 */
KernelOracle monomial_polyhedron_kernel(const IMat& b);

/**
 * @brief Closed-form kernel of the fat Hartogs triangle
 *        { |z_1|^gamma < |z_2| < 1 }, in fiber coordinates:
 *
 *   K(z, w) = (1 / (gamma^2 (z_2 conj(w_2))^gamma))
 *             * sum_{k=1}^{gamma} (1 - w^k z_1 conj(w_1))^{-2}
 *                                 (1 - w^{gamma-k} z_2 conj(w_2))^{-2},
 *
 * with w = exp(2*pi*i/gamma).  All deck determinants equal one here, so the
 * summands carry no phase factors.
 */
KernelOracle fat_hartogs_kernel(int gamma);

/**
 * @brief Kernel of the complex ellipsoid { |u_1|^(2/p) + |u_2|^(2/q) < 1 }
 *        in fiber coordinates on B^2 (z with (z_1^p, z_2^q) = (u_1, u_2)):
 *
 *   K(z, w) = (1 / ((p q)^2 (z_1 conj(w_1))^(p-1) (z_2 conj(w_2))^(q-1)))
 *             * sum_{a=1}^{p} sum_{b=1}^{q} w_p^a w_q^b
 *               (1 - (w_p^a z_1 conj(w_1) + w_q^b z_2 conj(w_2)))^{-3}.
 *
 * Coincides with rudin_ball_kernel(cyclic(p, q), identity, power_map(p, q)).
 */
KernelOracle ellipsoid_kernel(int p, int q);

/**
 * @brief Reassembled base kernel from all characters of an abelian group:
 *        (1/|G|) sum_rho ell_rho(z) K_rho(z, w) conj(ell_rho(w)) == base(z, w).
 *
 * Mostly a structural identity used for verification; requires the full
 * character list (|characters| == |G|).
 */
KernelOracle abelian_kernel_reassembly(const FiniteGroup& group, KernelOracle base);

/**
 * @brief Permanent of a complex matrix (inclusion-exclusion over column
 *        subsets), supported up to size 12.
 */
cplx permanent(const CMat& m);

}  // namespace bergq
