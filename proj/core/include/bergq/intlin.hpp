// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file intlin.hpp
 * @brief Exact integer linear algebra for monomial proper maps.
 *
 * A monomial map z -> (z^{a^1}, ..., z^{a^d}) is described by the integer
 * matrix A with rows a^i.  The fibers of the map are orbits of the diagonal
 * "deck" group whose elements are determined by the cosets of A Z^d inside
 * Z^d; enumerating those cosets requires the Smith normal form of A, and the
 * diagonal phases require A^{-1}, which is computed exactly through the
 * adjugate.  Everything here is exact 64-bit integer arithmetic with
 * overflow detection.
 */

#include <cstdint>
#include <vector>

#include "bergq/group.hpp"
#include "bergq/types.hpp"

namespace bergq {

/// a*b with overflow detection. @throws invalid_input_error on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
/// a+b with overflow detection. @throws invalid_input_error on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
/// a-b with overflow detection. @throws invalid_input_error on overflow.
std::int64_t checked_sub(std::int64_t a, std::int64_t b);

/**
 * @brief Exact determinant by cofactor expansion (size <= 8).
 * @throws invalid_input_error for non-square/oversized matrices or overflow.
 */
std::int64_t int_det(const IMat& m);

/**
 * @brief Exact adjugate: adj(B) * B = det(B) * I (size <= 8).
 *
 * The 1x1 adjugate is [[1]] by convention.
 * @throws invalid_input_error for non-square/oversized matrices or overflow.
 */
IMat adjugate(const IMat& b);

/// Decomposition A = P * D * Q with P, Q unimodular and D diagonal.
struct SNFResult {
  IMat p;
  IMat d;
  IMat q;
  /// Diagonal of D: positive entries with diagonal[i] | diagonal[i+1].
  std::vector<std::int64_t> diagonal;
};

/**
 * @brief Smith normal form of a nonsingular integer matrix.
 *
 * Pivots are chosen as the least-magnitude nonzero entry of the working
 * submatrix (row-major tie break), which keeps intermediate growth small.
 * The returned diagonal is positive and successively divisible, and
 * prod(diagonal) == |det A| exactly.
 *
 * @throws invalid_input_error for singular input, oversized matrices
 *         (size > 8), entries above 2^31 in magnitude, or overflow during
 *         elimination.
 */
SNFResult smith_normal_form(const IMat& a);

/**
 * @brief Deck transformation group of the monomial map given by A.
 *
 * The group consists of the diagonal unitaries
 * diag(exp(2*pi*i*(A^{-1} m)_1), ..., exp(2*pi*i*(A^{-1} m)_d)) where m runs
 * over coset representatives of Z^d / A Z^d, i.e. m = P n with
 * 0 <= n_i < diagonal[i] from the Smith decomposition A = P D Q.  The group
 * order equals |det A|, and the monomial map is constant on its orbits.
 *
 * @throws invalid_input_error for singular A.
 * @throws group_too_large_error when |det A| exceeds 10000.
 */
FiniteGroup monomial_deck_group(const IMat& a);

}  // namespace bergq
