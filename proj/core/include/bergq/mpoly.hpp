// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file mpoly.hpp
 * @brief Sparse multivariate polynomials with complex coefficients.
 *
 * Polynomials are stored as a map from exponent vectors to coefficients.
 * The map key order (lexicographic on the exponent vector) doubles as the
 * canonical term order, so equality of normalized polynomials is equality
 * of containers.  All arithmetic normalizes its result: coefficients that
 * become exactly zero are removed.
 *
 * These polynomials represent exact symbolic objects (linear forms of
 * reflection hyperplanes, relative invariants, Jacobian determinants of
 * polynomial maps), so arithmetic is carried out term-by-term rather than
 * through floating-point interpolation.
 */

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bergq/types.hpp"

namespace bergq {

/// A sparse polynomial in `dim` complex variables.
struct MultiPoly {
  int dim = 0;
  /// exponent vector (length == dim) -> nonzero coefficient, lexicographic order.
  std::map<std::vector<int>, cplx> terms;

  /// The zero polynomial in `dim` variables.
  static MultiPoly zero(int dim);
  /// The constant polynomial `c`.
  static MultiPoly constant(int dim, cplx c);
  /// A single monomial `c * z^exp`; drops to zero when `c == 0`.
  static MultiPoly monomial(int dim, std::vector<int> exp, cplx c);
  /// The coordinate polynomial `z_i` (0-based index).
  static MultiPoly variable(int dim, int i);

  bool is_zero() const { return terms.empty(); }
  /// Total degree, or -1 for the zero polynomial.
  int total_degree() const;
  /// Coefficient of `z^exp` (zero when the term is absent).
  cplx coeff(const std::vector<int>& exp) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(cplx scale);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const MultiPoly& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, cplx scale) { return lhs *= scale; }
  friend MultiPoly operator*(cplx scale, MultiPoly rhs) { return rhs *= scale; }
  MultiPoly operator-() const;

  /// Exact term-table equality (normalized representations).
  bool operator==(const MultiPoly& rhs) const { return dim == rhs.dim && terms == rhs.terms; }

  /// Substitute z -> M z (exact, expands each coordinate image).
  MultiPoly compose_linear(const CMat& m) const;

  /// Integer power by repeated multiplication; `p >= 0`.
  MultiPoly pow(int p) const;

  /// Human-readable rendering, e.g. "(1+0i) z0^2 z1".
  std::string to_string() const;
};

/// A polynomial map C^dim -> C^(components.size()).
struct PolyMapExpr {
  int dim = 0;                       ///< number of input variables
  std::vector<MultiPoly> components; ///< each has dimension `dim`

  int codim() const { return static_cast<int>(components.size()); }
  /// Evaluate all components at `z`.
  CVec eval(const CVec& z) const;
};

/**
 * @brief Evaluate `p` at the point `z`.
 * @throws invalid_input_error when `z.size() != p.dim`.
 */
cplx poly_eval(const MultiPoly& p, const CVec& z);

/**
 * @brief Exact partial derivative with respect to variable `i` (0-based).
 * @throws invalid_input_error when `i` is out of range.
 */
MultiPoly poly_partial(const MultiPoly& p, int i);

/**
 * @brief Jacobian determinant of a square polynomial map, as a polynomial.
 *
 * The determinant of the matrix of partial derivatives is expanded exactly
 * by cofactors (intended for small dimensions).
 *
 * @throws invalid_input_error when the map is not square.
 */
MultiPoly jacobian_det_poly(const PolyMapExpr& f);

/**
 * @brief Elementary symmetric polynomial e_k in d variables.
 *
 * e_0 = 1; e_k = sum of all products of k distinct variables.
 * @throws invalid_input_error unless `0 <= k <= d`.
 */
MultiPoly elementary_symmetric(int d, int k);

/// Serialize to {"dim": d, "terms": [{"exp": [...], "re": x, "im": y}, ...]}.
nlohmann::json poly_to_json(const MultiPoly& p);

/**
 * @brief Parse the JSON polynomial representation produced by poly_to_json.
 *
 * Duplicate exponent vectors are accumulated; zero coefficients are dropped.
 * @throws invalid_input_error on malformed documents (wrong exponent length,
 *         negative exponents, missing fields).
 */
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace bergq
