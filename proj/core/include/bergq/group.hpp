// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file group.hpp
 * @brief Finite unitary pseudoreflection groups and their one-dimensional
 *        characters.
 *
 * A finite group G of unitary matrices acts on points by
 * `sigma . z := sigma^{-1} z` and on functions by
 * `(sigma . f)(z) := f(sigma^{-1} . z)`, which makes the function action a
 * left action compatible with the point action.  All statements about
 * relative invariants, averaged kernels and projections in this library use
 * these conventions.
 *
 * An element is a pseudoreflection when it fixes a complex hyperplane
 * pointwise, i.e. rank(I - sigma) == 1.  Groups generated by
 * pseudoreflections carry, for each reflecting hyperplane H_i with linear
 * form ell_i and pointwise stabilizer of order m_i, a distinguished cyclic
 * generator a_i whose determinant is the primitive root exp(2*pi*i/m_i).
 * A one-dimensional character rho is determined by the exponents
 * c_i in [0, m_i) with rho(a_i) = det(a_i)^{c_i}, and the polynomial
 * ell_rho = prod_i ell_i^{c_i} is the minimal rho-relative invariant:
 * sigma . ell_rho = rho(sigma) ell_rho for all sigma in G.
 */

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bergq/mpoly.hpp"
#include "bergq/types.hpp"

namespace bergq {

enum class GroupKind { Symmetric, Dihedral, CyclicProduct, Explicit };

/// One group element with cached inverse and determinant.
struct GroupElement {
  CMat matrix;
  CMat inverse;
  cplx det;
};

/// A finite group of unitary matrices acting on C^dim.
struct FiniteGroup {
  GroupKind kind = GroupKind::Explicit;
  std::string name;
  int dim = 0;
  /// Catalog parameters: {d} for symmetric, {k} for dihedral, the moduli for
  /// cyclic products, empty for explicit groups.
  std::vector<int> params;
  /// Element 0 is always the identity; order is the deterministic closure
  /// discovery order for explicit groups and the catalog order otherwise.
  std::vector<GroupElement> elements;
  /// inverse_index[i] is the index j with elements[j] == elements[i]^{-1}.
  std::vector<int> inverse_index;

  int order() const { return static_cast<int>(elements.size()); }
  /// Index of the element matching `m` within Frobenius tolerance 1e-10, or -1.
  int find(const CMat& m) const;
};

/// A one-dimensional character: one unimodular value per group element.
struct Character {
  std::string name;
  std::vector<cplx> values;  ///< indexed like FiniteGroup::elements
};

/// A reflecting hyperplane of the group action.
struct ReflectionHyperplane {
  /// Defining linear form, normalized so its largest-magnitude coefficient is
  /// exactly 1 (first such coordinate on ties).
  MultiPoly linear_form;
  /// Coefficients of the linear form as a vector (same normalization).
  CVec coefficients;
  /// Order m of the pointwise stabilizer of the hyperplane (cyclic).
  int order = 0;
  /// Index into FiniteGroup::elements of the distinguished generator, whose
  /// determinant is exp(2*pi*i/m).
  int generator_index = -1;
};

/// Request structure for build_group.
struct GroupSpec {
  GroupKind kind = GroupKind::Explicit;
  int d = 0;                        ///< symmetric: permutation degree
  int k = 0;                        ///< dihedral: half the group order
  std::vector<int> moduli;          ///< cyclic product: factor orders
  std::vector<CMat> generators;     ///< explicit: generating unitaries
};

/**
 * @brief Construct a finite unitary group from a catalog entry or generators.
 *
 * Catalog entries: symmetric(d >= 1) acting by coordinate permutation on C^d;
 * dihedral(k >= 2) of order 2k acting on C^2 (rotation diag(w, conj(w)) with
 * w = exp(2*pi*i/k), plus the coordinate swap); cyclic_product(n_1, ..., n_d)
 * acting diagonally with diag entries of orders n_i >= 1.  Explicit groups
 * are closed under products starting from the given unitary generators.
 *
 * @throws invalid_input_error on out-of-range parameters or non-unitary
 *         generators (tolerance 1e-10).
 * @throws group_too_large_error when the closure exceeds 10000 elements.
 */
FiniteGroup build_group(const GroupSpec& spec);

FiniteGroup symmetric_group(int d);
FiniteGroup dihedral_group(int k);
FiniteGroup cyclic_product_group(std::vector<int> moduli);
FiniteGroup explicit_group(std::vector<CMat> generators, std::string name = "explicit");
/// The one-element group acting on C^dim.
FiniteGroup trivial_group(int dim);

/**
 * @brief Assemble a group from a complete, duplicate-free element list.
 *
 * The first matrix must be the identity.  Unitarity and closure under
 * inversion are verified; full closure under products is the caller's
 * responsibility (used for deck groups that are complete by construction).
 */
FiniteGroup group_from_elements(std::vector<CMat> elements, std::string name);

/// Point action `g . z = g^{-1} z`.
CVec act_point(const GroupElement& g, const CVec& z);

/// Function action `(g . f)(z) = f(g^{-1} . z)`; returns the transformed callable.
std::function<cplx(const CVec&)> act_function(const GroupElement& g,
                                              std::function<cplx(const CVec&)> f);

/// Function action on polynomials, computed exactly: (g . p)(z) = p(g z).
MultiPoly act_poly(const GroupElement& g, const MultiPoly& p);

/// True when rank(I - g.matrix) == 1 (singular values above 1e-9 counted).
bool is_pseudoreflection(const GroupElement& g);

/**
 * @brief All reflecting hyperplanes of the group, with stabilizer data.
 *
 * Hyperplanes are reported in first-discovery order over the element list,
 * which is deterministic for a given group.
 *
 * @throws invalid_input_error when the group contains no pseudoreflections.
 */
std::vector<ReflectionHyperplane> reflecting_hyperplanes(const FiniteGroup& g);

/**
 * @brief Exponents c_i of a one-dimensional character along each hyperplane.
 *
 * c_i is the least integer in [0, m_i) with
 * |chi(a_i) - det(a_i)^{c_i}| <= 1e-8 for the distinguished generator a_i.
 *
 * @throws invalid_input_error when some chi(a_i) matches no power (the
 *         candidate values do not form a character of the reflection data).
 */
std::vector<int> character_exponents(const FiniteGroup& g, const Character& chi,
                                     const std::vector<ReflectionHyperplane>& hyperplanes);

/**
 * @brief Minimal relative invariant ell_chi = prod_i ell_i^{c_i}.
 *
 * Satisfies (sigma . ell_chi) = chi(sigma) ell_chi for every sigma.
 */
MultiPoly relative_invariant(const FiniteGroup& g, const Character& chi,
                             const std::vector<ReflectionHyperplane>& hyperplanes);

/// The character sigma -> det(sigma)^{-1} (named "sign").
Character sign_character(const FiniteGroup& g);

/// The character sigma -> 1 (named "trivial").
Character trivial_character(const FiniteGroup& g);

/**
 * @brief Complete list of one-dimensional characters for catalog groups.
 *
 * symmetric(d >= 2): trivial and sign.  dihedral(k): trivial and sign, plus
 * two further characters when k is even.  cyclic_product: all
 * prod_i n_i characters chi_m, m in prod [0, n_i), named "chi(m_1,...,m_d)"
 * (with chi_0 named "trivial").
 *
 * @throws invalid_input_error for explicit groups (no catalog structure).
 */
std::vector<Character> one_dim_characters(const FiniteGroup& g);

/**
 * @brief Projection of a function onto the rho-isotypic component:
 *        (P_rho f)(z) = (1/|G|) sum_sigma rho(sigma^{-1}) f(sigma^{-1} . z).
 */
cplx project(const FiniteGroup& g, const Character& chi,
             const std::function<cplx(const CVec&)>& f, const CVec& z);

/// Serialize a group (kind, name, dim, params, element matrices).
nlohmann::json group_to_json(const FiniteGroup& g);

/// Serialize a character (name and element values, ordered like the group).
nlohmann::json character_to_json(const Character& chi);

}  // namespace bergq
