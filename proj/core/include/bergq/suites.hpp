// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file suites.hpp
 * @brief Canned verification suites covering the library's guarantees.
 *
 * Each suite bundles a family of identities into one VerificationReport.
 * The same implementations back the command-line `verify` command and the
 * acceptance test binary, so the two can never drift apart.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "bergq/quad.hpp"

namespace bergq {

/// Common knobs for the stochastic suites.
struct SuiteOptions {
  long long samples = 200000;   ///< Monte Carlo samples per estimate
  std::uint64_t seed = 42;      ///< master seed (sub-seeds are derived)
  double tol_sigma = 4.0;       ///< pass band in combined standard errors
  int threads = 1;              ///< worker threads (never affects results)
};

/// Closed-form kernels against their group-averaged sums at random fiber
/// pairs (relative error 1e-9; includes a 10 second runtime budget check).
VerificationReport suite_closed_vs_sum(const SuiteOptions& opt = {});

/// Frozen exact kernel values at hand-checked points (relative error 1e-9).
VerificationReport suite_spot_values();

/// Invariance of quotient kernels under independent fiber-representative
/// changes in both arguments (relative error 1e-9).
VerificationReport suite_fiber_independence(const SuiteOptions& opt = {});

/// Monte Carlo reproducing property for quotient kernels, including a
/// negative control that must fail (runtime budget 120 seconds).
VerificationReport suite_reproducing(const SuiteOptions& opt = {});

/// Monte Carlo weighted projection identity for relative invariants.
VerificationReport suite_projection_identity(const SuiteOptions& opt = {});

/// Structural identities (projections, factorization, orbit invariance) for
/// a catalog of group/quotient-map pairs.
VerificationReport suite_structural(const SuiteOptions& opt = {});

/// Exact integer linear algebra: adjugate and Smith form on random matrices,
/// deck group orders and monomial-map invariance.
VerificationReport suite_integer(const SuiteOptions& opt = {});

/// Coefficient-exact Jacobian identities of the catalog quotient maps.
VerificationReport suite_polynomial_identities();

/// Degenerate-parameter reductions (trivial groups, identity matrices,
/// sphere/ellipsoid coincidences, character reassembly).
VerificationReport suite_degenerations(const SuiteOptions& opt = {});

/// All suites in a fixed order.
std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt = {});

}  // namespace bergq
