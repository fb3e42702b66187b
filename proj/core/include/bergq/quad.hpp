// SPDX-License-Identifier: MIT
#pragma once

/**
 * @file quad.hpp
 * @brief Deterministic Monte Carlo quadrature and verification harnesses.
 *
 * Integrals are with respect to the normalized volume of the domain (see
 * maps.hpp), so plain averaging of integrand samples is unbiased.  Integrals
 * over a quotient theta(Omega) are *defined* by pullback:
 *
 *   int_{theta(Omega)} g dV := (1/|G|) int_Omega g(theta(x)) |J_theta(x)|^2 dV(x),
 *
 * which mc_integrate_quotient implements with the caller supplying the
 * integrand already composed with theta.
 *
 * Determinism: sampling is split into fixed-size chunks; chunk j is generated
 * by a generator seeded from (seed, j) only, and chunk statistics are merged
 * in index order.  Results are therefore bitwise identical for a given
 * (seed, n) across runs and across thread counts.
 */

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bergq/kernels.hpp"
#include "bergq/maps.hpp"
#include "bergq/types.hpp"

namespace bergq {

/// Result of a Monte Carlo integration.
struct MCEstimate {
  cplx mean{0.0, 0.0};
  /// max over real/imaginary parts of (sample sd) / sqrt(n); 0 for constants.
  double std_error = 0.0;
  long long n = 0;
  std::uint64_t seed = 0;
};

/// One named check inside a verification report.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

/// Outcome of a verification harness: a list of pass/fail checks.
struct VerificationReport {
  std::string name;
  std::string inputs_digest;
  std::vector<CheckResult> checks;

  bool pass() const;
  /// Append a check that passes when residual <= threshold.
  void add_check(std::string check_name, double residual, double threshold,
                 std::string note = "");
  /// Append an externally judged check.
  void add_flag(std::string check_name, bool ok, std::string note = "");
};

/// FNV-1a digest of a canonical input description, as 16 hex characters.
std::string digest_inputs(const std::string& canonical);

/// JSON rendering of an estimate / report (used by the command-line tool).
nlohmann::json estimate_to_json(const MCEstimate& e);
nlohmann::json report_to_json(const VerificationReport& r);

/**
 * @brief Deterministic uniform sampler for the supported domains.
 *
 * Raw 64-bit generator output is converted to doubles explicitly
 * ((x >> 11) * 2^-53) so streams do not depend on standard library
 * distribution internals.  Ball points are drawn by rejection from the
 * polydisc.
 */
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}

  /// Next uniform double in [0, 1).
  double next_unit();
  /// Next uniform point of the domain (normalized volume).
  CVec sample(const DomainSpec& domain);

 private:
  std::mt19937_64 rng_;
};

/**
 * @brief Monte Carlo estimate of int_Omega f(z) w(z) dV(z).
 *
 * @param threads number of worker threads (>= 1); does not affect the result.
 * @throws invalid_input_error for n < 2.
 */
MCEstimate mc_integrate(const DomainSpec& domain, const std::function<cplx(const CVec&)>& f,
                        const WeightSpec& weight, long long n, std::uint64_t seed,
                        int threads = 1);

/**
 * @brief Quotient integral by pullback:
 *        (1/group_order) int_Omega f(x) |jtheta(x)|^2 w(x) dV(x).
 *
 * The integrand `f` must already be expressed in fiber coordinates (i.e. the
 * caller composes with theta).
 */
MCEstimate mc_integrate_quotient(const DomainSpec& domain, int group_order,
                                 const std::function<cplx(const CVec&)>& jtheta,
                                 const std::function<cplx(const CVec&)>& f,
                                 const WeightSpec& weight, long long n, std::uint64_t seed,
                                 int threads = 1);

/// Quotient-domain description shared by the stochastic harnesses.
struct QuotientSetup {
  DomainSpec domain;                          ///< covering domain Omega
  int group_order = 1;                        ///< |G|
  std::function<cplx(const CVec&)> jtheta;    ///< J_theta in fiber coordinates
  std::function<CVec(const CVec&)> theta;     ///< fiber -> quotient coordinates
};

/**
 * @brief Verify the reproducing property of a quotient kernel.
 *
 * For each holomorphic test function f (of the quotient coordinates) and
 * each fiber evaluation point z0, estimates
 *
 *   (1/|G|) int_Omega f(theta(x)) K(z0, x) |J_theta(x)|^2 w(x) dV(x)
 *
 * and compares with f(theta(z0)).  A check passes when the residual is at
 * most tol_sigma * std_error (with an absolute floor of 1e-12).
 */
VerificationReport verify_reproducing(
    const std::string& name, const KernelOracle& kernel, const QuotientSetup& setup,
    const WeightSpec& weight,
    const std::vector<std::pair<std::string, std::function<cplx(const CVec&)>>>& functions,
    const std::vector<CVec>& eval_points, long long n, std::uint64_t seed,
    double tol_sigma = 4.0, int threads = 1);

/**
 * @brief Verify the weighted projection identity for a relative invariant.
 *
 * Both sides are estimated with independent sub-seeds and compared within
 * tol_sigma times the combined standard error:
 *
 *   int_Omega ell(x) phi(theta(x)) B(w0, x) w(x) dV(x)
 *     == ell(w0) (1/|G|) int_Omega phi(theta(x)) K_rho(w0, x) |ell(x)|^2 w(x) dV(x),
 *
 * where B is the base kernel and K_rho the averaged kernel built from ell.
 * The test function phi may be non-holomorphic.
 */
VerificationReport verify_projection_identity(
    const std::string& name, const FiniteGroup& group, const Character& chi,
    const MultiPoly& ell, const PolyMapExpr& theta, const DomainSpec& domain, double lambda,
    const std::function<cplx(const CVec&)>& phi, const std::vector<CVec>& eval_points,
    long long n, std::uint64_t seed, double tol_sigma = 4.0, int threads = 1);

/**
 * @brief Structural identities of a group/quotient-map pair:
 *        projection idempotency and relative equivariance (1e-10), character
 *        completeness for abelian actions (1e-10), invariance of the quotient
 *        map along orbits (1e-8), constancy of J_theta / prod ell_i^{m_i - 1}
 *        (relative spread 1e-8), and sign-character exponents c_i == m_i - 1.
 */
VerificationReport verify_structural(const FiniteGroup& group, const PolyMapExpr& theta,
                                     std::uint64_t seed);

}  // namespace bergq
