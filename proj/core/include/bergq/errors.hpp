// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace bergq {

/**
 * @brief Raised when an argument violates a documented precondition.
 *
 * Examples: malformed JSON polynomials, non-unitary group generators,
 * singular integer matrices, out-of-range indices, unknown presets.
 * The command-line tool maps this class of failure to exit code 2.
 */
class invalid_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * @brief Raised when an evaluation point falls inside a singular guard band.
 *
 * Kernel and weight formulas divide by relative invariants, Jacobians and
 * base-kernel denominators; rather than return meaningless large values we
 * refuse to evaluate once a denominator magnitude drops below its guard
 * threshold (documented at each call site).
 */
class near_singular_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * @brief Raised when a group closure or deck enumeration exceeds the
 *        supported element count.
 */
class group_too_large_error : public invalid_input_error {
 public:
  using invalid_input_error::invalid_input_error;
};

/**
 * @brief Raised when rejection sampling fails to produce a point within the
 *        configured attempt budget (degenerate acceptance ratio).
 */
class sampler_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bergq
