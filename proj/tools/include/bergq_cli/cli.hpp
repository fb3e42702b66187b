// SPDX-License-Identifier: MIT
#pragma once

/**
 * @brief Command-line front end for the bergq library.
 *
 * Three subcommands:
 *   kernel   evaluate a kernel preset at a pair of points,
 *   verify   run one of the verification suites,
 *   inspect  print group / hyperplane / character / integer-matrix data.
 *
 * All output is JSON-lines on `out`; diagnostics go to `err`.  Every record
 * echoes the resolved configuration so runs are reproducible from their logs.
 *
 * Exit codes: 0 success, 1 a verification suite failed, 2 invalid input
 * (unknown flags, malformed JSON, inadmissible parameters, near-singular
 * evaluation points).
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace bergq::cli {

/// Parse `args` (program name excluded) and execute one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bergq::cli
