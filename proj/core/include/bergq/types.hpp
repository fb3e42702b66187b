// SPDX-License-Identifier: MIT
#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>

namespace bergq {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Integer matrices use a fixed-width element type so overflow checks are
/// well defined on every platform.
using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Unit imaginary constant, handy when building roots of unity.
inline constexpr cplx kImag{0.0, 1.0};

/// exp(2*pi*i * num/den) without accumulating phase error for small fractions.
inline cplx unit_root(long long num, long long den) {
  const double angle = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
  return cplx{std::cos(angle), std::sin(angle)};
}

}  // namespace bergq
