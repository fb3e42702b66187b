// SPDX-License-Identifier: MIT
#include "bergq/intlin.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

constexpr int kMaxSize = 8;
constexpr std::int64_t kMaxEntry = std::int64_t{1} << 31;
constexpr int kMaxDeckOrder = 10000;

void check_square_small(const IMat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw invalid_input_error(std::string(what) + " requires a non-empty square matrix");
  }
  if (m.rows() > kMaxSize) {
    throw invalid_input_error(std::string(what) + " supports sizes up to 8");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) > kMaxEntry || m(i, j) < -kMaxEntry) {
        throw invalid_input_error(std::string(what) + " entries must not exceed 2^31");
      }
    }
  }
}

[[noreturn]] void overflow() {
  throw invalid_input_error("integer overflow in exact linear algebra");
}

}  // namespace

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

namespace {

IMat strike(const IMat& m, Eigen::Index row, Eigen::Index col) {
  IMat out(m.rows() - 1, m.cols() - 1);
  Eigen::Index ro = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    Eigen::Index co = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out(ro, co++) = m(r, c);
    }
    ++ro;
  }
  return out;
}

std::int64_t det_rec(const IMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) {
    return checked_sub(checked_mul(m(0, 0), m(1, 1)), checked_mul(m(0, 1), m(1, 0)));
  }
  std::int64_t acc = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    const std::int64_t cof = checked_mul(m(0, j), det_rec(strike(m, 0, j)));
    acc = (j % 2 == 0) ? checked_add(acc, cof) : checked_sub(acc, cof);
  }
  return acc;
}

}  // namespace

std::int64_t int_det(const IMat& m) {
  check_square_small(m, "determinant");
  return det_rec(m);
}

IMat adjugate(const IMat& b) {
  check_square_small(b, "adjugate");
  const Eigen::Index n = b.rows();
  IMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // adj(B)_{ij} is the (j, i) cofactor of B.
      const std::int64_t minor_det = det_rec(strike(b, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? minor_det : checked_sub(0, minor_det);
    }
  }
  return adj;
}

namespace {

/// Working state for the Smith reduction: A == P * M * Q at all times.
struct SNFWork {
  IMat m, p, q;

  void row_swap(Eigen::Index i, Eigen::Index j) {
    m.row(i).swap(m.row(j));
    p.col(i).swap(p.col(j));
  }
  void col_swap(Eigen::Index i, Eigen::Index j) {
    m.col(i).swap(m.col(j));
    q.row(i).swap(q.row(j));
  }
  /// M.row(i) -= k * M.row(j), compensated in P.
  void row_axpy(Eigen::Index i, Eigen::Index j, std::int64_t k) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(i, c) = checked_sub(m(i, c), checked_mul(k, m(j, c)));
    }
    for (Eigen::Index r = 0; r < p.rows(); ++r) {
      p(r, j) = checked_add(p(r, j), checked_mul(k, p(r, i)));
    }
  }
  /// M.col(i) -= k * M.col(j), compensated in Q.
  void col_axpy(Eigen::Index i, Eigen::Index j, std::int64_t k) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      m(r, i) = checked_sub(m(r, i), checked_mul(k, m(r, j)));
    }
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
      q(j, c) = checked_add(q(j, c), checked_mul(k, q(i, c)));
    }
  }
  void row_negate(Eigen::Index i) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(i, c) = checked_sub(0, m(i, c));
    for (Eigen::Index r = 0; r < p.rows(); ++r) p(r, i) = checked_sub(0, p(r, i));
  }
};

}  // namespace

SNFResult smith_normal_form(const IMat& a) {
  check_square_small(a, "Smith normal form");
  if (int_det(a) == 0) {
    throw invalid_input_error("Smith normal form requires a nonsingular matrix");
  }
  const Eigen::Index n = a.rows();
  SNFWork w{a, IMat::Identity(n, n), IMat::Identity(n, n)};

  for (Eigen::Index t = 0; t < n; ++t) {
    while (true) {
      // Least-magnitude nonzero pivot in the trailing submatrix.
      Eigen::Index pr = -1, pc = -1;
      std::int64_t best = 0;
      for (Eigen::Index i = t; i < n; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          const std::int64_t mag = std::llabs(w.m(i, j));
          if (mag != 0 && (pr < 0 || mag < best)) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) throw invalid_input_error("Smith normal form requires a nonsingular matrix");
      if (pr != t) w.row_swap(t, pr);
      if (pc != t) w.col_swap(t, pc);
      if (w.m(t, t) < 0) w.row_negate(t);

      bool reduced = true;
      for (Eigen::Index i = t + 1; i < n; ++i) {
        if (w.m(i, t) != 0) {
          w.row_axpy(i, t, w.m(i, t) / w.m(t, t));
          if (w.m(i, t) != 0) reduced = false;  // remainder smaller than pivot
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (w.m(t, j) != 0) {
          w.col_axpy(j, t, w.m(t, j) / w.m(t, t));
          if (w.m(t, j) != 0) reduced = false;
        }
      }
      if (!reduced) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < n && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < n && divisible; ++j) {
          if (w.m(i, j) % w.m(t, t) != 0) {
            w.row_axpy(t, i, -1);  // fold row i into the pivot row and redo
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
  }

  SNFResult out;
  out.p = w.p;
  out.d = w.m;
  out.q = w.q;
  out.diagonal.reserve(n);
  for (Eigen::Index t = 0; t < n; ++t) out.diagonal.push_back(w.m(t, t));
  return out;
}

FiniteGroup monomial_deck_group(const IMat& a) {
  check_square_small(a, "deck group");
  const std::int64_t det = int_det(a);
  if (det == 0) throw invalid_input_error("deck group requires a nonsingular exponent matrix");
  const std::int64_t order = std::llabs(det);
  if (order > kMaxDeckOrder) {
    throw group_too_large_error("deck group order exceeds 10000");
  }
  const Eigen::Index n = a.rows();
  const SNFResult snf = smith_normal_form(a);
  const IMat adj = adjugate(a);

  std::vector<CMat> elements;
  elements.reserve(static_cast<std::size_t>(order));
  std::vector<std::int64_t> idx(n, 0);
  while (true) {
    // Coset representative m = P * idx, then fractional exponents A^{-1} m.
    IVec mvec = IVec::Zero(n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        mvec[r] = checked_add(mvec[r], checked_mul(snf.p(r, c), idx[c]));
      }
    }
    CMat el = CMat::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      std::int64_t num = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        num = checked_add(num, checked_mul(adj(r, c), mvec[c]));
      }
      el(r, r) = unit_root(num % det, det);
    }
    elements.push_back(std::move(el));
    Eigen::Index pos = n - 1;
    while (pos >= 0 && idx[pos] == snf.diagonal[pos] - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return group_from_elements(std::move(elements), "deck(" + std::to_string(order) + ")");
}

}  // namespace bergq
