// SPDX-License-Identifier: MIT
#include "bergq/kernels.hpp"

#include <cmath>
#include <memory>

#include <Eigen/Dense>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

constexpr double kDenomGuard = 1e-12;   // base-kernel denominators
constexpr double kInvariantGuard = 1e-9;  // relative invariants / Jacobian prefactors

cplx guarded_inverse_power(cplx denom, double power, const char* what) {
  if (std::abs(denom) < kDenomGuard) {
    throw near_singular_error(std::string(what) + " evaluated at a boundary-singular pair");
  }
  return std::pow(denom, -power);
}

}  // namespace

cplx KernelOracle::operator()(const CVec& z, const CVec& w) const {
  if (z.size() != dim || w.size() != dim) {
    throw invalid_input_error("kernel arguments must have dimension " + std::to_string(dim));
  }
  return fn(z, w);
}

KernelOracle base_kernel(const DomainSpec& domain, double lambda) {
  if (domain.kind == DomainKind::Polydisc) {
    if (!(lambda > 1.0)) {
      throw invalid_input_error("polydisc kernel exponent must satisfy lambda > 1");
    }
    const int d = domain.dim;
    std::string label = "polydisc(" + std::to_string(d);
    if (lambda != 2.0) label += ",lambda=" + std::to_string(lambda);
    label += ")";
    return KernelOracle{
        std::move(label), d, [d, lambda](const CVec& z, const CVec& w) {
          cplx acc{1.0, 0.0};
          for (int j = 0; j < d; ++j) {
            acc *= guarded_inverse_power(1.0 - z[j] * std::conj(w[j]), lambda,
                                         "polydisc kernel");
          }
          return acc;
        }};
  }
  if (lambda != 2.0) {
    throw invalid_input_error("ball kernel supports only the unweighted case (lambda == 2)");
  }
  const int d = domain.dim;
  return KernelOracle{"ball(" + std::to_string(d) + ")", d,
                      [d](const CVec& z, const CVec& w) {
                        const cplx inner = w.dot(z);  // sum_j z_j conj(w_j)
                        return guarded_inverse_power(1.0 - inner, d + 1, "ball kernel");
                      }};
}

KernelOracle quotient_kernel_sum(const FiniteGroup& group, const Character& chi,
                                 const MultiPoly& ell, KernelOracle base) {
  if (base.dim != group.dim || ell.dim != group.dim) {
    throw invalid_input_error("group, invariant and base kernel dimensions must agree");
  }
  if (static_cast<int>(chi.values.size()) != group.order()) {
    throw invalid_input_error("character value list does not match group order");
  }
  auto g = std::make_shared<const FiniteGroup>(group);
  auto chi_vals = std::make_shared<const std::vector<cplx>>(chi.values);
  auto inv = std::make_shared<const MultiPoly>(ell);
  auto b = std::make_shared<const KernelOracle>(std::move(base));
  std::string label = "quotient-sum[" + group.name + "," + chi.name + "]";
  return KernelOracle{
      std::move(label), group.dim, [g, chi_vals, inv, b](const CVec& z, const CVec& w) {
        const cplx ez = poly_eval(*inv, z);
        const cplx ew = poly_eval(*inv, w);
        if (std::abs(ez) < kInvariantGuard || std::abs(ew) < kInvariantGuard) {
          throw near_singular_error("averaged kernel at a zero of the relative invariant");
        }
        cplx acc{0.0, 0.0};
        for (int i = 0; i < g->order(); ++i) {
          // rho(sigma^{-1}) * base(sigma^{-1} . z, w); the point action of
          // sigma^{-1} multiplies by sigma.matrix.
          acc += (*chi_vals)[g->inverse_index[i]] *
                 (*b)(g->elements[i].matrix * z, w);
        }
        return acc / (ez * std::conj(ew));
      }};
}

KernelOracle quotient_kernel_sign(const FiniteGroup& group, const PolyMapExpr& theta,
                                  KernelOracle base) {
  KernelOracle k =
      quotient_kernel_sum(group, sign_character(group), jacobian_det_poly(theta),
                          std::move(base));
  k.label = "quotient-sign[" + group.name + "]";
  return k;
}

KernelOracle conjugated_kernel(const FiniteGroup& group, const BallAutomorphism& psi,
                               std::function<cplx(const CVec&)> jf, KernelOracle base) {
  if (base.dim != group.dim || psi.dim() != group.dim) {
    throw invalid_input_error("group, automorphism and base kernel dimensions must agree");
  }
  auto g = std::make_shared<const FiniteGroup>(group);
  auto b = std::make_shared<const KernelOracle>(std::move(base));
  auto a = std::make_shared<const BallAutomorphism>(psi);
  auto jfn = std::make_shared<const std::function<cplx(const CVec&)>>(std::move(jf));
  std::string label = "conjugated[" + group.name + "]";
  return KernelOracle{
      std::move(label), group.dim, [g, b, a, jfn](const CVec& z, const CVec& w) {
        const cplx jz = (*jfn)(z);
        const cplx jw = (*jfn)(w);
        if (std::abs(jz) < kInvariantGuard || std::abs(jw) < kInvariantGuard) {
          throw near_singular_error("conjugated kernel at a critical point of the proper map");
        }
        cplx acc{0.0, 0.0};
        for (int i = 0; i < g->order(); ++i) {
          const ConjugatedMap twisted{*a, g->elements[i]};
          acc += twisted.jacobian(z) * (*b)(twisted.eval(z), w);
        }
        return acc / (jz * std::conj(jw));
      }};
}

KernelOracle rudin_ball_kernel(const FiniteGroup& group, const BallAutomorphism& psi,
                               const PolyMapExpr& theta) {
  if (theta.dim != group.dim || theta.codim() != group.dim) {
    throw invalid_input_error("quotient map must be square and match the group dimension");
  }
  auto jtheta = std::make_shared<const MultiPoly>(jacobian_det_poly(theta));
  auto a = std::make_shared<const BallAutomorphism>(psi);
  auto jf = [jtheta, a](const CVec& z) {
    return poly_eval(*jtheta, a->eval(z)) * a->jacobian(z);
  };
  KernelOracle k = conjugated_kernel(group, psi, jf,
                                     base_kernel(ball(group.dim)));
  k.label = "rudin[" + group.name + "]";
  return k;
}

KernelOracle symmetrized_kernel_det(int d, double lambda) {
  if (d < 1 || d > 12) throw invalid_input_error("symmetrized kernel supports 1 <= d <= 12");
  if (!(lambda > 1.0)) throw invalid_input_error("kernel exponent must satisfy lambda > 1");
  return KernelOracle{
      "sym-det(" + std::to_string(d) + ")", d, [d, lambda](const CVec& z, const CVec& w) {
        cplx vz{1.0, 0.0};
        cplx vw{1.0, 0.0};
        for (int i = 0; i < d; ++i) {
          for (int j = i + 1; j < d; ++j) {
            vz *= z[i] - z[j];
            vw *= std::conj(w[i]) - std::conj(w[j]);
          }
        }
        if (std::abs(vz) < kInvariantGuard || std::abs(vw) < kInvariantGuard) {
          throw near_singular_error("symmetrized kernel at coinciding coordinates");
        }
        CMat m(d, d);
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            m(i, j) = guarded_inverse_power(1.0 - z[i] * std::conj(w[j]), lambda,
                                            "symmetrized kernel");
          }
        }
        return m.determinant() / (vz * vw);
      }};
}

KernelOracle symmetrized_kernel_perm(int d, double lambda) {
  if (d < 1 || d > 12) throw invalid_input_error("symmetrized kernel supports 1 <= d <= 12");
  if (!(lambda > 1.0)) throw invalid_input_error("kernel exponent must satisfy lambda > 1");
  return KernelOracle{
      "sym-perm(" + std::to_string(d) + ")", d, [d, lambda](const CVec& z, const CVec& w) {
        CMat m(d, d);
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) {
            m(i, j) = guarded_inverse_power(1.0 - z[i] * std::conj(w[j]), lambda,
                                            "symmetrized kernel");
          }
        }
        return permanent(m);
      }};
}

std::pair<KernelOracle, KernelOracle> dihedral_kernels(int k) {
  if (k < 2) throw invalid_input_error("dihedral kernel parameter must be >= 2");
  auto diag_sum = [k](const CVec& z, const CVec& w, double reflect_sign) {
    const cplx u1 = z[0] * std::conj(w[0]);
    const cplx u2 = z[1] * std::conj(w[1]);
    const cplx x1 = z[1] * std::conj(w[0]);
    const cplx x2 = z[0] * std::conj(w[1]);
    cplx acc{0.0, 0.0};
    for (int i = 1; i <= k; ++i) {
      const cplx wi = unit_root(i, k);
      const cplx wk = unit_root(k - i, k);
      const cplx rot = guarded_inverse_power(1.0 - wi * u1, 2, "dihedral kernel") *
                       guarded_inverse_power(1.0 - wk * u2, 2, "dihedral kernel");
      const cplx ref = guarded_inverse_power(1.0 - wi * x1, 2, "dihedral kernel") *
                       guarded_inverse_power(1.0 - wk * x2, 2, "dihedral kernel");
      acc += rot + reflect_sign * ref;
    }
    return acc;
  };
  KernelOracle sign{
      "dihedral-sign(" + std::to_string(k) + ")", 2,
      [k, diag_sum](const CVec& z, const CVec& w) {
        const cplx pz = std::pow(z[0], k) - std::pow(z[1], k);
        const cplx pw = std::conj(std::pow(w[0], k) - std::pow(w[1], k));
        if (std::abs(pz) < kInvariantGuard || std::abs(pw) < kInvariantGuard) {
          throw near_singular_error("dihedral kernel at a reflection hyperplane");
        }
        return diag_sum(z, w, -1.0) / (static_cast<double>(k) * k * pz * pw);
      }};
  KernelOracle trivial{"dihedral-trivial(" + std::to_string(k) + ")", 2,
                       [diag_sum](const CVec& z, const CVec& w) {
                         return diag_sum(z, w, 1.0);
                       }};
  return {std::move(sign), std::move(trivial)};
}

KernelOracle monomial_polyhedron_kernel(const IMat& b) {
  const IMat a = adjugate(b);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < 0) {
        throw invalid_input_error(
            "polyhedron matrix is inadmissible: adjugate has negative entries");
      }
    }
  }
  const int d = static_cast<int>(a.rows());
  const std::int64_t det = int_det(a);
  auto deck = std::make_shared<const FiniteGroup>(monomial_deck_group(a));
  auto base = std::make_shared<const KernelOracle>(base_kernel(polydisc(d)));
  std::vector<std::int64_t> expo(d);  // prefactor exponents 1 - colsum_j
  for (int j = 0; j < d; ++j) {
    std::int64_t colsum = 0;
    for (int i = 0; i < d; ++i) colsum += a(i, j);
    expo[j] = 1 - colsum;
  }
  const double det2 = static_cast<double>(det) * static_cast<double>(det);
  return KernelOracle{
      "monomial(det=" + std::to_string(det) + ")", d,
      [d, det2, expo, deck, base](const CVec& z, const CVec& w) {
        cplx pref{1.0 / det2, 0.0};
        for (int j = 0; j < d; ++j) {
          if (expo[j] == 0) continue;
          const cplx t = z[j] * std::conj(w[j]);
          if (std::abs(t) < kInvariantGuard) {
            throw near_singular_error("monomial kernel at a vanishing coordinate");
          }
          pref *= std::pow(t, static_cast<double>(expo[j]));
        }
        cplx acc{0.0, 0.0};
        for (int i = 0; i < deck->order(); ++i) {
          const GroupElement& el = deck->elements[i];
          acc += (cplx{1.0, 0.0} / el.det) * (*base)(el.inverse * z, w);
        }
        return pref * acc;
      }};
}

KernelOracle fat_hartogs_kernel(int gamma) {
  if (gamma < 1) throw invalid_input_error("fat Hartogs exponent must be >= 1");
  const double g2 = static_cast<double>(gamma) * gamma;
  return KernelOracle{
      "fat-hartogs(" + std::to_string(gamma) + ")", 2,
      [gamma, g2](const CVec& z, const CVec& w) {
        const cplx u1 = z[0] * std::conj(w[0]);
        const cplx u2 = z[1] * std::conj(w[1]);
        if (std::abs(u2) < kInvariantGuard) {
          throw near_singular_error("fat Hartogs kernel at a vanishing second coordinate");
        }
        cplx acc{0.0, 0.0};
        for (int k = 1; k <= gamma; ++k) {
          acc += guarded_inverse_power(1.0 - unit_root(k, gamma) * u1, 2,
                                       "fat Hartogs kernel") *
                 guarded_inverse_power(1.0 - unit_root(gamma - k, gamma) * u2, 2,
                                       "fat Hartogs kernel");
        }
        return acc / (g2 * std::pow(u2, gamma));
      }};
}

KernelOracle ellipsoid_kernel(int p, int q) {
  if (p < 1 || q < 1) throw invalid_input_error("ellipsoid exponents must be >= 1");
  const double pq2 = static_cast<double>(p) * q * p * q;
  return KernelOracle{
      "ellipsoid(" + std::to_string(p) + "," + std::to_string(q) + ")", 2,
      [p, q, pq2](const CVec& z, const CVec& w) {
        const cplx u1 = z[0] * std::conj(w[0]);
        const cplx u2 = z[1] * std::conj(w[1]);
        cplx pref{1.0 / pq2, 0.0};
        if (p > 1) {
          if (std::abs(u1) < kInvariantGuard) {
            throw near_singular_error("ellipsoid kernel at a vanishing first coordinate");
          }
          pref /= std::pow(u1, p - 1);
        }
        if (q > 1) {
          if (std::abs(u2) < kInvariantGuard) {
            throw near_singular_error("ellipsoid kernel at a vanishing second coordinate");
          }
          pref /= std::pow(u2, q - 1);
        }
        cplx acc{0.0, 0.0};
        for (int a = 1; a <= p; ++a) {
          for (int b = 1; b <= q; ++b) {
            const cplx wa = unit_root(a, p);
            const cplx wb = unit_root(b, q);
            acc += wa * wb *
                   guarded_inverse_power(1.0 - (wa * u1 + wb * u2), 3, "ellipsoid kernel");
          }
        }
        return pref * acc;
      }};
}

KernelOracle abelian_kernel_reassembly(const FiniteGroup& group, KernelOracle base) {
  if (base.dim != group.dim) {
    throw invalid_input_error("group and base kernel dimensions must agree");
  }
  if (group.order() == 1) {
    KernelOracle k = std::move(base);
    k.label = "reassembly[trivial]";
    return k;
  }
  const std::vector<Character> chars = one_dim_characters(group);
  if (static_cast<int>(chars.size()) != group.order()) {
    throw invalid_input_error(
        "kernel reassembly requires an abelian group with a full character list");
  }
  const auto hyperplanes = reflecting_hyperplanes(group);
  struct Piece {
    MultiPoly ell;
    KernelOracle kernel;
  };
  auto pieces = std::make_shared<std::vector<Piece>>();
  pieces->reserve(chars.size());
  for (const Character& chi : chars) {
    MultiPoly ell = relative_invariant(group, chi, hyperplanes);
    KernelOracle k = quotient_kernel_sum(group, chi, ell, base);
    pieces->push_back({std::move(ell), std::move(k)});
  }
  const double order = static_cast<double>(group.order());
  return KernelOracle{"reassembly[" + group.name + "]", group.dim,
                      [pieces, order](const CVec& z, const CVec& w) {
                        cplx acc{0.0, 0.0};
                        for (const Piece& p : *pieces) {
                          acc += poly_eval(p.ell, z) * p.kernel(z, w) *
                                 std::conj(poly_eval(p.ell, w));
                        }
                        return acc / order;
                      }};
}

cplx permanent(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw invalid_input_error("permanent requires a non-empty square matrix");
  }
  const int n = static_cast<int>(m.rows());
  if (n > 12) throw invalid_input_error("permanent supports sizes up to 12");
  // Inclusion-exclusion over column subsets:
  // perm(M) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} M(i, j).
  cplx total{0.0, 0.0};
  const unsigned full = (1u << n);
  for (unsigned s = 1; s < full; ++s) {
    cplx prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) {
      cplx row{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (s & (1u << j)) row += m(i, j);
      }
      prod *= row;
    }
    const int bits = __builtin_popcount(s);
    total += (bits % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

}  // namespace bergq
