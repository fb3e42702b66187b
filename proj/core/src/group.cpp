// SPDX-License-Identifier: MIT
#include "bergq/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <nlohmann/json.hpp>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

constexpr double kMatrixTol = 1e-10;     // element identity / dedupe (Frobenius)
constexpr double kUnitaryTol = 1e-8;     // generator unitarity guard (Frobenius)
constexpr double kRankTol = 1e-9;        // singular values counted as nonzero
constexpr double kValueTol = 1e-8;       // character/determinant value matching
constexpr int kMaxGroupOrder = 10000;

GroupElement make_element(CMat m) {
  GroupElement el;
  el.det = CMat(m).determinant();
  el.inverse = m.adjoint();  // unitary, so the adjoint is the exact inverse
  el.matrix = std::move(m);
  return el;
}

void check_unitary(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw invalid_input_error("group generators must be square matrices");
  }
  const CMat gram = m.adjoint() * m;
  const CMat eye = CMat::Identity(m.rows(), m.cols());
  if ((gram - eye).norm() > kUnitaryTol) {
    throw invalid_input_error("group generators must be unitary (tolerance 1e-8)");
  }
}

void finalize(FiniteGroup& g) {
  g.inverse_index.resize(g.elements.size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const int j = g.find(g.elements[i].inverse);
    if (j < 0) throw invalid_input_error("element set is not closed under inversion");
    g.inverse_index[i] = j;
  }
}

}  // namespace

int FiniteGroup::find(const CMat& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if ((elements[i].matrix - m).norm() <= kMatrixTol) return static_cast<int>(i);
  }
  return -1;
}

FiniteGroup symmetric_group(int d) {
  if (d < 1) throw invalid_input_error("symmetric group degree must be >= 1");
  FiniteGroup g;
  g.kind = GroupKind::Symmetric;
  g.name = "symmetric(" + std::to_string(d) + ")";
  g.dim = d;
  g.params = {d};
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CMat m = CMat::Zero(d, d);
    for (int j = 0; j < d; ++j) m(perm[j], j) = cplx{1.0, 0.0};
    g.elements.push_back(make_element(std::move(m)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  finalize(g);
  return g;
}

FiniteGroup dihedral_group(int k) {
  if (k < 2) throw invalid_input_error("dihedral parameter must be >= 2");
  FiniteGroup g;
  g.kind = GroupKind::Dihedral;
  g.name = "dihedral(" + std::to_string(k) + ")";
  g.dim = 2;
  g.params = {k};
  // Rotations diag(w^j, w^{-j}) followed by the reflections swap * rotation.
  for (int j = 0; j < k; ++j) {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = unit_root(j, k);
    m(1, 1) = unit_root(-j, k);
    g.elements.push_back(make_element(std::move(m)));
  }
  for (int j = 0; j < k; ++j) {
    CMat m = CMat::Zero(2, 2);
    m(0, 1) = unit_root(-j, k);
    m(1, 0) = unit_root(j, k);
    g.elements.push_back(make_element(std::move(m)));
  }
  finalize(g);
  return g;
}

FiniteGroup cyclic_product_group(std::vector<int> moduli) {
  if (moduli.empty()) throw invalid_input_error("cyclic product needs at least one factor");
  long long order = 1;
  for (int n : moduli) {
    if (n < 1) throw invalid_input_error("cyclic factors must be >= 1");
    order *= n;
    if (order > kMaxGroupOrder) {
      throw group_too_large_error("cyclic product order exceeds 10000");
    }
  }
  const int d = static_cast<int>(moduli.size());
  FiniteGroup g;
  g.kind = GroupKind::CyclicProduct;
  g.name = "cyclic(";
  for (int i = 0; i < d; ++i) g.name += (i ? "," : "") + std::to_string(moduli[i]);
  g.name += ")";
  g.dim = d;
  g.params = moduli;
  std::vector<int> j(d, 0);
  while (true) {
    CMat m = CMat::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = unit_root(j[i], moduli[i]);
    g.elements.push_back(make_element(std::move(m)));
    int pos = d - 1;
    while (pos >= 0 && j[pos] == moduli[pos] - 1) j[pos--] = 0;
    if (pos < 0) break;
    ++j[pos];
  }
  finalize(g);
  return g;
}

FiniteGroup explicit_group(std::vector<CMat> generators, std::string name) {
  if (generators.empty()) throw invalid_input_error("explicit group needs at least one generator");
  const auto rows = generators.front().rows();
  for (const CMat& m : generators) {
    check_unitary(m);
    if (m.rows() != rows) {
      throw invalid_input_error("explicit group generators must share one dimension");
    }
  }
  FiniteGroup g;
  g.kind = GroupKind::Explicit;
  g.name = std::move(name);
  g.dim = static_cast<int>(rows);
  g.elements.push_back(make_element(CMat::Identity(rows, rows)));
  // Breadth-first closure under right multiplication by the generators;
  // discovery order is deterministic for a fixed generator list.
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const CMat& gen : generators) {
      CMat prod = g.elements[i].matrix * gen;
      if (g.find(prod) < 0) {
        if (static_cast<int>(g.elements.size()) >= kMaxGroupOrder) {
          throw group_too_large_error("group closure exceeds 10000 elements");
        }
        g.elements.push_back(make_element(std::move(prod)));
      }
    }
  }
  finalize(g);
  return g;
}

FiniteGroup trivial_group(int dim) {
  if (dim < 1) throw invalid_input_error("trivial group dimension must be >= 1");
  FiniteGroup g;
  g.kind = GroupKind::Explicit;
  g.name = "trivial(" + std::to_string(dim) + ")";
  g.dim = dim;
  g.elements.push_back(make_element(CMat::Identity(dim, dim)));
  finalize(g);
  return g;
}

FiniteGroup group_from_elements(std::vector<CMat> elements, std::string name) {
  if (elements.empty()) throw invalid_input_error("element list must be non-empty");
  const auto rows = elements.front().rows();
  if ((elements.front() - CMat::Identity(rows, rows)).norm() > kMatrixTol) {
    throw invalid_input_error("element list must start with the identity");
  }
  FiniteGroup g;
  g.kind = GroupKind::Explicit;
  g.name = std::move(name);
  g.dim = static_cast<int>(rows);
  for (CMat& m : elements) {
    check_unitary(m);
    if (g.find(m) >= 0) throw invalid_input_error("element list contains duplicates");
    g.elements.push_back(make_element(std::move(m)));
  }
  finalize(g);
  return g;
}

FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Symmetric:
      return symmetric_group(spec.d);
    case GroupKind::Dihedral:
      return dihedral_group(spec.k);
    case GroupKind::CyclicProduct:
      return cyclic_product_group(spec.moduli);
    case GroupKind::Explicit:
      return explicit_group(spec.generators);
  }
  throw invalid_input_error("unknown group kind");
}

CVec act_point(const GroupElement& g, const CVec& z) {
  if (z.size() != g.matrix.rows()) {
    throw invalid_input_error("point dimension does not match group element");
  }
  return g.inverse * z;
}

std::function<cplx(const CVec&)> act_function(const GroupElement& g,
                                              std::function<cplx(const CVec&)> f) {
  // (g . f)(z) = f(g^{-1} . z) = f(g.matrix z), since the point action of
  // g^{-1} multiplies by (g^{-1})^{-1} = g.matrix.
  CMat m = g.matrix;
  return [m = std::move(m), f = std::move(f)](const CVec& z) { return f(m * z); };
}

MultiPoly act_poly(const GroupElement& g, const MultiPoly& p) {
  return p.compose_linear(g.matrix);
}

bool is_pseudoreflection(const GroupElement& g) {
  const CMat diff = CMat::Identity(g.matrix.rows(), g.matrix.cols()) - g.matrix;
  Eigen::JacobiSVD<CMat> svd(diff);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > kRankTol) ++rank;
  }
  return rank == 1;
}

namespace {

/// Normalized defining covector of the fixed hyperplane of a pseudoreflection.
CVec hyperplane_covector(const GroupElement& g) {
  const CMat diff = CMat::Identity(g.matrix.rows(), g.matrix.cols()) - g.matrix;
  Eigen::JacobiSVD<CMat> svd(diff, Eigen::ComputeFullV);
  // The fixed hyperplane is the kernel of (I - g), i.e. the orthogonal
  // complement of the top right-singular vector v; the linear form vanishing
  // there has coefficients conj(v).
  CVec c = svd.matrixV().col(0).conjugate();
  double maxmag = 0.0;
  for (Eigen::Index j = 0; j < c.size(); ++j) maxmag = std::max(maxmag, std::abs(c[j]));
  Eigen::Index pick = 0;
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    if (std::abs(c[j]) >= maxmag - 1e-12) {
      pick = j;
      break;
    }
  }
  c /= c[pick];
  return c;
}

MultiPoly covector_form(const CVec& c) {
  MultiPoly form = MultiPoly::zero(static_cast<int>(c.size()));
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    if (c[j] != cplx{0.0, 0.0}) {
      form += c[j] * MultiPoly::variable(static_cast<int>(c.size()), static_cast<int>(j));
    }
  }
  return form;
}

}  // namespace

std::vector<ReflectionHyperplane> reflecting_hyperplanes(const FiniteGroup& g) {
  struct Bucket {
    CVec covector;
    std::vector<int> reflections;  // element indices stabilizing the hyperplane
  };
  std::vector<Bucket> buckets;
  for (int i = 0; i < g.order(); ++i) {
    if (!is_pseudoreflection(g.elements[i])) continue;
    CVec c = hyperplane_covector(g.elements[i]);
    bool matched = false;
    for (Bucket& b : buckets) {
      if ((b.covector - c).norm() <= kValueTol) {
        b.reflections.push_back(i);
        matched = true;
        break;
      }
    }
    if (!matched) buckets.push_back({std::move(c), {i}});
  }
  if (buckets.empty()) {
    throw invalid_input_error("group contains no pseudoreflections");
  }
  std::vector<ReflectionHyperplane> out;
  out.reserve(buckets.size());
  for (const Bucket& b : buckets) {
    ReflectionHyperplane h;
    h.coefficients = b.covector;
    h.linear_form = covector_form(b.covector);
    h.order = static_cast<int>(b.reflections.size()) + 1;
    // The pointwise stabilizer is cyclic of order m; its determinants are the
    // nontrivial m-th roots of unity.  The distinguished generator carries
    // the primitive root exp(2*pi*i/m).
    const cplx target = unit_root(1, h.order);
    double best = 1e9;
    for (int idx : b.reflections) {
      const double dist = std::abs(g.elements[idx].det - target);
      if (dist < best) {
        best = dist;
        h.generator_index = idx;
      }
    }
    if (best > kValueTol) {
      throw invalid_input_error(
          "hyperplane stabilizer is not cyclic with primitive determinant");
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<int> character_exponents(const FiniteGroup& g, const Character& chi,
                                     const std::vector<ReflectionHyperplane>& hyperplanes) {
  if (static_cast<int>(chi.values.size()) != g.order()) {
    throw invalid_input_error("character value list does not match group order");
  }
  std::vector<int> exponents;
  exponents.reserve(hyperplanes.size());
  for (const ReflectionHyperplane& h : hyperplanes) {
    const cplx chi_a = chi.values.at(h.generator_index);
    const cplx det_a = g.elements.at(h.generator_index).det;
    int found = -1;
    cplx power{1.0, 0.0};
    for (int c = 0; c < h.order; ++c) {
      if (std::abs(chi_a - power) <= kValueTol) {
        found = c;
        break;
      }
      power *= det_a;
    }
    if (found < 0) {
      throw invalid_input_error(
          "values do not define a character on a hyperplane stabilizer");
    }
    exponents.push_back(found);
  }
  return exponents;
}

MultiPoly relative_invariant(const FiniteGroup& g, const Character& chi,
                             const std::vector<ReflectionHyperplane>& hyperplanes) {
  const std::vector<int> c = character_exponents(g, chi, hyperplanes);
  MultiPoly ell = MultiPoly::constant(g.dim, cplx{1.0, 0.0});
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    ell *= hyperplanes[i].linear_form.pow(c[i]);
  }
  return ell;
}

Character sign_character(const FiniteGroup& g) {
  Character chi;
  chi.name = "sign";
  chi.values.reserve(g.order());
  for (const GroupElement& el : g.elements) chi.values.push_back(cplx{1.0, 0.0} / el.det);
  return chi;
}

Character trivial_character(const FiniteGroup& g) {
  Character chi;
  chi.name = "trivial";
  chi.values.assign(g.order(), cplx{1.0, 0.0});
  return chi;
}

namespace {

/// Round arg(value) to the nearest multiple of 2*pi/n; returns the multiple in [0, n).
int root_exponent(cplx value, int n, const char* what) {
  const double turns = std::arg(value) * static_cast<double>(n) / (2.0 * kPi);
  const long long j = std::llround(turns);
  const int jj = static_cast<int>(((j % n) + n) % n);
  if (std::abs(value - unit_root(jj, n)) > kValueTol) {
    throw invalid_input_error(std::string("matrix entry is not the expected root of unity in ") +
                              what);
  }
  return jj;
}

std::vector<Character> dihedral_characters(const FiniteGroup& g) {
  const int k = g.params.at(0);
  // Classify each element as rotation diag(w^j, w^{-j}) or reflection with
  // antidiagonal entries (w^{-j}, w^j).
  std::vector<bool> is_rot(g.order());
  std::vector<int> expo(g.order());
  for (int i = 0; i < g.order(); ++i) {
    const CMat& m = g.elements[i].matrix;
    if (std::abs(m(0, 1)) < 0.5) {
      is_rot[i] = true;
      expo[i] = root_exponent(m(0, 0), k, "dihedral rotation");
    } else {
      is_rot[i] = false;
      expo[i] = root_exponent(m(1, 0), k, "dihedral reflection");
    }
  }
  std::vector<Character> chars;
  chars.push_back(trivial_character(g));
  chars.push_back(sign_character(g));
  if (k % 2 == 0) {
    Character r1, r2;
    r1.name = "rho1";
    r2.name = "rho2";
    r1.values.resize(g.order());
    r2.values.resize(g.order());
    for (int i = 0; i < g.order(); ++i) {
      const double s = (expo[i] % 2 == 0) ? 1.0 : -1.0;
      r1.values[i] = cplx{s, 0.0};
      r2.values[i] = cplx{is_rot[i] ? s : -s, 0.0};
    }
    chars.push_back(std::move(r1));
    chars.push_back(std::move(r2));
  }
  return chars;
}

std::vector<Character> cyclic_characters(const FiniteGroup& g) {
  const std::vector<int>& n = g.params;
  const int d = g.dim;
  std::vector<std::vector<int>> expo(g.order(), std::vector<int>(d));
  for (int i = 0; i < g.order(); ++i) {
    for (int c = 0; c < d; ++c) {
      expo[i][c] = root_exponent(g.elements[i].matrix(c, c), n[c], "cyclic factor");
    }
  }
  std::vector<Character> chars;
  std::vector<int> m(d, 0);
  while (true) {
    Character chi;
    if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; })) {
      chi.name = "trivial";
    } else {
      chi.name = "chi(";
      for (int c = 0; c < d; ++c) chi.name += (c ? "," : "") + std::to_string(m[c]);
      chi.name += ")";
    }
    chi.values.resize(g.order());
    for (int i = 0; i < g.order(); ++i) {
      long long num = 0;
      long long den = 1;
      // Accumulate sum_c m_c j_c / n_c as a single rational phase.
      for (int c = 0; c < d; ++c) {
        num = num * n[c] + static_cast<long long>(m[c]) * expo[i][c] * den;
        den *= n[c];
      }
      chi.values[i] = unit_root(num % den, den);
    }
    chars.push_back(std::move(chi));
    int pos = d - 1;
    while (pos >= 0 && m[pos] == n[pos] - 1) m[pos--] = 0;
    if (pos < 0) break;
    ++m[pos];
  }
  return chars;
}

}  // namespace

std::vector<Character> one_dim_characters(const FiniteGroup& g) {
  switch (g.kind) {
    case GroupKind::Symmetric: {
      if (g.params.at(0) < 2) return {trivial_character(g)};
      return {trivial_character(g), sign_character(g)};
    }
    case GroupKind::Dihedral:
      return dihedral_characters(g);
    case GroupKind::CyclicProduct:
      return cyclic_characters(g);
    case GroupKind::Explicit:
      throw invalid_input_error(
          "one-dimensional character catalog is unavailable for explicit groups");
  }
  throw invalid_input_error("unknown group kind");
}

cplx project(const FiniteGroup& g, const Character& chi,
             const std::function<cplx(const CVec&)>& f, const CVec& z) {
  if (static_cast<int>(chi.values.size()) != g.order()) {
    throw invalid_input_error("character value list does not match group order");
  }
  cplx acc{0.0, 0.0};
  for (int i = 0; i < g.order(); ++i) {
    // chi(sigma^{-1}) f(sigma^{-1} . z); the point action of sigma^{-1}
    // multiplies by sigma.matrix.
    acc += chi.values[g.inverse_index[i]] * f(g.elements[i].matrix * z);
  }
  return acc / static_cast<double>(g.order());
}

namespace {

nlohmann::json matrix_to_flat_json(const CMat& m) {
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(2 * m.rows() * m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      flat.push_back(m(r, c).real());
      flat.push_back(m(r, c).imag());
    }
  }
  return flat;
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::CyclicProduct: return "cyclic_product";
    case GroupKind::Explicit: return "explicit";
  }
  return "unknown";
}

}  // namespace

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json elements = nlohmann::json::array();
  for (const GroupElement& el : g.elements) {
    elements.push_back({{"matrix", matrix_to_flat_json(el.matrix)},
                        {"det", {el.det.real(), el.det.imag()}}});
  }
  return {{"kind", kind_name(g.kind)}, {"name", g.name},    {"dim", g.dim},
          {"params", g.params},        {"order", g.order()}, {"elements", std::move(elements)}};
}

nlohmann::json character_to_json(const Character& chi) {
  std::vector<double> flat;
  flat.reserve(2 * chi.values.size());
  for (cplx v : chi.values) {
    flat.push_back(v.real());
    flat.push_back(v.imag());
  }
  return {{"name", chi.name}, {"values", std::move(flat)}};
}

}  // namespace bergq
