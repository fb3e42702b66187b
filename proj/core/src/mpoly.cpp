// SPDX-License-Identifier: MIT
#include "bergq/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

void check_dim_match(const MultiPoly& a, const MultiPoly& b) {
  if (a.dim != b.dim) {
    throw invalid_input_error("polynomial dimensions differ: " + std::to_string(a.dim) +
                              " vs " + std::to_string(b.dim));
  }
}

bool nonzero(cplx c) { return c.real() != 0.0 || c.imag() != 0.0; }

}  // namespace

MultiPoly MultiPoly::zero(int dim) {
  if (dim < 0) throw invalid_input_error("polynomial dimension must be non-negative");
  MultiPoly p;
  p.dim = dim;
  return p;
}

MultiPoly MultiPoly::constant(int dim, cplx c) {
  MultiPoly p = zero(dim);
  if (nonzero(c)) p.terms.emplace(std::vector<int>(dim, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(int dim, std::vector<int> exp, cplx c) {
  MultiPoly p = zero(dim);
  if (static_cast<int>(exp.size()) != dim) {
    throw invalid_input_error("monomial exponent vector has wrong length");
  }
  for (int e : exp) {
    if (e < 0) throw invalid_input_error("monomial exponents must be non-negative");
  }
  if (nonzero(c)) p.terms.emplace(std::move(exp), c);
  return p;
}

MultiPoly MultiPoly::variable(int dim, int i) {
  if (i < 0 || i >= dim) throw invalid_input_error("variable index out of range");
  std::vector<int> exp(dim, 0);
  exp[i] = 1;
  return monomial(dim, std::move(exp), cplx{1.0, 0.0});
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [exp, coeff] : terms) {
    int d = 0;
    for (int e : exp) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

cplx MultiPoly::coeff(const std::vector<int>& exp) const {
  auto it = terms.find(exp);
  return it == terms.end() ? cplx{0.0, 0.0} : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_dim_match(*this, rhs);
  for (const auto& [exp, coeff] : rhs.terms) {
    auto it = terms.find(exp);
    if (it == terms.end()) {
      terms.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (!nonzero(it->second)) terms.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_dim_match(*this, rhs);
  for (const auto& [exp, coeff] : rhs.terms) {
    auto it = terms.find(exp);
    if (it == terms.end()) {
      terms.emplace(exp, -coeff);
    } else {
      it->second -= coeff;
      if (!nonzero(it->second)) terms.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  check_dim_match(*this, rhs);
  std::map<std::vector<int>, cplx> out;
  std::vector<int> exp(dim);
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : rhs.terms) {
      for (int i = 0; i < dim; ++i) exp[i] = ea[i] + eb[i];
      out[exp] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = nonzero(it->second) ? std::next(it) : out.erase(it);
  }
  terms = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator*=(cplx scale) {
  if (!nonzero(scale)) {
    terms.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms) coeff *= scale;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [exp, coeff] : p.terms) coeff = -coeff;
  return p;
}

MultiPoly MultiPoly::compose_linear(const CMat& m) const {
  if (m.rows() != dim || m.cols() != dim) {
    throw invalid_input_error("substitution matrix shape does not match polynomial dimension");
  }
  // Images of the coordinate functions: z_i -> sum_j m(i,j) z_j.
  std::vector<MultiPoly> images;
  images.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    MultiPoly row = zero(dim);
    for (int j = 0; j < dim; ++j) {
      if (nonzero(m(i, j))) row += m(i, j) * variable(dim, j);
    }
    images.push_back(std::move(row));
  }
  MultiPoly result = zero(dim);
  for (const auto& [exp, coeff] : terms) {
    MultiPoly term = constant(dim, coeff);
    for (int i = 0; i < dim; ++i) {
      if (exp[i] > 0) term *= images[i].pow(exp[i]);
    }
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::pow(int p) const {
  if (p < 0) throw invalid_input_error("polynomial power must be non-negative");
  MultiPoly result = constant(dim, cplx{1.0, 0.0});
  for (int i = 0; i < p; ++i) result *= *this;
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coeff] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff.real() << (coeff.imag() < 0 ? "" : "+") << coeff.imag() << "i)";
    for (int i = 0; i < dim; ++i) {
      if (exp[i] == 0) continue;
      os << " z" << i;
      if (exp[i] > 1) os << "^" << exp[i];
    }
  }
  return os.str();
}

CVec PolyMapExpr::eval(const CVec& z) const {
  CVec out(codim());
  for (int i = 0; i < codim(); ++i) out[i] = poly_eval(components[i], z);
  return out;
}

cplx poly_eval(const MultiPoly& p, const CVec& z) {
  if (z.size() != p.dim) {
    throw invalid_input_error("evaluation point dimension does not match polynomial");
  }
  cplx acc{0.0, 0.0};
  for (const auto& [exp, coeff] : p.terms) {
    cplx term = coeff;
    for (int i = 0; i < p.dim; ++i) {
      for (int k = 0; k < exp[i]; ++k) term *= z[i];
    }
    acc += term;
  }
  return acc;
}

MultiPoly poly_partial(const MultiPoly& p, int i) {
  if (i < 0 || i >= p.dim) throw invalid_input_error("partial derivative index out of range");
  MultiPoly out = MultiPoly::zero(p.dim);
  for (const auto& [exp, coeff] : p.terms) {
    if (exp[i] == 0) continue;
    std::vector<int> e = exp;
    e[i] -= 1;
    out.terms[std::move(e)] += coeff * static_cast<double>(exp[i]);
  }
  // Accumulation cannot cancel here (distinct source terms map to distinct
  // derivative exponents), but normalize defensively.
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    it = (it->second.real() != 0.0 || it->second.imag() != 0.0) ? std::next(it)
                                                                : out.terms.erase(it);
  }
  return out;
}

namespace {

/// Cofactor expansion along the first row of a polynomial matrix.
MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m, int dim) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  MultiPoly det = MultiPoly::zero(dim);
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    minor.reserve(n - 1);
    for (int r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      row.reserve(n - 1);
      for (int c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    MultiPoly contrib = m[0][j] * poly_matrix_det(minor, dim);
    if (j % 2 == 0) {
      det += contrib;
    } else {
      det -= contrib;
    }
  }
  return det;
}

}  // namespace

MultiPoly jacobian_det_poly(const PolyMapExpr& f) {
  const int n = f.codim();
  if (n == 0 || n != f.dim) {
    throw invalid_input_error("Jacobian determinant requires a square polynomial map");
  }
  std::vector<std::vector<MultiPoly>> jac(n);
  for (int i = 0; i < n; ++i) {
    if (f.components[i].dim != f.dim) {
      throw invalid_input_error("polynomial map component has inconsistent dimension");
    }
    jac[i].reserve(n);
    for (int j = 0; j < n; ++j) jac[i].push_back(poly_partial(f.components[i], j));
  }
  return poly_matrix_det(jac, f.dim);
}

MultiPoly elementary_symmetric(int d, int k) {
  if (d < 1 || k < 0 || k > d) {
    throw invalid_input_error("elementary symmetric polynomial requires 0 <= k <= d, d >= 1");
  }
  MultiPoly out = MultiPoly::zero(d);
  // Enumerate k-subsets of {0, ..., d-1} with a fixed lexicographic walk.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> exp(d, 0);
    for (int i : idx) exp[i] = 1;
    out.terms.emplace(std::move(exp), cplx{1.0, 0.0});
    if (k == 0) break;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == d - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  if (k == 0) out = MultiPoly::constant(d, cplx{1.0, 0.0});
  return out;
}

nlohmann::json poly_to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exp, coeff] : p.terms) {
    terms.push_back({{"exp", exp}, {"re", coeff.real()}, {"im", coeff.imag()}});
  }
  return {{"dim", p.dim}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) {
      throw invalid_input_error("polynomial JSON must contain \"dim\" and \"terms\"");
    }
    const int dim = j.at("dim").get<int>();
    MultiPoly p = MultiPoly::zero(dim);
    for (const auto& t : j.at("terms")) {
      auto exp = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(exp.size()) != dim) {
        throw invalid_input_error("polynomial term exponent length does not match \"dim\"");
      }
      for (int e : exp) {
        if (e < 0) throw invalid_input_error("polynomial term exponents must be non-negative");
      }
      const cplx c{t.at("re").get<double>(), t.at("im").get<double>()};
      p.terms[exp] += c;
    }
    for (auto it = p.terms.begin(); it != p.terms.end();) {
      it = (it->second.real() != 0.0 || it->second.imag() != 0.0) ? std::next(it)
                                                                  : p.terms.erase(it);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input_error(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace bergq
