// SPDX-License-Identifier: MIT
#include "bergq/quad.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergq/errors.hpp"

namespace bergq {

namespace {

constexpr long long kChunk = 16384;
constexpr double kPassFloor = 1e-12;
constexpr long long kMaxRejection = 1000000;

/// splitmix64 step; derives independent sub-seeds from (seed, salt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Streaming mean/variance accumulator, one per real component.
struct Welford {
  long long n = 0;
  double mean_re = 0.0, mean_im = 0.0;
  double m2_re = 0.0, m2_im = 0.0;

  void add(cplx v) {
    ++n;
    const double dre = v.real() - mean_re;
    mean_re += dre / static_cast<double>(n);
    m2_re += dre * (v.real() - mean_re);
    const double dim = v.imag() - mean_im;
    mean_im += dim / static_cast<double>(n);
    m2_im += dim * (v.imag() - mean_im);
  }

  /// Pairwise merge (parallel-variance combination); associative enough to
  /// give identical results when applied in a fixed order.
  static Welford merge(const Welford& a, const Welford& b) {
    if (a.n == 0) return b;
    if (b.n == 0) return a;
    Welford out;
    out.n = a.n + b.n;
    const double na = static_cast<double>(a.n);
    const double nb = static_cast<double>(b.n);
    const double nn = static_cast<double>(out.n);
    const double dre = b.mean_re - a.mean_re;
    out.mean_re = a.mean_re + dre * nb / nn;
    out.m2_re = a.m2_re + b.m2_re + dre * dre * na * nb / nn;
    const double dim = b.mean_im - a.mean_im;
    out.mean_im = a.mean_im + dim * nb / nn;
    out.m2_im = a.m2_im + b.m2_im + dim * dim * na * nb / nn;
    return out;
  }
};

std::string format_cplx(cplx v) {
  std::ostringstream os;
  os.precision(12);
  os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
  return os.str();
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add_check(std::string check_name, double residual, double threshold,
                                   std::string note) {
  CheckResult c;
  c.name = std::move(check_name);
  c.residual = residual;
  c.threshold = threshold;
  c.pass = residual <= threshold;
  c.note = std::move(note);
  checks.push_back(std::move(c));
}

void VerificationReport::add_flag(std::string check_name, bool ok, std::string note) {
  CheckResult c;
  c.name = std::move(check_name);
  c.residual = ok ? 0.0 : 1.0;
  c.threshold = 0.5;
  c.pass = ok;
  c.note = std::move(note);
  checks.push_back(std::move(c));
}

std::string digest_inputs(const std::string& canonical) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

nlohmann::json estimate_to_json(const MCEstimate& e) {
  return {{"mean", {e.mean.real(), e.mean.imag()}},
          {"std_error", e.std_error},
          {"n", e.n},
          {"seed", e.seed}};
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"note", c.note}});
  }
  return {{"name", r.name},
          {"digest", r.inputs_digest},
          {"pass", r.pass()},
          {"checks", std::move(checks)}};
}

double SampleStream::next_unit() {
  // Explicit 53-bit conversion; keeps streams independent of library
  // distribution implementations.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

CVec SampleStream::sample(const DomainSpec& domain) {
  CVec z(domain.dim);
  if (domain.kind == DomainKind::Polydisc) {
    for (int j = 0; j < domain.dim; ++j) {
      const double r = std::sqrt(next_unit());
      const double angle = 2.0 * kPi * next_unit();
      z[j] = cplx{r * std::cos(angle), r * std::sin(angle)};
    }
    return z;
  }
  for (long long attempt = 0; attempt < kMaxRejection; ++attempt) {
    double norm2 = 0.0;
    for (int j = 0; j < domain.dim; ++j) {
      const double r = std::sqrt(next_unit());
      const double angle = 2.0 * kPi * next_unit();
      z[j] = cplx{r * std::cos(angle), r * std::sin(angle)};
      norm2 += std::norm(z[j]);
    }
    if (norm2 < 1.0) return z;
  }
  throw sampler_error("ball rejection sampling exceeded the attempt budget");
}

MCEstimate mc_integrate(const DomainSpec& domain, const std::function<cplx(const CVec&)>& f,
                        const WeightSpec& weight, long long n, std::uint64_t seed,
                        int threads) {
  if (n < 2) throw invalid_input_error("Monte Carlo integration requires n >= 2");
  const long long chunks = (n + kChunk - 1) / kChunk;
  auto run_chunk = [&](long long j) {
    SampleStream stream(mix_seed(seed, static_cast<std::uint64_t>(j)));
    const long long count = std::min(kChunk, n - j * kChunk);
    Welford acc;
    for (long long i = 0; i < count; ++i) {
      const CVec z = stream.sample(domain);
      acc.add(f(z) * weight_eval(weight, z));
    }
    return acc;
  };

  std::vector<Welford> states(static_cast<std::size_t>(chunks));
  int workers = std::clamp(threads, 1, 64);
  workers = static_cast<int>(std::min<long long>(workers, chunks));
  if (workers <= 1) {
    for (long long j = 0; j < chunks; ++j) states[static_cast<std::size_t>(j)] = run_chunk(j);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      futures.push_back(std::async(std::launch::async, [&, t]() {
        for (long long j = t; j < chunks; j += workers) {
          states[static_cast<std::size_t>(j)] = run_chunk(j);
        }
      }));
    }
    for (auto& fut : futures) fut.get();
  }

  Welford total;
  for (const Welford& s : states) total = Welford::merge(total, s);

  MCEstimate est;
  est.mean = cplx{total.mean_re, total.mean_im};
  const double denom = static_cast<double>(total.n) * static_cast<double>(total.n - 1);
  est.std_error = std::sqrt(std::max(total.m2_re, total.m2_im) / denom);
  est.n = total.n;
  est.seed = seed;
  return est;
}

MCEstimate mc_integrate_quotient(const DomainSpec& domain, int group_order,
                                 const std::function<cplx(const CVec&)>& jtheta,
                                 const std::function<cplx(const CVec&)>& f,
                                 const WeightSpec& weight, long long n, std::uint64_t seed,
                                 int threads) {
  if (group_order < 1) throw invalid_input_error("group order must be >= 1");
  const double scale = 1.0 / static_cast<double>(group_order);
  auto integrand = [&](const CVec& z) {
    return f(z) * (std::norm(jtheta(z)) * scale);
  };
  return mc_integrate(domain, integrand, weight, n, seed, threads);
}

VerificationReport verify_reproducing(
    const std::string& name, const KernelOracle& kernel, const QuotientSetup& setup,
    const WeightSpec& weight,
    const std::vector<std::pair<std::string, std::function<cplx(const CVec&)>>>& functions,
    const std::vector<CVec>& eval_points, long long n, std::uint64_t seed, double tol_sigma,
    int threads) {
  VerificationReport rep;
  rep.name = name;
  rep.inputs_digest = digest_inputs(name + "|" + kernel.label + "|n=" + std::to_string(n) +
                                    "|seed=" + std::to_string(seed));
  std::uint64_t salt = 0;
  for (const auto& [fname, f] : functions) {
    for (std::size_t pi = 0; pi < eval_points.size(); ++pi) {
      const CVec& z0 = eval_points[pi];
      const cplx target = f(setup.theta(z0));
      auto integrand = [&](const CVec& x) { return f(setup.theta(x)) * kernel(z0, x); };
      const MCEstimate est =
          mc_integrate_quotient(setup.domain, setup.group_order, setup.jtheta, integrand,
                                weight, n, mix_seed(seed, salt++), threads);
      const double residual = std::abs(est.mean - target);
      const double threshold = std::max(tol_sigma * est.std_error, kPassFloor);
      rep.add_check("f=" + fname + "@p" + std::to_string(pi), residual, threshold,
                    "estimate=" + format_cplx(est.mean) + " target=" + format_cplx(target) +
                        " std_error=" + std::to_string(est.std_error));
    }
  }
  return rep;
}

VerificationReport verify_projection_identity(
    const std::string& name, const FiniteGroup& group, const Character& chi,
    const MultiPoly& ell, const PolyMapExpr& theta, const DomainSpec& domain, double lambda,
    const std::function<cplx(const CVec&)>& phi, const std::vector<CVec>& eval_points,
    long long n, std::uint64_t seed, double tol_sigma, int threads) {
  VerificationReport rep;
  rep.name = name;
  rep.inputs_digest =
      digest_inputs(name + "|" + group.name + "|" + chi.name + "|n=" + std::to_string(n) +
                    "|seed=" + std::to_string(seed));
  const KernelOracle base = base_kernel(domain, lambda);
  const KernelOracle avg = quotient_kernel_sum(group, chi, ell, base);
  // Weight reproducing the lambda-kernel: (lambda-1)^d prod (1-|z_j|^2)^(lambda-2).
  const WeightSpec weight =
      (lambda == 2.0) ? WeightSpec::unit()
                      : WeightSpec::polydisc_lambda(lambda).scaled(
                            std::pow(lambda - 1.0, domain.dim));
  const double inv_order = 1.0 / static_cast<double>(group.order());

  for (std::size_t pi = 0; pi < eval_points.size(); ++pi) {
    const CVec& w0 = eval_points[pi];
    auto lhs_integrand = [&](const CVec& x) {
      return poly_eval(ell, x) * phi(theta.eval(x)) * base(w0, x);
    };
    auto rhs_integrand = [&](const CVec& x) {
      return phi(theta.eval(x)) * avg(w0, x) * std::norm(poly_eval(ell, x));
    };
    const MCEstimate lhs = mc_integrate(domain, lhs_integrand, weight, n,
                                        mix_seed(seed, 2 * pi), threads);
    const MCEstimate rhs_raw = mc_integrate(domain, rhs_integrand, weight, n,
                                            mix_seed(seed, 2 * pi + 1), threads);
    const cplx scale = poly_eval(ell, w0) * inv_order;
    const cplx rhs = scale * rhs_raw.mean;
    const double rhs_se = std::abs(scale) * rhs_raw.std_error;
    const double residual = std::abs(lhs.mean - rhs);
    const double threshold =
        std::max(tol_sigma * std::hypot(lhs.std_error, rhs_se), kPassFloor);
    rep.add_check("point" + std::to_string(pi), residual, threshold,
                  "lhs=" + format_cplx(lhs.mean) + " rhs=" + format_cplx(rhs) +
                      " combined_se=" + std::to_string(std::hypot(lhs.std_error, rhs_se)));
  }
  return rep;
}

VerificationReport verify_structural(const FiniteGroup& group, const PolyMapExpr& theta,
                                     std::uint64_t seed) {
  VerificationReport rep;
  rep.name = "structural[" + group.name + "]";
  rep.inputs_digest = digest_inputs(rep.name + "|seed=" + std::to_string(seed));

  const auto hyperplanes = reflecting_hyperplanes(group);
  const MultiPoly jtheta = jacobian_det_poly(theta);
  const DomainSpec box = polydisc(group.dim);

  // Sign-character exponents must be m_i - 1 on every hyperplane.
  {
    const Character sgn = sign_character(group);
    const std::vector<int> c = character_exponents(group, sgn, hyperplanes);
    bool ok = true;
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
      ok = ok && (c[i] == hyperplanes[i].order - 1);
    }
    rep.add_flag("sign-exponents", ok, "c_i == m_i - 1 for all hyperplanes");
  }

  // Seeded sample points kept away from the hyperplane arrangement.
  SampleStream stream(mix_seed(seed, 0));
  auto sample_off_hyperplanes = [&]() {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      CVec z = stream.sample(box);
      bool clear = true;
      for (const auto& h : hyperplanes) {
        if (std::abs(poly_eval(h.linear_form, z)) < 0.05) {
          clear = false;
          break;
        }
      }
      if (clear) return z;
    }
    throw sampler_error("could not sample away from the hyperplane arrangement");
  };

  // J_theta factors through the hyperplane forms: J = c * prod ell_i^(m_i - 1).
  {
    double spread = 0.0;
    cplx ref{0.0, 0.0};
    for (int t = 0; t < 50; ++t) {
      const CVec z = sample_off_hyperplanes();
      cplx prod{1.0, 0.0};
      for (const auto& h : hyperplanes) {
        prod *= std::pow(poly_eval(h.linear_form, z), h.order - 1);
      }
      const cplx ratio = poly_eval(jtheta, z) / prod;
      if (t == 0) {
        ref = ratio;
      } else {
        spread = std::max(spread, std::abs(ratio - ref) / std::abs(ref));
      }
    }
    rep.add_check("jacobian-factorization", spread, 1e-8,
                  "relative spread of J_theta / prod ell_i^(m_i-1), constant=" +
                      format_cplx(ref));
  }

  // The quotient map is constant along orbits.
  {
    double residual = 0.0;
    for (int t = 0; t < 20; ++t) {
      const CVec z = stream.sample(box);
      const CVec u = theta.eval(z);
      for (const GroupElement& el : group.elements) {
        const CVec v = theta.eval(el.matrix * z);
        residual = std::max(residual, (u - v).lpNorm<Eigen::Infinity>());
      }
    }
    rep.add_check("orbit-invariance", residual, 1e-8, "max |theta(sigma z) - theta(z)|");
  }

  // Projection identities for every catalog character.
  const std::vector<Character> chars = one_dim_characters(group);
  const int d = group.dim;
  auto generic = [d](const CVec& z) {
    cplx acc = std::exp(0.3 * z[0] + 0.1 * z[d - 1]);
    acc += 0.7 * z[0] * z[0] * z[d - 1];
    acc += cplx{0.0, 0.2} * z[0];
    for (int j = 0; j < d; ++j) acc += 0.11 * static_cast<double>(j + 1) * z[j] * z[j] * z[j];
    return acc;
  };
  std::vector<CVec> pts;
  for (int t = 0; t < 5; ++t) pts.push_back(stream.sample(box));

  double idem = 0.0;
  double equiv = 0.0;
  for (const Character& chi : chars) {
    auto projected = [&](const CVec& y) { return project(group, chi, generic, y); };
    for (const CVec& z : pts) {
      const cplx g1 = projected(z);
      idem = std::max(idem, std::abs(project(group, chi, projected, z) - g1));
      for (int i = 0; i < group.order(); ++i) {
        // (P f)(sigma^{-1} . z) should equal chi(sigma) (P f)(z).
        const cplx lhs = projected(group.elements[i].matrix * z);
        equiv = std::max(equiv, std::abs(lhs - chi.values[i] * g1));
      }
    }
  }
  rep.add_check("projection-idempotent", idem, 1e-10, "P(Pf) == Pf over all characters");
  rep.add_check("projection-equivariance", equiv, 1e-10,
                "Pf(sigma^{-1} . z) == chi(sigma) Pf(z)");

  if (static_cast<int>(chars.size()) == group.order()) {
    double complete = 0.0;
    for (const CVec& z : pts) {
      cplx sum{0.0, 0.0};
      for (const Character& chi : chars) sum += project(group, chi, generic, z);
      complete = std::max(complete, std::abs(sum - generic(z)));
    }
    rep.add_check("character-completeness", complete, 1e-10,
                  "sum of isotypic projections reassembles f (abelian case)");
  }

  return rep;
}

}  // namespace bergq
