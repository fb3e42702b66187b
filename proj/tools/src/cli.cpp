// SPDX-License-Identifier: MIT
#include "bergq_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "bergq/errors.hpp"
#include "bergq/group.hpp"
#include "bergq/intlin.hpp"
#include "bergq/kernels.hpp"
#include "bergq/maps.hpp"
#include "bergq/mpoly.hpp"
#include "bergq/quad.hpp"
#include "bergq/suites.hpp"

namespace bergq::cli {

namespace {

using nlohmann::json;

/// Parse a flat interleaved [re, im, re, im, ...] JSON array into a point.
CVec parse_point(const std::string& text, const std::string& flag) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input_error(flag + ": not valid JSON: " + e.what());
  }
  if (!j.is_array() || j.size() % 2 != 0 || j.empty()) {
    throw invalid_input_error(flag + ": expected a flat [re, im, ...] array of even length");
  }
  CVec z(static_cast<Eigen::Index>(j.size() / 2));
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const json& re = j[2 * static_cast<std::size_t>(i)];
    const json& im = j[2 * static_cast<std::size_t>(i) + 1];
    if (!re.is_number() || !im.is_number()) {
      throw invalid_input_error(flag + ": entries must be numbers");
    }
    z[i] = cplx{re.get<double>(), im.get<double>()};
  }
  return z;
}

void require_dim(const CVec& z, int dim, const std::string& flag) {
  if (z.size() != dim) {
    throw invalid_input_error(flag + ": expected " + std::to_string(2 * dim) +
                              " numbers for a dimension-" + std::to_string(dim) + " point");
  }
}

/// Parse a nested JSON integer matrix [[...],[...]].
IMat parse_int_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw invalid_input_error(std::string("--matrix: not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw invalid_input_error("--matrix: expected a nested array [[...],[...]]");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  IMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw invalid_input_error("--matrix: rows must all have the same length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& cell = row[static_cast<std::size_t>(k)];
      if (!cell.is_number_integer()) {
        throw invalid_input_error("--matrix: entries must be integers");
      }
      m(i, k) = cell.get<std::int64_t>();
    }
  }
  return m;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw invalid_input_error(what + ": '" + item + "' is not an integer");
    }
  }
  if (vals.empty()) throw invalid_input_error(what + ": empty list");
  return vals;
}

/// Parse "sym:3" / "dihedral:4" / "cyclic:2,3" into a group.
FiniteGroup parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw invalid_input_error("--group: expected sym:<d>, dihedral:<k>, or cyclic:<n1,n2,...>");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "sym") return symmetric_group(parse_int_list(rest, "--group")[0]);
  if (kind == "dihedral") return dihedral_group(parse_int_list(rest, "--group")[0]);
  if (kind == "cyclic") return cyclic_product_group(parse_int_list(rest, "--group"));
  throw invalid_input_error("--group: unknown kind '" + kind + "'");
}

/// Parse "sym:3" / "dihedral:4" / "power:2,3" / "monomial:[[...]]" into a map.
PolyMapExpr parse_map(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw invalid_input_error(
        "--map: expected sym:<d>, dihedral:<k>, power:<p1,p2,...>, or monomial:<json>");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "sym") return symmetrization_map(parse_int_list(rest, "--map")[0]);
  if (kind == "dihedral") return dihedral_map(parse_int_list(rest, "--map")[0]);
  if (kind == "power") return power_map(parse_int_list(rest, "--map"));
  if (kind == "monomial") return monomial_map(parse_int_matrix(rest));
  throw invalid_input_error("--map: unknown kind '" + kind + "'");
}

json point_to_json(const CVec& z) {
  json out = json::array();
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out.push_back(z[i].real());
    out.push_back(z[i].imag());
  }
  return out;
}

json int_matrix_to_json(const IMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Buffered JSON-lines sink with an optional copy written to a file.
class Sink {
 public:
  void emit(const json& record) { buffer_ << record.dump() << '\n'; }

  int flush(std::ostream& out, const std::string& out_path, std::ostream& err, int code) {
    out << buffer_.str();
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      if (!file) {
        err << "cannot open output file: " << out_path << '\n';
        return 2;
      }
      file << buffer_.str();
    }
    return code;
  }

 private:
  std::ostringstream buffer_;
};

struct KernelFlags {
  std::string preset;
  std::string z_text;
  std::string w_text;
  int d = 2;
  double lambda = 2.0;
  int k = 2;
  int p = 1;
  int q = 1;
  int gamma = 1;
  std::string matrix_text;
  std::string group_spec;
  std::string character = "trivial";
  std::string psi_center_text;
  std::string out_path;
};

struct ResolvedKernel {
  KernelOracle oracle;
  json params;
};

ResolvedKernel resolve_kernel(const KernelFlags& f) {
  const std::string& p = f.preset;
  if (p == "polydisc") {
    return {base_kernel(polydisc(f.d)), {{"d", f.d}}};
  }
  if (p == "ball") {
    return {base_kernel(ball(f.d)), {{"d", f.d}}};
  }
  if (p == "weighted-polydisc") {
    return {base_kernel(polydisc(f.d), f.lambda), {{"d", f.d}, {"lambda", f.lambda}}};
  }
  if (p == "sym-det") {
    return {symmetrized_kernel_det(f.d, f.lambda), {{"d", f.d}, {"lambda", f.lambda}}};
  }
  if (p == "sym-perm") {
    return {symmetrized_kernel_perm(f.d, f.lambda), {{"d", f.d}, {"lambda", f.lambda}}};
  }
  if (p == "dihedral-sign") {
    return {dihedral_kernels(f.k).first, {{"k", f.k}}};
  }
  if (p == "dihedral-trivial") {
    return {dihedral_kernels(f.k).second, {{"k", f.k}}};
  }
  if (p == "monomial") {
    if (f.matrix_text.empty()) throw invalid_input_error("--preset monomial requires --matrix");
    const IMat b = parse_int_matrix(f.matrix_text);
    return {monomial_polyhedron_kernel(b), {{"matrix", int_matrix_to_json(b)}}};
  }
  if (p == "fat-hartogs") {
    return {fat_hartogs_kernel(f.gamma), {{"gamma", f.gamma}}};
  }
  if (p == "ellipsoid") {
    return {ellipsoid_kernel(f.p, f.q), {{"p", f.p}, {"q", f.q}}};
  }
  if (p == "quotient-sum") {
    if (f.group_spec.empty()) throw invalid_input_error("--preset quotient-sum requires --group");
    const FiniteGroup g = parse_group(f.group_spec);
    const std::vector<Character> chars = one_dim_characters(g);
    const Character* chi = nullptr;
    for (const Character& c : chars) {
      if (c.name == f.character) chi = &c;
    }
    if (chi == nullptr) {
      std::string names;
      for (const Character& c : chars) names += (names.empty() ? "" : ", ") + c.name;
      throw invalid_input_error("--character '" + f.character + "' not found; available: " +
                                names);
    }
    const MultiPoly ell = relative_invariant(g, *chi, reflecting_hyperplanes(g));
    return {quotient_kernel_sum(g, *chi, ell, base_kernel(polydisc(g.dim), f.lambda)),
            {{"group", f.group_spec},
             {"character", f.character},
             {"lambda", f.lambda},
             {"relative_invariant", ell.to_string()}}};
  }
  if (p == "rudin") {
    const FiniteGroup g = cyclic_product_group({f.p, f.q});
    BallAutomorphism psi = identity_automorphism(2);
    json center = json::array();
    if (!f.psi_center_text.empty()) {
      const CVec a = parse_point(f.psi_center_text, "--psi-center");
      require_dim(a, 2, "--psi-center");
      psi = ball_automorphism(a, CMat::Identity(2, 2));
      center = point_to_json(a);
    }
    return {rudin_ball_kernel(g, psi, power_map({f.p, f.q})),
            {{"p", f.p}, {"q", f.q}, {"psi_center", std::move(center)}}};
  }
  throw invalid_input_error("unknown preset '" + p + "'");
}

int cmd_kernel(const KernelFlags& f, std::ostream& out, std::ostream& err) {
  Sink sink;
  ResolvedKernel rk = resolve_kernel(f);
  const CVec z = parse_point(f.z_text, "--z");
  const CVec w = parse_point(f.w_text, "--w");
  require_dim(z, rk.oracle.dim, "--z");
  require_dim(w, rk.oracle.dim, "--w");
  const cplx value = rk.oracle(z, w);
  sink.emit({{"command", "kernel"},
             {"preset", f.preset},
             {"params", std::move(rk.params)},
             {"z", point_to_json(z)},
             {"w", point_to_json(w)},
             {"re", value.real()},
             {"im", value.imag()}});
  return sink.flush(out, f.out_path, err, 0);
}

struct VerifyFlags {
  std::string suite = "all";
  long long samples = 200000;
  long long seed = 42;
  double tol_sigma = 4.0;
  int threads = 1;
  std::string out_path;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  opt.samples = f.samples;
  opt.seed = static_cast<std::uint64_t>(f.seed);
  opt.tol_sigma = f.tol_sigma;
  opt.threads = f.threads;

  using Runner = std::function<VerificationReport()>;
  const std::map<std::string, Runner> suites = {
      {"closed-vs-sum", [&] { return suite_closed_vs_sum(opt); }},
      {"spot-values", [&] { return suite_spot_values(); }},
      {"fiber-independence", [&] { return suite_fiber_independence(opt); }},
      {"reproducing", [&] { return suite_reproducing(opt); }},
      {"projection-identity", [&] { return suite_projection_identity(opt); }},
      {"structural", [&] { return suite_structural(opt); }},
      {"snf", [&] { return suite_integer(opt); }},
      {"polynomial-identities", [&] { return suite_polynomial_identities(); }},
      {"degenerations", [&] { return suite_degenerations(opt); }},
  };

  Sink sink;
  sink.emit({{"command", "verify"},
             {"suite", f.suite},
             {"samples", f.samples},
             {"seed", f.seed},
             {"tol_sigma", f.tol_sigma},
             {"threads", f.threads}});

  std::vector<VerificationReport> reports;
  if (f.suite == "all") {
    reports = run_all_suites(opt);
  } else {
    const auto it = suites.find(f.suite);
    if (it == suites.end()) {
      std::string names = "all";
      for (const auto& [name, fn] : suites) names += ", " + name;
      throw invalid_input_error("--suite '" + f.suite + "' not found; available: " + names);
    }
    reports.push_back(it->second());
  }

  bool all_pass = true;
  for (const VerificationReport& r : reports) {
    all_pass = all_pass && r.pass();
    sink.emit(report_to_json(r));
  }
  sink.emit({{"command", "verify"},
             {"overall_pass", all_pass},
             {"suites_run", reports.size()}});
  return sink.flush(out, f.out_path, err, all_pass ? 0 : 1);
}

struct InspectFlags {
  std::string what;
  std::string group_spec;
  std::string matrix_text;
  std::string map_spec;
  std::string out_path;
};

int cmd_inspect(const InspectFlags& f, std::ostream& out, std::ostream& err) {
  Sink sink;
  json record = {{"command", "inspect"}, {"what", f.what}};

  if (f.what == "group" || f.what == "hyperplanes" || f.what == "characters") {
    if (f.group_spec.empty()) throw invalid_input_error("--what " + f.what + " requires --group");
    const FiniteGroup g = parse_group(f.group_spec);
    record["group_spec"] = f.group_spec;
    if (f.what == "group") {
      record["group"] = group_to_json(g);
    } else if (f.what == "hyperplanes") {
      json hs = json::array();
      for (const ReflectionHyperplane& h : reflecting_hyperplanes(g)) {
        hs.push_back({{"form", h.linear_form.to_string()},
                      {"coefficients", point_to_json(h.coefficients)},
                      {"order", h.order},
                      {"generator_index", h.generator_index}});
      }
      record["count"] = hs.size();
      record["hyperplanes"] = std::move(hs);
    } else {
      json cs = json::array();
      for (const Character& c : one_dim_characters(g)) cs.push_back(character_to_json(c));
      record["count"] = cs.size();
      record["characters"] = std::move(cs);
    }
  } else if (f.what == "snf") {
    if (f.matrix_text.empty()) throw invalid_input_error("--what snf requires --matrix");
    const IMat a = parse_int_matrix(f.matrix_text);
    const SNFResult snf = smith_normal_form(a);
    record["matrix"] = int_matrix_to_json(a);
    record["p"] = int_matrix_to_json(snf.p);
    record["q"] = int_matrix_to_json(snf.q);
    record["diagonal"] = snf.diagonal;
  } else if (f.what == "jacobian") {
    if (f.map_spec.empty()) throw invalid_input_error("--what jacobian requires --map");
    const PolyMapExpr theta = parse_map(f.map_spec);
    const MultiPoly jac = jacobian_det_poly(theta);
    record["map_spec"] = f.map_spec;
    record["jacobian"] = {{"text", jac.to_string()}, {"poly", poly_to_json(jac)}};
  } else {
    throw invalid_input_error("--what must be one of group, hyperplanes, characters, snf, jacobian");
  }

  sink.emit(record);
  return sink.flush(out, f.out_path, err, 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bergq: weighted Bergman kernels of quotient domains"};
  app.require_subcommand(1);

  KernelFlags kf;
  CLI::App* kernel = app.add_subcommand("kernel", "Evaluate a kernel preset at a point pair");
  kernel
      ->add_option("--preset", kf.preset,
                   "polydisc | ball | weighted-polydisc | sym-det | sym-perm | dihedral-sign | "
                   "dihedral-trivial | monomial | fat-hartogs | ellipsoid | quotient-sum | rudin")
      ->required();
  kernel->add_option("--z", kf.z_text, "first point, flat [re,im,...] JSON array")->required();
  kernel->add_option("--w", kf.w_text, "second point, flat [re,im,...] JSON array")->required();
  kernel->add_option("--d", kf.d, "dimension (polydisc, ball, weighted-polydisc, sym-*)");
  kernel->add_option("--lambda", kf.lambda, "polydisc weight exponent, > 1");
  kernel->add_option("--k", kf.k, "dihedral parameter, >= 2");
  kernel->add_option("--p", kf.p, "first exponent (ellipsoid, rudin)");
  kernel->add_option("--q", kf.q, "second exponent (ellipsoid, rudin)");
  kernel->add_option("--gamma", kf.gamma, "fat Hartogs exponent, >= 1");
  kernel->add_option("--matrix", kf.matrix_text, "integer matrix [[...],[...]] (monomial)");
  kernel->add_option("--group", kf.group_spec, "sym:<d> | dihedral:<k> | cyclic:<n1,n2,...>");
  kernel->add_option("--character", kf.character, "character name (quotient-sum)");
  kernel->add_option("--psi-center", kf.psi_center_text,
                     "automorphism center, flat [re,im,...] JSON array (rudin)");
  kernel->add_option("--out", kf.out_path, "also write the JSON output to this file");

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vf.suite,
                     "closed-vs-sum | spot-values | fiber-independence | reproducing | "
                     "projection-identity | structural | snf | polynomial-identities | "
                     "degenerations | all");
  verify->add_option("--samples", vf.samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", vf.seed, "seed for all randomness; no environment entropy");
  verify->add_option("--tol-sigma", vf.tol_sigma, "stochastic tolerance in standard errors")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", vf.threads, "worker threads (results are thread-invariant)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", vf.out_path, "also write the JSON output to this file");

  InspectFlags inf;
  CLI::App* inspect = app.add_subcommand("inspect", "Print structured data");
  inspect->add_option("--what", inf.what, "group | hyperplanes | characters | snf | jacobian")
      ->required();
  inspect->add_option("--group", inf.group_spec, "sym:<d> | dihedral:<k> | cyclic:<n1,n2,...>");
  inspect->add_option("--matrix", inf.matrix_text, "integer matrix [[...],[...]]");
  inspect->add_option("--map", inf.map_spec,
                      "sym:<d> | dihedral:<k> | power:<p1,p2,...> | monomial:<json>");
  inspect->add_option("--out", inf.out_path, "also write the JSON output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string out_path =
      kernel->parsed() ? kf.out_path : (verify->parsed() ? vf.out_path : inf.out_path);
  try {
    if (kernel->parsed()) return cmd_kernel(kf, out, err);
    if (verify->parsed()) return cmd_verify(vf, out, err);
    return cmd_inspect(inf, out, err);
  } catch (const near_singular_error& e) {
    Sink sink;
    sink.emit({{"error", "near-singular"}, {"detail", e.what()}});
    return sink.flush(out, out_path, err, 2);
  } catch (const invalid_input_error& e) {
    Sink sink;
    sink.emit({{"error", "invalid-input"}, {"detail", e.what()}});
    return sink.flush(out, out_path, err, 2);
  } catch (const sampler_error& e) {
    Sink sink;
    sink.emit({{"error", "sampler"}, {"detail", e.what()}});
    return sink.flush(out, out_path, err, 2);
  } catch (const json::exception& e) {
    Sink sink;
    sink.emit({{"error", "invalid-input"}, {"detail", e.what()}});
    return sink.flush(out, out_path, err, 2);
  }
}

}  // namespace bergq::cli
