#include "qvertex/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qvertex/errors.hpp"
#include "qvertex/hierarchy.hpp"
#include "qvertex/json_io.hpp"
#include "qvertex/schur.hpp"
#include "qvertex/vertex.hpp"
#include "qvertex/waves.hpp"
#include "qvertex/web.hpp"

namespace qv::cli {

namespace {

struct Output {
  Json json;
  std::string text;
  int status = ok;
};

Output value_output(Json json, std::string text) { return {std::move(json), std::move(text), ok}; }

Output report_output(const Report& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
  for (const auto& f : r.failures) os << "\n  " << f;
  return {to_json(r), os.str(), r.passed() ? ok : verification_failed};
}

// A strip is given inline ({...}), by a file path, or as "conifold".
StripDiagram load_strip(const std::string& text) {
  if (text == "conifold") return StripDiagram::conifold();
  std::string body = text;
  if (text.empty() || text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot read strip file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  Json j;
  try {
    j = Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("strip JSON: ") + e.what());
  }
  return StripDiagram::from_json(j);
}

// "[[1],[],[2,1]]"; empty text means all betas empty.
std::vector<Partition> parse_betas(const std::string& text, int N) {
  std::vector<Partition> betas(static_cast<std::size_t>(N));
  if (text.empty()) return betas;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("betas: ") + e.what());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != N)
    throw ParseError("betas must be an array with one partition per vertex");
  for (int n = 0; n < N; ++n) betas[static_cast<std::size_t>(n)] = partition_from_json(j[static_cast<std::size_t>(n)]);
  return betas;
}

// "1@1,2@-1": variables c v^e.
Spec parse_finite_spec(const std::string& text) {
  std::vector<std::pair<Rational, int>> vars;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw ParseError("finite variable '" + item + "' is not of the form c@e");
    try {
      vars.emplace_back(parse_rational(item.substr(0, at)), std::stoi(item.substr(at + 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent in '" + item + "'");
    }
  }
  return Spec::finite(std::move(vars));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

Json series_entry(const std::string& key, const Partition& p, const MultiSeries& s) {
  Json j;
  j[key] = to_json(p);
  j["value"] = to_json(s);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological vertex partition functions on strips and their identities", "qvertex"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_option("--jobs", jobs, "Worker threads for parallel suites")->check(CLI::PositiveNumber);

  std::function<Output()> action;
  auto bind = [&](CLI::App* sub, std::function<Output()> f) {
    sub->callback([&action, f] { action = f; });
  };

  // schur
  std::string lambda_s, mu_s, beta_s, vars_s;
  bool dual = false;
  auto* schur_cmd = app.add_subcommand("schur", "Skew Schur function at q^rho, q^{beta+rho} or finite variables");
  schur_cmd->add_option("--lambda", lambda_s, "Outer partition, e.g. [2,1]")->required();
  schur_cmd->add_option("--mu", mu_s, "Inner partition");
  auto* beta_opt = schur_cmd->add_option("--beta", beta_s, "Evaluate at q^{beta+rho}");
  schur_cmd->add_option("--vars", vars_s, "Finite variables c@e meaning c v^e, comma separated")->excludes(beta_opt);
  schur_cmd->add_flag("--dual", dual, "Use the e-determinant on conjugate shapes");
  bind(schur_cmd, [&] {
    const Partition lambda = parse_partition(lambda_s), mu = parse_partition(mu_s);
    Spec spec = Spec::rho();
    if (!beta_s.empty()) spec = Spec::shifted(parse_partition(beta_s));
    if (!vars_s.empty()) spec = parse_finite_spec(vars_s);
    SpecEvaluator ev(spec);
    const QRational v = dual ? skew_schur_dual(lambda, mu, ev) : skew_schur(lambda, mu, ev);
    Json j;
    j["lambda"] = to_json(lambda);
    j["mu"] = to_json(mu);
    j["value"] = to_json(v);
    return value_output(j, v.to_string());
  });

  // vertex
  std::string alpha_s, vbeta_s, gamma_s;
  auto* vertex_cmd = app.add_subcommand("vertex", "Topological vertex C_{alpha beta gamma}");
  vertex_cmd->add_option("--alpha", alpha_s, "First leg")->required();
  vertex_cmd->add_option("--beta", vbeta_s, "Second leg")->required();
  vertex_cmd->add_option("--gamma", gamma_s, "Third leg")->required();
  bind(vertex_cmd, [&] {
    const QRational v =
        topological_vertex(parse_partition(alpha_s), parse_partition(vbeta_s), parse_partition(gamma_s));
    Json j;
    j["value"] = to_json(v);
    return value_output(j, v.to_string());
  });

  // zclosed / zglue
  std::string strip_s = "conifold", betas_s, alpha0_s, alphaN_s;
  int qdeg = 2;
  auto* zclosed_cmd = app.add_subcommand("zclosed", "Closed product formula for Z^{00}_{beta_1..beta_N}");
  zclosed_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  zclosed_cmd->add_option("--betas", betas_s, "JSON list of partitions, one per vertex");
  zclosed_cmd->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(zclosed_cmd, [&] {
    const StripDiagram strip = load_strip(strip_s);
    const MultiSeries z = closed_partition_function(strip, parse_betas(betas_s, strip.size()), qdeg);
    Json j;
    j["strip"] = strip.to_json();
    j["series"] = to_json(z);
    return value_output(j, z.to_string());
  });
  auto* zglue_cmd = app.add_subcommand("zglue", "Partition function glued from vertices");
  zglue_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  zglue_cmd->add_option("--betas", betas_s, "JSON list of partitions, one per vertex");
  zglue_cmd->add_option("--alpha0", alpha0_s, "Left external partition");
  zglue_cmd->add_option("--alphaN", alphaN_s, "Right external partition");
  zglue_cmd->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(zglue_cmd, [&] {
    const StripDiagram strip = load_strip(strip_s);
    BoundaryData b{parse_partition(alpha0_s), parse_partition(alphaN_s), parse_betas(betas_s, strip.size())};
    const MultiSeries z = glued_partition_function(strip, b, qdeg);
    Json j;
    j["strip"] = strip.to_json();
    j["series"] = to_json(z);
    return value_output(j, z.to_string());
  });

  // zgen
  std::string gen_kind = "multi";
  GeneratingOptions gen;
  auto* zgen_cmd = app.add_subcommand("zgen", "Generating functions in explicit variables");
  zgen_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  zgen_cmd->add_option("--kind", gen_kind, "multi or alpha")->check(CLI::IsMember({"multi", "alpha"}));
  zgen_cmd->add_option("--variables", gen.variables, "Explicit variables per family")->check(CLI::PositiveNumber);
  zgen_cmd->add_option("--weight", gen.weight, "Weight cap per family")->check(CLI::NonNegativeNumber);
  zgen_cmd->add_option("--qdeg", gen.qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  zgen_cmd->add_option("--betas", betas_s, "Fixed betas for the alpha kind");
  bind(zgen_cmd, [&] {
    const StripDiagram strip = load_strip(strip_s);
    gen.kind = gen_kind == "alpha" ? GeneratingKind::alpha : GeneratingKind::multi;
    if (!betas_s.empty()) gen.betas = parse_betas(betas_s, strip.size());
    const MultiSeries z = general_generating_function(strip, gen);
    Json j;
    j["strip"] = strip.to_json();
    j["series"] = to_json(z);
    return value_output(j, z.to_string());
  });

  // tau
  int vertex_n = 1, weight = 4, t_degree = 6;
  auto* tau_cmd = app.add_subcommand("tau", "Schur coefficients of Z_n and the Hirota check");
  tau_cmd->require_subcommand(1);
  auto* coeffs_cmd = tau_cmd->add_subcommand("coeffs", "Coefficients a_lambda up to a weight");
  coeffs_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  coeffs_cmd->add_option("--n", vertex_n, "Vertex (1-based)");
  coeffs_cmd->add_option("--weight", weight, "Weight cap")->check(CLI::NonNegativeNumber);
  coeffs_cmd->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(coeffs_cmd, [&] {
    const StripDiagram strip = load_strip(strip_s);
    const TauCoefficients a = tau_coefficients(strip, vertex_n, weight, qdeg);
    Json j;
    j["n"] = vertex_n;
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& [lambda, c] : a) {
      list.push_back(series_entry("lambda", lambda, c));
      text << lambda.to_string() << ": " << c.to_string() << "\n";
    }
    j["coefficients"] = list;
    std::string t = text.str();
    if (!t.empty()) t.pop_back();
    return value_output(j, t);
  });
  auto* hirota_cmd = tau_cmd->add_subcommand("hirota", "Lowest Hirota equation for Z_n");
  hirota_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  hirota_cmd->add_option("--n", vertex_n, "Vertex (1-based)");
  hirota_cmd->add_option("--t-degree", t_degree, "t-weight kept in the residual")->check(CLI::Range(4, 12));
  hirota_cmd->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(hirota_cmd, [&] { return report_output(verify_hirota_vertex(load_strip(strip_s), vertex_n, t_degree, qdeg)); });

  // wave / mirror
  std::string kind_s = "phi";
  int K = 4;
  auto* wave_cmd = app.add_subcommand("wave", "Wave-function coefficients (both routes, closed form returned)");
  wave_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  wave_cmd->add_option("--n", vertex_n, "Vertex (1-based)");
  wave_cmd->add_option("--kind", kind_s, "phi or psi");
  wave_cmd->add_option("--K", K, "Highest power of x")->check(CLI::NonNegativeNumber);
  wave_cmd->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(wave_cmd, [&] {
    const WaveSeries w = wave_coefficients(load_strip(strip_s), vertex_n, parse_wave_kind(kind_s), K, qdeg);
    std::ostringstream text;
    for (std::size_t k = 0; k < w.coeffs.size(); ++k)
      text << (k ? "\n" : "") << "x^" << k << ": " << w.coeffs[k].to_string();
    return value_output(w.to_json(), text.str());
  });
  ClassicalOptions classical;
  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror curve x = (1 - y^-1) B(y) / C(y) and its classical check");
  mirror_cmd->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  mirror_cmd->add_option("--n", vertex_n, "Vertex (1-based)");
  mirror_cmd->add_option("--samples", classical.samples, "Sampled (Q, y) points")->check(CLI::PositiveNumber);
  bind(mirror_cmd, [&] {
    const StripDiagram strip = load_strip(strip_s);
    const MirrorCurve curve = bc_polynomials(strip, vertex_n);
    classical.seed = seed;
    Report r;
    r.name = "classical limit";
    r.merge(verify_classical_limit(strip, vertex_n, WaveKind::phi, classical));
    r.merge(verify_classical_limit(strip, vertex_n, WaveKind::psi, classical));
    Json j = curve.to_json();
    const MirrorCurve psi = curve.inverted();
    j["psi"] = {{"B", psi.B.to_json()}, {"C", psi.C.to_json()}};
    j["classical"] = to_json(r);
    Output o = report_output(r);
    o.json = j;
    o.text = curve.equation() + "\n" + o.text;
    return o;
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Verification suites (exit 1 on any mismatch)");
  verify->require_subcommand(1);
  int degree = 3, weight_max = 3;
  auto* v_cauchy = verify->add_subcommand("cauchy", "Cauchy identities (plain, dual, skew, skew-dual)");
  v_cauchy->add_option("--degree", degree, "Grading degree")->check(CLI::NonNegativeNumber);
  bind(v_cauchy, [&] { return report_output(verify_cauchy_suite(degree)); });

  auto* v_cyclic = verify->add_subcommand("cyclic", "Cyclic symmetry of the vertex");
  v_cyclic->add_option("--weight-max", weight_max, "Largest leg weight")->check(CLI::NonNegativeNumber);
  bind(v_cyclic, [&] { return report_output(verify_cyclic(weight_max, jobs)); });

  int two_leg_weight = 4;
  auto* v_two_leg = verify->add_subcommand("two-leg", "Three forms of the two-leg vertex");
  v_two_leg->add_option("--weight-max", two_leg_weight, "Largest leg weight")->check(CLI::NonNegativeNumber);
  bind(v_two_leg, [&] { return report_output(verify_two_leg_identity(two_leg_weight)); });

  StripOracleOptions oracle;
  std::string sizes_s = "2,3";
  auto* v_oracle = verify->add_subcommand("strip-oracle", "Glued vertices against the closed formula");
  v_oracle->add_option("--sizes", sizes_s, "Strip sizes, comma separated");
  v_oracle->add_option("--qdeg", oracle.qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  v_oracle->add_option("--beta-weight", oracle.beta_weight, "Bound on the sum of |beta_n|")
      ->check(CLI::NonNegativeNumber);
  bind(v_oracle, [&] {
    oracle.sizes = parse_int_list(sizes_s);
    return report_output(verify_strip_oracle(oracle));
  });

  int con_weight = 2, con_qdeg = 4, con_identity_qdeg = 3;
  auto* v_conifold = verify->add_subcommand("conifold-identity", "Resolved conifold: glued, product and alternative forms");
  v_conifold->add_option("--weight", con_weight, "Bound on |beta_1|, |beta_2|")->check(CLI::NonNegativeNumber);
  v_conifold->add_option("--qdeg", con_qdeg, "Q-degree of the three-way comparison")->check(CLI::NonNegativeNumber);
  v_conifold->add_option("--identity-qdeg", con_identity_qdeg, "Q-degree of the quotient identity")
      ->check(CLI::NonNegativeNumber);
  bind(v_conifold, [&] { return report_output(verify_conifold_identity(con_weight, con_qdeg, con_identity_qdeg)); });

  std::vector<std::string> hirota_strips;
  int hirota_qdeg = 2;
  auto* v_hirota = verify->add_subcommand("hirota", "Lowest Hirota equation for trivial, C3 and strip tau functions");
  v_hirota->add_option("--t-degree", t_degree, "t-weight kept in the residual")->check(CLI::Range(4, 12));
  v_hirota->add_option("--qdeg", hirota_qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  v_hirota->add_option("--strip", hirota_strips, "Strips to test (default: conifold)");
  bind(v_hirota, [&] {
    std::vector<StripDiagram> strips;
    for (const auto& s : hirota_strips) strips.push_back(load_strip(s));
    if (strips.empty()) strips.push_back(StripDiagram::conifold());
    return report_output(verify_hirota(strips, t_degree, hirota_qdeg));
  });

  WaveSuiteOptions wave;
  auto* v_wave = verify->add_subcommand("wave", "Wave functions: both routes, recurrences, q-difference equations");
  v_wave->add_option("--K", wave.conifold_k, "x-degree for the conifold and C3")->check(CLI::PositiveNumber);
  v_wave->add_option("--definition-k", wave.definition_k, "x-degree of the route comparison")
      ->check(CLI::NonNegativeNumber);
  v_wave->add_option("--qdeg", wave.definition_qdeg, "Q-degree of the route comparison")
      ->check(CLI::NonNegativeNumber);
  v_wave->add_option("--max-vertices", wave.max_vertices, "Largest strip size")->check(CLI::PositiveNumber);
  bind(v_wave, [&] { return report_output(verify_waves(wave)); });

  auto* v_mirror = verify->add_subcommand("mirror", "Mirror curves and their classical limits");
  v_mirror->add_option("--samples", classical.samples, "Sampled (Q, y) points per curve")
      ->check(CLI::PositiveNumber);
  bind(v_mirror, [&] {
    classical.seed = seed;
    return report_output(verify_mirror(classical));
  });

  int macmahon_degree = 5;
  auto* v_macmahon = verify->add_subcommand("macmahon", "Two routes to the MacMahon function");
  v_macmahon->add_option("--degree", macmahon_degree, "Q-degree")->check(CLI::NonNegativeNumber);
  bind(v_macmahon, [&] { return report_output(verify_macmahon(macmahon_degree)); });

  TwoVariableOptions two_var;
  auto* v_two_var = verify->add_subcommand("two-variable", "Conifold generating function in explicit variables");
  v_two_var->add_option("--variables", two_var.variables, "Variables per family")->check(CLI::PositiveNumber);
  v_two_var->add_option("--xdeg", two_var.xdeg, "Degree cap per family")->check(CLI::NonNegativeNumber);
  v_two_var->add_option("--qdeg", two_var.qdeg, "Q-degree")->check(CLI::NonNegativeNumber);
  bind(v_two_var, [&] { return report_output(verify_conifold_two_variable(two_var)); });

  auto* v_tau = verify->add_subcommand("tau", "Tau coefficients against the closed formula");
  v_tau->add_option("--strip", strip_s, "Strip JSON, file path or 'conifold'");
  v_tau->add_option("--n", vertex_n, "Vertex (1-based)");
  v_tau->add_option("--weight", weight, "Weight cap")->check(CLI::NonNegativeNumber);
  v_tau->add_option("--qdeg", qdeg, "Total Q-degree")->check(CLI::NonNegativeNumber);
  bind(v_tau, [&] { return report_output(verify_tau_coefficients(load_strip(strip_s), vertex_n, weight, qdeg)); });

  try {
    // CLI11 consumes arguments from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
  if (!action) {
    err << "error: no command given\n";
    return bad_input;
  }

  try {
    const Output o = action();
    if (format == "json") out << o.json.dump() << "\n";
    else out << o.text << "\n";
    return o.status;
  } catch (const BlowUpError& e) {
    err << "error: " << e.what() << "\n";
    return blow_up;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  }
}

}  // namespace qv::cli
