#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lpp/acceptance.hpp"
#include "lpp/criticality.hpp"
#include "lpp/estimator.hpp"
#include "lpp/io.hpp"
#include "lpp/skeleton.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitCertification = 2;
constexpr const char* kVersion = "1.0.0";

struct Options {
  double p = 0.5;
  std::string x;
  std::string x_grid;
  int n = 100;
  std::int64_t reps = 1000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  double sigma = 3.0;
  double tol = 1e-12;
  std::string graph;
  std::string kind;
  int k = 0;
  int big_n = 0;
  std::vector<int> only;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_p(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("--p must lie strictly between 0 and 1");
}

lpp::WeightParam parse_x(const std::string& text) {
  if (text.empty()) throw ValidationError("--x is required");
  try {
    return lpp::parse_weight(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--x: ") + e.what());
  }
}

lpp::Rational parse_exact_x(const std::string& text, const std::string& command) {
  if (text.empty()) throw ValidationError("--x is required");
  if (lpp::looks_like_decimal(text)) {
    throw ValidationError(command + " needs an exact rational such as -11/7; decimal '" + text +
                          "' refused");
  }
  try {
    return lpp::parse_exact_weight(text);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--x: ") + e.what());
  }
}

std::vector<lpp::WeightParam> parse_grid(const std::string& text) {
  std::vector<lpp::WeightParam> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_x(item));
  if (grid.empty()) throw ValidationError("--x-grid is empty");
  return grid;
}

int resolved_threads(const Options& o) {
  if (o.threads < 0) throw ValidationError("--threads must be >= 0");
  if (o.threads > 0) lpp::set_thread_count(o.threads);
  return lpp::max_thread_count();
}

lpp::RunConfig base_config(const std::string& command) {
  lpp::RunConfig c;
  c.set("tool", std::string("lpp ") + kVersion);
  c.set("subcommand", command);
  return c;
}

void add_mc_config(lpp::RunConfig& c, const Options& o, int threads) {
  c.set("p", o.p);
  c.set("nWindow", o.n);
  c.set("reps", o.reps);
  c.set("seed", o.seed);
  c.set("rng", std::string("philox4x32-10"));
  c.set("threads", threads);
}

// Writes to --out, or stdout when it is empty.
void emit(const Options& o, const std::function<void(std::ostream&)>& body) {
  if (o.out.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + o.out);
  body(f);
  if (!f) throw ValidationError("write failed for " + o.out);
}

void emit_json(const Options& o, const lpp::RunConfig& config, nlohmann::ordered_json body) {
  nlohmann::ordered_json doc;
  doc["config"] = config.to_json();
  for (auto& [k, v] : body.items()) doc[k] = v;
  emit(o, [&](std::ostream& out) { lpp::write_json(out, doc); });
}

void check_mc(const Options& o) {
  check_p(o.p);
  if (o.n < 1) throw ValidationError("--n must be >= 1");
  if (o.reps < 1) throw ValidationError("--reps must be >= 1");
}

int cmd_estimate(const Options& o) {
  check_mc(o);
  const auto x = parse_x(o.x);
  const int threads = resolved_threads(o);
  auto config = base_config("estimate");
  config.set("x", lpp::to_string(x));
  add_mc_config(config, o, threads);
  std::vector<lpp::CurvePoint> rows;
  if (x.is_exact()) {
    const auto c = lpp::curve(o.p, {x}, o.n, o.reps, o.seed);
    rows = c.points;
  } else {
    rows.push_back({lpp::direct_C(o.p, x, o.n, o.reps, o.seed), std::nullopt});
  }
  emit(o, [&](std::ostream& out) { lpp::write_estimate_csv(out, config, rows); });
  return 0;
}

int cmd_curve(const Options& o) {
  check_mc(o);
  const auto grid = parse_grid(o.x_grid);
  const int threads = resolved_threads(o);
  auto config = base_config("curve");
  config.set("xGrid", o.x_grid);
  add_mc_config(config, o, threads);
  config.set("sigma", o.sigma);
  const auto c = lpp::curve(o.p, grid, o.n, o.reps, o.seed);
  config.set("pathwiseMonotonicityViolations", c.monotonicity_violations);
  config.set("pathwiseConvexityViolations", c.convexity_violations);
  config.set("convexityFailuresAtSigma", lpp::count_convexity_failures(c, o.sigma));
  emit(o, [&](std::ostream& out) { lpp::write_estimate_csv(out, config, c.points); });
  return 0;
}

int cmd_derivatives(const Options& o) {
  check_mc(o);
  const auto x = parse_exact_x(o.x, "derivatives");
  const int threads = resolved_threads(o);
  auto config = base_config("derivatives");
  config.set("x", lpp::to_string(x));
  add_mc_config(config, o, threads);
  const auto c = lpp::curve(o.p, {lpp::WeightParam(x)}, o.n, o.reps, o.seed);
  const auto& d = *c.points.front().derivatives;
  config.set("dPlusStderr", d.d_plus_stderr);
  config.set("dMinusStderr", d.d_minus_stderr);
  config.set("jumpStderr", d.jump_stderr);
  config.set("jumpSigmas", d.jump_stderr > 0.0 ? d.jump / d.jump_stderr : 0.0);
  emit(o, [&](std::ostream& out) { lpp::write_estimate_csv(out, config, c.points); });
  return 0;
}

int cmd_scaling(const Options& o) {
  check_mc(o);
  const auto x = parse_x(o.x);
  if (!x.is_finite() || !(x.to_double() > 0.0)) throw ValidationError("scaling-check needs x > 0");
  const int threads = resolved_threads(o);
  auto config = base_config("scaling-check");
  config.set("x", lpp::to_string(x));
  add_mc_config(config, o, threads);
  config.set("sigma", o.sigma);
  const auto r = lpp::scaling_check(o.p, x, o.n, o.reps, o.seed);
  emit(o, [&](std::ostream& out) {
    config.write_csv_header(out);
    out << "quantity,value,stderr\n"
        << "C_p(x)," << lpp::format_double(r.lhs.mean) << ',' << lpp::format_double(r.lhs.stderr) << '\n'
        << "C_q(1/x)," << lpp::format_double(r.rhs_unscaled.mean) << ','
        << lpp::format_double(r.rhs_unscaled.stderr) << '\n'
        << "x*C_q(1/x)," << lpp::format_double(r.rhs) << ',' << lpp::format_double(r.rhs_stderr) << '\n'
        << "difference," << lpp::format_double(r.difference) << ','
        << lpp::format_double(r.combined_sigma) << '\n'
        << "# within=" << (r.within(o.sigma) ? "true" : "false") << '\n';
  });
  return 0;
}

int cmd_renewal(const Options& o) {
  check_mc(o);
  const auto x = parse_x(o.x);
  if (!x.is_finite() || !(x.to_double() < 2.0)) throw ValidationError("renewal needs finite x < 2");
  const int threads = resolved_threads(o);
  auto config = base_config("renewal");
  config.set("x", lpp::to_string(x));
  add_mc_config(config, o, threads);
  const auto r = lpp::renewal_C(o.p, x, o.n, o.reps, o.seed);
  emit(o, [&](std::ostream& out) { lpp::write_renewal_csv(out, config, r); });
  return 0;
}

int cmd_delta_pmf(const Options& o) {
  check_mc(o);
  const int threads = resolved_threads(o);
  auto config = base_config("delta-pmf");
  add_mc_config(config, o, threads);
  const auto pmf = lpp::delta_pmf_mc(o.p, o.n, o.reps, o.seed);
  emit(o, [&](std::ostream& out) { lpp::write_delta_pmf_csv(out, config, pmf); });
  return 0;
}

int cmd_gamma(const Options& o) {
  check_p(o.p);
  if (!(o.tol > 0.0)) throw ValidationError("--tol must be positive");
  const auto g = lpp::gamma_exact(o.p, o.tol);
  auto config = base_config("gamma");
  config.set("p", o.p);
  config.set("tol", o.tol);
  emit(o, [&](std::ostream& out) {
    if (!o.out.empty()) config.write_csv_header(out);
    out << "gamma=" << lpp::format_double(g.value) << '\n'
        << "terms=" << g.terms << '\n'
        << "mean_gap=" << lpp::format_double(1.0 / g.value) << '\n';
  });
  return 0;
}

int cmd_sturm(const Options& o) {
  const auto x = parse_exact_x(o.x, "sturm-graph");
  if (x >= 0 || lpp::is_integer(x)) {
    throw ValidationError("sturm-graph needs a negative non-integer rational");
  }
  const auto w = lpp::sturm_graph(x);
  auto config = base_config("sturm-graph");
  config.set("x", lpp::to_string(x));
  emit_json(o, config, lpp::sturm_to_json(w));
  return 0;
}

int cmd_witness(const Options& o) {
  auto config = base_config("witness");
  std::optional<lpp::Certificate> cert;
  std::optional<lpp::SturmWitness> sturm;
  if (!o.kind.empty()) {
    config.set("kind", o.kind);
    config.set("k", o.k);
    if (o.kind == "zero") {
      cert = lpp::witness_zero();
    } else if (o.kind == "negative-integer") {
      cert = lpp::witness_negative_integer(o.k);
    } else if (o.kind == "reciprocal") {
      cert = lpp::witness_reciprocal(o.k);
    } else if (o.kind == "integer") {
      cert = lpp::witness_integer(o.k);
    } else {
      throw ValidationError("unknown --kind '" + o.kind + "'");
    }
  } else {
    const auto x = parse_exact_x(o.x, "witness");
    config.set("x", lpp::to_string(x));
    if (x < 0 && !lpp::is_integer(x)) {
      sturm = lpp::sturm_graph(x);
    } else {
      cert = lpp::witness_for(x);
      if (!cert) throw ValidationError("x = " + lpp::to_string(x) + " is not critical; no witness exists");
    }
  }
  emit_json(o, config, sturm ? lpp::sturm_to_json(*sturm) : lpp::certificate_to_json(*cert));
  return 0;
}

int cmd_certify(const Options& o) {
  const auto x = parse_exact_x(o.x, "certify");
  if (o.graph.empty()) throw ValidationError("--graph is required");
  lpp::ColoredWindow g = lpp::read_window_file(o.graph);
  const auto r = lpp::certify(g, x);
  auto config = base_config("certify");
  config.set("graph", o.graph);
  config.set("x", lpp::to_string(x));
  nlohmann::ordered_json body;
  body["verdict"] = r.critical_witness ? "witness" : "not a witness";
  body["is_h"] = r.is_h;
  body["W"] = lpp::to_string(r.profile.weight);
  if (r.profile.extremes) {
    const auto& e = *r.profile.extremes;
    body["min_red"] = e.min_red;
    body["max_red"] = e.max_red;
    body["path_min_red"] = e.witness_min.vertices();
    body["path_max_red"] = e.witness_max.vertices();
  }
  body["graph"] = lpp::window_to_json(g);
  std::cerr << (r.critical_witness ? "witness" : "not a witness") << '\n';
  emit_json(o, config, std::move(body));
  return 0;
}

int cmd_balanced(const Options& o) {
  if (o.big_n < 1 || o.n < 1 || o.n > o.big_n) throw ValidationError("need 1 <= n <= N");
  const auto v = lpp::balanced_sequence(o.big_n, o.n);
  std::string word;
  for (int b : v.bits) word += static_cast<char>('0' + b);
  auto config = base_config("balanced-seq");
  config.set("N", o.big_n);
  config.set("n", o.n);
  emit(o, [&](std::ostream& out) {
    if (!o.out.empty()) config.write_csv_header(out);
    out << word << '\n';
  });
  return 0;
}

int cmd_selftest(const Options& o) {
  const int threads = resolved_threads(o);
  lpp::AcceptanceOptions opt;
  opt.seed = o.seed;
  opt.only = o.only;
  opt.on_result = [](const lpp::CriterionResult& r) {
    std::cout << lpp::format_result_line(r) << std::endl;
  };
  std::cout << "# seed=" << o.seed << " threads=" << threads << std::endl;
  const auto results = lpp::run_acceptance(opt);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Last-passage percolation on two-weight Barak-Erdos graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto mc = [&](CLI::App* sub, bool needs_x) {
    sub->add_option("--p", o.p, "blue edge probability")->capture_default_str();
    if (needs_x) sub->add_option("--x", o.x, "red weight: a/b, integer, decimal or -inf")->required();
    sub->add_option("--n", o.n, "window size")->capture_default_str();
    sub->add_option("--reps", o.reps, "replicas")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "replica threads (0 = OpenMP default)");
    sub->add_option("--out", o.out, "output file (default stdout)");
  };

  std::vector<std::pair<CLI::App*, std::function<int(const Options&)>>> commands;
  auto add = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  mc(add("estimate", "estimate C_p(x) by W/n over random windows", cmd_estimate), true);
  auto* curve_cmd = add("curve", "estimate C_p on a grid of x with common windows", cmd_curve);
  mc(curve_cmd, false);
  curve_cmd->add_option("--x-grid", o.x_grid, "comma-separated increasing x values")->required();
  curve_cmd->add_option("--sigma", o.sigma, "convexity tolerance in standard errors")->capture_default_str();
  mc(add("derivatives", "one-sided derivatives and jump at exact x", cmd_derivatives), true);
  auto* scaling = add("scaling-check", "compare C_p(x) with x C_{1-p}(1/x)", cmd_scaling);
  mc(scaling, true);
  scaling->add_option("--sigma", o.sigma, "tolerance in standard errors")->capture_default_str();
  mc(add("renewal", "renewal-sum estimate of C_p(x), --n is the largest gap", cmd_renewal), true);
  mc(add("delta-pmf", "skeleton gap frequencies for gaps 1..n", cmd_delta_pmf), false);
  auto* gamma = add("gamma", "skeleton rate prod (1 - q^k)^2", cmd_gamma);
  gamma->add_option("--p", o.p, "blue edge probability")->required();
  gamma->add_option("--tol", o.tol, "log-tail bound")->capture_default_str();
  gamma->add_option("--out", o.out, "output file");
  auto* sturm = add("sturm-graph", "critical witness for a negative non-integer rational", cmd_sturm);
  sturm->add_option("--x", o.x, "x = a/b < 0")->required();
  sturm->add_option("--out", o.out, "output JSON");
  auto* witness = add("witness", "critical witness by x or by construction", cmd_witness);
  auto* wx = witness->add_option("--x", o.x, "exact rational x");
  auto* wkind = witness->add_option("--kind", o.kind, "zero | negative-integer | reciprocal | integer");
  witness->add_option("--k", o.k, "construction parameter");
  witness->add_option("--out", o.out, "output JSON");
  wx->excludes(wkind);
  auto* certify = add("certify", "check whether a window witnesses criticality at x", cmd_certify);
  certify->add_option("--graph", o.graph, "window or certificate JSON")->required()->check(CLI::ExistingFile);
  certify->add_option("--x", o.x, "exact rational x")->required();
  certify->add_option("--out", o.out, "output JSON");
  auto* balanced = add("balanced-seq", "the unique (N, n)-balanced binary word", cmd_balanced);
  balanced->add_option("--N", o.big_n, "length")->required();
  balanced->add_option("--n", o.n, "number of ones")->required();
  balanced->add_option("--out", o.out, "output file");
  auto* self = add("selftest", "run the acceptance suite", cmd_selftest);
  self->add_option("--seed", o.seed, "seed")->capture_default_str();
  self->add_option("--threads", o.threads, "replica threads");
  self->add_option("--only", o.only, "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    for (const auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn(o);
    }
  } catch (const lpp::CertificationError& e) {
    std::cerr << "internal certification failure: " << e.what() << '\n';
    return kExitCertification;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lpp::ArtifactError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCertification;
  }
  return kExitValidation;
}
