#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "csv.hpp"
#include "nanores/asymptotics.hpp"
#include "nanores/ball_moments.hpp"
#include "nanores/dispersion_solver.hpp"
#include "nanores/errors.hpp"
#include "nanores/exact_resonance.hpp"
#include "nanores/verification.hpp"

namespace nanores::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  bool json = false;
  std::string out_path;
};

std::string fmt_complex(Complex z) {
  std::string s = format_g(z.real(), 15);
  s += z.imag() < 0.0 ? " - " : " + ";
  s += format_g(std::abs(z.imag()), 15) + "i";
  return s;
}

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ResonanceMode& mode) {
  return json{{"k", to_json(mode.k)},
              {"lambda", to_json(mode.lambda)},
              {"branch_m", mode.branch_m},
              {"interface_residual", mode.interface_residual},
              {"dispersion_residual", mode.dispersion_residual},
              {"source", to_string(mode.source)},
              {"iterations", mode.iterations},
              {"certified", mode.certified()}};
}

json to_json(const MomentEstimate& est) {
  json j{{"n", est.n}, {"value", est.value}, {"method", to_string(est.method)}, {"stderr", est.std_error}};
  if (est.method == MomentMethod::monte_carlo) {
    j["samples"] = est.samples;
    j["seed"] = est.seed;
    j["shards"] = est.shards;
  }
  if (est.method == MomentMethod::quadrature) j["order"] = est.order;
  if (!est.kernel.empty()) j["kernel"] = est.kernel;
  return j;
}

json to_json(const ExpansionSeries& series) {
  json terms = json::array();
  for (const auto& t : series.terms) terms.push_back({{"power", t.power}, {"value", to_json(t.value)}});
  return json{{"truncation_order", series.truncation_order}, {"terms", terms}};
}

// Writes either the human text or the JSON document to --out or `out`.
void emit(const GlobalFlags& flags, std::ostream& out, const std::string& text, const json& doc) {
  const std::string payload = flags.json ? doc.dump(2) + "\n" : text;
  if (flags.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + flags.out_path + "' for writing");
  file << payload;
  if (!file) throw IoError("failed writing '" + flags.out_path + "'");
}

void line(std::ostream& os, const std::string& label, const std::string& value) {
  os << "  " << std::left << std::setw(22) << label << value << '\n';
}

// ---------------------------------------------------------------- exact

struct ExactArgs {
  std::optional<double> r, eta, h, eta0;
  double eta_imag = 0.0;
  int m = 0;
};

void cmd_exact(const ExactArgs& a, const GlobalFlags& flags, std::ostream& out) {
  const bool sphere = a.r || a.eta;
  const bool nano = a.h || a.eta0;
  if (sphere == nano) throw UsageError("give exactly one of (--r, --eta) or (--h, --eta0)");
  if (sphere && !(a.r && a.eta)) throw UsageError("--r and --eta must be given together");
  if (nano && !(a.h && a.eta0)) throw UsageError("--h and --eta0 must be given together");
  if (a.m < 0) throw UsageError("--m must be non-negative");

  SphereSpec spec;
  json input;
  if (sphere) {
    spec = SphereSpec{*a.r, Complex{*a.eta, a.eta_imag}};
    input = {{"r", *a.r}, {"eta", to_json(spec.eta)}, {"m", a.m}};
  } else {
    const NanoScaling scaling{*a.h, *a.eta0};
    scaling.validate();
    spec = scaling.sphere();
    input = {{"h", *a.h}, {"eta0", *a.eta0}, {"eta_h", scaling.eta()}, {"m", a.m}};
  }
  const ResonanceMode mode = resonance_exact(spec, a.m);

  std::ostringstream os;
  os << "closed-form resonance\n";
  if (sphere) {
    line(os, "radius", format_g(spec.radius, 15));
    line(os, "eta", fmt_complex(spec.eta));
  } else {
    line(os, "h", format_g(*a.h, 15));
    line(os, "eta0", format_g(*a.eta0, 15));
    line(os, "eta_h", format_g(spec.eta.real(), 15));
  }
  line(os, "branch m", std::to_string(mode.branch_m));
  line(os, "k", fmt_complex(mode.k));
  line(os, "lambda", fmt_complex(mode.lambda));
  line(os, "|F(k)|", format_g(mode.interface_residual, 3));
  line(os, "|G(k)|", format_g(mode.dispersion_residual, 3));
  line(os, "certified", mode.certified() ? "yes" : "no");
  emit(flags, out, os.str(), json{{"command", "exact"}, {"input", input}, {"mode", to_json(mode)}});
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  double r = 1.0;
  double eta = 3.0;
  double eta_imag = 0.0;
  int m_max = 2;
  SolverConfig cfg;
};

void cmd_solve(const SolveArgs& a, const GlobalFlags& flags, std::ostream& out) {
  const SphereSpec spec{a.r, Complex{a.eta, a.eta_imag}};
  const auto modes = scan_branches(spec, a.m_max, a.cfg);

  std::ostringstream os;
  os << "branch scan, r = " << format_g(a.r, 15) << ", eta = " << fmt_complex(spec.eta) << "\n";
  os << std::left << std::setw(4) << "m" << std::setw(24) << "re_k" << std::setw(24) << "im_k" << std::setw(11)
     << "|G|" << std::setw(11) << "|F|" << std::setw(6) << "iter"
     << "|k - k_closed|\n";
  json rows = json::array();
  for (const auto& mode : modes) {
    const double delta = std::abs(mode.k - wave_number_exact(spec, mode.branch_m));
    os << std::left << std::setw(4) << mode.branch_m << std::setw(24) << format_g(mode.k.real(), 17)
       << std::setw(24) << format_g(mode.k.imag(), 17) << std::setw(11) << format_g(mode.dispersion_residual, 3)
       << std::setw(11) << format_g(mode.interface_residual, 3) << std::setw(6) << mode.iterations
       << format_g(delta, 3) << '\n';
    json row = to_json(mode);
    row["closed_form_delta"] = delta;
    rows.push_back(row);
  }
  emit(flags, out, os.str(),
       json{{"command", "solve"},
            {"input", {{"r", a.r}, {"eta", to_json(spec.eta)}, {"m_max", a.m_max}, {"tol", a.cfg.tol}}},
            {"modes", rows}});
}

// ---------------------------------------------------------------- moments

struct MomentArgs {
  int n = 1;
  std::string method = "closed";
  long long samples = 1'000'000;
  unsigned long long seed = 7;
  int order = 64;
  int shards = kDefaultShards;
  std::string kernel = "auto";
};

void cmd_moments(const MomentArgs& a, const GlobalFlags& flags, std::ostream& out) {
  MomentEstimate est;
  if (a.method == "closed") {
    est = moment_closed_form(a.n);
  } else if (a.method == "quadrature") {
    est = moment_quadrature(a.n, a.order, DiagonalSplit::split, kernels::parse_choice(a.kernel));
  } else {
    est = moment_monte_carlo(a.n, a.samples, a.seed, a.shards, kernels::parse_choice(a.kernel));
  }

  std::ostringstream os;
  os << "moment M_" << est.n << "\n";
  line(os, "method", to_string(est.method));
  line(os, "value", format_g(est.value, 17));
  if (est.method == MomentMethod::monte_carlo) {
    line(os, "stderr", format_g(est.std_error, 6));
    line(os, "samples", std::to_string(est.samples));
    line(os, "seed", std::to_string(est.seed));
    line(os, "shards", std::to_string(est.shards));
  }
  if (est.method == MomentMethod::quadrature) line(os, "order", std::to_string(est.order));
  if (!est.kernel.empty()) line(os, "kernel", est.kernel);
  json doc{{"command", "moments"}, {"estimate", to_json(est)}};
  if (a.n <= 2 && est.method != MomentMethod::closed_form) {
    const double exact = moment_closed_form(a.n).value;
    line(os, "closed form", format_g(exact, 17));
    line(os, "|value - closed|", format_g(std::abs(est.value - exact), 3));
    doc["closed_form"] = exact;
  }
  emit(flags, out, os.str(), doc);
}

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  std::string series = "all";
  int order = 3;
};

void cmd_expand(const ExpandArgs& a, const GlobalFlags& flags, std::ostream& out) {
  std::vector<std::pair<std::string, ExpansionSeries>> selected;
  const auto want = [&a](const char* name) { return a.series == "all" || a.series == name; };
  if (want("r0")) selected.emplace_back("r0", r0_series());
  if (want("r1")) selected.emplace_back("r1", r1_series(a.order, default_moments(a.order - 1)));
  if (want("r2")) selected.emplace_back("r2", r2_coeffs(a.order));
  if (want("taylor")) selected.emplace_back("taylor", taylor_exact(a.order));

  std::ostringstream os;
  json doc{{"command", "expand"}, {"order", a.order}};
  for (const auto& [name, series] : selected) {
    os << name << " (through h^" << series.truncation_order << ")\n";
    for (const auto& t : series.terms) line(os, "h^" + std::to_string(t.power), fmt_complex(t.value));
    doc["series"][name] = to_json(series);
  }
  emit(flags, out, os.str(), doc);
}

// ---------------------------------------------------------------- figure

struct FigureArgs {
  double h_min = 0.01;
  double h_max = 0.5;
  int steps = 100;
};

void cmd_figure(const FigureArgs& a, const GlobalFlags& flags, std::ostream& out) {
  const auto rows = figure_rows(a.h_min, a.h_max, a.steps);
  std::ostringstream csv;
  write_figure_csv(csv, rows);
  json doc{{"command", "figure"}, {"header", std::string(kFigureHeader)}, {"rows", json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back({r.h, r.exact.real(), r.exact.imag(), r.r0.real(), r.r0.imag(), r.r0r1.real(),
                           r.r0r1.imag(), r.r0r1r2.real(), r.r0r1r2.imag()});
  }
  emit(flags, out, csv.str(), doc);
  if (!flags.out_path.empty() && !flags.json)
    out << "wrote " << rows.size() << " rows to " << flags.out_path << '\n';
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  double perturb_lambda0 = 0.0;
  verification::VerifyOptions opts;
};

int cmd_verify(VerifyArgs a, const GlobalFlags& flags, std::ostream& out) {
  a.opts.lambda0_scale = 1.0 + a.perturb_lambda0;
  const auto results = verification::run_all(a.opts);

  std::ostringstream os;
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << format_g(r.seconds, 3)
       << " s)\n";
    json measurements = json::array();
    for (const auto& m : r.measurements) {
      os << "        " << (m.passed ? "ok  " : "BAD ") << std::left << std::setw(36) << m.name
         << format_g(m.value, 6);
      if (m.target != 0.0) os << "  target " << format_g(m.target, 6) << " +- " << format_g(m.tolerance, 3);
      else os << "  < " << format_g(m.tolerance, 3);
      os << '\n';
      measurements.push_back({{"name", m.name},
                              {"value", m.value},
                              {"tolerance", m.tolerance},
                              {"target", m.target},
                              {"passed", m.passed}});
    }
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"seconds", r.seconds},
                      {"time_limit", r.time_limit},
                      {"measurements", measurements}});
  }
  os << (all ? "all checks passed\n" : "verification FAILED\n");
  emit(flags, out, os.str(), json{{"command", "verify"}, {"passed", all}, {"checks", checks}});
  return all ? kSuccess : kVerificationFailed;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering resonances of dielectric spheres: closed forms, Newton roots, moments, expansions"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Structured JSON output");
  app.add_option("--out", flags.out_path, "Write the report (or CSV) to this path");

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "Closed-form resonance of a sphere or a high-contrast nanosphere");
  exact->add_option("--r", exact_args.r, "Sphere radius");
  exact->add_option("--eta", exact_args.eta, "Susceptibility (real part)");
  exact->add_option("--eta-imag", exact_args.eta_imag, "Susceptibility (imaginary part)");
  exact->add_option("--h", exact_args.h, "Nanosphere scale h (eta = eta0 / h^2)");
  exact->add_option("--eta0", exact_args.eta0, "Nanosphere contrast constant");
  exact->add_option("--m", exact_args.m, "Branch index")->capture_default_str();

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Newton branch scan of the dispersion relation");
  solve->add_option("--r", solve_args.r, "Sphere radius")->capture_default_str();
  solve->add_option("--eta", solve_args.eta, "Susceptibility (real part)")->capture_default_str();
  solve->add_option("--eta-imag", solve_args.eta_imag, "Susceptibility (imaginary part)");
  solve->add_option("--m-max", solve_args.m_max, "Highest branch index")->capture_default_str();
  solve->add_option("--tol", solve_args.cfg.tol, "Residual target |G| < tol")->capture_default_str();
  solve->add_option("--max-iter", solve_args.cfg.max_iter, "Newton iteration cap")->capture_default_str();

  MomentArgs moment_args;
  auto* moments = app.add_subcommand("moments", "Ball moments M_n = \\int\\int |x-y|^n u0(x) u0(y)");
  moments->add_option("--n", moment_args.n, "Moment order")->required();
  moments->add_option("--method", moment_args.method, "closed | quadrature | mc")
      ->check(CLI::IsMember({"closed", "quadrature", "mc"}))
      ->capture_default_str();
  moments->add_option("--samples", moment_args.samples, "Monte Carlo samples")->capture_default_str();
  moments->add_option("--seed", moment_args.seed, "Monte Carlo seed")->capture_default_str();
  moments->add_option("--shards", moment_args.shards, "Monte Carlo substreams")->capture_default_str();
  moments->add_option("--order", moment_args.order, "Gauss-Legendre order")->capture_default_str();
  moments->add_option("--kernel", moment_args.kernel, "auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Expansion coefficients R0, R1, R2 and the exact Taylor series");
  expand->add_option("--series", expand_args.series, "all | r0 | r1 | r2 | taylor")
      ->check(CLI::IsMember({"all", "r0", "r1", "r2", "taylor"}))
      ->capture_default_str();
  expand->add_option("--order", expand_args.order, "Highest power of h")
      ->check(CLI::Range(2, kMaxTaylorOrder))
      ->capture_default_str();

  FigureArgs figure_args;
  auto* figure = app.add_subcommand("figure", "CSV of exact lambda_h against R0, R0+R1, R0+R1+R2");
  figure->add_option("--h-min", figure_args.h_min, "Smallest h")->capture_default_str();
  figure->add_option("--h-max", figure_args.h_max, "Largest h")->capture_default_str();
  figure->add_option("--steps", figure_args.steps, "Number of rows")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--mc-samples", verify_args.opts.mc_samples, "Monte Carlo samples")->capture_default_str();
  verify->add_option("--mc-seed", verify_args.opts.mc_seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--perturb-lambda0", verify_args.perturb_lambda0, "Relative perturbation of lambda0 (test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*exact) cmd_exact(exact_args, flags, out);
    else if (*solve) cmd_solve(solve_args, flags, out);
    else if (*moments) cmd_moments(moment_args, flags, out);
    else if (*expand) cmd_expand(expand_args, flags, out);
    else if (*figure) cmd_figure(figure_args, flags, out);
    else if (*verify) return cmd_verify(verify_args, flags, out);
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"nanores"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace nanores::cli
