#include "qblocks/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "qblocks/blocks.hpp"
#include "qblocks/qfield_io.hpp"
#include "qblocks/qmatrix.hpp"
#include "qblocks/render.hpp"
#include "qblocks/tilings.hpp"
#include "qblocks/uqsl2.hpp"
#include "qblocks/verify.hpp"

namespace qblocks::cli {

namespace {

constexpr long double kTolerance = 1e-6L;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Le", x);
  return buf;
}

std::string full(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

std::string label(const DyckPath& p) { return p.steps().empty() ? "-" : p.steps(); }

void check_n(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw UsageError(std::string(what) + " must lie in [0, " + std::to_string(cap) + "], got " + std::to_string(n));
  }
}

// --------------------------------------------------------------------- paths

int cmd_paths(int n, const std::string& format, std::ostream& out) {
  check_n(n, kMaxEnumerateN, "--n");
  const auto paths = enumerate_paths(n);
  if (format == "json") {
    out << paths_to_json(paths).dump() << "\n";
  } else {
    out << paths_to_text(paths);
  }
  return kExitOk;
}

// -------------------------------------------------------------------- matrix

struct MatrixArgs {
  int n = 0;
  bool inverse = false;
  std::string method = "tiling";
  std::string format = "text";
  std::optional<double> kappa;
};

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  if (a.format == "csv" && !a.kappa) throw UsageError("--format csv needs --kappa");
  if (a.kappa && a.format != "csv") throw UsageError("--kappa only applies to --format csv");
  check_n(a.n, a.inverse && a.method == "tiling" ? kMaxInverseN : kMaxMatrixN, "--n");
  QMatrix m;
  if (a.method == "tiling") {
    m = a.inverse ? build_Minv_tilings(a.n) : build_M(a.n);
  } else if (a.method == "recursive") {
    m = build_M_recursive(a.n);
    if (a.inverse) m = eliminate_inverse(m);
  } else {
    m = build_M(a.n);
    if (a.inverse) m = eliminate_inverse(m);
  }
  if (a.format == "json") {
    out << matrix_to_json(m).dump() << "\n";
  } else if (a.format == "csv") {
    out << matrix_to_csv(m, *a.kappa);
  } else if (a.format == "latex") {
    out << matrix_to_latex(m);
  } else {
    out << matrix_to_text(m);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- tilings

int cmd_tilings(const std::string& low_s, const std::string& high_s, bool nested, const std::string& format,
                std::ostream& out) {
  const DyckPath low = parse_path(low_s);
  const DyckPath high = parse_path(high_s);
  if (low.semilength() != high.semilength()) throw UsageError("--low and --high have different lengths");
  check_n(low.semilength(), kMaxMatrixN, "semilength");
  std::vector<Tiling> tilings;
  if (nested) {
    if (auto t = nested_tiling(low, high)) tilings.push_back(std::move(*t));
  } else {
    tilings = enumerate_cover_inclusive(low, high);
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& t : tilings) arr.push_back(tiling_to_json(t));
    out << arr.dump() << "\n";
    return kExitOk;
  }
  out << (nested ? "nested" : "cover-inclusive") << " tilings of " << label(low) << " / " << label(high) << ": "
      << tilings.size() << "\n";
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    out << "\n#" << i + 1 << " (" << tilings[i].tiles.size() << " tiles)\n" << tiling_to_ascii(tilings[i]);
  }
  return kExitOk;
}

// -------------------------------------------------------------------- ublock

int cmd_ublock(const std::string& path_s, const std::string& format, std::ostream& out) {
  const DyckPath alpha = parse_path(path_s);
  check_n(alpha.semilength(), 6, "semilength");
  const BlockVector b = build_u(alpha);
  if (format == "json") {
    out << block_to_json(b).dump() << "\n";
  } else {
    out << block_to_text(b);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- project

int cmd_project(const std::string& path_s, int j, const std::string& format, std::ostream& out) {
  const DyckPath alpha = parse_path(path_s);
  check_n(alpha.semilength(), 6, "semilength");
  if (j < 1 || j >= alpha.steps_count()) {
    throw UsageError("--j must lie in [1, " + std::to_string(alpha.steps_count() - 1) + "]");
  }
  const ProjectionReport report = verify_projections(alpha);
  const ProjectionCheck* check = nullptr;
  for (const auto& c : report.checks) {
    if (c.j == j) check = &c;
  }
  if (check == nullptr) throw std::logic_error("projection report has no column " + std::to_string(j));
  const BlockVector b = build_u(alpha);
  const TensorVec image = pi_hat(b.vec, j);
  std::optional<DyckPath> reduced;
  if (is_wedge(check->shape)) reduced = remove_wedge(alpha, j);

  if (format == "json") {
    json j_out = {{"path", alpha.steps()},
                  {"j", j},
                  {"shape", shape_name(check->shape)},
                  {"predicted", to_json(check->predicted)},
                  {"measured", check->measured ? to_json(*check->measured) : json(nullptr)},
                  {"reduced_path", reduced ? json(reduced->steps()) : json(nullptr)},
                  {"image", tensor_to_json(image)},
                  {"ok", check->ok}};
    out << j_out.dump() << "\n";
  } else {
    out << "path " << label(alpha) << " " << alpha.heights_string() << ", j = " << j << " (" << shape_name(check->shape)
        << ")\n";
    if (reduced) out << "reduced path " << label(*reduced) << "\n";
    out << "predicted coefficient " << to_bracket_text(check->predicted) << "\n";
    out << "measured coefficient  " << (check->measured ? to_bracket_text(*check->measured) : "not proportional") << "\n";
    out << "pi_hat_" << j << "(u_alpha), " << kFactorLegend << ":\n" << tensor_to_text(image);
    out << (check->ok ? "ok" : "MISMATCH") << "\n";
  }
  return check->ok ? kExitOk : kExitFailed;
}

// -------------------------------------------------------------------- verify

int cmd_verify(bool all, const std::string& suite, const VerifyOptions& opts, const std::string& format,
               std::ostream& out) {
  if (all == !suite.empty()) throw UsageError("give exactly one of --all and --suite");
  if (opts.n_max < 0 || opts.n_max > 6) throw UsageError("--n-max must lie in [0, 6]");
  std::vector<SuiteResult> results;
  if (all) {
    results = run_all_suites(opts);
  } else {
    results.push_back(run_suite(suite, opts));
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();

  if (format == "json") {
    json suites = json::array();
    for (const auto& r : results) {
      json checks = json::array();
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"seconds", c.seconds}});
      }
      suites.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", checks}});
    }
    out << json{{"passed", ok}, {"n_max", opts.n_max}, {"seed", opts.seed}, {"suites", suites}}.dump() << "\n";
    return ok ? kExitOk : kExitFailed;
  }
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      char time[32];
      std::snprintf(time, sizeof time, "%.3f s", c.seconds);
      out << (c.passed ? "PASS " : "FAIL ") << r.name << ": " << c.name << " (" << time << ")";
      if (!c.detail.empty()) out << " -- " << c.detail;
      out << "\n";
    }
  }
  out << "\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::size_t n_ok = 0;
    for (const auto& c : r.checks) n_ok += c.passed ? 1 : 0;
    out << "suite " << r.name << ": " << (r.passed() ? "passed" : "FAILED") << " (" << n_ok << "/" << r.checks.size()
        << ")\n";
    passed += r.passed() ? 1 : 0;
  }
  out << passed << "/" << results.size() << " suites passed\n";
  return ok ? kExitOk : kExitFailed;
}

// -------------------------------------------------------------------- blocks

struct BlocksArgs {
  std::optional<double> kappa;
  std::optional<int> lambda;
  std::string shape;
  bool grid = false;
  std::string format = "text";
};

int cmd_blocks_check(const BlocksArgs& a, std::ostream& out) {
  if (!a.grid && (!a.kappa || !a.lambda || a.shape.empty())) {
    throw UsageError("blocks check needs --kappa, --lambda and --shape, or --grid");
  }
  BlockGrid grid;
  if (a.kappa) grid.kappas = {*a.kappa};
  if (a.lambda) grid.lambdas = {*a.lambda};
  std::vector<OdeRow> ode;
  std::vector<AsymptoticRow> asy;
  if (a.grid && a.shape.empty()) {
    ode = ode_grid(grid);
    asy = asymptotic_grid(grid);
  } else {
    const LocalShape shape = parse_block_shape(a.shape);
    for (long double k : grid.kappas) {
      for (int l : grid.lambdas) {
        std::optional<BlockContext> ctx;
        try {
          ctx.emplace(k, l, shape);
        } catch (const std::invalid_argument&) {
          if (!a.grid) throw;
          continue;
        }
        for (long double z : grid.zs) {
          const auto [r1, r2] = ode_residual(*ctx, z, grid.step);
          ode.push_back({k, l, shape, z, r1, r2});
        }
        if (is_wedge(shape)) {
          const long double v = wedge_asymptotic(*ctx);
          const long double e = expected_wedge_limit(*ctx);
          asy.push_back({k, l, shape, v, e, std::fabs(v - e)});
        }
      }
    }
  }
  bool ok = true;
  for (const auto& r : ode) ok = ok && std::fabs(r.residual1) < kTolerance && std::fabs(r.residual2) < kTolerance;
  for (const auto& r : asy) ok = ok && r.error < kTolerance;

  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : ode) {
      rows.push_back({{"shape", block_shape_code(r.shape)}, {"kappa", static_cast<double>(r.kappa)}, {"lambda", r.lambda},
                      {"z", static_cast<double>(r.z)}, {"residual1", static_cast<double>(r.residual1)},
                      {"residual2", static_cast<double>(r.residual2)}});
    }
    json limits = json::array();
    for (const auto& r : asy) {
      limits.push_back({{"shape", block_shape_code(r.shape)}, {"kappa", static_cast<double>(r.kappa)}, {"lambda", r.lambda},
                        {"value", static_cast<double>(r.value)}, {"expected", static_cast<double>(r.expected)},
                        {"error", static_cast<double>(r.error)}});
    }
    out << json{{"passed", ok}, {"tolerance", static_cast<double>(kTolerance)}, {"ode", rows}, {"asymptotics", limits}}.dump()
        << "\n";
  } else if (a.format == "csv") {
    out << "kind,shape,kappa,lambda,z,residual1,residual2,value,expected,error\n";
    for (const auto& r : ode) {
      out << "ode," << block_shape_code(r.shape) << "," << full(r.kappa) << "," << r.lambda << "," << full(r.z) << ","
          << full(r.residual1) << "," << full(r.residual2) << ",,,\n";
    }
    for (const auto& r : asy) {
      out << "limit," << block_shape_code(r.shape) << "," << full(r.kappa) << "," << r.lambda << ",,,," << full(r.value)
          << "," << full(r.expected) << "," << full(r.error) << "\n";
    }
  } else {
    out << "shape  kappa   lambda  z      residual1       residual2\n";
    for (const auto& r : ode) {
      char line[160];
      std::snprintf(line, sizeof line, "%-5s  %-6.3Lg  %-6d  %-5.3Lg  %-14s  %s\n", block_shape_code(r.shape), r.kappa,
                    r.lambda, r.z, fmt(r.residual1).c_str(), fmt(r.residual2).c_str());
      out << line;
    }
    if (!asy.empty()) {
      out << "\nshape  kappa   lambda  limit (z -> 1)         expected               error\n";
      for (const auto& r : asy) {
        char line[200];
        std::snprintf(line, sizeof line, "%-5s  %-6.3Lg  %-6d  %-21.15Lf  %-21.15Lf  %s\n", block_shape_code(r.shape),
                      r.kappa, r.lambda, r.value, r.expected, fmt(r.error).c_str());
        out << line;
      }
    }
    out << "\n" << (ok ? "all residuals and limit errors below " : "tolerance exceeded: ") << fmt(kTolerance) << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------- eval

json evaluate_tree(const json& j, const QNumeric& ctx) {
  if (is_ratq_json(j)) {
    const auto v = eval_at_kappa(ratq_from_json(j), ctx);
    return {{"re", v.real()}, {"im", v.imag()}};
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(evaluate_tree(e, ctx));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = evaluate_tree(it.value(), ctx);
    return out;
  }
  return j;
}

int cmd_eval(double kappa, std::istream& in, std::ostream& out) {
  const auto ctx = QNumeric::from_kappa(kappa);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("stdin is not valid JSON: ") + e.what());
  }
  out << evaluate_tree(doc, ctx).dump() << "\n";
  return kExitOk;
}

}  // namespace

DyckPath parse_path(const std::string& s) {
  if (s == "-") return DyckPath::from_steps("");
  return DyckPath::from_steps(s);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck tilings, q-deformed change of basis and conformal block vectors"};
  app.name("qblocks");
  app.require_subcommand(1);
  const auto formats = [](std::initializer_list<std::string> f) { return CLI::IsMember(std::vector<std::string>(f)); };

  int paths_n = 0;
  std::string paths_format = "text";
  auto* paths = app.add_subcommand("paths", "List Dyck paths of semilength N in canonical order");
  paths->add_option("--n", paths_n, "Semilength")->required();
  paths->add_option("--format", paths_format)->check(formats({"text", "json"}));

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Weighted incidence matrix M or its inverse");
  matrix->add_option("--n", matrix_args.n, "Semilength")->required();
  matrix->add_flag("--inverse", matrix_args.inverse, "Build the inverse");
  matrix->add_option("--method", matrix_args.method, "tiling, recursive or eliminate")
      ->check(formats({"tiling", "recursive", "eliminate"}));
  matrix->add_option("--format", matrix_args.format)->check(formats({"text", "json", "csv", "latex"}));
  matrix->add_option("--kappa", matrix_args.kappa, "Evaluation point for csv, q = exp(4 pi i / kappa)");

  std::string low, high, tilings_format = "text";
  bool nested = false;
  auto* tilings = app.add_subcommand("tilings", "Cover-inclusive (default) or nested Dyck tilings of low/high");
  tilings->add_option("--low", low, "Lower path, e.g. UDUD")->required();
  tilings->add_option("--high", high, "Upper path, e.g. UUDD")->required();
  tilings->add_flag("--nested", nested, "Only the nested tiling");
  tilings->add_option("--format", tilings_format)->check(formats({"text", "json"}));

  std::string ublock_path, ublock_format = "text";
  auto* ublock = app.add_subcommand("ublock", "Conformal block vector for a path; factor 1 is the rightmost bit");
  ublock->add_option("--path", ublock_path, "Step string")->required();
  ublock->add_option("--format", ublock_format)->check(formats({"text", "json"}));

  std::string project_path, project_format = "text";
  int project_j = 0;
  auto* project = app.add_subcommand("project", "Singlet projection on factors j, j+1 counted from the right");
  project->add_option("--path", project_path, "Step string")->required();
  project->add_option("--j", project_j, "Column, 1 <= j <= 2N-1")->required();
  project->add_option("--format", project_format)->check(formats({"text", "json"}));

  bool verify_all = false;
  std::string verify_suite, verify_format = "text";
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_flag("--all", verify_all, "Every suite");
  verify->add_option("--suite", verify_suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", verify_opts.n_max, "Largest semilength")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "Seed for randomized suites")->capture_default_str();
  verify->add_option("--samples", verify_opts.samples, "Random samples per property")->capture_default_str();
  verify->add_option("--format", verify_format)->check(formats({"text", "json"}));

  BlocksArgs blocks_args;
  auto* blocks = app.add_subcommand("blocks", "Numeric n = 2 conformal blocks");
  blocks->require_subcommand(1);
  auto* blocks_check = blocks->add_subcommand("check", "ODE residuals and z -> 1 limits");
  blocks_check->add_option("--kappa", blocks_args.kappa, "kappa in (0, 8)");
  blocks_check->add_option("--lambda", blocks_args.lambda, "Valence");
  blocks_check->add_option("--shape", blocks_args.shape, "uw, dw, us or ds")->check(formats({"uw", "dw", "us", "ds"}));
  blocks_check->add_flag("--grid", blocks_args.grid, "Sweep the standard grid, narrowed by any given flag");
  blocks_check->add_option("--format", blocks_args.format)->check(formats({"text", "csv", "json"}));

  double eval_kappa = 0;
  auto* eval = app.add_subcommand("eval", "Replace every RatQ object of the JSON on stdin by its value at kappa");
  eval->add_option("--kappa", eval_kappa, "q = exp(4 pi i / kappa)")->required();

  std::vector<std::string> argv_store{"qblocks"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Help for the deepest subcommand that was reached.
    CLI::App* scope = &app;
    while (!scope->get_subcommands().empty()) scope = scope->get_subcommands().front();
    err << "error: " << e.what() << "\n\n" << scope->help();
    return kExitUsage;
  }

  try {
    if (*paths) return cmd_paths(paths_n, paths_format, out);
    if (*matrix) return cmd_matrix(matrix_args, out);
    if (*tilings) return cmd_tilings(low, high, nested, tilings_format, out);
    if (*ublock) return cmd_ublock(ublock_path, ublock_format, out);
    if (*project) return cmd_project(project_path, project_j, project_format, out);
    if (*verify) return cmd_verify(verify_all, verify_suite, verify_opts, verify_format, out);
    if (*blocks_check) return cmd_blocks_check(blocks_args, out);
    if (*eval) return cmd_eval(eval_kappa, in, out);
  } catch (const PathParseError& e) {
    err << "error: " << e.what() << " (index " << e.index() << ")\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qblocks::cli
