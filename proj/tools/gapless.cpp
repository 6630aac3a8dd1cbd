// gapless: sweeps, verification, eigenfunction dumps and geometry queries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapless/chain.hpp"
#include "gapless/error.hpp"
#include "gapless/geometry.hpp"
#include "gapless/output.hpp"
#include "gapless/sweep.hpp"
#include "gapless/verify.hpp"

using namespace gapless;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kConfig = 1, kSolver = 2, kVerify = 3 };

struct RunOptions {
  std::string config_path;
  std::optional<int> n;
  std::optional<double> L, phi0, mu_cap, rel_tol;
  std::vector<double> deltas, mus, mu_range;
  std::optional<int> workers;
  std::string csv, svg, report;
};

void add_run_options(CLI::App* app, RunOptions& o) {
  app->add_option("--config", o.config_path, "JSON config file (flags override it)");
  app->add_option("--n", o.n, "ambient dimension");
  app->add_option("--L", o.L, "half-width of the last angle");
  app->add_option("--delta", o.deltas, "half-widths delta_2..delta_{n-1}");
  app->add_option("--mu", o.mus, "explicit mu values");
  app->add_option("--mu-range", o.mu_range, "lo hi count, log-spaced")->expected(3);
  app->add_option("--phi0", o.phi0, "phi0 in (0, L/2); default L/4");
  app->add_option("--mu-cap", o.mu_cap, "largest mu to solve");
  app->add_option("--rel-tol", o.rel_tol, "eigenvalue bisection width, relative");
  app->add_option("--workers", o.workers, "sweep workers (GAPLESS_WORKERS overrides)");
}

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

template <class T>
void take(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

std::vector<double> range_values(const std::vector<double>& r) {
  if (r.size() != 3 || r[2] < 1 || r[2] != std::floor(r[2]))
    throw ConfigError("mu range needs lo hi count with integer count >= 1");
  return SweepConfig::log_spaced(r[0], r[1], static_cast<std::size_t>(r[2]));
}

SweepConfig build_sweep(const RunOptions& o, const json& file) {
  SweepConfig c = SweepConfig::standard();
  take(file, "n", c.n);
  take(file, "L", c.L);
  take(file, "deltas", c.deltas);
  if (file.contains("mu_range")) {
    std::vector<double> r;
    take(file, "mu_range", r);
    c.mu_values = range_values(r);
  }
  take(file, "mu_values", c.mu_values);
  take(file, "phi0", c.phi0);
  take(file, "mu_cap", c.mu_cap);
  take(file, "rel_tol", c.solver.rel_tol);
  take(file, "workers", c.workers);

  if (o.n) c.n = *o.n;
  if (o.L) c.L = *o.L;
  if (!o.deltas.empty()) c.deltas = o.deltas;
  if (!o.mu_range.empty()) c.mu_values = range_values(o.mu_range);
  if (!o.mus.empty()) c.mu_values = o.mus;
  if (o.phi0) c.phi0 = *o.phi0;
  if (o.mu_cap) c.mu_cap = *o.mu_cap;
  if (o.rel_tol) c.solver.rel_tol = *o.rel_tol;
  if (o.workers) c.workers = *o.workers;
  c.workers = resolve_workers(c.workers);
  c.validate();
  return c;
}

std::string pick(const std::string& flag, const json& file, const char* key) {
  if (!flag.empty()) return flag;
  std::string v;
  take(file, key, v);
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

int cmd_gap_sweep(const RunOptions& o) {
  const json file = load_config(o.config_path);
  const SweepConfig c = build_sweep(o, file);
  for (double mu : c.mu_values)
    if (mu > std::min(c.mu_cap, kPrecisionCap))
      throw ConfigError("gap-sweep: mu " + format_number(mu) + " exceeds the cap " +
                        format_number(std::min(c.mu_cap, kPrecisionCap)));
  const SweepResult r = run_sweep(c);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';

  std::ostringstream csv;
  write_sweep_csv(csv, r, c.n);
  const std::string csv_path = pick(o.csv, file, "csv");
  if (csv_path.empty()) std::cout << csv.str();
  else write_file(csv_path, csv.str());

  const std::string svg_path = pick(o.svg, file, "svg");
  if (!svg_path.empty()) {
    PlotSeries s;
    for (const auto& row : r.rows) {
      if (row.gap) {
        s.x.push_back(row.mu);
        s.y.push_back(row.gap->d2gap);
      } else if (row.chain) {
        s.x.push_back(row.mu);
        s.y.push_back(row.chain->gap);
      }
    }
    if (!s.x.empty()) {
      const bool two = c.n == 2;
      write_file(svg_path, svg_line_plot(s, {two ? "D^2 (lambda2 - lambda1) versus mu"
                                                 : "lambda2 - lambda1 versus mu, n = " + std::to_string(c.n),
                                             "mu", two ? "D^2 gap" : "gap", true, true}));
    }
  }
  for (const auto& row : r.rows)
    if (row.status == RowStatus::Failed) {
      std::cerr << "error at mu = " << format_number(row.mu) << ": " << row.error << '\n';
    }
  return r.all_ok() ? kOk : kSolver;
}

int cmd_verify(const RunOptions& o) {
  const json file = load_config(o.config_path);
  VerifyConfig v;
  v.sweep = build_sweep(o, file);
  if (v.sweep.n != 2) throw ConfigError("verify: the base sweep has n = 2; chain dimensions are set by chain_dims");
  take(file, "chain_dims", v.chain_dims);
  take(file, "chain_delta", v.chain_delta);
  for (int n : v.chain_dims)
    if (n < 3) throw ConfigError("verify: chain_dims entries must be >= 3");
  const VerifyReport rep = run_verify(v);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  const std::string text = to_json(rep).dump(2) + "\n";
  const std::string path = pick(o.report, file, "report");
  if (path.empty()) std::cout << text;
  else write_file(path, text);
  for (const auto& c : rep.checks)
    std::cerr << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
  return rep.all_passed() ? kOk : kVerify;
}

struct EigenOptions {
  double mu = 1e4;
  double L = pi / 3;
  int k = 1;
  std::string method = "shooting";
  std::size_t intervals = 0;
  double rel_tol = 1e-13;
  std::string csv, svg;
};

int cmd_eigen(const EigenOptions& o) {
  StripDomain{2, o.mu, o.L, {}}.validate();
  SolverConfig cfg;
  cfg.rel_tol = o.rel_tol;
  cfg.validate();
  if (o.mu > cfg.shift_cap) throw ConfigError("eigen: mu above the precision cap 1e6");
  const WeightedSLProblem p{o.L, o.mu, WeightMode::Secant2};
  EigenSolution s;
  if (o.method == "shooting") {
    SolverConfig sampled = cfg;
    if (o.intervals) sampled.grid_min = o.intervals;
    s = solve_eigen_shooting(p, o.k, cfg.rel_tol, sampled);
  } else {
    s = solve_eigen_matrix(p, o.k, o.intervals ? o.intervals : default_matrix_intervals(p));
  }
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << "lambda_" << o.k << " = " << format_number(s.lambda) << '\n';

  std::ostringstream csv;
  write_eigen_csv(csv, s);
  if (o.csv.empty()) std::cout << csv.str();
  else write_file(o.csv, csv.str());
  if (!o.svg.empty()) {
    PlotSeries ps{s.grid, s.values};
    write_file(o.svg, svg_line_plot(ps, {"h_" + std::to_string(o.k) + ", mu = " + format_number(o.mu),
                                         "phi", "h", false, false}));
  }
  return kOk;
}

struct GeometryOptions {
  double mu = 1e4;
  double L = pi / 3;
  std::vector<double> distance;
};

int cmd_geometry(const GeometryOptions& o) {
  json out;
  if (!o.distance.empty()) {
    out["distance"] = hyperbolic_distance({o.distance[0], o.distance[1]}, {o.distance[2], o.distance[3]});
  } else {
    const StripDomain d{2, o.mu, o.L, {}};
    const CornerPoints c = corner_points(d);
    auto pt = [](const HalfPlanePoint& p) { return json::array({p.x, p.y}); };
    const DiameterBounds b = diameter_bounds(d);
    const NeckCheck n = neck_check(d);
    out = {{"mu", o.mu}, {"L", o.L},
           {"corners", {{"P", pt(c.P)}, {"Q", pt(c.Q)}, {"R", pt(c.R)}, {"S", pt(c.S)},
                        {"T", pt(c.T)}, {"U", pt(c.U)}}},
           {"diameter", diameter(d)},
           {"diameter_bounds", {b.lower, b.upper}},
           {"dist_PQ", hyperbolic_distance(c.P, c.Q)},
           {"dist_RS", n.dist_RS},
           {"dist_TU", n.dist_TU},
           {"neck_ok", n.ratio_ok}};
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental gap of convex strip domains in hyperbolic space"};
  app.require_subcommand(1);

  RunOptions sweep_opts, verify_opts;
  auto* sweep = app.add_subcommand("gap-sweep", "lambda1, lambda2 and D^2 gap along a mu sweep");
  add_run_options(sweep, sweep_opts);
  sweep->add_option("--csv", sweep_opts.csv, "CSV output (default stdout)");
  sweep->add_option("--svg", sweep_opts.svg, "SVG plot of the scaled gap");

  auto* verify = app.add_subcommand("verify", "run every inequality check, JSON report");
  add_run_options(verify, verify_opts);
  verify->add_option("--report", verify_opts.report, "JSON report path (default stdout)");

  EigenOptions eo;
  auto* eigen = app.add_subcommand("eigen", "dump an eigenfunction as phi,h");
  eigen->add_option("--mu", eo.mu, "separation constant");
  eigen->add_option("--L", eo.L, "half-width");
  eigen->add_option("--k", eo.k, "eigenvalue index")->check(CLI::Range(1, 4));
  eigen->add_option("--method", eo.method, "shooting or matrix")
      ->check(CLI::IsMember({"shooting", "matrix"}));
  eigen->add_option("--intervals", eo.intervals, "grid intervals");
  eigen->add_option("--rel-tol", eo.rel_tol, "bisection width, relative");
  eigen->add_option("--csv", eo.csv, "CSV output (default stdout)");
  eigen->add_option("--svg", eo.svg, "SVG plot of the profile");

  GeometryOptions go;
  auto* geometry = app.add_subcommand("geometry", "corner points, diameter and neck of a strip");
  geometry->add_option("--mu", go.mu, "separation constant");
  geometry->add_option("--L", go.L, "half-width");
  geometry->add_option("--distance", go.distance, "x1 y1 x2 y2: half-plane distance only")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*sweep) return cmd_gap_sweep(sweep_opts);
    if (*verify) return cmd_verify(verify_opts);
    if (*eigen) return cmd_eigen(eo);
    if (*geometry) return cmd_geometry(go);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const UnsupportedDimension& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const Error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolver;
  }
  return kOk;
}
