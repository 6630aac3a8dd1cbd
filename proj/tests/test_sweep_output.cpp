#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "gapless/error.hpp"
#include "gapless/output.hpp"
#include "gapless/sweep.hpp"

using namespace gapless;

TEST_CASE("standard sweep configuration") {
  const SweepConfig c = SweepConfig::standard();
  REQUIRE(c.mu_values.size() == 9);
  CHECK(c.mu_values.front() == 100);
  CHECK(c.mu_values[2] == 1000);
  CHECK(c.mu_values.back() == 1e6);
  CHECK(c.effective_phi0() == pi / 12);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("sweep validation") {
  SweepConfig c = SweepConfig::standard();
  c.n = 3;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig::standard();
  c.mu_values = {100, 10};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig::standard();
  c.L = pi / 2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig::standard();
  c.phi0 = c.L;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("serial and parallel sweeps give identical rows") {
  SweepConfig c;
  c.mu_values = {100, 300, 1000};
  c.workers = 3;
  const SweepResult s = run_sweep_serial(c);
  const SweepResult p = run_sweep_parallel(c);
  std::ostringstream a, b;
  write_sweep_csv(a, s, 2);
  write_sweep_csv(b, p, 2);
  CHECK(a.str() == b.str());
  CHECK(s.all_ok());
}

TEST_CASE("single-point sweep CSV") {
  SweepConfig c;
  c.mu_values = {100};
  const SweepResult r = run_sweep(c);
  std::ostringstream os;
  write_sweep_csv(os, r, 2);
  const std::string text = os.str();
  CHECK(text.rfind("mu,lambda1,lambda2,gap,diameter,d2gap,rayleigh_upper,h1_at_0,max_location\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);
  CHECK(text.find("\n100,60.30715931") != std::string::npos);
}

TEST_CASE("failed and skipped rows carry tokens") {
  SweepConfig c;
  c.mu_values = {3, 100, 1e7};
  c.mu_cap = 1e7;
  const SweepResult r = run_sweep_serial(c);
  CHECK(r.rows[0].status == RowStatus::Failed);  // single peak at mu = 3
  CHECK(r.rows[1].status == RowStatus::Ok);
  CHECK(r.rows[2].status == RowStatus::Skipped);
  CHECK_FALSE(r.warnings.empty());
  std::ostringstream os;
  write_sweep_csv(os, r, 2);
  CHECK(os.str().find("\n3,error,error") != std::string::npos);
  CHECK(os.str().find("10000000,skipped") != std::string::npos);
}

TEST_CASE("chain sweep header") {
  CHECK(sweep_header(4) == std::vector<std::string>{"mu", "kappa1", "kappa2", "kappa3", "lambda1", "lambda2", "gap"});
  SweepConfig c;
  c.n = 3;
  c.deltas = {pi / 4};
  c.mu_values = {100, 1000};
  const SweepResult r = run_sweep(c);
  std::ostringstream os;
  write_sweep_csv(os, r, 3);
  CHECK(os.str().rfind("mu,kappa1,kappa2,lambda1,lambda2,gap\n", 0) == 0);
  CHECK(r.chains().size() == 2);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::strtod(format_number(pi).c_str(), nullptr) == pi);
  CHECK(format_number(static_cast<Real>(4e-661L)).find("e-661") != std::string::npos);
  CHECK(json_number(static_cast<Real>(1e-700L)).is_string());
  CHECK(json_number(static_cast<Real>(0.5L)).is_number());
}

TEST_CASE("eigen CSV endpoints are exact zeros") {
  const EigenSolution s = solve_eigen_shooting({pi / 3, 1e4, WeightMode::Secant2}, 2, 1e-13);
  std::ostringstream os;
  write_eigen_csv(os, s);
  const std::string t = os.str();
  CHECK(t.rfind("phi,h\n", 0) == 0);
  const auto first_row = t.substr(6, t.find('\n', 6) - 6);
  CHECK(first_row.substr(first_row.find(',') + 1) == "0");
  const auto last_nl = t.rfind('\n', t.size() - 2);
  const auto last_row = t.substr(last_nl + 1, t.size() - last_nl - 2);
  CHECK(last_row.substr(last_row.find(',') + 1) == "0");
}

TEST_CASE("SVG plot is self-contained") {
  PlotSeries s{{100, 1000, 10000}, {0.07L, 4e-14L, 2e-57L}};
  const std::string svg = svg_line_plot(s, {"t", "mu", "y", true, true});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);
  CHECK_THROWS_AS(svg_line_plot({{1}, {0}}, {"", "", "", false, true}), ConfigError);
}

TEST_CASE("worker override from the environment") {
  setenv("GAPLESS_WORKERS", "3", 1);
  CHECK(resolve_workers(0) == 3);
  setenv("GAPLESS_WORKERS", "junk", 1);
  CHECK(resolve_workers(2) == 2);
  unsetenv("GAPLESS_WORKERS");
  CHECK(resolve_workers(5) == 5);
}
