#pragma once

// Serialization: CSV with round-trip precision, static SVG line plots and
// JSON reports.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapless/sweep.hpp"
#include "gapless/verify.hpp"

namespace gapless {

std::string format_number(double x);  // %.17g
std::string format_number(Real x);    // %.17Lg

std::vector<std::string> sweep_header(int n);
void write_sweep_csv(std::ostream& os, const SweepResult& result, int n);
void write_eigen_csv(std::ostream& os, const EigenSolution& s);

struct PlotSeries {
  std::vector<double> x;
  std::vector<Real> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

// Single-file SVG, no external assets.
std::string svg_line_plot(const PlotSeries& series, const PlotOptions& options);

// Numbers outside double range are emitted as decimal strings.
nlohmann::json json_number(Real x);
nlohmann::json to_json(const GapReport& r);
nlohmann::json to_json(const KappaChain& c);
nlohmann::json to_json(const VerifyReport& r);

}  // namespace gapless
