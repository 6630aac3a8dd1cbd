#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gapless/error.hpp"
#include "gapless/output.hpp"

namespace gapless {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_number(Real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", x);
  return buf;
}

std::vector<std::string> sweep_header(int n) {
  if (n == 2)
    return {"mu", "lambda1", "lambda2", "gap", "diameter", "d2gap", "rayleigh_upper", "h1_at_0",
            "max_location"};
  std::vector<std::string> h{"mu"};
  for (int i = 1; i <= n - 1; ++i) h.push_back("kappa" + std::to_string(i));
  h.insert(h.end(), {"lambda1", "lambda2", "gap"});
  return h;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result, int n) {
  const auto header = sweep_header(n);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : result.rows) {
    std::vector<std::string> cells{format_number(row.mu)};
    if (row.gap) {
      const GapReport& g = *row.gap;
      cells.insert(cells.end(), {format_number(g.lambda1), format_number(g.lambda2), format_number(g.gap),
                                 format_number(g.diameter), format_number(g.d2gap),
                                 format_number(g.rayleigh_upper), format_number(g.shape.h1_at_0),
                                 format_number(g.shape.max_location)});
    } else if (row.chain) {
      for (double k : row.chain->kappas) cells.push_back(format_number(k));
      cells.insert(cells.end(), {format_number(row.chain->lambda1), format_number(row.chain->lambda2),
                                 format_number(row.chain->gap)});
    } else {
      const char* token = row.status == RowStatus::Skipped ? "skipped" : "error";
      cells.resize(header.size(), token);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  }
}

void write_eigen_csv(std::ostream& os, const EigenSolution& s) {
  os << "phi,h\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i)
    os << format_number(s.grid[i]) << ',' << format_number(s.values[i]) << '\n';
}

namespace {

struct Axis {
  double lo = 0, hi = 1;
  bool log = false;
  double map(double v, double a, double b) const { return a + (v - lo) / (hi - lo) * (b - a); }
};

Axis make_axis(const std::vector<double>& v, bool log) {
  Axis ax;
  ax.log = log;
  ax.lo = *std::min_element(v.begin(), v.end());
  ax.hi = *std::max_element(v.begin(), v.end());
  if (log) {
    ax.lo = std::floor(ax.lo);
    ax.hi = std::ceil(ax.hi);
  }
  if (ax.hi - ax.lo < 1e-300) {
    ax.lo -= 0.5;
    ax.hi += 0.5;
  }
  return ax;
}

std::vector<double> ticks(const Axis& ax) {
  std::vector<double> t;
  if (ax.log) {
    const double span = ax.hi - ax.lo;
    const double stride = std::max(1.0, std::ceil(span / 8));
    for (double v = ax.lo; v <= ax.hi + 1e-9; v += stride) t.push_back(v);
  } else {
    for (int i = 0; i <= 4; ++i) t.push_back(ax.lo + (ax.hi - ax.lo) * i / 4);
  }
  return t;
}

std::string tick_label(const Axis& ax, double v) {
  char buf[48];
  if (ax.log) std::snprintf(buf, sizeof buf, "1e%.0f", v);
  else std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string svg_line_plot(const PlotSeries& series, const PlotOptions& o) {
  if (series.x.empty() || series.x.size() != series.y.size())
    throw ConfigError("svg_line_plot: empty or mismatched series");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < series.x.size(); ++i) {
    if (o.log_x && !(series.x[i] > 0)) throw ConfigError("svg_line_plot: non-positive x on log axis");
    if (o.log_y && !(series.y[i] > 0)) throw ConfigError("svg_line_plot: non-positive y on log axis");
    xs.push_back(o.log_x ? std::log10(series.x[i]) : series.x[i]);
    ys.push_back(o.log_y ? static_cast<double>(std::log10(series.y[i])) : static_cast<double>(series.y[i]));
  }
  const Axis ax = make_axis(xs, o.log_x), ay = make_axis(ys, o.log_y);
  constexpr double W = 640, H = 420, left = 80, right = 20, top = 40, bottom = 60;
  const double x0 = left, x1 = W - right, y0 = H - bottom, y1 = top;

  std::ostringstream s;
  s.precision(6);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(o.title)
    << "</text>\n";
  s << "<g stroke=\"#888\" stroke-width=\"1\">\n";
  s << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0 << "\"/>\n";
  s << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1 << "\"/>\n";
  s << "</g>\n";
  for (double t : ticks(ax)) {
    const double px = ax.map(t, x0, x1);
    s << "<line x1=\"" << px << "\" y1=\"" << y0 << "\" x2=\"" << px << "\" y2=\"" << y0 + 5
      << "\" stroke=\"#888\"/><text x=\"" << px << "\" y=\"" << y0 + 20 << "\" text-anchor=\"middle\">"
      << tick_label(ax, t) << "</text>\n";
  }
  for (double t : ticks(ay)) {
    const double py = ay.map(t, y0, y1);
    s << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
      << "\" stroke=\"#888\"/><text x=\"" << x0 - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
      << tick_label(ay, t) << "</text>\n";
  }
  s << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">"
    << escape(o.x_label) << "</text>\n";
  s << "<text x=\"18\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << (y0 + y1) / 2 << ")\">" << escape(o.y_label) << "</text>\n";
  s << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s << (i ? " " : "") << ax.map(xs[i], x0, x1) << ',' << ay.map(ys[i], y0, y1);
  s << "\"/>\n";
  if (xs.size() <= 64)
    for (std::size_t i = 0; i < xs.size(); ++i)
      s << "<circle cx=\"" << ax.map(xs[i], x0, x1) << "\" cy=\"" << ay.map(ys[i], y0, y1)
        << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
  s << "</svg>\n";
  return s.str();
}

nlohmann::json json_number(Real x) {
  const Real ax = std::abs(x);
  if (std::isfinite(x) && (ax == 0 || (ax >= std::numeric_limits<double>::min() &&
                                       ax <= std::numeric_limits<double>::max())))
    return static_cast<double>(x);
  return format_number(x);
}

nlohmann::json to_json(const GapReport& r) {
  const ShapeReport& s = r.shape;
  return {
      {"mu", r.mu}, {"L", r.L}, {"phi0", r.phi0},
      {"lambda1", r.lambda1}, {"lambda2", r.lambda2}, {"gap", json_number(r.gap)},
      {"diameter", r.diameter}, {"d2gap", json_number(r.d2gap)},
      {"rayleigh_upper", json_number(r.rayleigh_upper)},
      {"rayleigh_split", json_number(r.rayleigh_split)},
      {"terms", {{"A", json_number(r.terms.A)}, {"B", json_number(r.terms.B)},
                 {"C", json_number(r.terms.C)}, {"D", json_number(r.terms.D)}}},
      {"shape",
       {{"h1_at_0", json_number(s.h1_at_0)}, {"h1_max", json_number(s.h1_max)},
        {"max_location", s.max_location}, {"inflection_point", s.inflection_point},
        {"inflection_residual", s.inflection_residual}, {"phi1", s.phi1}, {"c1", s.c1},
        {"b_bound", s.b_bound}, {"central_mass", json_number(s.central_mass)},
        {"mass_center", json_number(s.mass_center)}, {"deriv_mass", json_number(s.deriv_mass)},
        {"evenness", s.evenness}, {"positive", s.positive},
        {"envelope_upper_ok", s.envelope_upper_ok}, {"envelope_lower_ok", s.envelope_lower_ok},
        {"h0_bound_ok", s.h0_bound_ok}, {"h0_bound_rhs", json_number(s.h0_bound_rhs)},
        {"integral_bound_ok", s.integral_bound_ok}}},
      {"warnings", r.warnings},
  };
}

nlohmann::json to_json(const KappaChain& c) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : c.levels)
    levels.push_back({{"i", l.i}, {"alpha", l.alpha}, {"shift", l.shift}, {"delta", l.delta},
                      {"kappa", l.kappa}, {"bound_margin", l.bound_margin}});
  return {{"n", c.n}, {"mu", c.mu}, {"L", c.L}, {"deltas", c.deltas}, {"kappas", c.kappas},
          {"alphas", c.alphas}, {"levels", levels}, {"final_shift", c.final_shift},
          {"lambda1", c.lambda1}, {"lambda2", c.lambda2}, {"gap", json_number(c.gap)}};
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"margin", json_number(c.margin)},
                      {"detail", c.detail}});
  auto threshold = [](double t) -> nlohmann::json {
    return std::isfinite(t) ? nlohmann::json(t) : nlohmann::json(nullptr);
  };
  return {{"passed", r.all_passed()},
          {"checks", checks},
          {"warnings", r.warnings},
          {"skipped_mu", r.skipped_mu},
          {"thresholds",
           {{"lambda1_below_mu_cos2_half_L", threshold(r.summary.bracket_threshold)},
            {"envelope_lower", threshold(r.summary.envelope_lower_threshold)},
            {"h0_bound", threshold(r.summary.h0_bound_threshold)}}}};
}

}  // namespace gapless
