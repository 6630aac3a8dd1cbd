#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gapless/error.hpp"
#include "gapless/verify.hpp"

namespace gapless {

namespace {

constexpr double kGeomSlack = 1e-12;

Check make(std::string name, bool ok, Real margin = 0, std::string detail = {}) {
  return Check{std::move(name), ok, margin, std::move(detail)};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> geometry_checks(double L, const std::vector<double>& mus, int triangle_samples,
                                   std::uint64_t seed) {
  std::vector<Check> out;
  double bounds_margin = INFINITY, pair_err = 0, neck_margin = INFINITY, order_margin = INFINITY;
  for (double mu : mus) {
    const StripDomain d{2, mu, L, {}};
    const double D = diameter(d);
    const DiameterBounds b = diameter_bounds(d);
    bounds_margin = std::min({bounds_margin, D - b.lower, b.upper - D});
    const CornerPoints c = corner_points(d);
    const double pq = hyperbolic_distance(c.P, c.Q), pr = hyperbolic_distance(c.P, c.R),
                 rs = hyperbolic_distance(c.R, c.S);
    pair_err = std::max(pair_err, std::abs(D - std::max({pq, pr, rs})));
    const NeckCheck nk = neck_check(d);
    neck_margin = std::min(neck_margin, nk.dist_RS - nk.dist_TU / std::cos(L));
    order_margin = std::min(order_margin, pr - rs);
  }
  out.push_back(make("geometry.diameter_bounds", bounds_margin >= -kGeomSlack, bounds_margin));
  out.push_back(make("geometry.max_pair", pair_err <= kGeomSlack, -pair_err,
                     "diameter equals max of dist(P,Q), dist(P,R), dist(R,S)"));
  out.push_back(make("geometry.neck", neck_margin >= -kGeomSlack, neck_margin));
  out.push_back(make("geometry.pr_ge_rs", order_margin >= -kGeomSlack, order_margin));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-5.0, 5.0), uy(-3.0, 3.0);
  double worst = INFINITY;
  for (int t = 0; t < triangle_samples; ++t) {
    HalfPlanePoint p{ux(rng), std::exp(uy(rng))}, q{ux(rng), std::exp(uy(rng))},
        r{ux(rng), std::exp(uy(rng))};
    const double pq = hyperbolic_distance(p, q), qr = hyperbolic_distance(q, r),
                 pr = hyperbolic_distance(p, r);
    worst = std::min(worst, pq + qr - pr);
  }
  out.push_back(make("geometry.triangle", worst >= -kGeomSlack, worst,
                     std::to_string(triangle_samples) + " random triples"));
  return out;
}

std::vector<Check> gap_checks(const std::vector<GapReport>& r, const SweepSummary& s) {
  std::vector<Check> out;
  if (r.empty()) return out;
  const double L = r.front().L;
  const double cos2 = std::cos(L) * std::cos(L);

  Real lower_margin = INFINITY;
  for (const auto& x : r)
    lower_margin = std::min<Real>(lower_margin, x.lambda1 - cos2 * (pi * pi / (4 * L * L) + x.mu));
  out.push_back(make("slcore.bracket_lower", s.bracket_lower_ok, lower_margin));
  out.push_back(make("slcore.bracket_upper_threshold", std::isfinite(s.bracket_threshold), 0,
                     "lambda1 <= mu cos^2(L/2) from mu = " + fmt(s.bracket_threshold)));
  out.push_back(make("slcore.ratio_decreasing", s.ratio_decreasing));
  out.push_back(make("slcore.ratio_above_cos2", s.ratio_above_cos2));
  out.push_back(make("slcore.excess_ratio", s.excess_ratio < 0.2, 0.2 - s.excess_ratio,
                     "last/first excess " + fmt(s.excess_ratio)));

  Real est_margin = INFINITY;
  bool positive = true, a_le_d = true;
  for (const auto& x : r) {
    positive = positive && x.gap > 0;
    est_margin = std::min(est_margin, x.rayleigh_upper + 1e-9L - x.gap);
    if (x.lambda1 >= 1) a_le_d = a_le_d && x.terms.A > 0 && x.terms.A <= x.terms.D;
  }
  out.push_back(make("gap.positive", positive));
  out.push_back(make("gap.upper_bound", s.gap_est_ok, est_margin));
  out.push_back(make("gap.split_matches_direct", s.worst_split_rel <= 1e-6, 1e-6 - s.worst_split_rel,
                     "worst relative difference " + fmt(s.worst_split_rel)));
  out.push_back(make("gap.a_le_d", a_le_d));
  out.push_back(make("gap.terms_decreasing", s.terms_decreasing));
  out.push_back(make("gap.d2gap_decreasing", s.d2gap_decreasing));
  out.push_back(make("gap.d2gap_below_3pi2", s.d2gap_below_3pi2));
  out.push_back(make("gap.d2gap_ratio", s.d2gap_ratio < 0.2L, 0.2L - s.d2gap_ratio));

  out.push_back(make("shape.positive", s.positive_all));
  out.push_back(make("shape.evenness", s.worst_evenness <= 1e-10, 1e-10 - s.worst_evenness));
  bool below_L = std::all_of(r.begin(), r.end(), [&](const GapReport& x) { return x.shape.max_location < L; });
  out.push_back(make("shape.max_location_increasing", s.max_location_increasing && below_L));
  out.push_back(make("shape.h_ratio_decreasing", s.h_ratio_decreasing));
  out.push_back(make("shape.inflection", s.worst_inflection <= 1e-6, 1e-6 - s.worst_inflection));
  out.push_back(make("shape.envelope_upper", s.envelope_upper_all));
  out.push_back(make("shape.envelope_lower_threshold", std::isfinite(s.envelope_lower_threshold), 0,
                     "holds from mu = " + fmt(s.envelope_lower_threshold)));
  out.push_back(make("shape.h0_bound_threshold", std::isfinite(s.h0_bound_threshold), 0,
                     "holds from mu = " + fmt(s.h0_bound_threshold)));
  out.push_back(make("shape.integral_bound", s.integral_bound_all));
  out.push_back(make("shape.mass_center_decreasing", s.mass_center_decreasing));
  out.push_back(make("shape.deriv_mass_decreasing", s.deriv_mass_decreasing));
  return out;
}

std::vector<Check> chain_checks(int n, const std::vector<KappaChain>& chains) {
  std::vector<Check> out;
  const std::string prefix = "chain.n" + std::to_string(n) + ".";
  double margin = INFINITY;
  for (const auto& c : chains)
    for (const auto& l : c.levels) margin = std::min(margin, l.bound_margin);
  out.push_back(make(prefix + "bound", margin >= 0, std::isfinite(margin) ? margin : 0));
  out.push_back(make(prefix + "gap_decreasing",
                     strictly_decreasing(chains, [](const KappaChain& c) { return c.gap; })));
  bool kappa_up = true;
  for (std::size_t i = 1; i < chains.size(); ++i)
    for (std::size_t j = 0; j < chains[i].kappas.size(); ++j)
      kappa_up = kappa_up && chains[i].kappas[j] > chains[i - 1].kappas[j];
  out.push_back(make(prefix + "kappa_increasing", kappa_up));
  return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.sweep.n != 2) throw ConfigError("verify: the base sweep must have n = 2");
  VerifyReport rep;
  const SweepResult base = run_sweep(config.sweep);
  rep.warnings = base.warnings;
  std::vector<double> mus;
  for (const auto& row : base.rows) {
    if (row.status == RowStatus::Skipped) rep.skipped_mu.push_back(row.mu);
    else mus.push_back(row.mu);
    if (row.status == RowStatus::Failed)
      rep.checks.push_back(make("sweep.solve_mu_" + fmt(row.mu), false, 0, row.error));
    if (row.gap)
      for (const auto& w : row.gap->warnings) rep.warnings.push_back("mu " + fmt(row.mu) + ": " + w);
  }

  auto geo = geometry_checks(config.sweep.L, mus, config.triangle_samples, config.seed);
  rep.checks.insert(rep.checks.end(), geo.begin(), geo.end());

  const auto reports = base.gap_reports();
  rep.summary = summarize_sweep(reports);
  auto gc = gap_checks(reports, rep.summary);
  rep.checks.insert(rep.checks.end(), gc.begin(), gc.end());

  for (int n : config.chain_dims) {
    SweepConfig cs = config.sweep;
    cs.n = n;
    cs.deltas.assign(static_cast<std::size_t>(n - 2), config.chain_delta);
    const SweepResult chain = run_sweep(cs);
    for (const auto& row : chain.rows)
      if (row.status == RowStatus::Failed)
        rep.checks.push_back(make("chain.n" + std::to_string(n) + ".solve_mu_" + fmt(row.mu), false, 0, row.error));
    auto cc = chain_checks(n, chain.chains());
    rep.checks.insert(rep.checks.end(), cc.begin(), cc.end());
  }

  // The chain formulas at n = 2 reduce to the direct two-dimensional solve.
  if (!reports.empty()) {
    const GapReport& g = reports.front();
    const KappaChain c = chain_gap(2, g.mu, {}, g.L, config.sweep.solver);
    const double rel = std::max(std::abs(c.lambda1 - g.lambda1) / g.lambda1,
                                std::abs(c.lambda2 - g.lambda2) / g.lambda2);
    rep.checks.push_back(make("chain.n2_consistency", rel <= 1e-8, 1e-8 - rel));
  }
  return rep;
}

}  // namespace gapless
