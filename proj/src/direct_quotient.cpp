#include <algorithm>
#include <cmath>
#include <limits>

#include <mpfr.h>

#include "gapless/error.hpp"
#include "gapless/gap.hpp"

namespace gapless {

namespace {

class Big {
 public:
  explicit Big(mpfr_prec_t bits) {
    mpfr_init2(x_, bits);
    mpfr_set_zero(x_, 1);
  }
  ~Big() { mpfr_clear(x_); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

struct Sums {
  explicit Sums(mpfr_prec_t bits)
      : n_h(bits), w_h(bits), n_p(bits), w_p(bits), t(bits), u(bits), v(bits) {}
  Big n_h, w_h, n_p, w_p;  // numerators and denominators of R[h] and R[psi h]
  Big t, u, v;

  // x *= y; MPFR has no long double multiply.
  void mul(mpfr_ptr x, long double y) {
    mpfr_set_ld(v.get(), y, MPFR_RNDN);
    mpfr_mul(x, x, v.get(), MPFR_RNDN);
  }
};

// acc += c * a * b
void fma3(Sums& s, mpfr_ptr acc, long double c, long double a, long double b) {
  mpfr_set_ld(s.t.get(), a, MPFR_RNDN);
  s.mul(s.t.get(), b);
  s.mul(s.t.get(), c);
  mpfr_add(acc, acc, s.t.get(), MPFR_RNDN);
}

void accumulate(Sums& s, const Eigenfunction& h1, double lo, double hi, std::size_t intervals,
                double phi1, double mu) {
  const std::vector<double> grid = uniform_grid(lo, hi, intervals);
  const auto samples = h1.sample(grid);
  const long double third = static_cast<long double>(grid[1] - grid[0]) / 3;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const long double c =
        third * ((i == 0 || i == intervals) ? 1 : (i % 2 == 1 ? 4 : 2));
    const long double h = samples[i].value, dh = samples[i].deriv;
    const long double w = h1.problem().w(grid[i]);
    // Each piece is closed, so psi' is the one-sided slope of that piece.
    const bool inner = lo >= -phi1 && hi <= phi1;
    const long double psi = inner ? -grid[i] / phi1 : (lo < 0 ? 1.0L : -1.0L);
    const long double dpsi = inner ? -1.0L / phi1 : 0.0L;

    fma3(s, s.n_h.get(), c, dh, dh);
    fma3(s, s.n_h.get(), c * mu, h, h);
    fma3(s, s.w_h.get(), c * w, h, h);

    // (psi h)' = psi' h + psi h', formed exactly at working precision.
    mpfr_set_ld(s.u.get(), h, MPFR_RNDN);
    s.mul(s.u.get(), dpsi);
    mpfr_set_ld(s.t.get(), dh, MPFR_RNDN);
    s.mul(s.t.get(), psi);
    mpfr_add(s.u.get(), s.u.get(), s.t.get(), MPFR_RNDN);
    mpfr_sqr(s.u.get(), s.u.get(), MPFR_RNDN);
    s.mul(s.u.get(), c);
    mpfr_add(s.n_p.get(), s.n_p.get(), s.u.get(), MPFR_RNDN);

    mpfr_set_ld(s.u.get(), h, MPFR_RNDN);
    s.mul(s.u.get(), psi);
    mpfr_sqr(s.u.get(), s.u.get(), MPFR_RNDN);
    mpfr_set(s.t.get(), s.u.get(), MPFR_RNDN);
    s.mul(s.t.get(), c * mu);
    mpfr_add(s.n_p.get(), s.n_p.get(), s.t.get(), MPFR_RNDN);
    mpfr_set(s.t.get(), s.u.get(), MPFR_RNDN);
    s.mul(s.t.get(), c * w);
    mpfr_add(s.w_p.get(), s.w_p.get(), s.t.get(), MPFR_RNDN);
  }
}

}  // namespace

Real direct_rayleigh_difference(const Eigenfunction& h1, double phi1, double mu,
                                std::size_t outer_intervals, std::size_t inner_intervals) {
  const double a = h1.problem().half_width;
  if (!(phi1 > 0) || phi1 >= a) throw ConfigError("direct_rayleigh_difference: phi1 must lie in (0, a)");
  const std::size_t outer = std::max<std::size_t>(64, round_up_even(outer_intervals / 2.0));
  const std::size_t inner = std::max<std::size_t>(64, round_up_even(static_cast<double>(inner_intervals)));

  // The quotients are O(lambda1) while their difference scales with h1^2 on
  // the inner interval; carry enough bits to resolve it with margin.
  const double probe[1] = {0.0};
  const long double h0 = h1.sample(probe).front().value;
  const long double tiny = std::max(h0 * h0, std::numeric_limits<long double>::min());
  const double scale = std::log2(std::max(1.0, h1.lambda() + mu) + 1.0);
  const double bits = 128 + scale - static_cast<double>(std::log2(tiny));
  Sums s(static_cast<mpfr_prec_t>(std::ceil(bits)));

  accumulate(s, h1, -a, -phi1, outer, phi1, mu);
  accumulate(s, h1, -phi1, phi1, inner, phi1, mu);
  accumulate(s, h1, phi1, a, outer, phi1, mu);

  if (mpfr_zero_p(s.w_h.get()) || mpfr_zero_p(s.w_p.get()))
    throw DegenerateInput("direct_rayleigh_difference: zero denominator");
  mpfr_div(s.t.get(), s.n_p.get(), s.w_p.get(), MPFR_RNDN);
  mpfr_div(s.u.get(), s.n_h.get(), s.w_h.get(), MPFR_RNDN);
  mpfr_sub(s.t.get(), s.t.get(), s.u.get(), MPFR_RNDN);
  return mpfr_get_ld(s.t.get(), MPFR_RNDN);
}

}  // namespace gapless
