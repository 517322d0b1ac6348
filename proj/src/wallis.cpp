#include "stirling/wallis.hpp"

#include <stdexcept>

namespace stirling {

namespace {

void check_n(unsigned long n) {
  if (n < 1) throw std::invalid_argument("wallis: n must be >= 1");
}

ExtFloat theta_low_of(unsigned long n, int work) {
  return sqrt_ext(ExtFloat::of(ExactRational(ExactInteger(2 * n + 1), ExactInteger(2 * n)), work));
}

ExtFloat theta_high_of(unsigned long n, int work) {
  return sqrt_ext(ExtFloat::of(ExactRational(ExactInteger(2 * n), ExactInteger(2 * n - 1)), work));
}

}  // namespace

ExactRational wallis_factorial_form(unsigned long n) {
  check_n(n);
  ExactInteger two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 4 * n);
  const ExactInteger nf = factorial_int(n);
  const ExactInteger n2f = factorial_int(2 * n);
  ExactRational ratio(nf * nf, n2f);
  ratio.canonicalize();
  return ExactRational(two_pow) / ExactRational(ExactInteger(2 * n)) * ratio * ratio;
}

ExactRational wallis_running_product(unsigned long n) {
  check_n(n);
  ExactRational p(1);
  for (unsigned long k = 1; k <= n; ++k) {
    const ExactRational f(ExactInteger(2 * k), ExactInteger(2 * k - 1));
    p *= f * f;
  }
  return p / ExactRational(ExactInteger(2 * n));
}

WallisBracket pi_bracket(unsigned long n, int precision) {
  check_n(n);
  const int work = 2 * precision + 10;
  WallisBracket b;
  b.n = n;
  b.H_n = wallis_factorial_form(n);
  const ExtFloat H = ExtFloat::of(b.H_n, work);
  const ExtFloat tl = theta_low_of(n, work);
  const ExtFloat th = theta_high_of(n, work);
  b.theta_low = tl.to_precision(precision);
  b.theta_high = th.to_precision(precision);
  b.pi_low = (H * 2L / th).to_precision(precision);
  b.pi_high = (H * 2L / tl).to_precision(precision);
  return b;
}

PiSweepResult pi_bracket_sweep(unsigned long n_max, int precision) {
  check_n(n_max);
  const int work = 2 * precision + 10;
  const ExtFloat pi_ref = ExtFloat::pi(work);

  PiSweepResult r;
  r.all_contain = true;
  r.min_margin = 1e300;

  // running product P_n = prod (2k/(2k-1))^2; H_n = P_n / (2n)
  ExtFloat P = ExtFloat::of(1, work);
  for (unsigned long n = 1; n <= n_max; ++n) {
    const ExtFloat f = ExtFloat::of(ExactRational(ExactInteger(2 * n), ExactInteger(2 * n - 1)), work);
    P = P * f * f;
    const ExtFloat H = P / static_cast<long>(2 * n);
    const ExtFloat lo = H * 2L / theta_high_of(n, work);
    const ExtFloat hi = H * 2L / theta_low_of(n, work);
    if (!(lo < pi_ref && pi_ref < hi)) r.all_contain = false;
    const double m1 = (pi_ref - lo).to_double();
    const double m2 = (hi - pi_ref).to_double();
    if (m1 < r.min_margin) r.min_margin = m1;
    if (m2 < r.min_margin) r.min_margin = m2;
    if (n == n_max) r.width_at_n_max = (hi - lo).to_double();
  }
  return r;
}

ConstantBracket constant_bracket(unsigned long n, int precision, int envelope_terms) {
  check_n(n);
  if (envelope_terms != 1 && envelope_terms != 2)
    throw std::invalid_argument("constant_bracket: envelope_terms must be 1 or 2");
  const int work = 2 * precision + 10;

  const ExtFloat two_pi = ExtFloat::pi(work) * 2L;
  const ExtFloat base_low = ln_ext(sqrt_ext(two_pi * theta_low_of(n, work)));
  const ExtFloat base_high = ln_ext(sqrt_ext(two_pi * theta_high_of(n, work)));

  // enveloping bounds on delta_m: the remainder after m=0 (resp. m=1)
  // terms of the correcting series carries the sign of the next term.
  const auto delta_hi = [&](unsigned long m) {
    return ExtFloat::of(ExactRational(1, ExactInteger(12) * m), work);
  };
  const auto delta_lo = [&](unsigned long m) {
    if (envelope_terms == 1) return ExtFloat(work);
    return ExtFloat::of(ExactRational(1, ExactInteger(12) * m) -
                            ExactRational(1, ExactInteger(360) * m * m * m),
                        work);
  };

  ConstantBracket b;
  b.c_low = (base_low + delta_lo(2 * n) - delta_hi(n) * 2L).to_precision(precision);
  b.c_high = (base_high + delta_hi(2 * n) - delta_lo(n) * 2L).to_precision(precision);
  return b;
}

}  // namespace stirling
