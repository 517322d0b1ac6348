#include "stirling/schaar.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "stirling/coefficients.hpp"

namespace stirling {

namespace {

int digits_for(double tol) {
  const int d = static_cast<int>(std::ceil(-std::log10(tol)));
  return d + 12 > 25 ? d + 12 : 25;
}

// ln(1 - e^{-t}) for t > 0.  When e^{-t} rounds to 1 exactly the true value
// is below one ulp of the working precision and is returned as zero.
ExtFloat ln_one_minus_exp(const ExtFloat& t, int work) {
  const ExtFloat diff = ExtFloat::of(1, work) - exp_ext(-t);
  if (diff.sign() <= 0) return ExtFloat(work);
  return ln_ext(diff);
}

using Integrand = std::function<ExtFloat(const ExtFloat&)>;

ExtFloat simpson_rule(const ExtFloat& a, const ExtFloat& b, const ExtFloat& fa,
                      const ExtFloat& fm, const ExtFloat& fb) {
  return (b - a) / 6L * (fa + fm * 4L + fb);
}

ExtFloat adaptive_step(const Integrand& f, const ExtFloat& a, const ExtFloat& b,
                       const ExtFloat& fa, const ExtFloat& fm, const ExtFloat& fb,
                       const ExtFloat& whole, double tol, int& budget) {
  const ExtFloat m = (a + b) / 2L;
  const ExtFloat lm = (a + m) / 2L;
  const ExtFloat rm = (m + b) / 2L;
  const ExtFloat flm = f(lm);
  const ExtFloat frm = f(rm);
  const ExtFloat left = simpson_rule(a, m, fa, flm, fm);
  const ExtFloat right = simpson_rule(m, b, fm, frm, fb);
  const ExtFloat err = left + right - whole;
  if (std::fabs(err.to_double()) <= 15.0 * tol)
    return left + right + err / 15L;
  if (--budget < 0)
    throw std::runtime_error("schaar quadrature: subdivision budget exhausted");
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2, budget) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2, budget);
}

ExtFloat adaptive_simpson(const Integrand& f, const ExtFloat& a, const ExtFloat& b,
                          double tol, int& budget) {
  const ExtFloat fa = f(a);
  const ExtFloat fm = f((a + b) / 2L);
  const ExtFloat fb = f(b);
  return adaptive_step(f, a, b, fa, fm, fb, simpson_rule(a, b, fa, fm, fb), tol, budget);
}

// Upper bound for the discarded left piece after x = e^u:
// |g(u)| <= e^{(2m+1)u} (|ln s| + |u| + 1) and
// Int_{-inf}^{U} e^{cu} (A + |u|) du = e^{cU} ((A + |U|)/c + 1/c^2) for U < 0.
double left_tail_bound(double U, double s, int m) {
  const double c = 2 * m + 1;
  const double A = std::fabs(std::log(s)) + 1.0;
  return std::exp(c * U) * ((A + std::fabs(U)) / c + 1.0 / (c * c));
}

// Upper bound for Int_T^inf x^{2m} 2 e^{-sx} dx, valid once s T >= ln 2
// (so |ln(1 - e^{-sx})| <= 2 e^{-sx} there).
double right_tail_bound(double T, double s, int m) {
  double fact_ratio = 1.0;  // (2m)! / (2m - j)!
  double sum = 0.0;
  for (int j = 0; j <= 2 * m; ++j) {
    sum += fact_ratio * std::pow(T, 2 * m - j) / std::pow(s, j + 1);
    fact_ratio *= 2 * m - j;
  }
  return 2.0 * std::exp(-s * T) * sum;
}

}  // namespace

ExtFloat expm1_recip_partial_fraction(const ExtFloat& x, long K) {
  if (x.is_zero()) throw std::domain_error("expm1_recip_partial_fraction: x must be nonzero");
  if (K < 0) throw std::invalid_argument("expm1_recip_partial_fraction: K must be >= 0");
  const int work = x.digits();
  const ExtFloat four_pi_sq = ExtFloat::pi(work) * ExtFloat::pi(work) * 4L;
  const ExtFloat x_sq = x * x;
  ExtFloat s = ExtFloat::of(1, work) / x - ExtFloat::of(ExactRational(1, 2), work);
  const ExtFloat two_x = x * 2L;
  for (long k = 1; k <= K; ++k)
    s = s + two_x / (x_sq + four_pi_sq * (k * k));
  return s;
}

ExtFloat schaar_remainder(const ExtFloat& a, int m, const QuadratureSpec& spec) {
  if (a.sign() <= 0) throw std::domain_error("schaar_remainder: a must be positive");
  if (m < 0) throw std::invalid_argument("schaar_remainder: m must be >= 0");
  if (!(spec.abs_tolerance > 0) || !(spec.split_point > 0) || spec.max_subdivisions < 1)
    throw std::invalid_argument("schaar_remainder: malformed quadrature spec");

  const double tol = spec.abs_tolerance;
  const int work = digits_for(tol) > a.digits() ? digits_for(tol) : a.digits();
  const ExtFloat aw = a.to_precision(work);
  const ExtFloat s_factor = ExtFloat::pi(work) * 2L * aw;  // 2 pi a
  const double s_d = s_factor.to_double();

  // Singular piece: x = e^u maps (0, split] to (-inf, ln split]; the cut
  // u_min certifies the discarded mass below tol/10.
  double u_min = std::log(spec.split_point) - 5.0;
  while (left_tail_bound(u_min, s_d, m) > tol / 10) u_min -= 5.0;

  const Integrand left = [&](const ExtFloat& u) {
    const ExtFloat eu = exp_ext(u);
    const ExtFloat num = exp_ext(u * (2 * m + 1));
    const ExtFloat den = ExtFloat::of(1, work) + exp_ext(u * 2L);
    return num / den * ln_one_minus_exp(s_factor * eu, work);
  };

  // Smooth piece on [split, T] with a certified exponential tail beyond T.
  double T = spec.tail_cut;
  if (T <= 0) {
    T = spec.split_point + 1.0;
    if (s_d * T < 1.0) T = 1.0 / s_d;
    while (right_tail_bound(T, s_d, m) > tol / 10) T *= 1.25;
  } else if (right_tail_bound(T, s_d, m) > tol / 10) {
    throw std::invalid_argument("schaar_remainder: tail_cut too small for abs_tolerance");
  }

  const Integrand right = [&](const ExtFloat& x) {
    const ExtFloat num = pow_int_ext(x, 2 * m);
    const ExtFloat den = ExtFloat::of(1, work) + x * x;
    return num / den * ln_one_minus_exp(s_factor * x, work);
  };

  int budget = spec.max_subdivisions;
  const ExtFloat split = ExtFloat::parse(std::to_string(spec.split_point), work);
  const ExtFloat I =
      adaptive_simpson(left, ExtFloat::parse(std::to_string(u_min), work),
                       ln_ext(split), 0.4 * tol, budget) +
      adaptive_simpson(right, split, ExtFloat::parse(std::to_string(T), work),
                       0.4 * tol, budget);

  const long sign = (m % 2 == 0) ? -1 : 1;  // -(-1)^m
  return I * sign / ExtFloat::pi(work);
}

ExtFloat schaar_log_gamma(const ExtFloat& a, int m, const QuadratureSpec& spec) {
  if (a.sign() <= 0) throw std::domain_error("schaar_log_gamma: a must be positive");
  const int work = digits_for(spec.abs_tolerance) > a.digits()
                       ? digits_for(spec.abs_tolerance)
                       : a.digits();
  const ExtFloat aw = a.to_precision(work);
  ExtFloat v = ln_ext(sqrt_ext(ExtFloat::pi(work) * 2L * aw)) + aw * (ln_ext(aw) - 1L);
  for (int k = 1; k <= m; ++k)
    v = v + ExtFloat::of(demoivre_coefficient(k), work) / pow_int_ext(aw, 2 * k - 1);
  return v + schaar_remainder(aw, m, spec);
}

}  // namespace stirling
