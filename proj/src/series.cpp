#include "stirling/series.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "stirling/coefficients.hpp"

namespace stirling {

namespace {

std::mutex coeff_mutex;
std::vector<ExactRational> printed_cache;   // p_1, p_2, ...
std::vector<ExactRational> demoivre_cache;  // d_1, d_2, ...

ExactRational cached_coefficient(SeriesForm form, int k) {
  std::lock_guard<std::mutex> lock(coeff_mutex);
  if (form == SeriesForm::stirling_z) {
    if (static_cast<int>(printed_cache.size()) < k) {
      const auto a = solve_stirling_system(k);
      printed_cache.clear();
      for (int i = 1; i <= k; ++i)
        printed_cache.push_back(a[i - 1] * pow_rational(ExactRational(1, 2), 2 * i - 1));
    }
    return printed_cache[k - 1];
  }
  while (static_cast<int>(demoivre_cache.size()) < k)
    demoivre_cache.push_back(demoivre_coefficient(demoivre_cache.size() + 1));
  return demoivre_cache[k - 1];
}

int work_digits(int precision) { return 2 * precision + 10; }

void check_term_index(int k) {
  if (k < 1 || k > SeriesTermStream::kMaxTerm)
    throw std::invalid_argument("series term index out of range (1..200)");
}

// Closed (non-series) part of either form at working precision.
ExtFloat closed_part(SeriesForm form, const ExtFloat& n, int work) {
  const ExtFloat nw = n.to_precision(work);
  const ExtFloat half = ExtFloat::of(ExactRational(1, 2), work);
  if (form == SeriesForm::demoivre_n)
    return (nw + half) * ln_ext(nw) - nw + ln_sqrt_2pi(work);
  const ExtFloat z = nw + half;
  return z * ln_ext(z) - z + ln_sqrt_2pi(work);
}

ExtFloat term_at(SeriesForm form, const ExtFloat& arg, int k) {
  check_term_index(k);
  const ExactRational c = cached_coefficient(form, k);
  return ExtFloat::of(c, arg.digits()) / pow_int_ext(arg, 2 * k - 1);
}

}  // namespace

SeriesTermStream::SeriesTermStream(SeriesForm form, ExtFloat argument)
    : form_(form), argument_(std::move(argument)) {
  if (argument_.sign() <= 0)
    throw std::domain_error("SeriesTermStream: argument must be positive");
}

ExtFloat SeriesTermStream::term(int k) const { return term_at(form_, argument_, k); }

ExtFloat SeriesTermStream::magnitude(int k) const { return abs_ext(term(k)); }

namespace {

SeriesValue eval_form(SeriesForm form, const ExtFloat& n, int m, int precision) {
  if (n.sign() <= 0) throw std::domain_error("series evaluation: n must be positive");
  if (m < 0 || m >= SeriesTermStream::kMaxTerm)
    throw std::invalid_argument("series evaluation: m out of range");
  const int work = work_digits(precision);
  const ExtFloat nw = n.to_precision(work);
  const ExtFloat arg =
      form == SeriesForm::demoivre_n ? nw : nw + ExtFloat::of(ExactRational(1, 2), work);
  ExtFloat v = closed_part(form, nw, work);
  for (int k = 1; k <= m; ++k) v = v + term_at(form, arg, k);
  const ExtFloat bound = abs_ext(term_at(form, arg, m + 1));
  return {v.to_precision(precision), bound.to_precision(precision)};
}

}  // namespace

SeriesValue eval_demoivre(const ExtFloat& n, int m, int precision) {
  return eval_form(SeriesForm::demoivre_n, n, m, precision);
}

SeriesValue eval_stirling(const ExtFloat& n, int m, int precision) {
  return eval_form(SeriesForm::stirling_z, n, m, precision);
}

FValue eval_F(const ExtFloat& z, const ExtFloat& h, int K, int precision) {
  if (z.sign() <= 0 || h.sign() <= 0)
    throw std::domain_error("eval_F: z and h must be positive");
  if (K < 0 || K > SeriesTermStream::kMaxTerm)
    throw std::invalid_argument("eval_F: K out of range");
  const int work = work_digits(precision);
  const ExtFloat zw = z.to_precision(work);
  const ExtFloat hw = h.to_precision(work);
  const ExtFloat ratio = hw / zw;
  ExtFloat v = (zw * ln_ext(zw) - zw) / (hw * 2L);
  ExtFloat prev_mag(work);
  bool past_optimal = false;
  const auto a = K > 0 ? solve_stirling_system(K) : std::vector<ExactRational>{};
  for (int k = 1; k <= K; ++k) {
    const ExtFloat t = ExtFloat::of(a[k - 1], work) * pow_int_ext(ratio, 2 * k - 1);
    if (k == K && K >= 2 && abs_ext(t) > prev_mag) past_optimal = true;
    prev_mag = abs_ext(t);
    v = v + t;
  }
  return {v.to_precision(precision), past_optimal};
}

SumValue sum_log_arith_progression(const ExtFloat& x, const ExtFloat& h,
                                   const ExtFloat& z, int K, int precision) {
  if (h.sign() <= 0) throw std::domain_error("sum_log_arith_progression: h must be positive");
  if ((x + h).sign() <= 0)
    throw std::domain_error("sum_log_arith_progression: x + h must be positive");
  const int work = work_digits(precision);
  const ExtFloat xw = x.to_precision(work);
  const ExtFloat hw = h.to_precision(work);
  const ExtFloat zw = z.to_precision(work);

  const ExtFloat steps = (zw - xw) / (hw * 2L);
  const double sd = steps.to_double();
  const long j = static_cast<long>(sd + 0.5);
  if (j < 1 || std::abs(sd - static_cast<double>(j)) > 1e-9)
    throw std::invalid_argument(
        "sum_log_arith_progression: (z - x)/(2h) must be a positive integer");

  // Asymptotic-regime gate: the series in F is meaningless at small x.
  const bool asymptotic = K > 0 && xw.sign() > 0 && (xw / hw).to_double() >= 4.0 * K;
  if (asymptotic) {
    const ExtFloat v = eval_F(zw, hw, K, precision).value - eval_F(xw, hw, K, precision).value;
    return {v.to_precision(precision), SumMethod::telescoped};
  }
  ExtFloat s(work);
  for (long i = 1; i <= j; ++i) s = s + ln_ext(xw + hw * (2 * i - 1));
  return {s.to_precision(precision), SumMethod::direct};
}

TruncationReport truncation_report(const ExtFloat& n, int m_max, int precision) {
  if (n.sign() <= 0) throw std::domain_error("truncation_report: n must be positive");
  if (m_max < 2) throw std::invalid_argument("truncation_report: m_max must be >= 2");
  if (m_max >= SeriesTermStream::kMaxTerm) m_max = SeriesTermStream::kMaxTerm - 1;

  const int work = work_digits(precision);
  const ExtFloat nw = n.to_precision(work);

  TruncationReport r;
  r.argument = nw.to_precision(precision);

  ExtFloat sum = closed_part(SeriesForm::demoivre_n, nw, work);
  int m_star = 1;
  ExtFloat best(work);
  for (int k = 1; k <= m_max; ++k) {
    const ExtFloat t = term_at(SeriesForm::demoivre_n, nw, k);
    const ExtFloat mag = abs_ext(t);
    sum = sum + t;
    r.magnitudes.push_back(mag.to_precision(precision));
    r.partial_sums.push_back(sum.to_precision(precision));
    if (k == 1 || mag < best) {  // ties resolve to the smaller index
      best = mag;
      m_star = k;
    }
  }
  r.m_star = m_star;
  r.envelope_bound = abs_ext(term_at(SeriesForm::demoivre_n, nw, m_star + 1)).to_precision(precision);

  mpfr_t pin;
  mpfr_init2(pin, mpfr_get_prec(nw.raw()));
  mpfr_const_pi(pin, MPFR_RNDN);
  mpfr_mul(pin, pin, nw.raw(), MPFR_RNDN);
  mpfr_floor(pin, pin);
  r.pi_n_index = static_cast<int>(mpfr_get_si(pin, MPFR_RNDN));
  mpfr_clear(pin);
  return r;
}

ExtFloat delta_correction(unsigned long n, int precision) {
  if (n < 1) throw std::invalid_argument("delta_correction: n must be >= 1");
  const int work = work_digits(precision);
  const ExtFloat nw = ExtFloat::of(static_cast<long>(n), work);
  const ExtFloat closed = closed_part(SeriesForm::demoivre_n, nw, work);
  return (log_factorial_direct(n, work) - closed).to_precision(precision);
}

std::vector<ExtFloat> constant_series_partials(int m_max, int precision) {
  if (m_max < 1) throw std::invalid_argument("constant_series_partials: m_max must be >= 1");
  const int work = work_digits(precision);
  std::vector<ExtFloat> out;
  ExtFloat s = ExtFloat::of(1, work);
  for (int k = 1; k <= m_max; ++k) {
    s = s - ExtFloat::of(demoivre_coefficient(k), work);
    out.push_back(s.to_precision(precision));
  }
  return out;
}

ExtFloat recurring_series_partial(int k, int n, int R, int precision) {
  if (k < 2) throw std::invalid_argument("recurring_series_partial: k must be >= 2");
  if (n < 2) throw std::invalid_argument("recurring_series_partial: n must be >= 2");
  if (R < 0) throw std::invalid_argument("recurring_series_partial: R must be >= 0");
  const int work = work_digits(precision);
  const ExtFloat x = ExtFloat::of(ExactRational(n - 1, n), work);

  ExtFloat sum(work);
  ExtFloat xpow = ExtFloat::of(1, work);
  ExactRational binom = 1;  // C(r+k, k), updated incrementally
  for (int r = 0; r <= R; ++r) {
    if (r == 0)
      binom = binomial(k, k);
    else
      binom *= ExactRational(r + k) / ExactRational(r);
    const ExactRational c =
        binom / ExactRational(ExactInteger(r + k) * (r + k - 1));
    sum = sum + ExtFloat::of(c, work) * xpow;
    xpow = xpow * x;
  }
  return sum.to_precision(precision);
}

ExtFloat log_factorial_direct(unsigned long n, int precision) {
  const int work = precision + 10;
  ExtFloat s(work);
  for (unsigned long i = 2; i <= n; ++i)
    s = s + ln_ext(ExtFloat::of(static_cast<long>(i), work));
  return s.to_precision(precision);
}

}  // namespace stirling
