#pragma once

#include <vector>

#include "stirling/extfloat.hpp"
#include "stirling/rational.hpp"

namespace stirling {

enum class SeriesForm { stirling_z, demoivre_n };

// Lazily generated signed correction terms of either series form:
//   stirling_z:  t_k = p_k / z^{2k-1}        (z = n + 1/2)
//   demoivre_n:  t_k = d_k / n^{2k-1}
// Terms are cut off at k = 200; past optimal truncation they only serve
// divergence demonstrations.
class SeriesTermStream {
 public:
  static constexpr int kMaxTerm = 200;

  SeriesTermStream(SeriesForm form, ExtFloat argument);

  SeriesForm form() const { return form_; }
  const ExtFloat& argument() const { return argument_; }

  // k >= 1. Signed term t_k.
  ExtFloat term(int k) const;
  ExtFloat magnitude(int k) const;

 private:
  SeriesForm form_;
  ExtFloat argument_;
};

struct SeriesValue {
  ExtFloat value;  // truncated series evaluation
  ExtFloat bound;  // magnitude of the first omitted term
};

// (n+1/2) ln n - n + ln sqrt(2pi) + sum_{k=1}^{m} d_k / n^{2k-1}.
// The divergent constant bracket of the derivation is replaced by the
// Wallis-determined ln sqrt(2pi); the bracket itself is only exposed
// through constant_series_partials.
SeriesValue eval_demoivre(const ExtFloat& n, int m, int precision);

// z ln z - z + ln sqrt(2pi) + sum_{k=1}^{m} p_k / z^{2k-1},  z = n + 1/2.
SeriesValue eval_stirling(const ExtFloat& n, int m, int precision);

struct FValue {
  ExtFloat value;
  bool past_optimal = false;  // |t_K| > |t_{K-1}| for the requested K
};

// Finite integral F(z) = (z ln z - z)/(2h) + sum_{k=1}^{K} a_{2k-1} h^{2k-1}/z^{2k-1}.
FValue eval_F(const ExtFloat& z, const ExtFloat& h, int K, int precision);

enum class SumMethod { telescoped, direct };

struct SumValue {
  ExtFloat value;
  SumMethod method;
};

// S = ln(x+h) + ln(x+3h) + ... + ln(z-h), an arithmetic progression of
// step 2h.  Uses F(z) - F(x) when both endpoints are in the asymptotic
// regime (x/h >= 4K), otherwise falls back to direct summation.
SumValue sum_log_arith_progression(const ExtFloat& x, const ExtFloat& h,
                                   const ExtFloat& z, int K, int precision);

struct TruncationReport {
  ExtFloat argument;
  std::vector<ExtFloat> magnitudes;    // |t_k|, k = 1..m_max
  std::vector<ExtFloat> partial_sums;  // closed part + sum of first k terms
  int m_star = 0;                      // argmin |t_k| (ties to smaller index)
  int pi_n_index = 0;                  // floor(pi * n)
  ExtFloat envelope_bound;             // |t_{m_star + 1}|
};

// Term-magnitude study of the demoivre_n stream at argument n.
TruncationReport truncation_report(const ExtFloat& n, int m_max, int precision);

// delta_n = ln n! - [(n+1/2) ln n - n + ln sqrt(2pi)], with ln n! from the
// direct summation oracle.
ExtFloat delta_correction(unsigned long n, int precision);

// Partial sums s_m = 1 - sum_{k=1}^{m} d_k of the divergent constant
// series; the enveloping partials straddle ln sqrt(2pi) before diverging.
std::vector<ExtFloat> constant_series_partials(int m_max, int precision = 30);

// Partial sum sum_{r=0}^{R} [C(r+k, k) / ((r+k)(r+k-1))] x^r with
// x = 1 - 1/n; converges to n^{k-1}/(k(k-1)).
ExtFloat recurring_series_partial(int k, int n, int R, int precision);

// ln n! by direct summation of ln 2 + ... + ln n (the exact oracle route).
ExtFloat log_factorial_direct(unsigned long n, int precision);

}  // namespace stirling
