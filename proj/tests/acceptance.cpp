// Acceptance gate: one line per criterion, PASS or FAIL, with detail on
// failure.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "stirling/bernoulli.hpp"
#include "stirling/coefficients.hpp"
#include "stirling/histtable.hpp"
#include "stirling/schaar.hpp"
#include "stirling/series.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s - criterion %2d: %s\n", ok ? "PASS" : "FAIL", index, name.c_str());
  if (!ok && !detail.empty()) std::printf("       %s\n", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = solve_stirling_system(20);
  bool ok = a.size() == 20;
  for (int k = 1; ok && k <= 20; ++k) ok = closed_form_stirling(k) == a[k - 1];
  const ExactRational first_five[] = {{-1, 12}, {7, 360}, {-31, 1260},
                                      {127, 1680}, {-511, 1188}};
  for (int k = 0; ok && k < 5; ++k) ok = a[k] == first_five[k];
  const double dt = seconds_since(t0);
  report(1, "odd coefficients: system equals closed form (k = 1..20)",
         ok && dt < 1.0, "runtime " + std::to_string(dt) + " s");
}

void criterion_2() {
  const bool ok = printed_coefficient(1) == ExactRational(-1, 24) &&
                  printed_coefficient(2) == ExactRational(7, 2880) &&
                  printed_coefficient(3) == ExactRational(-31, 40320);
  report(2, "printed coefficients -1/(2*12), 7/(8*360), -31/(32*1260)", ok);
}

void criterion_3() {
  const std::string got = to_decimal_string(base10_modulus(70) * ln_sqrt_2pi(70), 12);
  report(3, "base-10 constant rounds to 0.399089934179", got == "0.399089934179",
         "got " + got);
}

void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto generated = generate_table(10, 200, 10, 14);
  const double dt = seconds_since(t0);
  const auto& published = historical_table(Edition::y1756);
  bool ok = generated.size() == published.size() && dt < 5.0;
  std::string detail = "runtime " + std::to_string(dt) + " s";
  for (std::size_t i = 0; ok && i < generated.size(); ++i) {
    if (generated[i].digits != published[i].digits) {
      ok = false;
      detail = "first mismatch at n = " + std::to_string(generated[i].n) +
               ": computed " + generated[i].digits + ", published " +
               published[i].digits;
    }
  }
  report(4, "regenerated table matches the 1756 column byte-for-byte", ok, detail);
  if (!ok) {
    std::printf("       per-row delta (computed - published, units of 1e-14):\n");
    for (const auto& d : compare_tables(generated, published))
      std::printf("         n=%3lu  %s\n", d.n, to_string(d.delta).c_str());
  }
}

void criterion_5() {
  const auto& e1730 = historical_table(Edition::y1730);
  const auto& e1756 = historical_table(Edition::y1756);

  // the three recurring corruptions, with the row-180 offset taken from the
  // printed digits themselves (-9 units in the tenth place)
  const std::vector<Corruption> edits = {
      {10, DigitEdit::add(ExactRational(1, 100000))},
      {80, DigitEdit::replace(7, '1')},
      {180, DigitEdit::add(ExactRational(-9, 10000000000L))},
  };
  const auto injected = inject_errors(e1756, edits);
  bool ok = true;
  std::string detail;
  for (int i = 0; i <= 17; ++i) {
    if (injected[i].digits != e1730[i].digits) {
      ok = false;
      detail = "row " + std::to_string(injected[i].n) + " not reproduced";
      break;
    }
  }

  const auto diffs = compare_tables(e1730, e1756);
  const std::vector<DiffTerm> fifth = {{1, 5}};
  const std::vector<DiffTerm> seventh = {{1, 5}, {-6, 7}};
  const std::vector<DiffTerm> row180 = {{1, 5}, {-6, 7}, {-9, 10}};
  const std::vector<DiffTerm> tail = {{1, 5}, {-6, 7}, {27, 10}};
  for (int i = 0; i <= 6 && ok; ++i) ok = diffs[i].classification == fifth;
  for (int i = 7; i <= 16 && ok; ++i) ok = diffs[i].classification == seventh;
  if (ok) ok = diffs[17].classification == row180;
  // documented mismatch mode: the tail carries the transposition signature
  // +27e-10, which no additive propagation of the row-180 offset produces
  if (ok)
    ok = diffs[18].classification == tail && diffs[19].classification == tail &&
         injected[18].digits != e1730[18].digits &&
         injected[19].digits != e1730[19].digits;
  report(5, "error injection reproduces 1730 rows 10-180 and the diff column",
         ok, detail);
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned long n = 1; n <= 20 && ok; ++n) {
    const ExtFloat nf = ExtFloat::of(static_cast<long>(n), 40);
    const ExtFloat exact = log_factorial_direct(n, 50);
    const int m_star = truncation_report(nf, 60, 30).m_star;
    const int m_hi = std::min(10, m_star - 1);
    SeriesTermStream stream(SeriesForm::demoivre_n, ExtFloat::of(static_cast<long>(n), 50));
    for (int m = 0; m <= m_hi && ok; ++m) {
      const SeriesValue v = eval_demoivre(nf, m, 40);
      const ExtFloat next = stream.term(m + 1);
      const double signed_err =
          (exact - v.value).to_double() * (next.sign() >= 0 ? 1.0 : -1.0);
      if (!(signed_err > 0 && signed_err < std::fabs(next.to_double()))) {
        ok = false;
        detail = "n = " + std::to_string(n) + ", m = " + std::to_string(m);
      }
    }
  }
  const double dt = seconds_since(t0);
  report(6, "remainder is enveloped by the first omitted term", ok && dt < 5.0,
         detail.empty() ? "runtime " + std::to_string(dt) + " s" : detail);
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  for (long n = 1; n <= 8; ++n) {
    const TruncationReport r = truncation_report(ExtFloat::of(n, 30), 60, 30);
    if (std::abs(r.m_star - r.pi_n_index) > 2) {
      ok = false;
      detail += "n=" + std::to_string(n) + " m*=" + std::to_string(r.m_star) +
                " floor(pi n)=" + std::to_string(r.pi_n_index) + " ";
    }
  }
  report(7, "optimal truncation index sits within 2 of floor(pi n)", ok, detail);
}

void criterion_8() {
  bool ok = true;
  for (int k = 5; k < 15 && ok; ++k)
    ok = abs(demoivre_coefficient(k + 1)) > abs(demoivre_coefficient(k));
  const auto s = constant_series_partials(4, 30);
  const double expected[] = {0.916667, 0.919444, 0.918651, 0.919246};
  for (int i = 0; i < 4 && ok; ++i)
    ok = std::fabs(s[i].to_double() - expected[i]) < 1e-6;
  const double c = 0.9189385332;
  if (ok)
    ok = s[0].to_double() < c && c < s[1].to_double() && s[2].to_double() < c &&
         c < s[3].to_double();
  report(8, "constant series: enveloping partials, then term growth", ok);
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const PiSweepResult sweep = pi_bracket_sweep(10000, 20);
  const WallisBracket b100 = pi_bracket(100, 20);
  const double w100 = (b100.pi_high - b100.pi_low).to_double();
  const ConstantBracket cb = constant_bracket(1000, 25, 1);
  const double c_ref = 0.91893853320467;
  const double cw = (cb.c_high - cb.c_low).to_double();
  const double dt = seconds_since(t0);
  const bool ok = sweep.all_contain && w100 < 1e-2 &&
                  cb.c_low.to_double() < c_ref && c_ref < cb.c_high.to_double() &&
                  cw < 3e-4 && dt < 10.0;
  report(9, "Wallis brackets: pi containment to n = 10^4, constant to 3e-4",
         ok, "widths " + std::to_string(w100) + ", " + std::to_string(cw) +
                 "; runtime " + std::to_string(dt) + " s");
}

void criterion_10() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (long a : {1L, 2L, 5L, 10L}) {
    const ExtFloat exact = log_factorial_direct(static_cast<unsigned long>(a), 40);
    for (int m = 0; m <= 4 && ok; ++m) {
      const double err =
          (schaar_log_gamma(ExtFloat::of(a, 30), m) - exact).to_double();
      if (std::fabs(err) >= 1e-8) {
        ok = false;
        detail = "a = " + std::to_string(a) + ", m = " + std::to_string(m);
      }
    }
  }
  if (ok) {
    // ln Gamma(7/2) = ln(15 sqrt(pi)/8)
    const ExtFloat ref = ln_ext(ExtFloat::of(15, 60) * sqrt_ext(ExtFloat::pi(60)) / 8L);
    const double err =
        (schaar_log_gamma(ExtFloat::parse("2.5", 40), 2) - ref).to_double();
    if (std::fabs(err) >= 1e-8) {
      ok = false;
      detail = "half-integer check, err " + std::to_string(err);
    }
  }
  const double dt = seconds_since(t0);
  report(10, "Schaar identity holds to 1e-8 across a and m", ok && dt < 30.0,
         detail.empty() ? "runtime " + std::to_string(dt) + " s" : detail);
}

void criterion_11() {
  const ExtFloat one = ExtFloat::of(1, 30);
  const ExtFloat target = one / (exp_ext(one) - 1L);
  const double err = (expm1_recip_partial_fraction(one, 100000) - target).to_double();
  report(11, "partial fraction sum reaches 1/(e-1) within 1e-5",
         std::fabs(err) < 1e-5, "err " + std::to_string(err));
}

void criterion_12() {
  bool ok = true;
  std::string detail;
  for (unsigned p = 1; p <= 10 && ok; ++p) {
    ExactRational brute(0);
    for (unsigned long k = 1; k <= 100; ++k) {
      brute += pow_rational(ExactRational(static_cast<long>(k)), p);
      if (!(faulhaber_sum(p, k) == brute)) {
        ok = false;
        detail = "faulhaber p=" + std::to_string(p) + " m=" + std::to_string(k);
        break;
      }
    }
  }
  for (int k : {2, 3, 4}) {
    for (int n : {2, 5, 10}) {
      if (!ok) break;
      const int R = 600;
      const ExtFloat partial = recurring_series_partial(k, n, R, 40);
      ExactRational limit(1);
      for (int i = 0; i < k - 1; ++i) limit *= n;
      limit /= ExactRational(ExactInteger(k) * (k - 1));
      // geometric tail bound from the eventually monotone term ratio
      const double x = 1.0 - 1.0 / n;
      const double q = x * (R + k + 2.0) / (R + 2.0);
      double log_t = std::lgamma(R + 1.0 + k + 1) - std::lgamma(R + 2.0) -
                     std::lgamma(k + 1.0) + (R + 1) * std::log(x) -
                     std::log((R + 1.0 + k) * (R + k));
      const double bound = std::exp(log_t) / (1.0 - q);
      const double err = (partial - ExtFloat::of(limit, 40)).to_double();
      if (!(std::fabs(err) <= bound)) {
        ok = false;
        detail = "recurring series k=" + std::to_string(k) + " n=" + std::to_string(n);
      }
    }
  }
  if (ok) {
    const ExtFloat h = ExtFloat::parse("0.5", 40);
    const ExtFloat defect = eval_F(ExtFloat::of(50, 40), h, 4, 30).value -
                            eval_F(ExtFloat::of(49, 40), h, 4, 30).value -
                            ln_ext(ExtFloat::parse("49.5", 40));
    if (!(std::fabs(defect.to_double()) < 1e-12)) {
      ok = false;
      detail = "telescoping defect " + std::to_string(defect.to_double());
    }
  }
  report(12, "derivation identities: Faulhaber, recurring series, telescoping",
         ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures;
}
