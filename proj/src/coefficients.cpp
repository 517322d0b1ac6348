#include "stirling/coefficients.hpp"

#include <stdexcept>

#include "stirling/bernoulli.hpp"

namespace stirling {

std::vector<ExactRational> solve_stirling_system(int K, bool as_published) {
  if (K < 1) throw std::invalid_argument("solve_stirling_system: K must be >= 1");
  std::vector<ExactRational> a;  // a[k] = a_{2k+1}
  a.reserve(K);
  for (int n = 1; n <= K; ++n) {
    ExactRational rhs(-1, ExactInteger(2 * n + 1) * (4 * n));
    if (as_published && n == 4) rhs = ExactRational(-1, 9 * 15);
    ExactRational acc(0);
    for (int k = 0; k + 1 < n; ++k) acc += binomial(2 * n - 1, 2 * k) * a[k];
    // leading coefficient C(2n-1, 2n-2) = 2n-1
    a.push_back((rhs - acc) / ExactRational(2 * n - 1));
  }
  return a;
}

std::vector<ExactRational> solve_even_system(int K) {
  if (K < 1) throw std::invalid_argument("solve_even_system: K must be >= 1");
  std::vector<ExactRational> a;  // a[k] = a_{2k+2}
  a.reserve(K);
  for (int n = 1; n <= K; ++n) {
    ExactRational acc(0);
    for (int k = 0; k + 1 < n; ++k) acc += binomial(2 * n, 2 * k + 1) * a[k];
    // leading coefficient C(2n, 2n-1) = 2n
    a.push_back(-acc / ExactRational(2 * n));
  }
  return a;
}

ExactRational demoivre_coefficient(int k) {
  if (k < 1) throw std::invalid_argument("demoivre_coefficient: k must be >= 1");
  return bernoulli_number(2 * k) / ExactRational(ExactInteger(2 * k) * (2 * k - 1));
}

ExactRational closed_form_stirling(int k) {
  if (k < 1) throw std::invalid_argument("closed_form_stirling: k must be >= 1");
  ExactInteger two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * k - 1));
  return ExactRational(1 - two_pow) * demoivre_coefficient(k);
}

ExactRational printed_coefficient(int k) {
  if (k < 1) throw std::invalid_argument("printed_coefficient: k must be >= 1");
  const ExactRational a = solve_stirling_system(k).back();
  return a * pow_rational(ExactRational(1, 2), 2 * k - 1);
}

ExactRational printed_coefficient_as_published(int k) {
  const ExactRational p = printed_coefficient(k);
  return p > 0 ? -p : p;
}

ExtFloat base10_modulus(int digits) {
  if (digits < 14) throw std::invalid_argument("base10_modulus: precision must be >= 14 digits");
  const int work = 2 * digits + 10;
  const ExtFloat ten = ExtFloat::of(10, work);
  return (ExtFloat::of(1, work) / ln_ext(ten)).to_precision(digits);
}

CoefficientTable make_coefficient_table(int K) {
  CoefficientTable t;
  t.K = K;
  t.stirling_a = solve_stirling_system(K);
  for (int k = 1; k <= K; ++k) {
    t.demoivre_d.push_back(demoivre_coefficient(k));
    t.printed.push_back(t.stirling_a[k - 1] * pow_rational(ExactRational(1, 2), 2 * k - 1));
  }
  return t;
}

}  // namespace stirling
