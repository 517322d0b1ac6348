#include "stirling/rational.hpp"

#include <stdexcept>

namespace stirling {

ExactRational binomial(unsigned long n, unsigned long k) {
  if (k > n) return ExactRational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return ExactRational(r);
}

ExactInteger factorial_int(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExactRational pow_rational(const ExactRational& base, long e) {
  if (e == 0) return ExactRational(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0^negative");
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
  ExactRational r(num, den);
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

ExactRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    ExactRational q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return q;
  }
  const auto point = text.find('.');
  if (point == std::string::npos) {
    ExactRational q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("parse_rational: malformed integer '" + text + "'");
    return q;
  }
  // decimal literal: digits.digits -> scaled integer over a power of ten
  std::string digits = text.substr(0, point) + text.substr(point + 1);
  const std::size_t places = text.size() - point - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
  ExactInteger num;
  if (num.set_str(digits, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
  ExactInteger den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const ExactRational& q) {
  return q.get_str();
}

}  // namespace stirling
