#include "stirling/extfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace stirling {

namespace {
constexpr double kLog2Of10 = 3.32192809488736234787;
}

mpfr_prec_t ExtFloat::bits_for(int digits) {
  if (digits < 1) throw std::invalid_argument("ExtFloat: precision must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 16;
}

ExtFloat::ExtFloat(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_zero(v_, 1);
}

ExtFloat::ExtFloat(const ExtFloat& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

ExtFloat::ExtFloat(ExtFloat&& other) noexcept : digits_(other.digits_) {
  v_[0] = other.v_[0];
  other.owned_ = false;
}

ExtFloat& ExtFloat::operator=(const ExtFloat& other) {
  if (this != &other) {
    if (owned_) mpfr_clear(v_);
    digits_ = other.digits_;
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    owned_ = true;
  }
  return *this;
}

ExtFloat& ExtFloat::operator=(ExtFloat&& other) noexcept {
  if (this != &other) {
    if (owned_) mpfr_clear(v_);
    digits_ = other.digits_;
    v_[0] = other.v_[0];
    owned_ = true;
    other.owned_ = false;
  }
  return *this;
}

ExtFloat::~ExtFloat() {
  if (owned_) mpfr_clear(v_);
}

ExtFloat ExtFloat::of(long value, int digits) {
  ExtFloat r(digits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

ExtFloat ExtFloat::of(const ExactRational& value, int digits) {
  ExtFloat r(digits);
  mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
  return r;
}

ExtFloat ExtFloat::parse(const std::string& text, int digits) {
  ExtFloat r(digits);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("ExtFloat::parse: malformed number '" + text + "'");
  return r;
}

ExtFloat ExtFloat::pi(int digits) {
  ExtFloat r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

ExtFloat ExtFloat::to_precision(int digits) const {
  ExtFloat r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double ExtFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

bool ExtFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

int ExtFloat::sign() const { return mpfr_sgn(v_); }

ExtFloat ExtFloat::operator-() const {
  ExtFloat r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
int join_digits(const ExtFloat& a, const ExtFloat& b) {
  return a.digits() > b.digits() ? a.digits() : b.digits();
}
}  // namespace

ExtFloat operator+(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(join_digits(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

ExtFloat operator-(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(join_digits(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

ExtFloat operator*(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(join_digits(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

ExtFloat operator/(const ExtFloat& a, const ExtFloat& b) {
  ExtFloat r(join_digits(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

ExtFloat operator+(const ExtFloat& a, long b) {
  ExtFloat r(a.digits());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator-(const ExtFloat& a, long b) {
  ExtFloat r(a.digits());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator*(const ExtFloat& a, long b) {
  ExtFloat r(a.digits());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator/(const ExtFloat& a, long b) {
  ExtFloat r(a.digits());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}

ExtFloat operator*(long a, const ExtFloat& b) { return b * a; }

bool operator<(const ExtFloat& a, const ExtFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
bool operator>(const ExtFloat& a, const ExtFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
bool operator<=(const ExtFloat& a, const ExtFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
bool operator>=(const ExtFloat& a, const ExtFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
bool operator==(const ExtFloat& a, const ExtFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

ExtFloat ln_ext(const ExtFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("ln_ext: argument must be positive");
  ExtFloat r(x.digits());
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

ExtFloat exp_ext(const ExtFloat& x) {
  ExtFloat r(x.digits());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

ExtFloat sqrt_ext(const ExtFloat& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt_ext: argument must be nonnegative");
  ExtFloat r(x.digits());
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

ExtFloat abs_ext(const ExtFloat& x) {
  ExtFloat r(x.digits());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

ExtFloat pow_int_ext(const ExtFloat& x, long e) {
  ExtFloat r(x.digits());
  mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

std::string to_decimal_string(const ExtFloat& x, int places) {
  if (places < 0) throw std::invalid_argument("to_decimal_string: places must be >= 0");
  // Guard-digit contract: the operand must carry at least `places` fractional
  // digits plus 5 guard digits beyond its integer part.
  long exp10 = 0;
  if (!x.is_zero()) {
    const mpfr_exp_t e2 = mpfr_get_exp(x.raw());
    exp10 = static_cast<long>(std::ceil(e2 / kLog2Of10));
  }
  const long int_digits = exp10 > 0 ? exp10 : 0;
  if (x.digits() < int_digits + places + 5)
    throw insufficient_precision("to_decimal_string: fewer than 5 guard digits at " +
                                 std::to_string(x.digits()) + " digit precision");

  const mpfr_prec_t work = ExtFloat::bits_for(static_cast<int>(int_digits + places) + 8);
  mpfr_t scaled, p10;
  mpfr_init2(scaled, work);
  mpfr_init2(p10, work);
  mpfr_ui_pow_ui(p10, 10, static_cast<unsigned long>(places), MPFR_RNDN);
  mpfr_mul(scaled, x.raw(), p10, MPFR_RNDN);
  mpfr_rint(scaled, scaled, MPFR_RNDN);  // ties to even
  mpz_class units;
  mpfr_get_z(units.get_mpz_t(), scaled, MPFR_RNDN);
  mpfr_clear(scaled);
  mpfr_clear(p10);

  const bool neg = units < 0;
  std::string digits = ExactInteger(abs(units)).get_str();
  if (static_cast<int>(digits.size()) < places + 1)
    digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (neg) out += '-';
  if (places == 0) {
    out += digits;
  } else {
    out += digits.substr(0, digits.size() - places);
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

std::string to_string_sig(const ExtFloat& x, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  std::vector<char> buf(sig_digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", sig_digits, x.raw());
  return std::string(buf.data());
}

ExtFloat ln_sqrt_2pi(int digits) {
  ExtFloat two_pi = ExtFloat::pi(digits + 5) * 2L;
  return (ln_ext(two_pi) / 2L).to_precision(digits);
}

}  // namespace stirling
