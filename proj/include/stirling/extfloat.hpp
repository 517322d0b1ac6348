#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "stirling/rational.hpp"

namespace stirling {

// Raised when to_decimal_string is asked for more places than the operand's
// working precision can certify (fewer than 5 guard digits).
class insufficient_precision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extended-precision real with an explicit precision parameter measured in
// significant decimal digits.  Values are immutable after construction;
// every operation returns a fresh value carrying the larger of the operand
// precisions, so precision is never silently reduced.
class ExtFloat {
 public:
  explicit ExtFloat(int digits = 30);
  ExtFloat(const ExtFloat& other);
  ExtFloat(ExtFloat&& other) noexcept;
  ExtFloat& operator=(const ExtFloat& other);
  ExtFloat& operator=(ExtFloat&& other) noexcept;
  ~ExtFloat();

  static ExtFloat of(long value, int digits);
  static ExtFloat of(const ExactRational& value, int digits);
  static ExtFloat parse(const std::string& text, int digits);
  static ExtFloat pi(int digits);

  int digits() const { return digits_; }
  // Re-rounds to a new precision (used to widen before a cancellation-prone
  // pipeline or to round a guarded result down to its target).
  ExtFloat to_precision(int digits) const;

  double to_double() const;
  bool is_zero() const;
  int sign() const;  // -1, 0, +1

  ExtFloat operator-() const;
  friend ExtFloat operator+(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator-(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator*(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator/(const ExtFloat& a, const ExtFloat& b);
  friend ExtFloat operator+(const ExtFloat& a, long b);
  friend ExtFloat operator-(const ExtFloat& a, long b);
  friend ExtFloat operator*(const ExtFloat& a, long b);
  friend ExtFloat operator/(const ExtFloat& a, long b);
  friend ExtFloat operator*(long a, const ExtFloat& b);

  friend bool operator<(const ExtFloat& a, const ExtFloat& b);
  friend bool operator>(const ExtFloat& a, const ExtFloat& b);
  friend bool operator<=(const ExtFloat& a, const ExtFloat& b);
  friend bool operator>=(const ExtFloat& a, const ExtFloat& b);
  friend bool operator==(const ExtFloat& a, const ExtFloat& b);

  friend ExtFloat ln_ext(const ExtFloat& x);
  friend ExtFloat exp_ext(const ExtFloat& x);
  friend ExtFloat sqrt_ext(const ExtFloat& x);
  friend ExtFloat abs_ext(const ExtFloat& x);
  friend ExtFloat pow_int_ext(const ExtFloat& x, long e);

  // Fixed-point decimal representation, correctly rounded half-to-even.
  friend std::string to_decimal_string(const ExtFloat& x, int places);
  // Shortest-faithful scientific/positional form with the given significant
  // digit count (CLI output).
  friend std::string to_string_sig(const ExtFloat& x, int sig_digits);

  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t bits_for(int digits);
  mpfr_t v_;
  int digits_;
  bool owned_ = true;
};

ExtFloat ln_ext(const ExtFloat& x);
ExtFloat exp_ext(const ExtFloat& x);
ExtFloat sqrt_ext(const ExtFloat& x);
ExtFloat abs_ext(const ExtFloat& x);
ExtFloat pow_int_ext(const ExtFloat& x, long e);
std::string to_decimal_string(const ExtFloat& x, int places);
std::string to_string_sig(const ExtFloat& x, int sig_digits);

// log(sqrt(2*pi)) at the requested precision.
ExtFloat ln_sqrt_2pi(int digits);

}  // namespace stirling
