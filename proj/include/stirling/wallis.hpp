#pragma once

#include "stirling/extfloat.hpp"
#include "stirling/rational.hpp"

namespace stirling {

// Rigorous bracket data for the n-th Wallis partial product.
// H_n = (pi/2) * theta_n with sqrt(1 + 1/(2n)) < theta_n < sqrt(1 + 1/(2n-1)),
// so pi is pinched between 2 H_n / theta_high and 2 H_n / theta_low.
struct WallisBracket {
  unsigned long n = 0;
  ExactRational H_n;
  ExtFloat theta_low, theta_high;
  ExtFloat pi_low, pi_high;
};

// H_n = 2^{4n}/(2n) * ((n!)^2 / (2n)!)^2, exact.
ExactRational wallis_factorial_form(unsigned long n);

// The same quantity as the running product (1/(2n)) * [2/1 * 4/3 * ... * 2n/(2n-1)]^2,
// accumulated term by term; equals wallis_factorial_form exactly.
ExactRational wallis_running_product(unsigned long n);

WallisBracket pi_bracket(unsigned long n, int precision);

struct PiSweepResult {
  bool all_contain = false;     // pi inside every bracket for n = 1..n_max
  double min_margin = 0.0;      // smallest distance from pi to a bracket edge
  double width_at_n_max = 0.0;
};

// Containment sweep over n = 1..n_max with an incrementally updated H_n.
PiSweepResult pi_bracket_sweep(unsigned long n_max, int precision);

struct ConstantBracket {
  ExtFloat c_low, c_high;
  ExtFloat midpoint() const { return (c_low + c_high) / 2L; }
};

// Rigorous bracket on C = ln sqrt(2pi) from the identity
//   C = ln sqrt(2pi theta_n) + delta_{2n} - 2 delta_n,
// combining the theta inequalities with enveloping bounds on the delta
// corrections.  envelope_terms = 1 uses 0 < delta_m < 1/(12m); 2 adds the
// second enveloping partial, 1/(12m) - 1/(360m^3) < delta_m, which tightens
// the width from O(1/n) to O(1/n^2).
ConstantBracket constant_bracket(unsigned long n, int precision, int envelope_terms = 1);

}  // namespace stirling
