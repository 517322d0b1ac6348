#pragma once

#include "stirling/extfloat.hpp"

namespace stirling {

struct QuadratureSpec {
  double abs_tolerance = 1e-9;
  double split_point = 1.0;   // singular substitution below, direct rule above
  double tail_cut = 0.0;      // 0 = choose automatically (tail bound <= tol/10)
  int max_subdivisions = 20000;
};

// Partial sum of the cotangent partial-fraction identity
//   1/(e^x - 1) = 1/x - 1/2 + sum_{k>=1} 2x/(x^2 + 4 k^2 pi^2),
// truncated after K terms; the tail is bounded by x/(2 pi^2 K).
ExtFloat expm1_recip_partial_fraction(const ExtFloat& x, long K);

// R(a, m) = -(-1)^m (1/pi) * Int_0^inf x^{2m}/(1+x^2) ln(1 - e^{-2 pi a x}) dx.
// The logarithmic endpoint singularity is regularized by the substitution
// x = e^u below split_point; beyond tail_cut a closed-form exponential
// bound certifies truncation.
ExtFloat schaar_remainder(const ExtFloat& a, int m, const QuadratureSpec& spec = {});

// ln Gamma(a+1) = ln sqrt(2 pi a) + a(ln a - 1)
//                 + sum_{k=1}^{m} B_{2k}/(2k(2k-1)) a^{1-2k} + R(a, m),
// exact for every m >= 0 up to quadrature tolerance.
ExtFloat schaar_log_gamma(const ExtFloat& a, int m, const QuadratureSpec& spec = {});

}  // namespace stirling
