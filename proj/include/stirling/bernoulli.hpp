#pragma once

#include "stirling/rational.hpp"

namespace stirling {

// Which value B_1 takes.  The power-sum formula over 1..m uses +1/2; the
// recurrence and every series coefficient use the standard -1/2.  The two
// conventions agree at every other index.
enum class B1Convention { minus_half, plus_half };

// Exact Bernoulli number B_k, computed by the forward recurrence
//   sum_{j=0}^{m} C(m+1, j) B_j = 0   (m >= 1)
// and memoized.  Thread-safe; repeated queries return identical values.
ExactRational bernoulli_number(unsigned k,
                               B1Convention convention = B1Convention::minus_half);

// Exact power sum 1^p + 2^p + ... + m^p via the Bernoulli closed form
// (the +1/2 convention, summing to m rather than m-1).  p >= 1.
ExactRational faulhaber_sum(unsigned p, unsigned long m);

}  // namespace stirling
