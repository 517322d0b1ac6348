#pragma once

#include <vector>

#include "stirling/extfloat.hpp"
#include "stirling/rational.hpp"

namespace stirling {

enum class Provenance { system_solved, closed_form, derived };

// Solves the lower-triangular system
//   -1/((2n+1)(4n)) = sum_{k=0}^{n-1} C(2n-1, 2k) a_{2k+1},   n = 1..K
// by forward substitution.  Returns a_1, a_3, ..., a_{2K-1}.
// With as_published = true the n = 4 right-hand side uses the historically
// printed denominator 9*15 instead of 9*16.
std::vector<ExactRational> solve_stirling_system(int K, bool as_published = false);

// Forward substitution on the even-index rows
//   0 = sum_{k=0}^{n-1} C(2n, 2k+1) a_{2k+2},   n = 1..K.
// Returns a_2, a_4, ..., a_{2K}; each must be exactly zero.
std::vector<ExactRational> solve_even_system(int K);

// d_k = B_{2k} / (2k(2k-1)).
ExactRational demoivre_coefficient(int k);

// a_{2k-1} * (1/2)^{2k-1}: the coefficient of 1/z^{2k-1} as displayed in
// the original series.
ExactRational printed_coefficient(int k);

// The 1756 printing shows every coefficient magnitude with a leading minus
// sign; this returns that signed-as-published form, -|p_k|.
ExactRational printed_coefficient_as_published(int k);

// (1 - 2^{2k-1}) * B_{2k} / (2k(2k-1)).  Checked against the triangular
// system, which is normative; this closed form is a derived cross-check.
ExactRational closed_form_stirling(int k);

// log10(e) = 1/ln(10) at the requested precision (>= 14 digits).
ExtFloat base10_modulus(int digits);

struct CoefficientTable {
  int K = 0;
  std::vector<ExactRational> stirling_a;  // a_1, a_3, ..., a_{2K-1}
  std::vector<ExactRational> demoivre_d;  // d_1, ..., d_K
  std::vector<ExactRational> printed;     // p_1, ..., p_K
  Provenance stirling_provenance = Provenance::system_solved;
  Provenance demoivre_provenance = Provenance::closed_form;
  Provenance printed_provenance = Provenance::derived;
};

CoefficientTable make_coefficient_table(int K);

}  // namespace stirling
