#pragma once

#include <string>
#include <vector>

#include "stirling/extfloat.hpp"
#include "stirling/rational.hpp"

namespace stirling {

// One table line: n, its log10(n!) as a fixed-point decimal string, and the
// same value as an ExtFloat agreeing with the string on every printed place.
struct TableRow {
  unsigned long n = 0;
  std::string digits;
  ExtFloat value;
};

// A signed power-of-ten component of a row delta: coeff * 10^{-exp10},
// with 1 <= |coeff| <= 99 and no trailing zero in coeff.
struct DiffTerm {
  long coeff = 0;
  int exp10 = 0;
};

inline bool operator==(const DiffTerm& a, const DiffTerm& b) {
  return a.coeff == b.coeff && a.exp10 == b.exp10;
}

struct TableDiff {
  unsigned long n = 0;
  ExactRational delta;  // (a - b) in units of 10^-14
  std::vector<DiffTerm> classification;
};

enum class Edition { y1730, y1756 };

// The 20 published comparison rows (n = 10..200 step 10), verbatim.
const std::vector<TableRow>& historical_table(Edition edition);

// Correctly rounded log10(n!) by direct summation of ln k at guarded
// precision, then base conversion.
TableRow log10_factorial(unsigned long n, int places = 14);

// Rows for n = start, start+step, ..., <= stop, computed from a running sum
// of ln k with a fresh rounding per row.
std::vector<TableRow> generate_table(unsigned long start, unsigned long stop,
                                     unsigned long step, int places = 14);

// Per-row exact delta plus a greedy classification into signed powers-of-ten
// terms, largest magnitude first.  Terms recurring from the previous row are
// reused before new ones are minted, so systematic errors classify stably
// down the table.
std::vector<TableDiff> compare_tables(const std::vector<TableRow>& a,
                                      const std::vector<TableRow>& b);

struct DigitEdit {
  enum class Kind { add_delta, replace_digit, transpose };
  Kind kind = Kind::add_delta;
  ExactRational delta;  // add_delta only
  int position = 0;     // 1-based decimal place; replace_digit / transpose
  char digit = '0';     // replace_digit only

  static DigitEdit add(const ExactRational& d);
  static DigitEdit replace(int position, char digit);
  static DigitEdit transpose_at(int position);  // swaps position, position+1
};

struct Corruption {
  unsigned long n = 0;
  DigitEdit edit;
};

// Running-sum error simulation: each edit lands at its row and every later
// row inherits the accumulated offset on top of the exact increments, so
// corruptions propagate additively down the table.
std::vector<TableRow> inject_errors(const std::vector<TableRow>& base,
                                    const std::vector<Corruption>& corruptions);

// Digit-sum checksum mod 9; blind to digit permutations.
int cast_out_nines(const std::string& digits);

std::string to_tsv(const std::vector<TableRow>& rows);
std::string to_csv(const std::vector<TableRow>& rows);
std::string to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_tsv(const std::string& text);

}  // namespace stirling
