#include "stirling/histtable.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stirling {

namespace {

int table_work_digits(int places) {
  const int doubled = 2 * places + 12;
  return doubled > 40 ? doubled : 40;
}

ExactInteger pow10_int(int e) {
  ExactInteger p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

int places_of(const std::string& digits) {
  const auto dot = digits.find('.');
  if (dot == std::string::npos) return 0;
  return static_cast<int>(digits.size() - dot - 1);
}

// Scaled-integer view of a fixed-point string: value * 10^places.
ExactInteger units_of(const std::string& digits, int places) {
  if (places_of(digits) != places)
    throw std::invalid_argument("table digits have wrong number of places: " + digits);
  std::string compact;
  for (char c : digits)
    if (c != '.') compact.push_back(c);
  return ExactInteger(compact, 10);
}

std::string digits_from_units(const ExactInteger& units, int places) {
  if (units < 0) throw std::invalid_argument("negative table value");
  ExactInteger ip, fp;
  mpz_tdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), units.get_mpz_t(),
              pow10_int(places).get_mpz_t());
  std::string frac = fp.get_str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return ip.get_str() + "." + frac;
}

TableRow make_row(unsigned long n, const std::string& digits, int work) {
  TableRow r;
  r.n = n;
  r.digits = digits;
  r.value = ExtFloat::parse(digits, work);
  return r;
}

TableRow row_from_value(unsigned long n, const ExtFloat& log10_value, int places) {
  TableRow r;
  r.n = n;
  r.digits = to_decimal_string(log10_value, places);
  r.value = log10_value;
  return r;
}

struct EditionData {
  unsigned long n;
  const char* d1730;
  const char* d1756;
};

constexpr EditionData kComparisonRows[] = {
    {10, "6.55977303287678", "6.55976303287678"},
    {20, "18.38613461687770", "18.38612461687770"},
    {30, "32.42367007492572", "32.42366007492572"},
    {40, "47.91165506815591", "47.91164506815591"},
    {50, "64.48308487247209", "64.48307487247209"},
    {60, "81.92018484939024", "81.92017484939024"},
    {70, "100.07841503568004", "100.07840503568004"},
    {80, "118.85473712249966", "118.85472772249966"},
    {90, "138.17194519001086", "138.17193579001086"},
    {100, "157.97001305471585", "157.97000365471585"},
    {110, "178.20092704487008", "178.20091764487008"},
    {120, "198.82540324721977", "198.82539384721977"},
    {130, "219.81070255614815", "219.81069315614815"},
    {140, "241.12911938869689", "241.12910998869689"},
    {150, "262.75690281092616", "262.75689341092616"},
    {160, "284.67346564068298", "284.67345624068298"},
    {170, "306.66079139482847", "306.66078199482847"},
    {180, "329.30298082389393", "329.30297142479393"},
    {190, "351.98589923663535", "351.98588983393535"},
    {200, "374.89689804274044", "374.89688864004044"},
};

// Classify u (in grid units) into signed short-coefficient powers of ten.
// Terms from the previous row are reused first, in order, whenever they
// reduce the residual; leftovers are minted at two significant digits.
std::vector<DiffTerm> classify_delta(ExactInteger u, int places,
                                     const std::vector<DiffTerm>& previous) {
  std::vector<DiffTerm> out;
  for (const DiffTerm& t : previous) {
    const int e = places - t.exp10;
    if (e < 0) continue;
    const ExactInteger tu = ExactInteger(t.coeff) * pow10_int(e);
    if (abs(u - tu) < abs(u)) {
      out.push_back(t);
      u -= tu;
    }
  }
  while (u != 0) {
    const std::string mag = ExactInteger(abs(u)).get_str();
    int e = mag.size() >= 2 ? static_cast<int>(mag.size()) - 2 : 0;
    ExactInteger c;
    mpz_tdiv_q(c.get_mpz_t(), u.get_mpz_t(), pow10_int(e).get_mpz_t());
    long cl = c.get_si();
    while (cl % 10 == 0 && cl != 0) {
      cl /= 10;
      ++e;
    }
    out.push_back({cl, places - e});
    u -= ExactInteger(cl) * pow10_int(e);
  }
  return out;
}

}  // namespace

const std::vector<TableRow>& historical_table(Edition edition) {
  static std::mutex m;
  static std::vector<TableRow> t1730, t1756;
  std::lock_guard<std::mutex> lock(m);
  if (t1730.empty()) {
    const int work = table_work_digits(14);
    for (const auto& r : kComparisonRows) {
      t1730.push_back(make_row(r.n, r.d1730, work));
      t1756.push_back(make_row(r.n, r.d1756, work));
    }
  }
  return edition == Edition::y1730 ? t1730 : t1756;
}

TableRow log10_factorial(unsigned long n, int places) {
  if (n < 1 || n > 1000000UL)
    throw std::invalid_argument("log10_factorial: n must be in 1..10^6");
  if (places < 1) throw std::invalid_argument("log10_factorial: places must be >= 1");
  const int work = table_work_digits(places);
  ExtFloat s(work);
  for (unsigned long k = 2; k <= n; ++k)
    s = s + ln_ext(ExtFloat::of(static_cast<long>(k), work));
  return row_from_value(n, s / ln_ext(ExtFloat::of(10, work)), places);
}

std::vector<TableRow> generate_table(unsigned long start, unsigned long stop,
                                     unsigned long step, int places) {
  if (start < 1 || step < 1)
    throw std::invalid_argument("generate_table: start and step must be >= 1");
  const int work = table_work_digits(places);
  const ExtFloat ln10 = ln_ext(ExtFloat::of(10, work));
  std::vector<TableRow> rows;
  ExtFloat s(work);
  for (unsigned long k = 1; k <= stop; ++k) {
    if (k >= 2) s = s + ln_ext(ExtFloat::of(static_cast<long>(k), work));
    if (k >= start && (k - start) % step == 0)
      rows.push_back(row_from_value(k, s / ln10, places));
  }
  return rows;
}

std::vector<TableDiff> compare_tables(const std::vector<TableRow>& a,
                                      const std::vector<TableRow>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compare_tables: row sets differ in size");
  std::vector<TableDiff> out;
  std::vector<DiffTerm> previous;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].n != b[i].n)
      throw std::invalid_argument("compare_tables: row n mismatch");
    const int places = places_of(a[i].digits);
    if (places != places_of(b[i].digits))
      throw std::invalid_argument("compare_tables: place-count mismatch");
    const ExactInteger du = units_of(a[i].digits, places) - units_of(b[i].digits, places);

    TableDiff d;
    d.n = a[i].n;
    // Normalize delta to the canonical 10^-14 grid.
    d.delta = places <= 14
                  ? ExactRational(du * pow10_int(14 - places))
                  : ExactRational(du) / ExactRational(pow10_int(places - 14));
    d.classification = classify_delta(du, places, previous);
    previous = d.classification;
    out.push_back(d);
  }
  return out;
}

DigitEdit DigitEdit::add(const ExactRational& d) {
  DigitEdit e;
  e.kind = Kind::add_delta;
  e.delta = d;
  return e;
}

DigitEdit DigitEdit::replace(int position, char digit) {
  DigitEdit e;
  e.kind = Kind::replace_digit;
  e.position = position;
  e.digit = digit;
  return e;
}

DigitEdit DigitEdit::transpose_at(int position) {
  DigitEdit e;
  e.kind = Kind::transpose;
  e.position = position;
  return e;
}

std::vector<TableRow> inject_errors(const std::vector<TableRow>& base,
                                    const std::vector<Corruption>& corruptions) {
  if (base.empty()) return {};
  const int places = places_of(base.front().digits);
  const int work = table_work_digits(places);

  std::vector<TableRow> out;
  ExactInteger cum = 0;
  std::size_t ci = 0;
  for (const TableRow& row : base) {
    ExactInteger u = units_of(row.digits, places) + cum;
    for (; ci < corruptions.size() && corruptions[ci].n == row.n; ++ci) {
      const DigitEdit& e = corruptions[ci].edit;
      ExactInteger du = 0;
      switch (e.kind) {
        case DigitEdit::Kind::add_delta: {
          const ExactRational scaled = e.delta * ExactRational(pow10_int(places));
          if (scaled.get_den() != 1)
            throw std::invalid_argument("inject_errors: delta is not a multiple of the grid");
          du = scaled.get_num();
          break;
        }
        case DigitEdit::Kind::replace_digit: {
          if (e.position < 1 || e.position > places)
            throw std::out_of_range("inject_errors: decimal position out of range");
          if (e.digit < '0' || e.digit > '9')
            throw std::invalid_argument("inject_errors: replacement is not a digit");
          const std::string d = digits_from_units(u, places);
          const char old = d[d.find('.') + static_cast<std::size_t>(e.position)];
          du = ExactInteger(e.digit - old) * pow10_int(places - e.position);
          break;
        }
        case DigitEdit::Kind::transpose: {
          if (e.position < 1 || e.position + 1 > places)
            throw std::out_of_range("inject_errors: decimal position out of range");
          const std::string d = digits_from_units(u, places);
          const std::size_t p = d.find('.') + static_cast<std::size_t>(e.position);
          const int hi = d[p] - '0', lo = d[p + 1] - '0';
          du = ExactInteger(lo - hi) * pow10_int(places - e.position) +
               ExactInteger(hi - lo) * pow10_int(places - e.position - 1);
          break;
        }
      }
      u += du;
      cum += du;
    }
    out.push_back(make_row(row.n, digits_from_units(u, places), work));
  }
  if (ci != corruptions.size())
    throw std::invalid_argument("inject_errors: corruption row not present or out of order");
  return out;
}

int cast_out_nines(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("cast_out_nines: empty string");
  int sum = 0;
  bool seen_point = false;
  for (char c : digits) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("cast_out_nines: multiple points");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      sum = (sum + (c - '0')) % 9;
    } else {
      throw std::invalid_argument("cast_out_nines: malformed string");
    }
  }
  return sum;
}

std::string to_tsv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  for (const TableRow& r : rows) os << r.n << '\t' << r.digits << '\n';
  return os.str();
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,digits\n";
  for (const TableRow& r : rows) os << r.n << ',' << r.digits << '\n';
  return os.str();
}

std::string to_json(const std::vector<TableRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const TableRow& r : rows) j.push_back({{"n", r.n}, {"digits", r.digits}});
  return j.dump(2);
}

std::vector<TableRow> parse_tsv(const std::string& text) {
  std::vector<TableRow> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("parse_tsv: missing tab separator");
    const unsigned long n = std::strtoul(line.substr(0, tab).c_str(), nullptr, 10);
    const std::string digits = line.substr(tab + 1);
    rows.push_back(make_row(n, digits, table_work_digits(places_of(digits))));
  }
  return rows;
}

}  // namespace stirling
