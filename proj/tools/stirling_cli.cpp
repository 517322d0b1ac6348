#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/bernoulli.hpp"
#include "stirling/coefficients.hpp"
#include "stirling/extfloat.hpp"
#include "stirling/histtable.hpp"
#include "stirling/rational.hpp"
#include "stirling/schaar.hpp"
#include "stirling/series.hpp"
#include "stirling/wallis.hpp"

namespace {

using nlohmann::json;
using namespace stirling;

struct OutputConfig {
  std::string format = "text";
  int precision = 30;
  std::string base = "e";
};

std::string fmt_value(const ExtFloat& v, const OutputConfig& cfg) {
  return to_string_sig(v, cfg.precision);
}

// Convert a natural-log quantity to the requested base.
ExtFloat in_base(const ExtFloat& v, const OutputConfig& cfg) {
  if (cfg.base == "10") {
    const int work = 2 * cfg.precision + 10;
    return (v.to_precision(work) * base10_modulus(work)).to_precision(cfg.precision);
  }
  return v;
}

std::string fmt_term(const DiffTerm& t) {
  std::ostringstream os;
  os << (t.coeff < 0 ? "-" : "+") << (t.coeff < 0 ? -t.coeff : t.coeff)
     << "e-" << t.exp10;
  return os.str();
}

void emit_fractions(const std::string& name, const std::vector<ExactRational>& vals,
                    int k0, const OutputConfig& cfg) {
  if (cfg.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < vals.size(); ++i)
      arr.push_back({{"k", k0 + static_cast<int>(i)}, {name, to_string(vals[i])}});
    std::cout << arr.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "k," << name << "\n";
    for (std::size_t i = 0; i < vals.size(); ++i)
      std::cout << k0 + static_cast<int>(i) << "," << to_string(vals[i]) << "\n";
  } else {
    for (std::size_t i = 0; i < vals.size(); ++i)
      std::cout << k0 + static_cast<int>(i) << "\t" << to_string(vals[i]) << "\n";
  }
}

void emit_object(const std::vector<std::pair<std::string, std::string>>& kv,
                 const OutputConfig& cfg) {
  if (cfg.format == "json") {
    json o;
    for (const auto& [k, v] : kv) o[k] = v;
    std::cout << o.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    for (std::size_t i = 0; i < kv.size(); ++i)
      std::cout << kv[i].first << (i + 1 < kv.size() ? "," : "\n");
    for (std::size_t i = 0; i < kv.size(); ++i)
      std::cout << kv[i].second << (i + 1 < kv.size() ? "," : "\n");
  } else {
    for (const auto& [k, v] : kv) std::cout << k << "\t" << v << "\n";
  }
}

// Accepts integers, decimal literals, and exact "p/q" input.
ExtFloat parse_arg(const std::string& s, int digits) {
  return ExtFloat::of(parse_rational(s), digits);
}

std::vector<TableRow> load_edition(const std::string& spec_str) {
  if (spec_str == "1730") return historical_table(Edition::y1730);
  if (spec_str == "1756") return historical_table(Edition::y1756);
  std::ifstream in(spec_str);
  if (!in) throw std::runtime_error("cannot open table file: " + spec_str);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_tsv(os.str());
}

void emit_rows(const std::vector<TableRow>& rows, const OutputConfig& cfg) {
  if (cfg.format == "json")
    std::cout << to_json(rows) << "\n";
  else if (cfg.format == "csv")
    std::cout << to_csv(rows);
  else
    std::cout << to_tsv(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational companion to the original derivations of Stirling's series"};
  app.require_subcommand(1);

  OutputConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--precision", cfg.precision, "Significant decimal digits")
      ->envname("STIRLING_PRECISION")
      ->check(CLI::PositiveNumber);
  app.add_option("--base", cfg.base, "Logarithm base")->check(CLI::IsMember({"e", "10"}));

  // bernoulli
  auto* cmd_b = app.add_subcommand("bernoulli", "Bernoulli numbers as exact fractions");
  int max_k = 12;
  std::string convention = "minus";
  cmd_b->add_option("--max-k", max_k, "Largest index")->check(CLI::NonNegativeNumber);
  cmd_b->add_option("--convention", convention, "B1 sign convention")
      ->check(CLI::IsMember({"minus", "plus"}));

  // coeffs
  auto* cmd_c = app.add_subcommand("coeffs", "Series coefficients");
  int ck = 5;
  bool c_system = false, c_closed = false, c_printed = false, c_published = false;
  cmd_c->add_option("--k", ck, "Number of coefficients")->check(CLI::PositiveNumber);
  cmd_c->add_flag("--system", c_system, "a_{2k-1} from the triangular system (default)");
  cmd_c->add_flag("--closed-form", c_closed, "a_{2k-1} from the Bernoulli closed form");
  cmd_c->add_flag("--printed", c_printed, "p_k = a_{2k-1} (1/2)^{2k-1}");
  cmd_c->add_flag("--as-published", c_published, "p_k with the historical uniform minus sign");

  // eval
  auto* cmd_e = app.add_subcommand("eval", "Evaluate a truncated series for log n!");
  std::string e_form = "stirling", e_n = "10";
  int e_terms = 3;
  cmd_e->add_option("--form", e_form)->check(CLI::IsMember({"stirling", "demoivre"}));
  cmd_e->add_option("--n", e_n, "Argument (integer, decimal, or p/q)");
  cmd_e->add_option("--terms", e_terms)->check(CLI::NonNegativeNumber);

  // truncate
  auto* cmd_t = app.add_subcommand("truncate", "Term-magnitude and optimal-truncation study");
  std::string t_n = "1";
  int t_max = 20;
  cmd_t->add_option("--n", t_n, "Argument (integer, decimal, or p/q)");
  cmd_t->add_option("--max-terms", t_max)->check(CLI::PositiveNumber);

  // wallis
  auto* cmd_w = app.add_subcommand("wallis", "Wallis product brackets");
  unsigned long w_n = 100;
  std::string w_what = "pi";
  int w_envelope = 1;
  cmd_w->add_option("--n", w_n)->check(CLI::PositiveNumber);
  cmd_w->add_option("--what", w_what)->check(CLI::IsMember({"product", "pi", "constant"}));
  cmd_w->add_option("--envelope-terms", w_envelope)->check(CLI::Range(1, 2));

  // schaar
  auto* cmd_s = app.add_subcommand("schaar", "Convergent remainder form of log Gamma");
  std::string s_a = "1";
  int s_m = 0;
  double s_tol = 1e-9;
  cmd_s->add_option("--a", s_a, "Argument (integer, decimal, or p/q)");
  cmd_s->add_option("--m", s_m)->check(CLI::NonNegativeNumber);
  cmd_s->add_option("--tol", s_tol)->check(CLI::PositiveNumber);

  // table
  auto* cmd_tab = app.add_subcommand("table", "Generate a log10(n!) table");
  unsigned long tab_start = 10, tab_stop = 200, tab_step = 10;
  int tab_places = 14;
  std::string tab_edition;
  cmd_tab->add_option("--start", tab_start)->check(CLI::PositiveNumber);
  cmd_tab->add_option("--stop", tab_stop)->check(CLI::PositiveNumber);
  cmd_tab->add_option("--step", tab_step)->check(CLI::PositiveNumber);
  cmd_tab->add_option("--places", tab_places)->check(CLI::PositiveNumber);
  cmd_tab->add_option("--edition", tab_edition, "Dump an embedded edition (1730|1756)")
      ->check(CLI::IsMember({"1730", "1756"}));

  // audit
  auto* cmd_a = app.add_subcommand("audit", "Diff two tables with error classification");
  std::string a_a = "1730", a_b = "1756";
  cmd_a->add_option("--edition-a", a_a, "1730, 1756, or a TSV file");
  cmd_a->add_option("--edition-b", a_b, "1730, 1756, or a TSV file");

  // checksum
  auto* cmd_k = app.add_subcommand("checksum", "Casting out nines");
  std::string k_digits;
  cmd_k->add_option("--digits", k_digits, "Decimal string")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*cmd_b) {
      const auto conv =
          convention == "plus" ? B1Convention::plus_half : B1Convention::minus_half;
      std::vector<ExactRational> vals;
      for (int k = 0; k <= max_k; ++k) vals.push_back(bernoulli_number(k, conv));
      emit_fractions("B", vals, 0, cfg);
    } else if (*cmd_c) {
      if (c_closed) {
        std::vector<ExactRational> vals;
        for (int k = 1; k <= ck; ++k) vals.push_back(closed_form_stirling(k));
        emit_fractions("a", vals, 1, cfg);
      } else if (c_printed || c_published) {
        std::vector<ExactRational> vals;
        for (int k = 1; k <= ck; ++k)
          vals.push_back(c_published ? printed_coefficient_as_published(k)
                                     : printed_coefficient(k));
        emit_fractions("p", vals, 1, cfg);
      } else {
        emit_fractions("a", solve_stirling_system(ck), 1, cfg);
      }
    } else if (*cmd_e) {
      const ExtFloat n = parse_arg(e_n, 2 * cfg.precision + 10);
      const SeriesValue v = e_form == "demoivre"
                                ? eval_demoivre(n, e_terms, cfg.precision)
                                : eval_stirling(n, e_terms, cfg.precision);
      emit_object({{"value", fmt_value(in_base(v.value, cfg), cfg)},
                   {"bound", fmt_value(in_base(v.bound, cfg), cfg)}},
                  cfg);
    } else if (*cmd_t) {
      const ExtFloat n = parse_arg(t_n, 2 * cfg.precision + 10);
      const TruncationReport r = truncation_report(n, t_max, cfg.precision);
      std::vector<std::pair<std::string, std::string>> kv = {
          {"m_star", std::to_string(r.m_star)},
          {"floor_pi_n", std::to_string(r.pi_n_index)},
          {"envelope_bound", fmt_value(r.envelope_bound, cfg)}};
      for (std::size_t k = 0; k < r.magnitudes.size(); ++k)
        kv.push_back({"magnitude_" + std::to_string(k + 1), fmt_value(r.magnitudes[k], cfg)});
      emit_object(kv, cfg);
    } else if (*cmd_w) {
      if (w_what == "product") {
        const ExactRational h = wallis_factorial_form(w_n);
        emit_object({{"H_n", to_string(h)},
                     {"H_n_decimal",
                      fmt_value(ExtFloat::of(h, 2 * cfg.precision + 10), cfg)}},
                    cfg);
      } else if (w_what == "pi") {
        const WallisBracket b = pi_bracket(w_n, cfg.precision);
        emit_object({{"pi_low", fmt_value(b.pi_low, cfg)},
                     {"pi_high", fmt_value(b.pi_high, cfg)}},
                    cfg);
      } else {
        const ConstantBracket b = constant_bracket(w_n, cfg.precision, w_envelope);
        emit_object({{"c_low", fmt_value(b.c_low, cfg)},
                     {"c_high", fmt_value(b.c_high, cfg)},
                     {"midpoint", fmt_value(b.midpoint(), cfg)}},
                    cfg);
      }
    } else if (*cmd_s) {
      QuadratureSpec qs;
      qs.abs_tolerance = s_tol;
      const ExtFloat a = parse_arg(s_a, cfg.precision);
      emit_object({{"remainder", fmt_value(schaar_remainder(a, s_m, qs), cfg)},
                   {"log_gamma", fmt_value(schaar_log_gamma(a, s_m, qs), cfg)}},
                  cfg);
    } else if (*cmd_tab) {
      emit_rows(tab_edition.empty()
                    ? generate_table(tab_start, tab_stop, tab_step, tab_places)
                    : load_edition(tab_edition),
                cfg);
    } else if (*cmd_a) {
      const auto diffs = compare_tables(load_edition(a_a), load_edition(a_b));
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& d : diffs) {
          json terms = json::array();
          for (const auto& t : d.classification) terms.push_back(fmt_term(t));
          arr.push_back({{"n", d.n}, {"delta_1e-14", to_string(d.delta)}, {"terms", terms}});
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        const char sep = cfg.format == "csv" ? ',' : '\t';
        if (cfg.format == "csv") std::cout << "n,terms\n";
        for (const auto& d : diffs) {
          std::cout << d.n << sep;
          for (std::size_t i = 0; i < d.classification.size(); ++i)
            std::cout << (i ? " " : "") << fmt_term(d.classification[i]);
          std::cout << "\n";
        }
      }
    } else if (*cmd_k) {
      emit_object({{"residue", std::to_string(cast_out_nines(k_digits))}}, cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
