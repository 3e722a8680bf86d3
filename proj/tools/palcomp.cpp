// Command-line surface over the palindromic-modulo-m composition library:
// counting tables, bijection traces, golden-table reproduction, the property
// suite, and asymptotic constants.
//
// Exit codes: 0 success, 1 domain/usage errors, 2 verification failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "palcomp/asymptotics.hpp"
#include "palcomp/bijection_m2.hpp"
#include "palcomp/bijection_m3.hpp"
#include "palcomp/counting.hpp"
#include "palcomp/golden_tables.hpp"
#include "palcomp/oracle.hpp"
#include "palcomp/structural.hpp"
#include "palcomp/verification.hpp"

using namespace palcomp;
using nlohmann::json;

namespace {

enum class Format { text, csv, js };

struct GlobalOpts {
  std::string format = "text";
  int oracle_cap = kDefaultOracleCap;
  std::string out;

  Format fmt() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::js;
    return Format::text;
  }
};

// Payload goes to --out when given, stdout otherwise.
int deliver(const GlobalOpts& g, const std::string& payload, int status) {
  if (g.out.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot write %s\n", g.out.c_str());
      return 1;
    }
    file << payload;
  }
  return status;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char ch : field) {
    quoted += ch;
    if (ch == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<Modulus> parse_modulus_list(const std::string& text) {
  std::vector<Modulus> moduli;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    moduli.push_back(Modulus::parse(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (moduli.empty()) throw std::invalid_argument("empty modulus list");
  return moduli;
}

// ---- count ----------------------------------------------------------------

int cmd_count(const GlobalOpts& g, int n, const std::string& m_text, const std::string& method) {
  const Modulus m = Modulus::parse(m_text);
  std::vector<CountMethod> methods;
  if (method == "all") {
    if (n <= g.oracle_cap) methods.push_back(CountMethod::oracle);
    if (!m.is_infinite()) methods.push_back(CountMethod::recurrence);
    if (closed_form_available(m)) methods.push_back(CountMethod::closed);
  } else {
    methods.push_back(parse_method(method));
  }

  std::vector<std::pair<std::string, BigInt>> results;
  for (CountMethod mm : methods) {
    BigInt value;
    switch (mm) {
      case CountMethod::oracle: value = oracle_count(n, m, g.oracle_cap); break;
      case CountMethod::recurrence:
        if (m.is_infinite())
          throw std::invalid_argument("recurrence method requires a finite modulus");
        value = recurrence_count(n, static_cast<int>(m.value()));
        break;
      case CountMethod::closed: value = closed_form_count(n, m); break;
    }
    results.emplace_back(method_name(mm), std::move(value));
  }

  bool agree = true;
  for (const auto& [name, value] : results) agree = agree && value == results.front().second;
  const bool verdict_mode = method == "all";

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "n,m,method,value,agree\n";
      for (const auto& [name, value] : results)
        payload += std::to_string(n) + "," + m.str() + "," + name + "," + value.str() + "," +
                   (agree ? "true" : "false") + "\n";
      break;
    case Format::js: {
      json j;
      j["n"] = n;
      j["m"] = m.str();
      j["results"] = json::array();
      for (const auto& [name, value] : results)
        j["results"].push_back({{"method", name}, {"value", value.str()}});
      j["agree"] = agree;
      payload = json_dump(j);
      break;
    }
    case Format::text:
      if (!verdict_mode) {
        payload = results.front().second.str() + "\n";
      } else if (agree) {
        payload = results.front().second.str() + " AGREE\n";
      } else {
        for (const auto& [name, value] : results)
          payload += name + " = " + value.str() + "\n";
        payload += "DISAGREE\n";
      }
      break;
  }
  return deliver(g, payload, agree ? 0 : 2);
}

// ---- table ----------------------------------------------------------------

int cmd_table(const GlobalOpts& g, const std::string& m_text, int n_max,
              const std::string& methods_text) {
  const std::vector<Modulus> moduli = parse_modulus_list(m_text);
  std::vector<CountMethod> methods;
  if (methods_text == "all") {
    // Adaptive: every method that is applicable to all requested cells.
    bool oracle_ok = n_max <= g.oracle_cap;
    bool recurrence_ok = true, closed_ok = true;
    for (const auto& m : moduli) {
      recurrence_ok = recurrence_ok && !m.is_infinite();
      closed_ok = closed_ok && closed_form_available(m);
    }
    if (oracle_ok) methods.push_back(CountMethod::oracle);
    if (recurrence_ok) methods.push_back(CountMethod::recurrence);
    if (closed_ok) methods.push_back(CountMethod::closed);
    if (methods.empty()) throw std::invalid_argument("no method applies to every requested cell");
  } else {
    std::size_t pos = 0;
    while (pos <= methods_text.size()) {
      const std::size_t comma = methods_text.find(',', pos);
      methods.push_back(parse_method(methods_text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  const CountTable table = make_count_table(moduli, n_max, methods, g.oracle_cap);

  bool all_agree = true;
  for (const auto& cell : table.cells) all_agree = all_agree && cell.agree;

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "n,m,method,value,agree\n";
      for (const auto& cell : table.cells)
        payload += std::to_string(cell.n) + "," + cell.m.str() + "," + method_name(cell.method) +
                   "," + cell.value.str() + "," + (cell.agree ? "true" : "false") + "\n";
      break;
    case Format::js: {
      json j = json::array();
      for (const auto& cell : table.cells)
        j.push_back({{"n", cell.n},
                     {"m", cell.m.str()},
                     {"method", method_name(cell.method)},
                     {"value", cell.value.str()},
                     {"agree", cell.agree}});
      payload = json_dump(j);
      break;
    }
    case Format::text:
      for (const auto& cell : table.cells) {
        char head[64];
        std::snprintf(head, sizeof head, "pc(%d, %s)", cell.n, cell.m.str().c_str());
        payload += std::string(head) + " = " + cell.value.str() + "  [" +
                   method_name(cell.method) + "]" + (cell.agree ? "" : "  DISAGREE") + "\n";
      }
      break;
  }
  return deliver(g, payload, all_agree ? 0 : 2);
}

// ---- bij2 -----------------------------------------------------------------

int cmd_bij2(const GlobalOpts& g, const std::string& word_text, const std::string& family_text) {
  const TernaryWord word = parse_ternary_word(word_text);
  const FamilyTag family = family_text == "marked" ? FamilyTag::marked : FamilyTag::plain;
  TripleSeq triples = word_to_triples(word);
  if (family == FamilyTag::marked) triples = mark_last(std::move(triples));
  const Composition even = triples_to_composition(triples);
  const Composition odd = lift_parity(even);

  const std::string triples_text = format_triples(triples);
  const std::string even_text = format_composition(even);
  const std::string odd_text = format_composition(odd);

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "word,family,triples,composition,lifted\n" + csv_quote(word_text) + "," +
                family_text + "," + csv_quote(triples_text) + "," + csv_quote(even_text) + "," +
                csv_quote(odd_text) + "\n";
      break;
    case Format::js:
      payload = json_dump(json{{"word", word_text},
                               {"family", family_text},
                               {"triples", triples_text},
                               {"composition", even_text},
                               {"lifted", odd_text}});
      break;
    case Format::text:
      payload = "word: " + word_text + "\nfamily: " + family_text + "\ntriples: " + triples_text +
                "\ncomposition: " + even_text + "\nlifted: " + odd_text + "\n";
      break;
  }
  return deliver(g, payload, 0);
}

int cmd_bij2_inverse(const GlobalOpts& g, const std::string& comp_text) {
  const Composition sigma = parse_composition(comp_text);
  const std::string triples_text = format_triples(composition_to_triples(sigma));
  const WordFamily wf = composition_to_word(sigma);
  const std::string word_text = format_ternary_word(wf.word);
  const std::string family_text = wf.family == FamilyTag::marked ? "marked" : "plain";

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "composition,triples,word,family\n" + csv_quote(comp_text) + "," +
                csv_quote(triples_text) + "," + csv_quote(word_text) + "," + family_text + "\n";
      break;
    case Format::js:
      payload = json_dump(json{{"composition", comp_text},
                               {"triples", triples_text},
                               {"word", word_text},
                               {"family", family_text}});
      break;
    case Format::text:
      payload = "composition: " + comp_text + "\ntriples: " + triples_text +
                "\nword: " + word_text + "\nfamily: " + family_text + "\n";
      break;
  }
  return deliver(g, payload, 0);
}

// ---- bij3 -----------------------------------------------------------------

int cmd_bij3(const GlobalOpts& g, const std::string& word_text) {
  const TwoOneWord word = parse_two_one_word(word_text);
  const M3Decomposition decomp = m3_decompose(word);
  const std::string decomp_text = format_m3_decomposition(decomp);
  const Composition image = m3_forward(word);
  const std::string image_text = format_composition(image);

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "word,decomposition,image\n" + csv_quote(word_text) + "," +
                csv_quote(decomp_text) + "," + csv_quote(image_text) + "\n";
      break;
    case Format::js: {
      json j;
      j["word"] = word_text;
      j["decomposition"] = decomp_text;
      j["segments"] = json::array();
      for (const auto& seg : decomp.segments) {
        const SegmentStats s = segment_stats(seg);
        const M3Triple t = m3_segment_triple(seg);
        j["segments"].push_back({{"segment", format_two_one_word(seg)},
                                 {"o", s.ones},
                                 {"o_prime", s.leading_ones},
                                 {"t", s.twos},
                                 {"c", t.c},
                                 {"d", t.d},
                                 {"e", t.e}});
      }
      j["trailing_ones"] = decomp.trailing_ones;
      j["image"] = image_text;
      payload = json_dump(j);
      break;
    }
    case Format::text: {
      payload = "word: " + word_text + "\ndecomposition: " + decomp_text + "\n";
      if (!decomp.segments.empty()) {
        payload += "segment              o  o'   t    c    d    e\n";
        for (const auto& seg : decomp.segments) {
          const SegmentStats s = segment_stats(seg);
          const M3Triple t = m3_segment_triple(seg);
          char line[128];
          std::snprintf(line, sizeof line, "%-18s %3lld %3lld %3lld %4lld %4lld %4lld\n",
                        format_two_one_word(seg).c_str(), static_cast<long long>(s.ones),
                        static_cast<long long>(s.leading_ones), static_cast<long long>(s.twos),
                        static_cast<long long>(t.c), static_cast<long long>(t.d),
                        static_cast<long long>(t.e));
          payload += line;
        }
      }
      payload += "trailing ones: " + std::to_string(decomp.trailing_ones) + "\n";
      payload += "image: " + image_text + "\n";
      break;
    }
  }
  return deliver(g, payload, 0);
}

int cmd_bij3_inverse(const GlobalOpts& g, const std::string& comp_text) {
  const Composition sigma = parse_composition(comp_text);
  const TwoOneWord word = m3_inverse(sigma);
  const std::string word_text = format_two_one_word(word);
  const std::string decomp_text = format_m3_decomposition(m3_decompose(word));

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "composition,word,decomposition\n" + csv_quote(comp_text) + "," +
                csv_quote(word_text) + "," + csv_quote(decomp_text) + "\n";
      break;
    case Format::js:
      payload = json_dump(json{
          {"composition", comp_text}, {"word", word_text}, {"decomposition", decomp_text}});
      break;
    case Format::text:
      payload = "composition: " + comp_text + "\nword: " + word_text +
                "\ndecomposition: " + decomp_text + "\n";
      break;
  }
  return deliver(g, payload, 0);
}

// ---- goldens --------------------------------------------------------------

int cmd_goldens(const GlobalOpts& g, const std::string& which) {
  struct Result {
    std::string table;
    GoldenCheck check;
  };
  std::vector<Result> results;
  if (which == "table1" || which == "all") results.push_back({"table1", verify_table1()});
  if (which == "table2" || which == "all") results.push_back({"table2", verify_table2()});

  bool passed = true;
  for (const auto& r : results) passed = passed && r.check.passed;

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "table,cells,mismatches,passed\n";
      for (const auto& r : results)
        payload += r.table + "," + std::to_string(r.check.cells) + "," +
                   std::to_string(r.check.mismatches) + "," +
                   (r.check.passed ? "true" : "false") + "\n";
      break;
    case Format::js: {
      json j = json::array();
      for (const auto& r : results)
        j.push_back({{"table", r.table},
                     {"cells", r.check.cells},
                     {"mismatches", r.check.mismatches},
                     {"passed", r.check.passed},
                     {"first_mismatch", r.check.first_mismatch}});
      payload = json_dump(j);
      break;
    }
    case Format::text:
      for (const auto& r : results) {
        payload += r.table + ": ";
        if (r.check.passed) {
          payload += "PASS (" + std::to_string(r.check.cells) + " cells)\n";
        } else {
          payload += "FAIL (" + std::to_string(r.check.mismatches) + " of " +
                     std::to_string(r.check.cells) + " cells differ; first: " +
                     r.check.first_mismatch + ")\n";
        }
      }
      break;
  }
  return deliver(g, payload, passed ? 0 : 2);
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const GlobalOpts& g, int n_max, int m_max) {
  const std::vector<PropertyCheck> checks = run_verification_suite(n_max, m_max, g.oracle_cap);
  bool passed = true;
  for (const auto& check : checks) passed = passed && check.passed;

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "property,passed,detail\n";
      for (const auto& check : checks)
        payload += check.name + "," + (check.passed ? "true" : "false") + "," +
                   csv_quote(check.detail) + "\n";
      break;
    case Format::js: {
      json j = json::array();
      for (const auto& check : checks)
        j.push_back({{"property", check.name}, {"passed", check.passed},
                     {"detail", check.detail}});
      payload = json_dump(j);
      break;
    }
    case Format::text:
      for (const auto& check : checks) {
        char line[512];
        std::snprintf(line, sizeof line, "%s %-26s %s\n", check.passed ? "PASS" : "FAIL",
                      check.name.c_str(), check.detail.c_str());
        payload += line;
      }
      payload += passed ? "all properties hold\n" : "PROPERTY FAILURES PRESENT\n";
      break;
  }
  return deliver(g, payload, passed ? 0 : 2);
}

// ---- asymptotics ----------------------------------------------------------

int cmd_asymptotics(const GlobalOpts& g, const std::string& m_text, int err_lo, int err_hi,
                    bool explicit_window) {
  const std::vector<Modulus> moduli = parse_modulus_list(m_text);

  struct Row {
    AsymptoticProfile profile;
    ErrorReport errors;
    bool window_shrunk = false;
  };
  std::vector<Row> rows;
  for (const auto& m : moduli) {
    Row row;
    row.profile = asymptotic_profile(m);
    int hi = err_hi;
    if (!explicit_window && !m.is_infinite()) {
      // Counts past 2^52 lose double precision; shrink the default window.
      const auto counts = recurrence_counts(static_cast<int>(m.value()), err_hi);
      const BigInt guard = BigInt(1) << 52;
      while (hi > err_lo && counts[hi] > guard) --hi;
    }
    row.errors = asymptotic_error_report(m, err_lo, hi);
    row.window_shrunk = hi != err_hi;
    rows.push_back(row);
  }

  std::string payload;
  switch (g.fmt()) {
    case Format::csv:
      payload = "m,alpha_inverse,c,d\n";
      for (const auto& row : rows)
        payload += row.profile.m.str() + "," + sig10(row.profile.growth) + "," +
                   sig10(row.profile.c) + "," + sig10(row.profile.d) + "\n";
      break;
    case Format::js: {
      json j = json::array();
      for (const auto& row : rows)
        j.push_back({{"m", row.profile.m.str()},
                     {"alpha", row.profile.alpha},
                     {"alpha_inverse", row.profile.growth},
                     {"c", row.profile.c},
                     {"d", row.profile.d},
                     {"err_n_lo", row.errors.n_lo},
                     {"err_n_hi", row.errors.n_hi},
                     {"max_err", row.errors.max_err},
                     {"max_err_top_quartile", row.errors.max_err_top_quartile}});
      payload = json_dump(j);
      break;
    }
    case Format::text:
      for (const auto& row : rows) {
        payload += "m=" + row.profile.m.str() + ": alpha_inverse=" + sig10(row.profile.growth) +
                   " c=" + sig10(row.profile.c) + " d=" + sig10(row.profile.d);
        char err[160];
        std::snprintf(err, sizeof err, "  max_err=%.3e (n=%d..%d%s)\n", row.errors.max_err,
                      row.errors.n_lo, row.errors.n_hi,
                      row.window_shrunk ? ", shrunk to keep counts below 2^52" : "");
        payload += err;
      }
      break;
  }
  return deliver(g, payload, 0);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindromic-modulo-m composition toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--oracle-cap", g.oracle_cap, "largest n the exhaustive oracle will sweep")
      ->check(CLI::Range(1, 62));
  app.add_option("--out", g.out, "write output to this file instead of stdout");

  int count_n = 0;
  std::string count_m, count_method = "all";
  CLI::App* count = app.add_subcommand("count", "count compositions palindromic mod m");
  count->fallthrough();
  count->add_option("--n", count_n, "total being composed")->required();
  count->add_option("--m", count_m, "modulus (integer or inf)")->required();
  count->add_option("--method", count_method, "oracle|recurrence|closed|all")
      ->check(CLI::IsMember({"oracle", "recurrence", "closed", "all"}));

  std::string table_m;
  int table_n_max = 0;
  std::string table_methods = "recurrence";
  CLI::App* table = app.add_subcommand("table", "count for every n up to a bound");
  table->fallthrough();
  table->add_option("--m", table_m, "comma-separated moduli")->required();
  table->add_option("--n-max", table_n_max, "largest total")->required();
  table->add_option("--methods", table_methods,
                    "comma-separated methods, or 'all' for every applicable one");

  std::string bij2_word, bij2_family = "plain";
  CLI::App* bij2 = app.add_subcommand("bij2", "ternary word -> mod-2 palindromic composition");
  bij2->fallthrough();
  bij2->add_option("--word", bij2_word, "word over {0,1,2}; pass \"\" for the empty word")
      ->required();
  bij2->add_option("--family", bij2_family, "plain|marked")
      ->check(CLI::IsMember({"plain", "marked"}));

  std::string bij2i_comp;
  CLI::App* bij2i =
      app.add_subcommand("bij2-inverse", "mod-2 palindromic composition -> ternary word");
  bij2i->fallthrough();
  bij2i->add_option("--composition", bij2i_comp, "comma-separated parts, even total")->required();

  std::string bij3_word;
  CLI::App* bij3 = app.add_subcommand("bij3", "{1,2}-word -> mod-3 palindromic composition");
  bij3->fallthrough();
  bij3->add_option("--word", bij3_word, "comma-separated parts in {1,2}, starting (1,1) or (2)")
      ->required();

  std::string bij3i_comp;
  CLI::App* bij3i =
      app.add_subcommand("bij3-inverse", "mod-3 palindromic composition -> {1,2}-word");
  bij3i->fallthrough();
  bij3i->add_option("--composition", bij3i_comp, "comma-separated parts")->required();

  std::string goldens_which = "all";
  CLI::App* goldens = app.add_subcommand("goldens", "regenerate the fixture tables and diff");
  goldens->fallthrough();
  goldens->add_option("--which", goldens_which, "table1|table2|all")
      ->check(CLI::IsMember({"table1", "table2", "all"}));

  int verify_n_max = 14, verify_m_max = 6;
  CLI::App* verify = app.add_subcommand("verify", "run every module's property suite");
  verify->fallthrough();
  verify->add_option("--n-max", verify_n_max, "sweep totals up to this")->check(CLI::Range(2, 62));
  verify->add_option("--m-max", verify_m_max, "sweep moduli up to this")->check(CLI::Range(1, 64));

  std::string asym_m = "1,2,3,4,5,6,7,8,9,10";
  int asym_lo = 30, asym_hi = 60;
  CLI::App* asym = app.add_subcommand("asymptotics", "growth constants and error window");
  asym->fallthrough();
  asym->add_option("--m", asym_m, "comma-separated moduli (integer or inf)");
  asym->add_option("--err-lo", asym_lo, "error window start")->check(CLI::Range(1, 100000));
  CLI::Option* hi_opt =
      asym->add_option("--err-hi", asym_hi, "error window end")->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (count->parsed()) return cmd_count(g, count_n, count_m, count_method);
    if (table->parsed()) return cmd_table(g, table_m, table_n_max, table_methods);
    if (bij2->parsed()) return cmd_bij2(g, bij2_word, bij2_family);
    if (bij2i->parsed()) return cmd_bij2_inverse(g, bij2i_comp);
    if (bij3->parsed()) return cmd_bij3(g, bij3_word);
    if (bij3i->parsed()) return cmd_bij3_inverse(g, bij3i_comp);
    if (goldens->parsed()) return cmd_goldens(g, goldens_which);
    if (verify->parsed()) return cmd_verify(g, verify_n_max, verify_m_max);
    if (asym->parsed())
      return cmd_asymptotics(g, asym_m, asym_lo, asym_hi, hi_opt->count() > 0);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
