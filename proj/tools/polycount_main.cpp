// polycount: exact counts of irreducible polynomials and relatively-prime
// pairs in k variables over GF(q), graded by total or vector degree, with
// symbolic-in-q output, truncated asymptotic reports, a brute-force GF(p)
// oracle, and an embedded-fixture verifier.
//
// Exit codes: 0 success, 2 usage, 3 resource cap, 4 unmet hypothesis,
// 5 verification mismatch.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycount/asymptotics.hpp"
#include "polycount/config.hpp"
#include "polycount/domain.hpp"
#include "polycount/gf/oracle.hpp"
#include "polycount/qpoly.hpp"
#include "polycount/scalars.hpp"
#include "polycount/total_counting.hpp"
#include "polycount/vector_counting.hpp"
#include "polycount/verify.hpp"

namespace {

using nlohmann::json;
using namespace polycount;

struct Options {
  std::string grading = "total";
  std::string what = "irreducible";
  std::string kind;   // asym subreport / table name / verify scope
  unsigned k = 0;
  std::optional<unsigned> m, n;
  std::vector<unsigned> d, e, t;
  std::string q_text = "2";
  std::string eval_text;
  std::string format = "text";
  std::string max_text;  // table range, "5" or "5,5"
  unsigned max_m = 10;
  unsigned p = 2;
  std::string poly_f, poly_g;
  std::string prs_mode = "primitive";
  Limits limits;
};

BigInt parse_big(const std::string& text, const char* flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(flag) +
                                " expects a nonnegative integer, got '" +
                                text + "'");
  return BigInt(text);
}

void advise_on_field_size(const BigInt& q) {
  if (!is_prime_power(q))
    std::cerr << "note: q = " << q.str()
              << " is not a prime power, so there is no field with q "
                 "elements; the printed value is the formula evaluated at "
                 "that q.\n";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rational_text(const BigRational& r) { return r.str(); }

DegVec to_degvec(const std::vector<unsigned>& v) {
  return DegVec(v.begin(), v.end());
}

json degrees_json(const std::vector<unsigned>& v) {
  json arr = json::array();
  for (unsigned c : v) arr.push_back(c);
  return arr;
}

// ---------------------------------------------------------------- count ---

void require_flag(bool present, const char* message) {
  if (!present) throw std::invalid_argument(message);
}

BigInt numeric_count(const Options& o, const BigInt& q) {
  NumericDomain dom(q, o.limits);
  if (o.grading == "total") {
    require_flag(o.k > 0, "count: total grading needs -k");
    require_flag(o.m.has_value(), "count: needs a degree -m");
    TotalCounter<NumericDomain> counter(o.k, dom, o.limits);
    if (o.what == "n") return counter.normalized(*o.m);
    if (o.what == "irreducible") return counter.irreducible(*o.m);
    if (o.what == "a") return counter.mobius_sum(*o.m);
    if (o.what == "coprime") {
      require_flag(o.n.has_value(), "count: coprime needs both -m and -n");
      return counter.coprime_pairs(*o.m, *o.n);
    }
    if (o.what == "smooth") {
      unsigned t = o.t.empty() ? 0 : o.t.front();
      return counter.smooth_count(*o.m, t);
    }
    throw std::invalid_argument("count: unknown --what '" + o.what + "'");
  }

  require_flag(!o.d.empty(), "count: vector grading needs -d m1,m2,...");
  if (o.k != 0 && o.k != o.d.size())
    throw std::invalid_argument("count: -k disagrees with the length of -d");
  unsigned k = static_cast<unsigned>(o.d.size());
  VectorCounter<NumericDomain> counter(k, dom, o.limits);
  DegVec dv = to_degvec(o.d);
  if (o.what == "n") return counter.normalized(dv);
  if (o.what == "irreducible") return counter.irreducible(dv);
  if (o.what == "a") return counter.mobius_sum(dv);
  if (o.what == "coprime") {
    require_flag(o.e.size() == o.d.size(),
                 "count: coprime needs -e with the same length as -d");
    return counter.coprime_pairs(dv, to_degvec(o.e));
  }
  if (o.what == "smooth") {
    unsigned t = o.t.empty() ? 0 : o.t.front();
    return counter.smooth_count(dv, t);
  }
  throw std::invalid_argument("count: unknown --what '" + o.what + "'");
}

int run_count(const Options& o) {
  BigInt q = parse_big(o.q_text, "-q");
  advise_on_field_size(q);
  BigInt value = numeric_count(o, q);
  if (o.format == "json") {
    json j;
    j["command"] = "count";
    j["query"] = {{"grading", o.grading}, {"what", o.what}, {"q", q.str()}};
    if (o.grading == "total") {
      j["query"]["k"] = o.k;
      if (o.m) j["query"]["m"] = *o.m;
      if (o.n) j["query"]["n"] = *o.n;
    } else {
      j["query"]["d"] = degrees_json(o.d);
      if (!o.e.empty()) j["query"]["e"] = degrees_json(o.e);
    }
    if (!o.t.empty()) j["query"]["t"] = o.t.front();
    j["value"] = value.str();
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "value\n" << value.str() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- symbolic ---

QPoly symbolic_count(const Options& o) {
  SymbolicDomain dom(o.limits);
  if (o.grading == "total") {
    require_flag(o.k > 0, "symbolic: total grading needs -k");
    require_flag(o.m.has_value(), "symbolic: needs a degree -m");
    TotalCounter<SymbolicDomain> counter(o.k, dom, o.limits);
    if (o.what == "n") return counter.normalized(*o.m);
    if (o.what == "irreducible") return counter.irreducible(*o.m);
    if (o.what == "a") return counter.mobius_sum(*o.m);
    if (o.what == "coprime") {
      require_flag(o.n.has_value(), "symbolic: coprime needs -m and -n");
      return counter.coprime_pairs(*o.m, *o.n);
    }
    if (o.what == "smooth") {
      unsigned t = o.t.empty() ? 0 : o.t.front();
      return counter.smooth_count(*o.m, t);
    }
    throw std::invalid_argument("symbolic: unknown quantity '" + o.what + "'");
  }

  require_flag(!o.d.empty(), "symbolic: vector grading needs -d");
  unsigned k = static_cast<unsigned>(o.d.size());
  VectorCounter<SymbolicDomain> counter(k, dom, o.limits);
  DegVec dv = to_degvec(o.d);
  if (o.what == "n") return counter.normalized(dv);
  if (o.what == "irreducible") return counter.irreducible(dv);
  if (o.what == "a") return counter.mobius_sum(dv);
  if (o.what == "coprime") {
    require_flag(o.e.size() == o.d.size(),
                 "symbolic: coprime needs -e matching -d");
    return counter.coprime_pairs(dv, to_degvec(o.e));
  }
  throw std::invalid_argument("symbolic: unknown quantity '" + o.what + "'");
}

int run_symbolic(const Options& o) {
  QPoly value = symbolic_count(o);
  std::optional<BigInt> at;
  std::optional<std::string> evaluated;
  if (!o.eval_text.empty()) {
    if (o.eval_text.rfind("q=", 0) != 0)
      throw std::invalid_argument("--eval expects q=<integer>");
    at = parse_big(o.eval_text.substr(2), "--eval");
    advise_on_field_size(*at);
    BigRational ev = value.evaluate(BigRational(*at));
    evaluated = rational_text(ev);
  }
  if (o.format == "json") {
    json j;
    j["command"] = "symbolic";
    j["query"] = {{"grading", o.grading}, {"what", o.what}};
    j["value"] = value.to_string();
    if (evaluated) {
      j["eval_at"] = at->str();
      j["evaluation"] = *evaluated;
    }
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "polynomial,evaluation\n"
              << csv_quote(value.to_string()) << ","
              << (evaluated ? *evaluated : "") << "\n";
  } else {
    std::cout << value.to_string() << "\n";
    if (evaluated) std::cout << *evaluated << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- table ---

struct TableData {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

TableData build_table(const Options& o, const BigInt& q) {
  TableData t;
  if (o.kind == "i2") {
    TotalCounter<NumericDomain> counter(2, NumericDomain(q, o.limits),
                                        o.limits);
    t.columns = {"m", "irreducible"};
    for (unsigned m = 0; m <= o.max_m; ++m)
      t.rows.push_back({std::to_string(m), counter.irreducible(m).str()});
    return t;
  }
  if (o.kind == "p2") {
    unsigned cap = static_cast<unsigned>(
        parse_big(o.max_text.empty() ? "5" : o.max_text, "--max"));
    TotalCounter<NumericDomain> counter(2, NumericDomain(q, o.limits),
                                        o.limits);
    t.columns = {"m", "n", "pairs", "product"};
    for (unsigned m = 0; m <= cap; ++m)
      for (unsigned n = 0; n <= m; ++n)
        t.rows.push_back(
            {std::to_string(m), std::to_string(n),
             counter.coprime_pairs(m, n).str(),
             (counter.normalized(m) * counter.normalized(n)).str()});
    return t;
  }
  if (o.kind == "i2vec") {
    std::string text = o.max_text.empty() ? "5,5" : o.max_text;
    auto comma = text.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("table i2vec: --max expects m1,m2");
    unsigned cap1 =
        static_cast<unsigned>(parse_big(text.substr(0, comma), "--max"));
    unsigned cap2 =
        static_cast<unsigned>(parse_big(text.substr(comma + 1), "--max"));
    VectorCounter<NumericDomain> counter(2, NumericDomain(q, o.limits),
                                         o.limits);
    t.columns = {"m1", "m2", "irreducible"};
    for (unsigned m1 = 0; m1 <= cap1; ++m1)
      for (unsigned m2 = m1; m2 <= cap2; ++m2)
        t.rows.push_back({std::to_string(m1), std::to_string(m2),
                          counter.irreducible({m1, m2}).str()});
    return t;
  }
  throw std::invalid_argument("table: unknown table '" + o.kind +
                              "' (expected i2, p2, or i2vec)");
}

int run_table(const Options& o) {
  BigInt q = parse_big(o.q_text, "--q");
  advise_on_field_size(q);
  TableData t = build_table(o, q);
  if (o.format == "json") {
    json j;
    j["command"] = "table";
    j["name"] = o.kind;
    j["q"] = q.str();
    j["rows"] = json::array();
    for (const auto& row : t.rows) {
      json r;
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        r[t.columns[i]] = row[i];
      j["rows"].push_back(r);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  // text and csv render identically: a header row plus data rows
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    std::cout << (i ? "," : "") << csv_quote(t.columns[i]);
  std::cout << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      std::cout << (i ? "," : "") << csv_quote(row[i]);
    std::cout << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- asym ---

ApproxReport asym_report(const Options& o, const BigInt& q) {
  if (o.kind == "i-total") {
    require_flag(o.k > 0 && o.m.has_value(), "asym i-total: needs -k and -m");
    unsigned t = o.t.empty() ? 0 : o.t.front();
    return i_total_approx(o.k, *o.m, q, t, o.limits);
  }
  if (o.kind == "p-total") {
    require_flag(o.k > 0 && o.m.has_value() && o.n.has_value(),
                 "asym p-total: needs -k, -m and -n");
    unsigned t = o.t.empty() ? 0 : o.t.front();
    return p_total_approx(o.k, *o.m, *o.n, q, t, o.limits);
  }
  if (o.kind == "i-vec") {
    require_flag(!o.d.empty(), "asym i-vec: needs -d");
    return i_vec_approx(to_degvec(o.d), q, o.limits);
  }
  if (o.kind == "p-vec") {
    require_flag(!o.d.empty() && o.e.size() == o.d.size(),
                 "asym p-vec: needs -d and -e of equal length");
    DegVec t = o.t.empty() ? DegVec(o.d.size(), 0) : to_degvec(o.t);
    if (t.size() != o.d.size())
      throw std::invalid_argument("asym p-vec: -t must match -d in length");
    return p_vec_approx(to_degvec(o.d), to_degvec(o.e), t, q, o.limits);
  }
  if (o.kind == "p-vec-two-term") {
    require_flag(!o.d.empty() && o.e.size() == o.d.size(),
                 "asym p-vec-two-term: needs -d and -e of equal length");
    return p_vec_two_term(to_degvec(o.d), to_degvec(o.e), q, o.limits);
  }
  throw std::invalid_argument(
      "asym: unknown report '" + o.kind +
      "' (expected i-total, p-total, i-vec, p-vec, or p-vec-two-term)");
}

int run_asym(const Options& o) {
  BigInt q = parse_big(o.q_text, "-q");
  advise_on_field_size(q);
  ApproxReport rep = asym_report(o, q);
  std::string ratio = rep.ratio ? rational_text(*rep.ratio) : "n/a";
  if (o.format == "json") {
    json j;
    j["command"] = "asym";
    j["report"] = o.kind;
    j["q"] = q.str();
    j["exact"] = rep.exact.str();
    j["approx"] = rep.approx.str();
    j["abs_error"] = rep.abs_error.str();
    j["o_term_scale"] = rep.o_term_scale.str();
    j["ratio"] = ratio;
    if (rep.o_exponent) j["o_term_exponent"] = rational_text(*rep.o_exponent);
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "exact,approx,abs_error,o_term_scale,ratio\n"
              << rep.exact.str() << "," << rep.approx.str() << ","
              << rep.abs_error.str() << "," << rep.o_term_scale.str() << ","
              << csv_quote(ratio) << "\n";
  } else {
    std::cout << "exact: " << rep.exact.str() << "\n"
              << "approx: " << rep.approx.str() << "\n"
              << "abs_error: " << rep.abs_error.str() << "\n"
              << "o_term_scale: " << rep.o_term_scale.str() << "\n"
              << "ratio: " << ratio << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- verify ---

int run_verify(const Options& o) {
  VerifyReport report;
  if (o.kind == "tables")
    report = verify_tables(o.limits);
  else if (o.kind == "oracle-small")
    report = verify_oracle_small(o.limits);
  else if (o.kind == "invariants")
    report = verify_invariants(o.limits);
  else if (o.kind == "all")
    report = verify_all(o.limits);
  else
    throw std::invalid_argument(
        "verify: unknown scope '" + o.kind +
        "' (expected tables, oracle-small, invariants, or all)");

  if (o.format == "json") {
    json j;
    j["command"] = "verify";
    j["scope"] = o.kind;
    j["checks"] = json::array();
    for (const auto& c : report.checks)
      j["checks"].push_back({{"name", c.name},
                             {"expected", c.expected},
                             {"actual", c.actual},
                             {"passed", c.passed}});
    j["total"] = report.checks.size();
    j["failed"] = report.failed;
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "name,expected,actual,passed\n";
    for (const auto& c : report.checks)
      std::cout << csv_quote(c.name) << "," << csv_quote(c.expected) << ","
                << csv_quote(c.actual) << ","
                << (c.passed ? "true" : "false") << "\n";
  } else {
    for (const auto& c : report.checks) {
      if (c.passed)
        std::cout << "ok " << c.name << " = " << c.actual << "\n";
      else
        std::cout << "FAIL " << c.name << " expected " << c.expected
                  << " actual " << c.actual << "\n";
    }
    std::cout << report.checks.size() << " checks, " << report.failed
              << " failures\n";
  }
  return report.all_passed() ? 0 : 5;
}

// ----------------------------------------------------------- oracle gcd ---

int run_oracle_gcd(const Options& o) {
  require_flag(!o.poly_f.empty() && !o.poly_g.empty(),
               "oracle gcd: needs -f and -g polynomial texts");
  require_flag(o.k > 0, "oracle gcd: needs -k");
  gf::MPoly f = gf::MPoly::parse(o.poly_f, o.p, o.k);
  gf::MPoly g = gf::MPoly::parse(o.poly_g, o.p, o.k);
  gf::PrsMode mode = o.prs_mode == "plain" ? gf::PrsMode::plain
                                           : gf::PrsMode::primitive;
  gf::MPoly result = gf::gcd_multivar(f, g, mode);
  if (o.format == "json") {
    json j;
    j["command"] = "oracle-gcd";
    j["p"] = o.p;
    j["k"] = o.k;
    j["f"] = f.to_string();
    j["g"] = g.to_string();
    j["value"] = result.to_string();
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "value\n" << csv_quote(result.to_string()) << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--max-terms", o.limits.max_terms,
                  "Cap on symbolic degree / q-exponents");
  cmd->add_option("--max-nodes", o.limits.max_nodes,
                  "Cap on partition/downset recursion nodes");
  cmd->add_option("--max-enum", o.limits.max_enum,
                  "Cap on oracle enumeration size");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{
      "Exact and asymptotic counts of irreducible polynomials and "
      "relatively-prime pairs in k variables over a finite field"};
  app.require_subcommand(1);

  CLI::App* c_count = app.add_subcommand(
      "count", "Print one exact count for a single degree key");
  c_count->add_option("--grading", o.grading, "Degree grading")
      ->check(CLI::IsMember({"total", "vector"}));
  c_count->add_option("--what", o.what, "Quantity")
      ->check(CLI::IsMember({"irreducible", "n", "a", "coprime", "smooth"}));
  c_count->add_option("-k", o.k, "Number of variables (total grading)");
  c_count->add_option("-m", o.m, "Total degree (first key)");
  c_count->add_option("-n", o.n, "Total degree (second key, coprime)");
  c_count->add_option("-d", o.d, "Vector degree, comma separated")
      ->delimiter(',');
  c_count->add_option("-e", o.e, "Second vector degree (coprime)")
      ->delimiter(',');
  c_count->add_option("-t", o.t, "Smoothness depth")->delimiter(',');
  c_count->add_option("-q,--q", o.q_text, "Field size (any integer >= 2)");
  add_common_flags(c_count, o);

  CLI::App* c_sym = app.add_subcommand(
      "symbolic", "Print a count as a polynomial in a formal q");
  c_sym->add_option("what", o.what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"irreducible", "n", "a", "coprime", "smooth"}));
  c_sym->add_option("--grading", o.grading, "Degree grading")
      ->check(CLI::IsMember({"total", "vector"}));
  c_sym->add_option("-k", o.k, "Number of variables (total grading)");
  c_sym->add_option("-m", o.m, "Total degree (first key)");
  c_sym->add_option("-n", o.n, "Total degree (second key, coprime)");
  c_sym->add_option("-d", o.d, "Vector degree")->delimiter(',');
  c_sym->add_option("-e", o.e, "Second vector degree")->delimiter(',');
  c_sym->add_option("-t", o.t, "Smoothness depth")->delimiter(',');
  c_sym->add_option("--eval", o.eval_text,
                    "Also evaluate at a numeric q, e.g. q=3");
  add_common_flags(c_sym, o);

  CLI::App* c_table = app.add_subcommand(
      "table", "Emit a whole table of counts (i2, p2, or i2vec)");
  c_table->add_option("name", o.kind, "Table name")->required();
  c_table->add_option("-q,--q", o.q_text, "Field size");
  c_table->add_option("--max-m", o.max_m, "Largest total degree (i2)");
  c_table->add_option("--max", o.max_text,
                      "Largest degree: integer for p2, m1,m2 for i2vec");
  add_common_flags(c_table, o);

  CLI::App* c_asym = app.add_subcommand(
      "asym", "Compare an exact count against its truncated approximation");
  c_asym->add_option("report", o.kind, "Which approximation")->required();
  c_asym->add_option("-k", o.k, "Number of variables");
  c_asym->add_option("-m", o.m, "Total degree (first key)");
  c_asym->add_option("-n", o.n, "Total degree (second key)");
  c_asym->add_option("-d", o.d, "Vector degree")->delimiter(',');
  c_asym->add_option("-e", o.e, "Second vector degree")->delimiter(',');
  c_asym->add_option("-t", o.t,
                     "Truncation depth (comma separated for p-vec)")
      ->delimiter(',');
  c_asym->add_option("-q,--q", o.q_text, "Field size");
  add_common_flags(c_asym, o);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Recompute embedded reference data and self-checks");
  c_verify->add_option("scope", o.kind, "What to verify")
      ->required()
      ->check(CLI::IsMember({"tables", "oracle-small", "invariants", "all"}));
  add_common_flags(c_verify, o);

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "Brute-force reference computations over GF(p)");
  c_oracle->require_subcommand(1);
  CLI::App* c_gcd = c_oracle->add_subcommand(
      "gcd", "GCD of two polynomials given as text, e.g. x1^2*x2 + 2*x1 + 1");
  c_gcd->add_option("-p", o.p, "Field size (a prime)");
  c_gcd->add_option("-k", o.k, "Number of variables");
  c_gcd->add_option("-f", o.poly_f, "First polynomial")->required();
  c_gcd->add_option("-g", o.poly_g, "Second polynomial")->required();
  c_gcd->add_option("--mode", o.prs_mode, "Remainder sequence flavor")
      ->check(CLI::IsMember({"primitive", "plain"}));
  add_common_flags(c_gcd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_count) return run_count(o);
    if (*c_sym) return run_symbolic(o);
    if (*c_table) return run_table(o);
    if (*c_asym) return run_asym(o);
    if (*c_verify) return run_verify(o);
    if (*c_gcd) return run_oracle_gcd(o);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const TextParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
