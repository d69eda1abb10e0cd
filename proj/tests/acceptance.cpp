// Acceptance gate: ten timed end-to-end checks covering the embedded
// reference tables, symbolic/numeric agreement, closed forms, the brute-force
// GF(p) oracle, gcd laws, one-variable identities, and the truncation-error
// laws. Prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle_testkit.hpp"
#include "polycount/asymptotics.hpp"
#include "polycount/gf/oracle.hpp"
#include "polycount/qpoly.hpp"
#include "polycount/reference_tables.hpp"
#include "polycount/total_counting.hpp"
#include "polycount/vector_counting.hpp"

namespace {

using polycount::BigInt;
using polycount::BigRational;
using polycount::DegVec;
using polycount::NumericDomain;
using polycount::QPoly;
using polycount::SymbolicDomain;
using polycount::TotalCounter;
using polycount::VectorCounter;

// Largest tolerated value of abs_error / o_term_scale for the truncated
// irreducible count at k = 2, q = 2, m = 8 over depths t in {0..4}. Pinned
// above the measured maximum of 246446193/512 (about 481340.2, at t = 4,
// where the scale has shrunk to 2^10 while the dropped tail still carries
// the weight of its largest coefficients).
const BigRational kErrorRatioBound(524288);

// Per-depth ceilings for abs_error / o_term_scale at k = 2, q = 2 as the
// degree m runs from t + 2 to 13. The ratios settle near the magnitude of
// the first dropped coefficient (6, 20, 504, 21840); measured maxima are
// 6.25, 25.5, 647.2, and 27948.1.
const long kFixedDepthCaps[] = {8, 32, 768, 32768};

struct Context {
  std::ostringstream problems;
  int checks = 0;

  void expect(bool ok, const std::string& detail) {
    ++checks;
    if (!ok) problems << "\n      " << detail;
  }

  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& at) {
    std::ostringstream a, b;
    a << actual;
    b << expected;
    expect(a.str() == b.str(),
           at + ": expected " + b.str() + ", got " + a.str());
  }
};

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;  // 0 = no budget
  std::function<void(Context&)> run;
};

void criterion_1(Context& c) {
  for (const auto& entry : polycount::tables::kIrreducibleTotalK2) {
    TotalCounter<NumericDomain> counter(2, NumericDomain(BigInt(entry.q)));
    std::ostringstream at;
    at << "i(q=" << entry.q << ", m=" << entry.m << ")";
    c.expect_eq(counter.irreducible(entry.m), BigInt(entry.value), at.str());
  }
  c.expect(std::size(polycount::tables::kIrreducibleTotalK2) == 44,
           "expected 44 tabulated irreducible counts");
}

void criterion_2(Context& c) {
  TotalCounter<NumericDomain> counter(2, NumericDomain(BigInt(2)));
  int cells = 0;
  for (const auto& entry : polycount::tables::kCoprimeTotalK2Q2) {
    // The table stores the lower triangle; both orders must reproduce it.
    for (auto [m, n] : {std::pair{entry.m, entry.n}, {entry.n, entry.m}}) {
      std::ostringstream at;
      at << "p(m=" << m << ", n=" << n << ")";
      c.expect_eq(counter.coprime_pairs(m, n), BigInt(entry.pairs), at.str());
      c.expect_eq(counter.normalized(m) * counter.normalized(n),
                  BigInt(entry.product), at.str() + " product");
      ++cells;
      if (m == n) break;
    }
  }
  c.expect(cells == 36, "expected to cover all 36 ordered degree pairs");
}

void criterion_3(Context& c) {
  VectorCounter<NumericDomain> counter(2, NumericDomain(BigInt(2)));
  for (const auto& entry : polycount::tables::kIrreducibleVecQ2) {
    std::ostringstream at;
    at << "i(m=(" << entry.m1 << "," << entry.m2 << "))";
    c.expect_eq(counter.irreducible({entry.m1, entry.m2}),
                BigInt(entry.value), at.str());
    c.expect_eq(counter.irreducible({entry.m2, entry.m1}),
                BigInt(entry.value), at.str() + " swapped");
  }
  c.expect(std::size(polycount::tables::kIrreducibleVecQ2) == 21,
           "expected 21 tabulated counts");
}

void criterion_4(Context& c) {
  VectorCounter<NumericDomain> counter(2, NumericDomain(BigInt(2)));
  for (const auto& entry : polycount::tables::kCoprimeVecQ2) {
    std::ostringstream at;
    at << "p(m=(" << entry.m1 << "," << entry.m2 << "), n=(" << entry.n1
       << "," << entry.n2 << "))";
    c.expect_eq(counter.coprime_pairs({entry.m1, entry.m2},
                                      {entry.n1, entry.n2}),
                BigInt(entry.value), at.str());
  }
  c.expect(std::size(polycount::tables::kCoprimeVecQ2) == 175,
           "expected 175 tabulated pair counts");
}

void criterion_5(Context& c) {
  // Symbolic equals numeric at four field sizes, for two and three variables.
  for (unsigned k = 2; k <= 3; ++k) {
    TotalCounter<SymbolicDomain> sym(k, SymbolicDomain{});
    for (unsigned m = 0; m <= 6; ++m) {
      QPoly poly = sym.irreducible(m);
      for (long q = 2; q <= 5; ++q) {
        TotalCounter<NumericDomain> num(k, NumericDomain(BigInt(q)));
        std::ostringstream at;
        at << "i(k=" << k << ", m=" << m << ") at q=" << q;
        c.expect_eq(poly.evaluate(q), BigRational(num.irreducible(m)),
                    at.str());
      }
      if (m >= 1) {
        std::ostringstream at;
        at << "i(k=" << k << ", m=" << m << ")";
        c.expect(poly.is_monic(), at.str() + " is not monic");
        BigInt want =
            polycount::binomial(BigInt(m) + k, k) - 1;
        c.expect_eq(BigInt(poly.degree()), want, at.str() + " degree");
      }
    }
  }

  // Two variables, up to degree ten: evaluations reproduce the embedded
  // table, and seven further evaluation points pin the polynomial itself.
  TotalCounter<SymbolicDomain> sym(2, SymbolicDomain{});
  for (const auto& entry : polycount::tables::kIrreducibleTotalK2) {
    std::ostringstream at;
    at << "symbolic i(m=" << entry.m << ") at q=" << entry.q;
    c.expect_eq(sym.irreducible(entry.m).evaluate(entry.q),
                BigRational(BigInt(entry.value)), at.str());
  }
  for (unsigned m = 0; m <= 10; ++m) {
    QPoly poly = sym.irreducible(m);
    for (long q = 6; q <= 12; ++q) {
      TotalCounter<NumericDomain> num(2, NumericDomain(BigInt(q)));
      std::ostringstream at;
      at << "symbolic i(m=" << m << ") at q=" << q;
      c.expect_eq(poly.evaluate(q), BigRational(num.irreducible(m)),
                  at.str());
    }
  }
}

void criterion_6(Context& c) {
  for (long q : {2, 3}) {
    NumericDomain dom((BigInt(q)));
    VectorCounter<NumericDomain> counter(2, dom);
    for (unsigned n = 1; n <= 8; ++n) {
      std::ostringstream at;
      at << "closed form at q=" << q << ", n=" << n;
      c.expect_eq(polycount::irreducible_1n_closed(dom, n),
                  counter.irreducible({1, n}), at.str() + " (1,n)");
      c.expect_eq(polycount::irreducible_2n_closed(dom, n),
                  counter.irreducible({2, n}), at.str() + " (2,n)");
    }
  }
  NumericDomain two((BigInt(2)));
  c.expect_eq(polycount::irreducible_1n_closed(two, 3), BigInt(96),
              "spot (1,3)");
  c.expect_eq(polycount::irreducible_2n_closed(two, 2), BigInt(243),
              "spot (2,2)");
  c.expect_eq(polycount::irreducible_2n_closed(two, 4), BigInt(19476),
              "spot (2,4)");
  c.expect_eq(polycount::irreducible_2n_closed(two, 5), BigInt(162816),
              "spot (2,5)");
}

void criterion_7(Context& c) {
  TotalCounter<NumericDomain> total(2, NumericDomain(BigInt(2)));
  for (unsigned m = 1; m <= 4; ++m) {
    std::ostringstream at;
    at << "enumerated irreducibles at total degree " << m;
    c.expect_eq(polycount::gf::oracle_irreducible_total(2, m, 2),
                total.irreducible(m), at.str());
  }
  c.expect_eq(total.irreducible(3), BigInt(694), "spot i(3)");
  c.expect_eq(total.irreducible(4), BigInt(26089), "spot i(4)");

  VectorCounter<NumericDomain> vec(2, NumericDomain(BigInt(2)));
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b) {
      if (a + b == 0) continue;
      std::ostringstream at;
      at << "enumerated irreducibles at vector degree (" << a << "," << b
         << ")";
      c.expect_eq(polycount::gf::oracle_irreducible_vec({a, b}, 2),
                  vec.irreducible({a, b}), at.str());
    }
  c.expect_eq(vec.irreducible({1, 1}), BigInt(6), "spot i(1,1)");
  c.expect_eq(vec.irreducible({1, 2}), BigInt(24), "spot i(1,2)");
  c.expect_eq(vec.irreducible({2, 2}), BigInt(243), "spot i(2,2)");

  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= m; ++n) {
      std::ostringstream at;
      at << "enumerated coprime pairs at total degrees (" << m << "," << n
         << ")";
      c.expect_eq(polycount::gf::oracle_coprime_total(2, m, n, 2),
                  total.coprime_pairs(m, n), at.str());
    }
  c.expect_eq(total.coprime_pairs(3, 3), BigInt(901560), "spot p(3,3)");

  std::vector<DegVec> keys;
  for (unsigned a = 0; a <= 1; ++a)
    for (unsigned b = 0; b <= 2; ++b) keys.push_back({a, b});
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j) {
      std::ostringstream at;
      at << "enumerated coprime pairs at vector degrees (" << keys[i][0]
         << "," << keys[i][1] << ");(" << keys[j][0] << "," << keys[j][1]
         << ")";
      c.expect_eq(polycount::gf::oracle_coprime_vec(keys[i], keys[j], 2),
                  vec.coprime_pairs(keys[i], keys[j]), at.str());
    }
  c.expect_eq(vec.coprime_pairs({0, 1}, {1, 1}), BigInt(16), "spot p((0,1);(1,1))");
}

void criterion_8(Context& c) {
  using polycount::gf::MPoly;
  std::mt19937 rng(2024);
  for (int round = 0; round < 1000; ++round) {
    unsigned p = round % 2 == 0 ? 2 : 3;
    unsigned k = 1 + round % 3;
    MPoly f = testkit::random_mpoly(rng, p, k, 3);
    MPoly g = testkit::random_mpoly(rng, p, k, 3);
    MPoly h = testkit::random_mpoly(rng, p, k, 1);
    MPoly d = polycount::gf::gcd_multivar(f, g);
    std::ostringstream at;
    at << "gcd laws, round " << round;
    c.expect(d == polycount::gf::gcd_multivar(g, f),
             at.str() + ": not symmetric");
    c.expect(MPoly::exact_divide(f, d).has_value(),
             at.str() + ": does not divide the first input");
    c.expect(MPoly::exact_divide(g, d).has_value(),
             at.str() + ": does not divide the second input");
    c.expect(d.leading_term().coef == 1, at.str() + ": not normalized");
    c.expect(polycount::gf::gcd_multivar(f * h, g * h) ==
                 (d * h).normalized(),
             at.str() + ": common factor not extracted");
    // The no-stripping reference mode compounds coefficient degrees too fast
    // for dense three-variable inputs, so the differential check stays on the
    // one- and two-variable rounds.
    if (k <= 2)
      c.expect(polycount::gf::gcd_multivar(
                   f, g, polycount::gf::PrsMode::plain) == d,
               at.str() + ": plain remainder sequence disagrees");
  }

  std::mt19937 rng2(2025);
  for (int round = 0; round < 1000; ++round) {
    MPoly f = testkit::random_mpoly(rng2, 2, 2, 2);
    MPoly g = testkit::random_mpoly(rng2, 2, 2, 2);
    std::ostringstream at;
    at << "exhaustive agreement, round " << round;
    c.expect(polycount::gf::gcd_multivar(f, g) == testkit::exhaustive_gcd(f, g),
             at.str());
  }
}

void criterion_9(Context& c) {
  for (long q : {2, 3, 5}) {
    NumericDomain dom((BigInt(q)));
    TotalCounter<NumericDomain> counter(1, dom);
    for (unsigned m = 1; m <= 12; ++m) {
      std::ostringstream at;
      at << "one-variable irreducibles at q=" << q << ", m=" << m;
      c.expect_eq(counter.irreducible(m),
                  polycount::irreducible_univariate(m, dom), at.str());
    }
    for (unsigned m = 1; m <= 8; ++m)
      for (unsigned n = 1; n <= 8; ++n) {
        std::ostringstream at;
        at << "one-variable pairs at q=" << q << ", (m,n)=(" << m << "," << n
           << ")";
        BigInt want = polycount::ipow(BigInt(q), m + n) -
                      polycount::ipow(BigInt(q), m + n - 1);
        c.expect_eq(counter.coprime_pairs(m, n), want, at.str());
      }
  }
}

void criterion_10(Context& c) {
  // Recursive and explicit reciprocal coefficients agree.
  for (unsigned k = 2; k <= 3; ++k)
    for (long q : {2, 3}) {
      polycount::AlphaSeq seq = polycount::alpha_recursive(k, BigInt(q), 6);
      for (unsigned i = 0; i <= 6; ++i) {
        std::ostringstream at;
        at << "alpha(k=" << k << ", q=" << q << ", i=" << i << ")";
        c.expect_eq(polycount::alpha_explicit(k, BigInt(q), i), seq.values[i],
                    at.str());
      }
    }

  // The coefficients invert the normalized-count series through order 6.
  for (unsigned k = 2; k <= 3; ++k) {
    TotalCounter<NumericDomain> counter(k, NumericDomain(BigInt(2)));
    polycount::AlphaSeq seq = polycount::alpha_recursive(k, BigInt(2), 6);
    for (unsigned s = 0; s <= 6; ++s) {
      BigInt conv = 0;
      for (unsigned i = 0; i <= s; ++i)
        conv += seq.values[i] * counter.normalized(s - i);
      std::ostringstream at;
      at << "series inversion at order " << s;
      c.expect_eq(conv, BigInt(s == 0 ? 1 : 0), at.str());
    }
  }

  // Error ratios at k=2, q=2, m=8 stay under one pinned constant over the
  // whole depth window, and the absolute error strictly decreases through
  // depth 3. Depth 4 overshoots at this small q (the error climbs from
  // 200396574 back to 492892386), so the monotone window ends there.
  BigInt previous_error;
  for (unsigned t = 0; t <= 4; ++t) {
    polycount::ApproxReport r = polycount::i_total_approx(2, 8, 2, t);
    std::ostringstream at;
    at << "truncation depth " << t;
    if (!r.ratio) {
      c.expect(false, at.str() + ": missing error ratio");
      continue;
    }
    std::ostringstream detail;
    detail << at.str() << ": ratio " << *r.ratio << " exceeds the bound";
    c.expect(*r.ratio <= kErrorRatioBound, detail.str());
    if (t >= 1 && t <= 3)
      c.expect(r.abs_error < previous_error,
               at.str() + ": error did not shrink");
    previous_error = r.abs_error;
  }
  c.expect_eq(polycount::i_total_approx(2, 8, 2, 4).abs_error,
              BigInt(492892386), "depth-4 overshoot");

  // At a fixed depth the ratio stays bounded as the degree grows, which is
  // the actual content of the error-term exponent.
  for (unsigned t = 0; t <= 3; ++t)
    for (unsigned m = t + 2; m <= 13; ++m) {
      polycount::ApproxReport r = polycount::i_total_approx(2, m, 2, t);
      std::ostringstream at;
      at << "fixed depth " << t << ", degree " << m;
      if (!r.ratio) {
        c.expect(false, at.str() + ": missing error ratio");
        continue;
      }
      std::ostringstream detail;
      detail << at.str() << ": ratio " << *r.ratio << " exceeds "
             << kFixedDepthCaps[t];
      c.expect(*r.ratio <= BigRational(kFixedDepthCaps[t]), detail.str());
    }

  // The diagonal ratio series is the expected one and climbs toward 1.
  auto series = polycount::convergence_series(2, 2, polycount::RatioMode::total,
                                              {2, 3, 4, 5});
  const BigRational expected[] = {
      BigRational(2900, 3136),
      BigRational(901560, 921600),
      BigRational(BigInt("1002049232"), BigInt("1007681536")),
      BigRational(BigInt("4255612716000"), BigInt("4261681299456")),
  };
  for (std::size_t i = 0; i < 4; ++i) {
    std::ostringstream at;
    at << "ratio series entry " << i;
    c.expect_eq(series[i], expected[i], at.str());
    if (i > 0) c.expect(series[i - 1] < series[i], at.str() + ": not rising");
    c.expect(series[i] < 1, at.str() + ": not below 1");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "irreducible counts by total degree match the embedded table", 5,
       criterion_1},
      {2, "coprime pair counts by total degree match the embedded table", 1,
       criterion_2},
      {3, "irreducible counts by vector degree match the embedded table", 60,
       criterion_3},
      {4, "coprime pair counts by vector degree match the embedded table",
       300, criterion_4},
      {5, "symbolic irreducible counts evaluate to the numeric pipeline", 0,
       criterion_5},
      {6, "closed-form slices agree with the vector recursion", 0,
       criterion_6},
      {7, "brute-force enumeration agrees with the counting recursions", 600,
       criterion_7},
      {8, "gcd laws hold and match exhaustive search", 120, criterion_8},
      {9, "one-variable counts follow their closed forms", 1, criterion_9},
      {10, "truncation errors are bounded and ratio series climb", 10,
       criterion_10},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Context context;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(context);
    } catch (const std::exception& e) {
      context.expect(false, std::string("unexpected exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      std::ostringstream over;
      over << "exceeded the " << criterion.budget_seconds
           << " s time budget (" << elapsed << " s)";
      context.expect(false, over.str());
    }
    std::string verdict = context.problems.str().empty() ? "PASS" : "FAIL";
    if (verdict == "FAIL") ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << verdict << " " << criterion.id << ": " << criterion.label << " ["
         << context.checks << " checks, " << elapsed << "s]";
    std::cout << line.str() << context.problems.str() << "\n";
  }
  if (failures != 0)
    std::cout << failures << " of " << criteria.size()
              << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
