#pragma once

// Self-checks shared by `polycount verify` and the test suite. Three scopes:
//
//   verify_tables        recompute every embedded reference value
//   verify_oracle_small  formulas vs the brute-force GF(2) oracle, small keys
//   verify_invariants    algebraic identities each module is built on
//
// Every individual comparison is reported as a CheckResult with the expected
// and actual values rendered as strings.

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polycount/asymptotics.hpp"
#include "polycount/config.hpp"
#include "polycount/domain.hpp"
#include "polycount/gf/oracle.hpp"
#include "polycount/reference_tables.hpp"
#include "polycount/scalars.hpp"
#include "polycount/total_counting.hpp"
#include "polycount/vector_counting.hpp"

namespace polycount {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::size_t failed = 0;

  bool all_passed() const { return failed == 0; }

  void add(std::string name, std::string expected, std::string actual) {
    bool ok = expected == actual;
    if (!ok) ++failed;
    checks.push_back(
        {std::move(name), std::move(expected), std::move(actual), ok});
  }

  void add_flag(std::string name, bool ok) {
    add(std::move(name), "true", ok ? "true" : "false");
  }

  void merge(VerifyReport other) {
    failed += other.failed;
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

namespace verify_detail {

inline std::string vec_text(const DegVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Random nonzero polynomial with per-variable degree <= max_deg. Coefficients
// come from rng() % p so the draw is reproducible across platforms.
inline gf::MPoly random_mpoly(std::mt19937& rng, unsigned p, unsigned k,
                              unsigned max_deg) {
  while (true) {
    std::vector<gf::Term> terms;
    gf::ExpVec exp{};
    auto rec = [&](auto&& self, unsigned var) -> void {
      if (var == k) {
        std::uint32_t c = rng() % p;
        if (c != 0) terms.push_back({exp, c});
        return;
      }
      for (unsigned e = 0; e <= max_deg; ++e) {
        exp[var] = static_cast<std::uint16_t>(e);
        self(self, var + 1);
      }
      exp[var] = 0;
    };
    rec(rec, 0);
    if (terms.empty()) continue;
    std::sort(terms.begin(), terms.end(),
              [](const gf::Term& a, const gf::Term& b) {
                return gf::grlex_less(b.exp, a.exp);
              });
    return gf::MPoly::from_sorted_terms(p, k, terms);
  }
}

}  // namespace verify_detail

// Recomputes all embedded reference values: 44 irreducible counts by total
// degree (two variables, q = 2..5), 21 pair cells with both printed numbers
// (q = 2), 21 irreducible counts by vector degree, and the 175 vector-degree
// pair counts.
inline VerifyReport verify_tables(const Limits& limits = {}) {
  using verify_detail::vec_text;
  VerifyReport report;

  for (unsigned q = 2; q <= 5; ++q) {
    TotalCounter<NumericDomain> counter(2, NumericDomain(q, limits), limits);
    for (const auto& e : tables::kIrreducibleTotalK2) {
      if (e.q != q) continue;
      report.add("i2[q=" + std::to_string(q) + ",m=" + std::to_string(e.m) +
                     "]",
                 e.value, counter.irreducible(e.m).str());
    }
  }

  {
    TotalCounter<NumericDomain> counter(2, NumericDomain(2, limits), limits);
    for (const auto& e : tables::kCoprimeTotalK2Q2) {
      std::string at = "[m=" + std::to_string(e.m) + ",n=" +
                       std::to_string(e.n) + "]";
      report.add("p2.pairs" + at, e.pairs,
                 counter.coprime_pairs(e.m, e.n).str());
      report.add("p2.product" + at, e.product,
                 (counter.normalized(e.m) * counter.normalized(e.n)).str());
    }
  }

  {
    VectorCounter<NumericDomain> counter(2, NumericDomain(2, limits), limits);
    for (const auto& e : tables::kIrreducibleVecQ2) {
      DegVec m{e.m1, e.m2};
      report.add("i2vec" + vec_text(m), e.value,
                 counter.irreducible(m).str());
    }
    for (const auto& e : tables::kCoprimeVecQ2) {
      DegVec m{e.m1, e.m2}, n{e.n1, e.n2};
      report.add("p2vec[" + vec_text(m) + ";" + vec_text(n) + "]", e.value,
                 counter.coprime_pairs(m, n).str());
    }
  }

  return report;
}

// Formula counts vs exhaustive GF(2) enumeration in two variables:
// irreducible by total degree at m <= 4, pairs by total degree at m, n <= 3,
// irreducible by vector degree up to (2,2), pairs by vector degree up to
// (1,2). The oracle shares no code path with the counting recursions.
inline VerifyReport verify_oracle_small(const Limits& limits = {}) {
  using verify_detail::vec_text;
  VerifyReport report;
  const unsigned p = 2;

  TotalCounter<NumericDomain> total(2, NumericDomain(p, limits), limits);
  for (unsigned m = 1; m <= 4; ++m)
    report.add("oracle.i2[m=" + std::to_string(m) + "]",
               total.irreducible(m).str(),
               gf::oracle_irreducible_total(2, m, p, limits).str());

  for (unsigned m = 0; m <= 3; ++m)
    for (unsigned n = 0; n <= m; ++n)
      report.add("oracle.p2[m=" + std::to_string(m) + ",n=" +
                     std::to_string(n) + "]",
                 total.coprime_pairs(m, n).str(),
                 gf::oracle_coprime_total(2, m, n, p, limits).str());

  VectorCounter<NumericDomain> vec(2, NumericDomain(p, limits), limits);
  for (unsigned m1 = 0; m1 <= 2; ++m1)
    for (unsigned m2 = 0; m2 <= 2; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      DegVec m{m1, m2};
      report.add("oracle.i2vec" + vec_text(m), vec.irreducible(m).str(),
                 gf::oracle_irreducible_vec(m, p, limits).str());
    }

  std::vector<DegVec> keys;
  for (unsigned m1 = 0; m1 <= 1; ++m1)
    for (unsigned m2 = 0; m2 <= 2; ++m2) keys.push_back({m1, m2});
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j)
      report.add("oracle.p2vec[" + vec_text(keys[i]) + ";" +
                     vec_text(keys[j]) + "]",
                 vec.coprime_pairs(keys[i], keys[j]).str(),
                 gf::oracle_coprime_vec(keys[i], keys[j], p, limits).str());

  return report;
}

// The identities each module relies on, at small sizes.
inline VerifyReport verify_invariants(const Limits& limits = {}) {
  using verify_detail::vec_text;
  VerifyReport report;

  // --- exact scalar and polynomial-in-q layer ---
  {
    bool ok = true;
    for (unsigned n = 1; n <= 12 && ok; ++n)
      for (unsigned r = 1; r <= n && ok; ++r)
        ok = binomial(BigInt(n), r) ==
             binomial(BigInt(n) - 1, r - 1) + binomial(BigInt(n) - 1, r);
    report.add_flag("scalars.binomial.pascal", ok);
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= 60 && ok; ++n) {
      int sum = 0;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += mobius_mu(d);
      ok = sum == (n == 1 ? 1 : 0);
    }
    report.add_flag("scalars.mobius.delta", ok);
  }
  {
    SymbolicDomain sym(limits);
    TotalCounter<SymbolicDomain> symbolic(2, sym, limits);
    TotalCounter<NumericDomain> numeric(2, NumericDomain(3, limits), limits);
    bool round = true, eval = true;
    for (unsigned m = 0; m <= 5; ++m) {
      QPoly v = symbolic.irreducible(m);
      round = round && QPoly::parse(v.to_string()) == v;
      eval = eval && v.evaluate(BigRational(3)) ==
                         BigRational(numeric.irreducible(m));
    }
    QPoly a = symbolic.irreducible(3), b = symbolic.normalized(2);
    report.add_flag("qpoly.roundtrip", round);
    report.add_flag("qpoly.evaluate", eval);
    report.add_flag("qpoly.divide_exact", QPoly::divide_exact(a * b, b) == a);
  }

  // --- counting by total degree ---
  for (unsigned q : {2u, 3u}) {
    TotalCounter<NumericDomain> c(2, NumericDomain(q, limits), limits);
    std::string tag = "[k=2,q=" + std::to_string(q) + "]";
    bool conv = true, bounds = true, sym = true, zero = true, sat = true;
    for (unsigned m = 0; m <= 8; ++m) {
      conv = conv && c.convolution(m, m) == c.normalized(m);
      bounds = bounds && c.irreducible(m) >= 0 &&
               c.irreducible(m) <= c.normalized(m);
    }
    for (unsigned m = 0; m <= 5; ++m)
      for (unsigned n = 0; n <= 5; ++n) {
        BigInt pm = c.coprime_pairs(m, n);
        sym = sym && pm == c.coprime_pairs(n, m);
        BigInt prod = c.normalized(m) * c.normalized(n);
        sat = sat && (m == 0 || n == 0 ? pm == prod : pm < prod);
      }
    for (unsigned n = 0; n <= 5; ++n)
      zero = zero && c.coprime_pairs(0, n) == c.normalized(n);
    bool smooth = c.smooth_count(6, 0) == c.normalized(6);
    for (unsigned t = 1; t <= 5; ++t)
      smooth = smooth && c.smooth_count(6, t) <= c.smooth_count(6, t - 1);
    report.add_flag("total.convolution_full" + tag, conv);
    report.add_flag("total.irreducible_bounds" + tag, bounds);
    report.add_flag("total.pairs_symmetric" + tag, sym);
    report.add_flag("total.pairs_zero_degree" + tag, zero);
    report.add_flag("total.pairs_below_product" + tag, sat);
    report.add_flag("total.smooth_monotone" + tag, smooth);
  }
  {
    bool ok = true;
    for (unsigned q : {2u, 3u, 5u}) {
      NumericDomain dom(q, limits);
      TotalCounter<NumericDomain> c(1, dom, limits);
      for (unsigned m = 1; m <= 12; ++m)
        ok = ok && irreducible_univariate(m, dom) == c.irreducible(m);
    }
    report.add_flag("total.univariate_match", ok);
  }

  // --- counting by vector degree ---
  {
    VectorCounter<NumericDomain> c(2, NumericDomain(2, limits), limits);
    bool swap_sym = true, pair_swap = true, var_swap = true, zero = true;
    for (unsigned a = 0; a <= 3; ++a)
      for (unsigned b = 0; b <= 3; ++b) {
        swap_sym = swap_sym &&
                   c.normalized({a, b}) == c.normalized({b, a}) &&
                   c.irreducible({a, b}) == c.irreducible({b, a});
      }
    std::vector<DegVec> keys;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 2; ++b) keys.push_back({a, b});
    for (const auto& m : keys)
      for (const auto& n : keys) {
        pair_swap = pair_swap && c.coprime_pairs(m, n) == c.coprime_pairs(n, m);
        DegVec ms{m[1], m[0]}, ns{n[1], n[0]};
        var_swap = var_swap && c.coprime_pairs(m, n) == c.coprime_pairs(ms, ns);
      }
    for (const auto& n : keys)
      zero = zero && c.coprime_pairs({0, 0}, n) == c.normalized(n);
    report.add_flag("vec.swap_symmetry", swap_sym);
    report.add_flag("vec.pairs_symmetric", pair_swap);
    report.add_flag("vec.pairs_variable_swap", var_swap);
    report.add_flag("vec.pairs_zero_degree", zero);

    bool conv = true;
    VecPartitionOptions all_parts;
    for (const auto& m : keys)
      conv = conv && c.convolution(m, all_parts) == c.normalized(m);
    report.add_flag("vec.convolution_full", conv);

    bool box = true;
    for (unsigned m = 0; m <= 3; ++m) {
      BigInt sum = 0;
      for (unsigned a = 0; a <= m; ++a)
        for (unsigned b = 0; b <= m; ++b) sum += c.normalized({a, b});
      box = box && sum == ipow(BigInt(2), (m + 1) * (m + 1)) - 1;
    }
    report.add_flag("vec.box_partition", box);

    bool mob = true;
    for (unsigned n1 = 0; n1 <= 2; ++n1)
      for (unsigned n2 = 0; n2 <= 2; ++n2) {
        DegVec n{n1, n2};
        for (unsigned m1 = 0; m1 <= n1; ++m1)
          for (unsigned m2 = 0; m2 <= n2; ++m2) {
            DegVec m{m1, m2};
            int sum = 0;
            for (unsigned d1 = m1; d1 <= n1; ++d1)
              for (unsigned d2 = m2; d2 <= n2; ++d2)
                sum += poset_mobius(DegVec{d1, d2}, m);
            mob = mob && sum == (m == n ? 1 : 0);
          }
      }
    report.add_flag("vec.poset_mobius_delta", mob);
  }
  {
    bool ok = true;
    for (unsigned q : {2u, 3u}) {
      NumericDomain dom(q, limits);
      VectorCounter<NumericDomain> c(2, dom, limits);
      for (unsigned n = 1; n <= 6; ++n) {
        ok = ok && irreducible_1n_closed(dom, n) == c.irreducible({1, n});
        ok = ok && irreducible_2n_closed(dom, n) == c.irreducible({2, n});
      }
    }
    report.add_flag("vec.closed_forms", ok);
  }

  // --- truncated approximations ---
  {
    bool alpha_match = true, inverse = true;
    for (unsigned k : {2u, 3u}) {
      AlphaSeq seq = alpha_recursive(k, 2, 6, limits);
      TotalCounter<NumericDomain> c(k, NumericDomain(2, limits), limits);
      for (unsigned i = 0; i <= 6; ++i)
        alpha_match =
            alpha_match && seq.values[i] == alpha_explicit(k, 2, i, limits);
      for (unsigned t = 1; t <= 6; ++t) {
        BigInt sum = 0;
        for (unsigned j = 0; j <= t; ++j)
          sum += seq.values[j] * c.normalized(t - j);
        inverse = inverse && sum == 0;
      }
    }
    report.add_flag("asym.alpha_recursive_vs_explicit", alpha_match);
    report.add_flag("asym.alpha_inverts_series", inverse);
  }
  {
    bool exact = true;
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned n = 1; n <= 4; ++n) {
        ApproxReport r = p_total_approx(2, m, n, 2, std::min(m, n), limits);
        exact = exact && r.abs_error == 0;
      }
    report.add_flag("asym.pairs_exact_at_full_depth", exact);
  }
  {
    auto increasing_below_one = [](const std::vector<BigRational>& s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= 1) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
      }
      return true;
    };
    std::vector<BigRational> total =
        convergence_series(2, 2, RatioMode::total, {2, 3, 4, 5}, limits);
    std::vector<BigRational> vec =
        convergence_series(2, 2, RatioMode::vector, {1, 2, 3}, limits);
    report.add_flag("asym.ratio_series_total", increasing_below_one(total));
    report.add_flag("asym.ratio_series_vector", increasing_below_one(vec));
  }
  {
    // Shallow truncation depths improve the estimate; past the useful depth
    // the tail terms overshoot at small q, so the window stops at t = 3.
    bool dec = true;
    BigInt prev = -1;
    for (unsigned t = 0; t <= 3; ++t) {
      ApproxReport r = i_total_approx(2, 8, 2, t, limits);
      if (t > 0) dec = dec && r.abs_error < prev;
      prev = r.abs_error;
    }
    report.add_flag("asym.error_shrinks_with_depth", dec);
  }

  // --- GF(p) oracle: GCD laws and enumeration uniqueness ---
  {
    std::mt19937 rng(20240901);
    bool sym = true, common = true, zero = true, divides = true, plain = true;
    for (unsigned round = 0; round < 40; ++round) {
      unsigned p = round % 2 == 0 ? 2 : 3;
      unsigned k = 1 + round % 3;
      // Dense three-variable draws keep a lower degree so each invariant
      // round stays well under a second.
      unsigned deg = k == 3 ? 1 : 2;
      gf::MPoly f = verify_detail::random_mpoly(rng, p, k, deg);
      gf::MPoly u = verify_detail::random_mpoly(rng, p, k, deg);
      gf::MPoly v = verify_detail::random_mpoly(rng, p, k, deg);
      gf::MPoly g1 = gf::gcd_multivar(f * u, f * v);
      sym = sym && g1 == gf::gcd_multivar(f * v, f * u);
      common = common && g1 == (f * gf::gcd_multivar(u, v)).normalized();
      zero = zero && gf::gcd_multivar(f, gf::MPoly(p, k)) == f.normalized();
      divides = divides && gf::MPoly::exact_divide(f * u, g1).has_value();
      if (k <= 2)
        plain = plain &&
                g1 == gf::gcd_multivar(f * u, f * v, gf::PrsMode::plain);
    }
    report.add_flag("gcd.symmetric", sym);
    report.add_flag("gcd.common_factor", common);
    report.add_flag("gcd.of_zero", zero);
    report.add_flag("gcd.divides_inputs", divides);
    report.add_flag("gcd.plain_mode_agrees", plain);
  }
  {
    bool distinct = true;
    for (unsigned p : {2u, 3u})
      for (unsigned m = 0; m <= 3; ++m) {
        std::unordered_set<std::string> seen;
        auto polys = gf::collect_total(2, m, p, limits);
        for (const auto& f : polys) seen.insert(f.canonical_key());
        distinct = distinct && seen.size() == polys.size();
      }
    for (unsigned m1 = 0; m1 <= 2; ++m1)
      for (unsigned m2 = 0; m2 <= 2; ++m2) {
        std::unordered_set<std::string> seen;
        auto polys = gf::collect_vec({m1, m2}, 2, limits);
        for (const auto& f : polys) seen.insert(f.canonical_key());
        distinct = distinct && seen.size() == polys.size();
      }
    report.add_flag("enum.streams_distinct", distinct);
  }

  return report;
}

inline VerifyReport verify_all(const Limits& limits = {}) {
  VerifyReport report = verify_tables(limits);
  report.merge(verify_oracle_small(limits));
  report.merge(verify_invariants(limits));
  return report;
}

}  // namespace polycount
