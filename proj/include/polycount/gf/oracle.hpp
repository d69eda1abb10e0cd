#pragma once

// Brute-force ground truth over GF(p): exhaustive enumeration of normalized
// polynomials by total or vector degree, irreducibility counting by marking
// all nonconstant products, coprimality counting by running a multivariate
// GCD over every pair, and the GCD itself (a content/primitive-part recursion
// whose inner loop is a pseudo-remainder sequence). Everything here is meant
// for small degrees; enumeration sizes are pre-checked against the counting
// formulas and enforced exactly.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "polycount/config.hpp"
#include "polycount/domain.hpp"
#include "polycount/gf/mpoly.hpp"
#include "polycount/partitions.hpp"
#include "polycount/scalars.hpp"
#include "polycount/total_counting.hpp"
#include "polycount/vector_counting.hpp"

namespace polycount::gf {

// The pseudo-remainder loop either divides each new element by its content
// (primitive: coefficient growth stays tame) or keeps the raw sequence
// (plain: the textbook iteration, useful as a differential reference).
enum class PrsMode { primitive, plain };

inline MPoly gcd_multivar(const MPoly& f, const MPoly& g,
                          PrsMode mode = PrsMode::primitive);

namespace detail {

inline MPoly divide_checked(const MPoly& f, const MPoly& d) {
  auto quo = MPoly::exact_divide(f, d);
  if (!quo) throw std::logic_error("gcd_multivar: expected exact divisibility");
  return std::move(*quo);
}

// GCD of the coefficients of f viewed as a polynomial in x_{var+1}; the
// result involves only the other variables and has leading coefficient 1.
inline MPoly content_in(const MPoly& f, unsigned var, PrsMode mode) {
  MPoly acc(f.p(), f.k());
  unsigned top = f.degree_in(var);
  for (unsigned power = 0; power <= top; ++power) {
    MPoly c = f.coefficient_of(var, power);
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? c.normalized() : gcd_multivar(acc, c, mode);
    if (acc.is_one()) break;
  }
  return acc;
}

// Classical one-variable Euclid for inputs that involve x_{var+1} only,
// run on flat coefficient vectors so the remainder steps stay in place.
inline MPoly euclid_univariate(const MPoly& a0, const MPoly& b0, unsigned var) {
  const unsigned p = a0.p();
  auto to_coeffs = [&](const MPoly& h) {
    std::vector<std::uint32_t> c(h.is_zero() ? 0 : h.degree_in(var) + 1, 0);
    for (const Term& t : h.terms()) c[t.exp[var]] = t.coef;
    return c;
  };
  auto trim = [](std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  };
  std::vector<std::uint32_t> a = to_coeffs(a0), b = to_coeffs(b0);
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint32_t inv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint32_t scale = a.back() * inv % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] = (a[i + shift] + p - scale * b[i] % p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  std::uint32_t inv = fp_inv(a.back(), p);
  std::vector<Term> terms;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    ExpVec exp{};
    exp[var] = static_cast<std::uint16_t>(i);
    terms.push_back({exp, a[i] * inv % p});
  }
  return MPoly::from_sorted_terms(p, a0.k(), std::move(terms));
}

// One full pseudo-remainder of hp modulo hc in x_{var+1}: the
// leading-cancellation update
//   hp <- lc(hc) * hp - lc(hp) * x^(deg hp - deg hc) * hc
// repeated until the degree in the eliminated variable falls below deg(hc).
inline MPoly pseudo_remainder(MPoly hp, const MPoly& hc, unsigned var) {
  unsigned dc = hc.degree_in(var);
  MPoly lead = hc.coefficient_of(var, dc);
  while (!hp.is_zero() && hp.degree_in(var) >= dc) {
    unsigned dp = hp.degree_in(var);
    MPoly cancel = hp.coefficient_of(var, dp) * hc.times_power(var, dp - dc);
    hp = lead * hp - cancel;
    assert(hp.is_zero() || hp.degree_in(var) < dp);
  }
  return hp;
}

// Pseudo-remainder sequence in x_{var+1} on two inputs of positive degree;
// returns the primitive part of the last nonzero element. Stripping the
// content after every full remainder (primitive mode) is what keeps the
// coefficient degrees from compounding across the sequence; reducing only
// one leading term per sequence element instead lets them grow roughly like
// a Fibonacci recurrence and overflows the exponent range already on dense
// three-variable cubics.
inline MPoly prs_gcd(MPoly hp, MPoly hc, unsigned var, PrsMode mode) {
  if (hp.degree_in(var) < hc.degree_in(var)) std::swap(hp, hc);
  while (true) {
    MPoly next = pseudo_remainder(hp, hc, var);
    if (next.is_zero()) break;
    if (mode == PrsMode::primitive)
      next = divide_checked(next, content_in(next, var, mode));
    hp = std::move(hc);
    hc = std::move(next);
  }
  return divide_checked(hc, content_in(hc, var, mode));
}

}  // namespace detail

// Normalized greatest common divisor. The recursion works on the highest
// variable occurring in either input: both are split into content (the GCD of
// their coefficients, living in the lower variables) and primitive part; the
// primitive parts go through the pseudo-remainder loop, the contents recurse,
// and gcd(f, g) = gcd(contents) * gcd(primitive parts). One-variable inputs
// use the classical Euclidean algorithm directly.
inline MPoly gcd_multivar(const MPoly& f, const MPoly& g, PrsMode mode) {
  if (f.p() != g.p() || f.k() != g.k())
    throw std::invalid_argument("gcd_multivar: mixed modulus or variable count");
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd_multivar: both inputs are zero");
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();

  int var = -1;
  for (int i = static_cast<int>(f.k()) - 1; i >= 0; --i) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
      var = i;
      break;
    }
  }
  if (var < 0) return MPoly::one(f.p(), f.k());  // two nonzero constants

  bool lower_vars = false;
  for (int i = 0; i < var && !lower_vars; ++i)
    lower_vars = f.degree_in(i) > 0 || g.degree_in(i) > 0;
  if (!lower_vars) return detail::euclid_univariate(f, g, var);

  unsigned df = f.degree_in(var);
  unsigned dg = g.degree_in(var);
  // An input free of the main variable can only share factors with the other
  // input's content.
  if (df == 0) return gcd_multivar(f, detail::content_in(g, var, mode), mode);
  if (dg == 0) return gcd_multivar(detail::content_in(f, var, mode), g, mode);

  MPoly cf = detail::content_in(f, var, mode);
  MPoly cg = detail::content_in(g, var, mode);
  MPoly prim = detail::prs_gcd(detail::divide_checked(f, cf),
                               detail::divide_checked(g, cg), var, mode);
  MPoly cont = gcd_multivar(cf, cg, mode);
  return (cont * prim).normalized();
}

namespace detail {

inline void check_enum_budget(const BigInt& work, const Limits& limits) {
  if (work > limits.max_enum)
    throw ResourceLimitError("enumeration budget exceeded (max_enum = " +
                             std::to_string(limits.max_enum) + ", needed " +
                             work.str() + ")");
}

inline std::vector<ExpVec> monomials_upto_total(unsigned k, unsigned m) {
  std::vector<ExpVec> out;
  ExpVec cur{};
  auto rec = [&](auto&& self, unsigned var, unsigned rem) -> void {
    if (var + 1 == k) {
      for (unsigned e = 0; e <= rem; ++e) {
        cur[var] = static_cast<std::uint16_t>(e);
        out.push_back(cur);
      }
      cur[var] = 0;
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      cur[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(),
            [](const ExpVec& a, const ExpVec& b) { return grlex_less(b, a); });
  return out;
}

inline std::vector<ExpVec> monomials_in_box(const DegVec& m) {
  std::vector<ExpVec> out;
  ExpVec cur{};
  auto rec = [&](auto&& self, unsigned var) -> void {
    if (var == m.size()) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= m[var]; ++e) {
      cur[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1);
    }
    cur[var] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const ExpVec& a, const ExpVec& b) { return grlex_less(b, a); });
  return out;
}

// Runs fn on the polynomial "lead monomial with coefficient 1 plus an
// arbitrary combination of the strictly smaller monomials", for every
// coefficient assignment, in a deterministic odometer order.
template <typename Fn>
void emit_with_lead(unsigned p, unsigned k, const std::vector<ExpVec>& mons,
                    std::size_t lead, Fn&& fn) {
  const std::size_t free_count = mons.size() - lead - 1;
  std::vector<std::uint32_t> coefs(free_count, 0);
  std::vector<Term> terms;
  while (true) {
    terms.clear();
    terms.push_back({mons[lead], 1});
    for (std::size_t i = 0; i < free_count; ++i)
      if (coefs[i] != 0) terms.push_back({mons[lead + 1 + i], coefs[i]});
    fn(MPoly::from_sorted_terms(p, k, terms));
    std::size_t pos = 0;
    while (pos < free_count && coefs[pos] == p - 1) coefs[pos++] = 0;
    if (pos == free_count) break;
    ++coefs[pos];
  }
}

}  // namespace detail

// Every normalized polynomial in k variables of total degree exactly m over
// GF(p), each exactly once, in a deterministic order. The stream size is
// checked against the counting formula and a mismatch is a hard error.
template <typename Fn>
void enumerate_total(unsigned k, unsigned m, unsigned p, const Limits& limits,
                     Fn&& fn) {
  TotalCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);
  BigInt predicted = counter.normalized(m);
  detail::check_enum_budget(predicted, limits);
  std::vector<ExpVec> mons = detail::monomials_upto_total(k, m);
  BigInt count = 0;
  // Descending order puts all degree-m monomials first; each of them leads
  // exactly the polynomials whose remaining support lies strictly below it.
  for (std::size_t lead = 0;
       lead < mons.size() && exp_sum(mons[lead]) == m; ++lead) {
    detail::emit_with_lead(p, k, mons, lead, [&](MPoly poly) {
      ++count;
      fn(std::move(poly));
    });
  }
  if (count != predicted)
    throw std::logic_error("enumerate_total: stream size mismatch");
}

// Every normalized polynomial of vector degree exactly m (componentwise),
// size-checked against the counting formula.
template <typename Fn>
void enumerate_vec(const DegVec& m, unsigned p, const Limits& limits,
                   Fn&& fn) {
  const unsigned k = static_cast<unsigned>(m.size());
  VectorCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);
  BigInt predicted = counter.normalized(m);
  // The scan visits every polynomial supported on the degree box and filters
  // by exact vector degree, so the budget check covers the whole scan
  // (1 + p + ... + p^(box size - 1)), not just the output.
  BigInt box_count = 1;
  for (unsigned c : m) box_count *= BigInt(c) + 1;
  BigInt scan = 0, power = 1;
  for (BigInt i = 0; i < box_count; ++i) {
    scan += power;
    if (scan > limits.max_enum) break;
    power *= p;
  }
  detail::check_enum_budget(scan, limits);
  std::vector<ExpVec> mons = detail::monomials_in_box(m);
  BigInt count = 0;
  for (std::size_t lead = 0; lead < mons.size(); ++lead) {
    detail::emit_with_lead(p, k, mons, lead, [&](MPoly poly) {
      if (poly.vector_degree() != m) return;
      ++count;
      fn(std::move(poly));
    });
  }
  if (count != predicted)
    throw std::logic_error("enumerate_vec: stream size mismatch");
}

inline std::vector<MPoly> collect_total(unsigned k, unsigned m, unsigned p,
                                        const Limits& limits = {}) {
  std::vector<MPoly> out;
  enumerate_total(k, m, p, limits, [&](MPoly f) { out.push_back(std::move(f)); });
  return out;
}

inline std::vector<MPoly> collect_vec(const DegVec& m, unsigned p,
                                      const Limits& limits = {}) {
  std::vector<MPoly> out;
  enumerate_vec(m, p, limits, [&](MPoly f) { out.push_back(std::move(f)); });
  return out;
}

namespace detail {

// Inserts the canonical keys of g*h for all g in gs, h in hs. When both lists
// are the same list, the pair loop is halved (the product set is symmetric).
inline void mark_products(const std::vector<MPoly>& gs,
                          const std::vector<MPoly>& hs, bool same,
                          std::unordered_set<std::string>& reducible) {
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = same ? i : 0; j < hs.size(); ++j)
      reducible.insert((gs[i] * hs[j]).canonical_key());
}

// Ordered coprime pairs between two enumerated lists; when the lists are
// identical the loop runs over unordered pairs and doubles off-diagonal hits
// (the GCD is symmetric).
inline BigInt count_coprime_pairs(const std::vector<MPoly>& fs,
                                  const std::vector<MPoly>& gs, bool same) {
  BigInt count = 0;
  if (same) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].is_constant()) ++count;  // gcd(f, f) = 1 only for constants
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (gcd_multivar(fs[i], fs[j]).is_constant()) count += 2;
    }
    return count;
  }
  for (const MPoly& f : fs)
    for (const MPoly& g : gs)
      if (gcd_multivar(f, g).is_constant()) ++count;
  return count;
}

}  // namespace detail

// |normalized of total degree m| minus |products of two nonconstant
// normalized factors|, found by marking every such product.
inline BigInt oracle_irreducible_total(unsigned k, unsigned m, unsigned p,
                                       const Limits& limits = {}) {
  if (m == 0)
    throw std::invalid_argument(
        "oracle_irreducible_total: degree must be >= 1");
  TotalCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);
  BigInt work = 0;
  for (unsigned a = 1; 2 * a <= m; ++a)
    work += counter.normalized(a) * counter.normalized(m - a);
  detail::check_enum_budget(work, limits);

  std::unordered_set<std::string> reducible;
  for (unsigned a = 1; 2 * a <= m; ++a) {
    std::vector<MPoly> gs = collect_total(k, a, p, limits);
    std::vector<MPoly> hs =
        (2 * a == m) ? gs : collect_total(k, m - a, p, limits);
    detail::mark_products(gs, hs, 2 * a == m, reducible);
  }
  return counter.normalized(m) - BigInt(reducible.size());
}

// Vector-degree version: products of factors at every componentwise split
// m = a + b with both parts nonzero (vector degrees add under products).
inline BigInt oracle_irreducible_vec(const DegVec& m, unsigned p,
                                     const Limits& limits = {}) {
  const unsigned k = static_cast<unsigned>(m.size());
  bool all_zero = true;
  for (unsigned c : m) all_zero = all_zero && c == 0;
  if (all_zero)
    throw std::invalid_argument(
        "oracle_irreducible_vec: degree key must be nonzero");
  VectorCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);

  // Splits m = a + b, deduplicated by keeping a <= b lexicographically.
  std::vector<std::pair<DegVec, DegVec>> splits;
  DegVec a(k, 0);
  while (true) {
    DegVec b(k);
    for (unsigned i = 0; i < k; ++i) b[i] = m[i] - a[i];
    bool a_zero = true, b_zero = true;
    for (unsigned i = 0; i < k; ++i) {
      a_zero = a_zero && a[i] == 0;
      b_zero = b_zero && b[i] == 0;
    }
    if (!a_zero && !b_zero && a <= b) splits.emplace_back(a, b);
    std::size_t pos = 0;
    while (pos < k && a[pos] == m[pos]) a[pos++] = 0;
    if (pos == k) break;
    ++a[pos];
  }

  BigInt work = 0;
  for (const auto& [sa, sb] : splits)
    work += counter.normalized(sa) * counter.normalized(sb);
  detail::check_enum_budget(work, limits);

  std::unordered_set<std::string> reducible;
  for (const auto& [sa, sb] : splits) {
    std::vector<MPoly> gs = collect_vec(sa, p, limits);
    std::vector<MPoly> hs = (sa == sb) ? gs : collect_vec(sb, p, limits);
    detail::mark_products(gs, hs, sa == sb, reducible);
  }
  return counter.normalized(m) - BigInt(reducible.size());
}

// Ordered pairs (f, g) of normalized polynomials at total degrees (m, n)
// whose GCD is constant, by running the GCD on every pair.
inline BigInt oracle_coprime_total(unsigned k, unsigned m, unsigned n,
                                   unsigned p, const Limits& limits = {}) {
  TotalCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);
  detail::check_enum_budget(counter.normalized(m) * counter.normalized(n),
                            limits);
  std::vector<MPoly> fs = collect_total(k, m, p, limits);
  if (m == n) return detail::count_coprime_pairs(fs, fs, true);
  std::vector<MPoly> gs = collect_total(k, n, p, limits);
  return detail::count_coprime_pairs(fs, gs, false);
}

inline BigInt oracle_coprime_vec(const DegVec& m, const DegVec& n, unsigned p,
                                 const Limits& limits = {}) {
  const unsigned k = static_cast<unsigned>(m.size());
  if (n.size() != m.size())
    throw std::invalid_argument("oracle_coprime_vec: dimension mismatch");
  VectorCounter<NumericDomain> counter(k, NumericDomain(p, limits), limits);
  detail::check_enum_budget(counter.normalized(m) * counter.normalized(n),
                            limits);
  std::vector<MPoly> fs = collect_vec(m, p, limits);
  if (m == n) return detail::count_coprime_pairs(fs, fs, true);
  std::vector<MPoly> gs = collect_vec(n, p, limits);
  return detail::count_coprime_pairs(fs, gs, false);
}

}  // namespace polycount::gf
