#pragma once

// Truncated approximations of the exact counts, with exact error reporting.
//
// Every function here computes both the exact count and a short approximating
// sum, then reports the absolute error next to the scale term that the
// approximation is expected to stay within. All arithmetic is exact (big
// integers and rationals); nothing here rounds.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycount/config.hpp"
#include "polycount/domain.hpp"
#include "polycount/partitions.hpp"
#include "polycount/scalars.hpp"
#include "polycount/total_counting.hpp"
#include "polycount/vector_counting.hpp"

namespace polycount {

// Comparison of an exact count against a truncated approximation.
//
// `o_term_scale` is the evaluated scale term the error is measured against.
// `ratio` = abs_error / o_term_scale, omitted when the scale is zero (which
// happens only when the truncation already covers every term of the exact
// sum). `o_exponent` is present when the scale is q raised to a possibly
// fractional exponent: it holds the exact exponent, whose ceiling produced
// `o_term_scale`.
struct ApproxReport {
  BigInt exact;
  BigInt approx;
  BigInt abs_error;
  BigInt o_term_scale;
  std::optional<BigRational> ratio;
  std::optional<BigRational> o_exponent;
};

// First-order coefficients for approximating irreducible counts by normalized
// counts: values[i] holds the i-th coefficient for the given k and q.
struct AlphaSeq {
  unsigned k = 0;
  BigInt q;
  std::vector<BigInt> values;
};

namespace detail {

inline ApproxReport make_report(BigInt exact, BigInt approx, BigInt scale,
                                std::optional<BigRational> exponent) {
  ApproxReport r;
  r.exact = std::move(exact);
  r.approx = std::move(approx);
  r.abs_error = abs(r.exact - r.approx);
  r.o_term_scale = std::move(scale);
  if (r.o_term_scale != 0)
    r.ratio = BigRational(r.abs_error, r.o_term_scale);
  r.o_exponent = std::move(exponent);
  return r;
}

// Smallest integer >= num/den (den > 0).
inline BigInt rational_ceil(const BigRational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt quo, rem;
  boost::multiprecision::divide_qr(num, den, quo, rem);
  if (rem != 0 && num > 0) ++quo;
  return quo;
}

inline void require(bool ok, const char* condition) {
  if (!ok) throw HypothesisError(condition);
}

}  // namespace detail

// Coefficients alpha_0..alpha_t defined by alpha_0 = 1 and, for i >= 1,
// alpha_i = -(N(1)*alpha_{i-1} + N(2)*alpha_{i-2} + ... + N(i)*alpha_0),
// where N is the normalized count in k variables. Equivalently, the series
// sum_i alpha_i x^i is the formal reciprocal of sum_i N(i) x^i.
inline AlphaSeq alpha_recursive(unsigned k, const BigInt& q, unsigned t,
                                const Limits& limits = {}) {
  TotalCounter<NumericDomain> counter(k, NumericDomain(q, limits), limits);
  AlphaSeq seq;
  seq.k = k;
  seq.q = q;
  seq.values.reserve(static_cast<std::size_t>(t) + 1);
  seq.values.push_back(1);
  for (unsigned i = 1; i <= t; ++i) {
    BigInt acc = 0;
    for (unsigned j = 1; j <= i; ++j)
      acc += counter.normalized(j) * seq.values[i - j];
    seq.values.push_back(-acc);
  }
  return seq;
}

// The same coefficient computed directly: a signed sum over the partitions of
// i, where a partition with a_j parts equal to j contributes
// (-1)^(a_1+...+a_i) * (a_1+...+a_i)! / (a_1! ... a_i!) * prod_j N(j)^{a_j}.
inline BigInt alpha_explicit(unsigned k, const BigInt& q, unsigned i,
                             const Limits& limits = {}) {
  TotalCounter<NumericDomain> counter(k, NumericDomain(q, limits), limits);
  counter.warm(i);
  BigInt acc = 0;
  for_each_partition(i, i, [&](const std::vector<unsigned>& mult) {
    BigInt term = 1;
    BigInt denom = 1;
    std::uint64_t factors = 0;
    for (unsigned part = 1; part <= i; ++part) {
      if (mult[part] == 0) continue;
      factors += mult[part];
      denom *= factorial(mult[part]);
      term *= ipow(counter.normalized(part), mult[part]);
    }
    term *= exact_quotient(factorial(factors), denom);
    acc += (factors % 2 == 0) ? term : -term;
  });
  return acc;
}

// Irreducible count in k >= 2 variables, total degree m, approximated by
// alpha_0*N(m) + ... + alpha_t*N(m-t). The error scale is
// q^(binomial(m-t-1+k, k)).
inline ApproxReport i_total_approx(unsigned k, unsigned m, const BigInt& q,
                                   unsigned t, const Limits& limits = {}) {
  detail::require(k >= 2, "k >= 2");
  detail::require(m > t, "m > t");
  NumericDomain dom(q, limits);
  TotalCounter<NumericDomain> counter(k, dom, limits);
  AlphaSeq alpha = alpha_recursive(k, q, t, limits);
  BigInt approx = 0;
  for (unsigned i = 0; i <= t; ++i)
    approx += alpha.values[i] * counter.normalized(m - i);
  BigInt exponent = binomial(BigInt(m) - t - 1 + k, k);
  BigInt scale = dom.q_power(exponent);
  return detail::make_report(counter.irreducible(m), std::move(approx),
                             std::move(scale), BigRational(exponent));
}

// Relatively-prime pair count in k >= 2 variables at total degrees (m, n),
// approximated by the first t+1 terms of the defining sum. The error scale is
// N(m-t-1)*N(n-t-1); a normalized count at a negative degree is zero, so the
// scale (and the error) vanish once the truncation covers the whole sum.
inline ApproxReport p_total_approx(unsigned k, unsigned m, unsigned n,
                                   const BigInt& q, unsigned t,
                                   const Limits& limits = {}) {
  detail::require(k >= 2, "k >= 2");
  TotalCounter<NumericDomain> counter(k, NumericDomain(q, limits), limits);
  BigInt approx = 0;
  for (unsigned d = 0; d <= t && d <= m && d <= n; ++d)
    approx += counter.normalized(m - d) * counter.normalized(n - d) *
              counter.mobius_sum(d);
  BigInt scale = 0;
  if (t + 1 <= m && t + 1 <= n)
    scale = counter.normalized(m - t - 1) * counter.normalized(n - t - 1);
  return detail::make_report(counter.coprime_pairs(m, n), std::move(approx),
                             std::move(scale), std::nullopt);
}

// Irreducible count at vector degree m = (m_1, ..., m_k), approximated by
// N(m) - q*N(m_1, ..., m_{k-1}, m_k - 1). Requires k >= 2, every component
// positive, m_1 the largest of the first k-1 components, and m_1 >= 3 when
// k = 2 (>= 2 when k = 3). The error scale is q^(m_1*(m_2+1)*...*(m_k+1)).
inline ApproxReport i_vec_approx(const DegVec& m, const BigInt& q,
                                 const Limits& limits = {}) {
  const unsigned k = static_cast<unsigned>(m.size());
  detail::require(k >= 2, "k >= 2");
  for (unsigned c : m) detail::require(c >= 1, "every degree component >= 1");
  for (unsigned i = 0; i + 1 < k; ++i)
    detail::require(m[0] >= m[i],
                    "m_1 is the largest of the first k-1 components");
  if (k == 2) detail::require(m[0] >= 3, "m_1 >= 3 when k = 2");
  if (k == 3) detail::require(m[0] >= 2, "m_1 >= 2 when k = 3");

  NumericDomain dom(q, limits);
  VectorCounter<NumericDomain> counter(k, dom, limits);
  DegVec lowered = m;
  --lowered.back();
  BigInt approx = counter.normalized(m) - q * counter.normalized(lowered);
  BigInt exponent = m[0];
  for (unsigned i = 1; i < k; ++i) exponent *= BigInt(m[i]) + 1;
  BigInt scale = dom.q_power(exponent);
  return detail::make_report(counter.irreducible(m), std::move(approx),
                             std::move(scale), BigRational(exponent));
}

namespace detail {

// max over j in [lo, hi) of
//   (m_j - t_j)/(m_j + 1) * prod_i(m_i + 1) + (n_j - t_j)/(n_j + 1) * prod_i(n_i + 1),
// the exponent of the error scale for the truncated vector-degree pair count.
inline BigRational pair_scale_exponent(const DegVec& m, const DegVec& n,
                                       const DegVec& t, std::size_t lo,
                                       std::size_t hi) {
  BigInt pm = 1, pn = 1;
  for (unsigned c : m) pm *= BigInt(c) + 1;
  for (unsigned c : n) pn *= BigInt(c) + 1;
  BigRational best;
  for (std::size_t j = lo; j < hi; ++j) {
    BigRational cand =
        BigRational(BigInt(m[j]) - t[j], BigInt(m[j]) + 1) * BigRational(pm) +
        BigRational(BigInt(n[j]) - t[j], BigInt(n[j]) + 1) * BigRational(pn);
    if (j == lo || cand > best) best = cand;
  }
  return best;
}

}  // namespace detail

// Relatively-prime pair count at vector degrees (m, n), approximated by the
// partial sum over difference vectors d <= t. Requires t <= m, t <= n, and
// max(m_i, n_i) > 2*t_i + 1 in every coordinate. The error scale exponent is
// fractional in general; it is kept exact in `o_exponent` and rounded up to
// produce the integer q-power in `o_term_scale`.
inline ApproxReport p_vec_approx(const DegVec& m, const DegVec& n,
                                 const DegVec& t, const BigInt& q,
                                 const Limits& limits = {}) {
  const unsigned k = static_cast<unsigned>(m.size());
  if (n.size() != m.size() || t.size() != m.size())
    throw std::invalid_argument("p_vec_approx: dimension mismatch");
  detail::require(k >= 2, "k >= 2");
  for (unsigned i = 0; i < k; ++i) {
    detail::require(t[i] <= m[i] && t[i] <= n[i], "t <= m and t <= n");
    detail::require(std::max(m[i], n[i]) > 2 * t[i] + 1,
                    "max(m_i, n_i) > 2*t_i + 1 in every coordinate");
  }

  NumericDomain dom(q, limits);
  VectorCounter<NumericDomain> counter(k, dom, limits);
  BigInt approx = 0;
  DegVec d(k, 0);
  while (true) {
    DegVec md(k), nd(k);
    for (unsigned i = 0; i < k; ++i) {
      md[i] = m[i] - d[i];
      nd[i] = n[i] - d[i];
    }
    approx +=
        counter.normalized(md) * counter.normalized(nd) * counter.mobius_sum(d);
    std::size_t pos = 0;
    while (pos < k && d[pos] == t[pos]) d[pos++] = 0;
    if (pos == k) break;
    ++d[pos];
  }
  BigRational exponent = detail::pair_scale_exponent(m, n, t, 0, k);
  BigInt scale = dom.q_power(detail::rational_ceil(exponent));
  return detail::make_report(counter.coprime_pairs(m, n), std::move(approx),
                             std::move(scale), std::move(exponent));
}

// Two-term approximation of the vector-degree pair count:
// N(m)*N(n) - q*N(m_1,...,m_k - 1)*N(n_1,...,n_k - 1). Requires m_k > 0,
// n_k > 0, and max(m_i, n_i) >= 1 for each earlier coordinate.
inline ApproxReport p_vec_two_term(const DegVec& m, const DegVec& n,
                                   const BigInt& q,
                                   const Limits& limits = {}) {
  const unsigned k = static_cast<unsigned>(m.size());
  if (n.size() != m.size())
    throw std::invalid_argument("p_vec_two_term: dimension mismatch");
  detail::require(k >= 2, "k >= 2");
  detail::require(m[k - 1] > 0 && n[k - 1] > 0, "m_k > 0 and n_k > 0");
  for (unsigned i = 0; i + 1 < k; ++i)
    detail::require(std::max(m[i], n[i]) >= 1,
                    "max(m_i, n_i) >= 1 for every coordinate before the last");

  NumericDomain dom(q, limits);
  VectorCounter<NumericDomain> counter(k, dom, limits);
  DegVec ml = m, nl = n;
  --ml.back();
  --nl.back();
  BigInt approx = counter.normalized(m) * counter.normalized(n) -
                  q * counter.normalized(ml) * counter.normalized(nl);
  DegVec zero_t(k, 0);
  BigRational exponent = detail::pair_scale_exponent(m, n, zero_t, 0, k - 1);
  BigInt scale = dom.q_power(detail::rational_ceil(exponent));
  return detail::make_report(counter.coprime_pairs(m, n), std::move(approx),
                             std::move(scale), std::move(exponent));
}

enum class RatioMode { total, vector };

// Exact ratios P/(N*N) along a diagonal: for each degree m in `degrees`, the
// relatively-prime pair count at (m; m) divided by the squared normalized
// count, at total degree m (total mode) or at vector degree (m, ..., m)
// (vector mode). Returned in input order as reduced rationals.
inline std::vector<BigRational> convergence_series(
    unsigned k, const BigInt& q, RatioMode mode,
    const std::vector<unsigned>& degrees, const Limits& limits = {}) {
  NumericDomain dom(q, limits);
  std::vector<BigRational> out;
  out.reserve(degrees.size());
  if (mode == RatioMode::total) {
    TotalCounter<NumericDomain> counter(k, dom, limits);
    for (unsigned m : degrees) {
      BigInt nn = counter.normalized(m);
      out.emplace_back(counter.coprime_pairs(m, m), nn * nn);
    }
  } else {
    VectorCounter<NumericDomain> counter(k, dom, limits);
    for (unsigned m : degrees) {
      DegVec mv(k, m);
      BigInt nn = counter.normalized(mv);
      out.emplace_back(counter.coprime_pairs(mv, mv), nn * nn);
    }
  }
  return out;
}

}  // namespace polycount
