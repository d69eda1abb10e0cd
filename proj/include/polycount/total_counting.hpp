#pragma once

#include <cstdint>
#include <vector>

#include "polycount/domain.hpp"
#include "polycount/partitions.hpp"
#include "polycount/scalars.hpp"

namespace polycount {

// Counting by total degree in k variables, generic over the value domain.
//
//   normalized(m)    N_k(m), classes of nonzero polynomials of degree m up to
//                    scalars; (q^C(m+k,k) - q^C(m-1+k,k)) / (q-1), N_k(0) = 1
//   irreducible(m)   I_k(m), via N minus the factorization convolution over
//                    partitions with parts <= m-1, memoized bottom-up
//   mobius_sum(d)    A_k(d), the signed squarefree sum
//                    sum over partitions of d with sign (-1)^(number of
//                    factors) of products of distinct-choice binomials
//   coprime_pairs    P_k(m;n) = sum_d N(m-d) N(n-d) A(d)
//   smooth_count     degree-m classes all of whose irreducible factors have
//                    degree <= m-t
//
// Population is single-writer and bottom-up; after warm(max_m), queries with
// keys inside the warmed range do not mutate and may be shared across
// threads.
template <ValueDomain D>
class TotalCounter {
 public:
  using Value = typename D::Value;

  TotalCounter(unsigned k, D dom, Limits limits = {})
      : k_(k), dom_(std::move(dom)), limits_(limits) {
    if (k == 0) throw std::invalid_argument("TotalCounter: k must be >= 1");
  }

  unsigned k() const { return k_; }
  const D& domain() const { return dom_; }

  Value normalized(unsigned m) {
    ensure_normalized(m);
    return n_[m];
  }

  Value irreducible(unsigned m) {
    ensure_irreducible(m);
    return i_[m];
  }

  Value mobius_sum(unsigned d) {
    ensure_mobius(d);
    return a_[d];
  }

  Value coprime_pairs(unsigned m, unsigned n) {
    Value acc = dom_.zero();
    unsigned dmax = std::min(m, n);
    for (unsigned d = 0; d <= dmax; ++d) {
      Value cell = dom_.mul(normalized(m - d), normalized(n - d));
      acc = dom_.add(acc, dom_.mul(cell, mobius_sum(d)));
    }
    return acc;
  }

  Value smooth_count(unsigned m, unsigned t) {
    if (t > m) throw std::invalid_argument("smooth_count: t must be <= m");
    return convolution(m, m - t);
  }

  // The factorization-counting kernel: number of degree-m classes whose
  // irreducible factors all have degree <= max_part, as the partition
  // convolution of multiset binomials. Shared by irreducible() and
  // smooth_count(); with max_part >= m it reproduces normalized(m).
  Value convolution(unsigned m, unsigned max_part) {
    unsigned top = std::min(m, max_part);
    ensure_irreducible(top);
    Value acc = dom_.zero();
    for_each_partition(m, top, [&](const std::vector<unsigned>& mult) {
      Value term = dom_.one();
      for (unsigned part = 1; part <= top; ++part)
        if (mult[part] != 0)
          term = dom_.mul(term, multiset_binomial(dom_, i_[part], mult[part]));
      acc = dom_.add(acc, term);
    });
    return acc;
  }

  void warm(unsigned max_m) {
    ensure_normalized(max_m);
    ensure_irreducible(max_m);
    ensure_mobius(max_m);
  }

 private:
  unsigned k_;
  D dom_;
  Limits limits_;
  std::vector<Value> n_, i_, a_;

  void ensure_normalized(unsigned m) {
    for (unsigned mm = static_cast<unsigned>(n_.size()); mm <= m; ++mm) {
      if (mm == 0) {
        n_.push_back(dom_.one());
        continue;
      }
      Value span = dom_.sub(dom_.q_power(binomial(BigInt(mm) + k_, k_)),
                            dom_.q_power(binomial(BigInt(mm) - 1 + k_, k_)));
      Value denom = dom_.sub(dom_.q_power(1), dom_.one());
      // The quotient is a geometric sum, so symbolically it must come out
      // with integer coefficients; downstream counts (irreducible, signed
      // sums, pairs) are only integer-valued at integer q and are not
      // checked this way.
      Value v = dom_.exact_div(span, denom);
      dom_.check_integral(v);
      n_.push_back(std::move(v));
    }
  }

  void ensure_irreducible(unsigned m) {
    for (unsigned mm = static_cast<unsigned>(i_.size()); mm <= m; ++mm) {
      if (mm == 0) {
        i_.push_back(dom_.zero());
        continue;
      }
      i_.push_back(dom_.sub(normalized(mm), convolution(mm, mm - 1)));
    }
  }

  void ensure_mobius(unsigned d) {
    for (unsigned dd = static_cast<unsigned>(a_.size()); dd <= d; ++dd) {
      if (dd == 0) {
        a_.push_back(dom_.one());
        continue;
      }
      ensure_irreducible(dd);
      Value acc = dom_.zero();
      for_each_partition(dd, dd, [&](const std::vector<unsigned>& mult) {
        Value term = dom_.one();
        std::uint64_t factors = 0;
        for (unsigned part = 1; part <= dd; ++part)
          if (mult[part] != 0) {
            factors += mult[part];
            term = dom_.mul(term, choose_binomial(dom_, i_[part], mult[part]));
          }
        acc = (factors % 2 == 0) ? dom_.add(acc, term) : dom_.sub(acc, term);
      });
      a_.push_back(std::move(acc));
    }
  }
};

// One-variable count by the number-theoretic Mobius formula:
// (1/m) * sum over d | m of mu(d) q^(m/d). Cross-checked in tests against
// TotalCounter with k = 1.
template <ValueDomain D>
typename D::Value irreducible_univariate(unsigned m, const D& dom) {
  if (m == 0)
    throw std::invalid_argument("irreducible_univariate: m must be >= 1");
  typename D::Value acc = dom.zero();
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = mobius_mu(d);
    if (mu == 0) continue;
    typename D::Value power = dom.q_power(m / d);
    acc = mu > 0 ? dom.add(acc, power) : dom.sub(acc, power);
  }
  return dom.exact_div(acc, dom.from_integer(m));
}

}  // namespace polycount
