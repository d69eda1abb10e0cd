#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polycount/domain.hpp"
#include "polycount/partitions.hpp"
#include "polycount/scalars.hpp"

namespace polycount {

// Mobius function of the componentwise-ordered grid (N^k, <=):
// (-1)^(sum of differences) when m - n has all components in {0,1}, else 0.
inline int poset_mobius(const DegVec& m, const DegVec& n) {
  if (m.size() != n.size())
    throw std::invalid_argument("poset_mobius: dimension mismatch");
  unsigned total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (n[i] > m[i])
      throw std::invalid_argument("poset_mobius: n must be <= m");
    unsigned diff = m[i] - n[i];
    if (diff > 1) return 0;
    total += diff;
  }
  return total % 2 == 0 ? 1 : -1;
}

// Counting by vector degree (the k-tuple of per-variable degrees), generic
// over the value domain. Same quantities as TotalCounter with degree keys
// replaced by vectors:
//
//   normalized(m)    N_k(m) = (1/(q-1)) * sum over delta in {0,1}^k of
//                    (-1)^(k + |delta|) q^(prod (m_i + delta_i))
//   irreducible(m)   recursion: N minus the convolution over all vector
//                    partitions except the one-part decomposition
//   mobius_sum(d)    signed squarefree sum over vector partitions
//   coprime_pairs    P_k(m;n) = sum over d <= min(m,n) of N(m-d)N(n-d)A(d)
//   smooth_count     vector-degree-m classes whose irreducible factors all
//                    have first-variable degree <= m_1 - t_1
//
// Memoization covers the downset {v : v <= m}; warm() fills it in graded
// order (component sum, then lexicographic), after which lookups inside the
// warmed downset do not mutate.
template <ValueDomain D>
class VectorCounter {
 public:
  using Value = typename D::Value;

  VectorCounter(unsigned k, D dom, Limits limits = {})
      : k_(k), dom_(std::move(dom)), limits_(limits) {
    if (k == 0) throw std::invalid_argument("VectorCounter: k must be >= 1");
    if (k > 24) throw std::invalid_argument("VectorCounter: k is too large");
  }

  unsigned k() const { return k_; }
  const D& domain() const { return dom_; }

  Value normalized(const DegVec& m) {
    check_dims(m);
    auto it = n_.find(m);
    if (it != n_.end()) return it->second;
    Value acc = dom_.zero();
    for (std::uint32_t delta = 0; delta < (1u << k_); ++delta) {
      BigInt exponent = 1;
      unsigned ones = 0;
      for (unsigned i = 0; i < k_; ++i) {
        unsigned bit = (delta >> i) & 1u;
        ones += bit;
        exponent *= m[i] + bit;
      }
      Value power = dom_.q_power(exponent);
      acc = (k_ + ones) % 2 == 0 ? dom_.add(acc, power) : dom_.sub(acc, power);
    }
    Value denom = dom_.sub(dom_.q_power(1), dom_.one());
    // Structurally exact: the signed power sum vanishes at q = 1, so the
    // quotient by q - 1 keeps integer coefficients. The derived counts below
    // are only integer-valued at integer q, so they carry no such check.
    Value v = dom_.exact_div(acc, denom);
    dom_.check_integral(v);
    return n_.emplace(m, std::move(v)).first->second;
  }

  Value irreducible(const DegVec& m) {
    check_dims(m);
    warm(m);
    return i_.at(m);
  }

  Value mobius_sum(const DegVec& d) {
    check_dims(d);
    auto it = a_.find(d);
    if (it != a_.end()) return it->second;
    warm(d);
    Value acc = dom_.zero();
    for_each_vector_partition(
        d, {}, limits_, [&](const std::vector<VecPart>& terms) {
          Value term = dom_.one();
          std::uint64_t factors = 0;
          for (const VecPart& t : terms) {
            factors += t.mult;
            term = dom_.mul(term,
                            choose_binomial(dom_, i_.at(t.part), t.mult));
          }
          acc = (factors % 2 == 0) ? dom_.add(acc, term) : dom_.sub(acc, term);
        });
    return a_.emplace(d, std::move(acc)).first->second;
  }

  Value coprime_pairs(const DegVec& m, const DegVec& n) {
    check_dims(m);
    check_dims(n);
    DegVec dmin(k_);
    for (unsigned i = 0; i < k_; ++i) dmin[i] = std::min(m[i], n[i]);
    warm(dmin);
    Value acc = dom_.zero();
    for_each_in_box(dmin, [&](const DegVec& d) {
      Value cell = dom_.mul(normalized(subtract(m, d)),
                            normalized(subtract(n, d)));
      acc = dom_.add(acc, dom_.mul(cell, mobius_sum(d)));
    });
    return acc;
  }

  Value smooth_count(const DegVec& m, unsigned t1) {
    check_dims(m);
    if (t1 > m[0])
      throw std::invalid_argument("smooth_count: t1 must be <= m[0]");
    warm(m);
    VecPartitionOptions opt;
    opt.first_component_cap = m[0] - t1;
    return convolution(m, opt);
  }

  // The factorization convolution over vector partitions of m (restricted by
  // the options), with irreducible counts memoized beforehand via warm().
  Value convolution(const DegVec& m, const VecPartitionOptions& options) {
    check_dims(m);
    warm(m);
    Value acc = dom_.zero();
    for_each_vector_partition(
        m, options, limits_, [&](const std::vector<VecPart>& terms) {
          Value term = dom_.one();
          for (const VecPart& t : terms)
            term = dom_.mul(term,
                            multiset_binomial(dom_, i_.at(t.part), t.mult));
          acc = dom_.add(acc, term);
        });
    return acc;
  }

  // Fills the irreducible-count memo over the downset of m in graded order.
  void warm(const DegVec& m) {
    check_dims(m);
    BigInt downset = 1;
    for (unsigned c : m) downset *= c + 1;
    if (downset > limits_.max_nodes)
      throw ResourceLimitError("downset of size " + downset.str() +
                               " exceeds the node budget of " +
                               std::to_string(limits_.max_nodes));
    std::vector<DegVec> keys;
    for_each_in_box(m, [&](const DegVec& v) {
      if (!i_.contains(v)) keys.push_back(v);
    });
    std::sort(keys.begin(), keys.end(),
              [](const DegVec& a, const DegVec& b) {
                unsigned sa = 0, sb = 0;
                for (unsigned x : a) sa += x;
                for (unsigned x : b) sb += x;
                return sa != sb ? sa < sb : a < b;
              });
    for (const DegVec& v : keys) {
      if (i_.contains(v)) continue;
      bool zero_vec = true;
      for (unsigned c : v)
        if (c != 0) zero_vec = false;
      if (zero_vec) {
        i_.emplace(v, dom_.zero());
        continue;
      }
      VecPartitionOptions opt;
      opt.exclude_singleton = true;
      Value reducible = dom_.zero();
      for_each_vector_partition(
          v, opt, limits_, [&](const std::vector<VecPart>& terms) {
            Value term = dom_.one();
            for (const VecPart& t : terms)
              term = dom_.mul(term,
                              multiset_binomial(dom_, i_.at(t.part), t.mult));
            reducible = dom_.add(reducible, term);
          });
      i_.emplace(v, dom_.sub(normalized(v), reducible));
    }
  }

 private:
  unsigned k_;
  D dom_;
  Limits limits_;
  std::map<DegVec, Value> n_, i_, a_;

  void check_dims(const DegVec& v) const {
    if (v.size() != k_)
      throw std::invalid_argument("degree vector has wrong dimension");
  }

  static DegVec subtract(const DegVec& a, const DegVec& b) {
    DegVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
  }

  template <typename F>
  static void for_each_in_box(const DegVec& bound, F&& fn) {
    DegVec cur(bound.size(), 0);
    while (true) {
      fn(static_cast<const DegVec&>(cur));
      std::size_t i = bound.size();
      while (i-- > 0) {
        if (cur[i] < bound[i]) {
          ++cur[i];
          for (std::size_t j = i + 1; j < bound.size(); ++j) cur[j] = 0;
          break;
        }
        if (i == 0) return;
      }
    }
  }
};

// Closed form for bidegree (1,n), n >= 1: (q^2 - 1) q^(2n - 1).
template <ValueDomain D>
typename D::Value irreducible_1n_closed(const D& dom, unsigned n) {
  if (n == 0)
    throw HypothesisError("the (1,n) closed form requires n >= 1");
  typename D::Value q2m1 = dom.sub(dom.q_power(2), dom.one());
  return dom.mul(q2m1, dom.q_power(BigInt(2) * n - 1));
}

// Closed form for bidegree (2,n), n >= 1:
// (q^2-1) [ q^(3n-2)(1+q+q^2) - (1/2) q^(2n-2)(n(q^2-1) + (q+1)^2)
//           - (1/2) [n even] q^(n-1) ].
// Computed doubled and halved once at the end so the integer domain never
// sees a fractional intermediate.
template <ValueDomain D>
typename D::Value irreducible_2n_closed(const D& dom, unsigned n) {
  if (n == 0)
    throw HypothesisError("the (2,n) closed form requires n >= 1");
  using V = typename D::Value;
  V q1 = dom.q_power(1);
  V q2 = dom.q_power(2);
  V q2m1 = dom.sub(q2, dom.one());
  V qp1 = dom.add(q1, dom.one());
  V head = dom.mul(dom.from_integer(2),
                   dom.mul(dom.q_power(BigInt(3) * n - 2),
                           dom.add(dom.add(dom.one(), q1), q2)));
  V mid = dom.mul(dom.q_power(BigInt(2) * n - 2),
                  dom.add(dom.mul(dom.from_integer(n), q2m1),
                          dom.mul(qp1, qp1)));
  V tail = n % 2 == 0 ? dom.q_power(BigInt(n) - 1) : dom.zero();
  V bracket = dom.sub(dom.sub(head, mid), tail);
  return dom.exact_div(dom.mul(q2m1, bracket), dom.from_integer(2));
}

}  // namespace polycount
