#pragma once

#include <concepts>
#include <cstdint>

#include "polycount/config.hpp"
#include "polycount/qpoly.hpp"
#include "polycount/scalars.hpp"

namespace polycount {

// The counting recursions are written once against this contract and run
// either with q fixed to an integer (Value = BigInt) or with q formal
// (Value = QPoly). exact_div must satisfy exact_div(a*b, b) = a for b != 0,
// and q_power(e) is q^e, respectively the monomial q^e.
template <typename D>
concept ValueDomain = requires(const D d, const typename D::Value v,
                               const BigInt& e) {
  typename D::Value;
  { d.zero() } -> std::same_as<typename D::Value>;
  { d.one() } -> std::same_as<typename D::Value>;
  { d.from_integer(e) } -> std::same_as<typename D::Value>;
  { d.add(v, v) } -> std::same_as<typename D::Value>;
  { d.sub(v, v) } -> std::same_as<typename D::Value>;
  { d.mul(v, v) } -> std::same_as<typename D::Value>;
  { d.exact_div(v, v) } -> std::same_as<typename D::Value>;
  { d.q_power(e) } -> std::same_as<typename D::Value>;
  { d.check_integral(v) };
};

class NumericDomain {
 public:
  using Value = BigInt;

  explicit NumericDomain(BigInt q, Limits limits = {})
      : q_(std::move(q)), limits_(limits) {
    if (q_ < 2) throw std::invalid_argument("NumericDomain: q must be >= 2");
  }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value from_integer(const BigInt& n) const { return n; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }

  Value exact_div(const Value& a, const Value& b) const {
    return exact_quotient(a, b);
  }

  Value q_power(const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("q_power: negative exponent");
    if (e > limits_.max_terms)
      throw ResourceLimitError("q-exponent " + e.str() +
                               " exceeds the term cap " +
                               std::to_string(limits_.max_terms));
    return ipow(q_, static_cast<std::uint64_t>(e));
  }

  // Integrality is structural for BigInt values.
  void check_integral(const Value&) const {}

  const BigInt& q() const { return q_; }

 private:
  BigInt q_;
  Limits limits_;
};

class SymbolicDomain {
 public:
  using Value = QPoly;

  explicit SymbolicDomain(Limits limits = {}) : limits_(limits) {}

  Value zero() const { return {}; }
  Value one() const { return QPoly(BigRational(1)); }
  Value from_integer(const BigInt& n) const { return QPoly(BigRational(n)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }

  Value mul(const Value& a, const Value& b) const {
    if (!a.is_zero() && !b.is_zero()) check_degree(a.degree() + b.degree());
    return a * b;
  }

  Value exact_div(const Value& a, const Value& b) const {
    return QPoly::divide_exact(a, b);
  }

  Value q_power(const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("q_power: negative exponent");
    if (e > limits_.max_terms)
      throw ResourceLimitError("q-exponent " + e.str() +
                               " exceeds the term cap " +
                               std::to_string(limits_.max_terms));
    return QPoly::monomial(1, static_cast<std::size_t>(e));
  }

  void check_integral(const Value& v) const {
    if (!v.is_integral())
      throw std::logic_error(
          "symbolic count has a non-integer coefficient: " + v.to_string());
  }

 private:
  Limits limits_;

  void check_degree(std::size_t deg) const {
    if (deg > limits_.max_terms)
      throw ResourceLimitError("symbolic degree " + std::to_string(deg) +
                               " exceeds the term cap " +
                               std::to_string(limits_.max_terms));
  }
};

static_assert(ValueDomain<NumericDomain>);
static_assert(ValueDomain<SymbolicDomain>);

// Number of multisets of size a drawn from a pool of I kinds:
// C(I + a - 1, a) = (I)(I+1)...(I+a-1) / a!, domain-generically.
template <ValueDomain D>
typename D::Value multiset_binomial(const D& dom, const typename D::Value& I,
                                    std::uint64_t a) {
  typename D::Value acc = dom.one();
  for (std::uint64_t j = 0; j < a; ++j)
    acc = dom.mul(acc, dom.add(I, dom.from_integer(j)));
  if (a > 1) acc = dom.exact_div(acc, dom.from_integer(factorial(a)));
  return acc;
}

// Number of a-subsets of an I-pool: C(I, a) = (I)(I-1)...(I-a+1) / a!.
template <ValueDomain D>
typename D::Value choose_binomial(const D& dom, const typename D::Value& I,
                                  std::uint64_t a) {
  typename D::Value acc = dom.one();
  for (std::uint64_t j = 0; j < a; ++j)
    acc = dom.mul(acc, dom.sub(I, dom.from_integer(j)));
  if (a > 1) acc = dom.exact_div(acc, dom.from_integer(factorial(a)));
  return acc;
}

}  // namespace polycount
