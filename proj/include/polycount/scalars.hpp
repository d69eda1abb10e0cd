#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "polycount/config.hpp"

namespace polycount {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, r) for a small r. C(n, 0) = 1 for every n; a negative n with r > 0
// yields 0, matching the subset-count reading rather than the falling
// factorial.
inline BigInt binomial(const BigInt& n, std::uint64_t r) {
  if (r == 0) return 1;
  if (n < 0) return 0;
  if (n < r) return 0;
  BigInt acc = 1;
  for (std::uint64_t j = 0; j < r; ++j) {
    acc *= n - j;
    acc /= j + 1;  // exact: product of j+1 consecutive integers
  }
  return acc;
}

inline BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt acc = 1;
  BigInt b = base;
  while (e != 0) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return acc;
}

// Quotient asserting exact divisibility; the workhorse of every closed form
// with a (q-1) or factorial denominator.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0)
    throw std::logic_error("exact_quotient: " + a.str() +
                           " is not divisible by " + b.str());
  return q;
}

// Fixed-base Miller-Rabin. Deterministic for n below 3.3e24; beyond that the
// fixed bases make this a (very strong) probable-prime test, which is all the
// advisory diagnostics need.
inline bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u,
                         37u}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  BigInt d = n - 1;
  std::uint64_t s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (unsigned base : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u,
                        37u}) {
    BigInt x = boost::multiprecision::powm(BigInt(base), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (std::uint64_t round = 1; round < s && witness; ++round) {
      x = x * x % n;
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// Largest r with r^e <= n, by binary search on the exact power.
inline BigInt integer_root(const BigInt& n, std::uint64_t e) {
  if (n < 0 || e == 0) throw std::invalid_argument("integer_root: bad input");
  if (n < 2 || e == 1) return n;
  BigInt lo = 1, hi = 2;
  while (ipow(hi, e) <= n) hi *= 2;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (ipow(mid, e) <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// True when q = p^e for a prime p and e >= 1. The counting formulas accept
// any integer q >= 2, but only prime powers correspond to an actual field;
// callers use this to warn, not to reject.
inline bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  for (std::uint64_t e = 1; ipow(BigInt(2), e) <= q; ++e) {
    BigInt r = integer_root(q, e);
    if (ipow(r, e) == q && is_probable_prime(r)) return true;
  }
  return false;
}

// Number-theoretic Mobius function via trial-division factorization.
inline int mobius_mu(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius_mu: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace polycount
