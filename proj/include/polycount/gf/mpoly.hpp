#pragma once

// Dense-ish multivariate polynomial arithmetic over a small prime field
// GF(p), p < 256. Terms are kept sorted in descending graded-lexicographic
// order (total degree first, then x1 > x2 > ... as tie-break), so the leading
// term is always terms().front(). Built for exhaustive small-degree
// enumeration, not asymptotic efficiency.

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polycount/config.hpp"
#include "polycount/partitions.hpp"

namespace polycount::gf {

inline constexpr unsigned kMaxVars = 8;
inline constexpr unsigned kMaxExponent = 2000;

// Intermediate polynomials inside the primitive remainder sequences blow far
// past the degrees of their inputs before each content strip pulls them back
// down, so the exponent type and cap are sized for those transients, not for
// the enumerated inputs.
using ExpVec = std::array<std::uint16_t, kMaxVars>;

inline unsigned exp_sum(const ExpVec& e) {
  unsigned s = 0;
  for (unsigned v : e) s += v;
  return s;
}

// Graded lexicographic order with x1 > x2 > ... : higher total degree wins;
// on ties, the first differing exponent (earlier variable) decides.
inline bool grlex_less(const ExpVec& a, const ExpVec& b) {
  unsigned sa = exp_sum(a), sb = exp_sum(b);
  if (sa != sb) return sa < sb;
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline bool is_small_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Inverse of a nonzero residue mod a prime p, by the extended Euclidean
// algorithm.
inline std::uint32_t fp_inv(std::uint32_t a, unsigned p) {
  a %= p;
  if (a == 0) throw std::logic_error("fp_inv: zero has no inverse");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t quo = r / nr;
    t = std::exchange(nt, t - quo * nt);
    r = std::exchange(nr, r - quo * nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

struct Term {
  ExpVec exp{};
  std::uint32_t coef = 0;  // in [1, p) for stored terms

  friend bool operator==(const Term&, const Term&) = default;
};

// Products whose exponent bounding box has at most this many cells are
// accumulated in a flat grid; larger (necessarily sparse) products go through
// a hash map instead.
inline constexpr std::uint64_t kDenseProductSlots = std::uint64_t{1} << 20;

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const {
    static_assert(sizeof(ExpVec) == 16);
    std::uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, e.data(), sizeof lo);
    std::memcpy(&hi, e.data() + 4, sizeof hi);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= hi * 0xC2B2AE3D27D4EB4FULL + (h >> 29);
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

class MPoly {
 public:
  MPoly(unsigned p, unsigned k) : p_(p), k_(k) {
    if (!is_small_prime(p) || p > 251)
      throw std::invalid_argument("MPoly: p must be a prime < 256");
    if (k == 0 || k > kMaxVars)
      throw std::invalid_argument("MPoly: variable count out of range");
  }

  static MPoly constant(unsigned p, unsigned k, std::uint32_t c) {
    MPoly r(p, k);
    c %= p;
    if (c != 0) r.terms_.push_back({ExpVec{}, c});
    return r;
  }

  static MPoly one(unsigned p, unsigned k) { return constant(p, k, 1); }

  static MPoly monomial(unsigned p, unsigned k, const ExpVec& e,
                        std::uint32_t c) {
    MPoly r(p, k);
    c %= p;
    if (c != 0) r.terms_.push_back({e, c});
    return r;
  }

  // The variable x_{var+1} (zero-based index).
  static MPoly variable(unsigned p, unsigned k, unsigned var) {
    if (var >= k) throw std::invalid_argument("MPoly: variable index");
    ExpVec e{};
    e[var] = 1;
    return monomial(p, k, e, 1);
  }

  // Terms must already be grlex-descending with nonzero coefficients in
  // [1, p); used by the enumerators, which emit terms in order.
  static MPoly from_sorted_terms(unsigned p, unsigned k,
                                 std::vector<Term> terms) {
    MPoly r(p, k);
    r.terms_ = std::move(terms);
    assert(std::is_sorted(
        r.terms_.begin(), r.terms_.end(),
        [](const Term& a, const Term& b) { return grlex_less(b.exp, a.exp); }));
    return r;
  }

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_sum(terms_[0].exp) == 0);
  }
  bool is_one() const {
    return terms_.size() == 1 && exp_sum(terms_[0].exp) == 0 &&
           terms_[0].coef == 1;
  }

  // -1 for the zero polynomial, otherwise the maximal exponent sum.
  int total_degree() const {
    return terms_.empty() ? -1
                          : static_cast<int>(exp_sum(terms_.front().exp));
  }

  // Componentwise maximal exponents (all zero for the zero polynomial).
  DegVec vector_degree() const {
    DegVec d(k_, 0);
    for (const Term& t : terms_)
      for (unsigned i = 0; i < k_; ++i)
        d[i] = std::max<unsigned>(d[i], t.exp[i]);
    return d;
  }

  unsigned degree_in(unsigned var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max<unsigned>(d, t.exp[var]);
    return d;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("MPoly: zero has no leading term");
    return terms_.front();
  }

  // Scalar multiple with leading coefficient 1.
  MPoly normalized() const {
    if (is_zero())
      throw std::invalid_argument("MPoly: cannot normalize the zero polynomial");
    return scalar_mul(fp_inv(terms_.front().coef, p_));
  }

  MPoly scalar_mul(std::uint32_t c) const {
    c %= p_;
    MPoly r(p_, k_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      r.terms_.push_back({t.exp, (t.coef * c) % p_});
    return r;
  }

  MPoly operator-() const { return scalar_mul(p_ - 1); }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly r(a.p_, a.k_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() &&
           grlex_less(b.terms_[j].exp, a.terms_[i].exp))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() ||
                 grlex_less(a.terms_[i].exp, b.terms_[j].exp)) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        std::uint32_t c = (a.terms_[i].coef + b.terms_[j].coef) % a.p_;
        if (c != 0) r.terms_.push_back({a.terms_[i].exp, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly r(a.p_, a.k_);
    if (a.is_zero() || b.is_zero()) return r;

    // Multiplying by a single term shifts every exponent vector by the same
    // amount, which preserves the grlex order, so the result can be emitted
    // directly without re-sorting.
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      const MPoly& mono = a.terms_.size() == 1 ? a : b;
      const MPoly& full = a.terms_.size() == 1 ? b : a;
      const Term& m = mono.terms_.front();
      r.terms_.reserve(full.terms_.size());
      for (const Term& t : full.terms_) {
        Term u;
        for (unsigned i = 0; i < a.k_; ++i) {
          unsigned s = t.exp[i] + m.exp[i];
          if (s > kMaxExponent)
            throw ResourceLimitError("MPoly: exponent limit exceeded");
          u.exp[i] = static_cast<std::uint16_t>(s);
        }
        u.coef = (t.coef * m.coef) % a.p_;
        r.terms_.push_back(u);
      }
      return r;
    }

    // The product's exponents live in the box bounded componentwise by the
    // sum of the factors' componentwise degrees. When that box is small,
    // accumulate into a flat row-major grid; otherwise fall back to a hash
    // map. A term of a hitting the cap in some variable pairs with a term of
    // b realizing that variable's maximum, so checking the box corner is
    // equivalent to checking every pair.
    DegVec da = a.vector_degree(), db = b.vector_degree();
    ExpVec corner{};
    std::uint64_t box = 1;
    for (unsigned i = 0; i < a.k_; ++i) {
      unsigned s = da[i] + db[i];
      if (s > kMaxExponent)
        throw ResourceLimitError("MPoly: exponent limit exceeded");
      corner[i] = static_cast<std::uint16_t>(s);
      box = std::min<std::uint64_t>(box * (s + 1), kDenseProductSlots + 1);
    }

    std::vector<Term> out;
    if (box <= kDenseProductSlots) {
      std::array<std::size_t, kMaxVars> stride{};
      std::size_t extent = 1;
      for (unsigned i = a.k_; i-- > 0;) {
        stride[i] = extent;
        extent *= corner[i] + 1;
      }
      std::vector<std::size_t> boff;
      boff.reserve(b.terms_.size());
      for (const Term& tb : b.terms_) {
        std::size_t off = 0;
        for (unsigned i = 0; i < a.k_; ++i) off += tb.exp[i] * stride[i];
        boff.push_back(off);
      }
      std::vector<std::uint32_t> grid(extent, 0);
      for (const Term& ta : a.terms_) {
        std::size_t base = 0;
        for (unsigned i = 0; i < a.k_; ++i) base += ta.exp[i] * stride[i];
        for (std::size_t j = 0; j < b.terms_.size(); ++j) {
          std::uint32_t& slot = grid[base + boff[j]];
          slot = (slot + ta.coef * b.terms_[j].coef) % a.p_;
        }
      }
      for (std::size_t v = 0; v < extent; ++v) {
        if (grid[v] == 0) continue;
        Term t;
        t.coef = grid[v];
        for (unsigned i = 0; i < a.k_; ++i)
          t.exp[i] =
              static_cast<std::uint16_t>(v / stride[i] % (corner[i] + 1u));
        out.push_back(t);
      }
    } else {
      std::unordered_map<ExpVec, std::uint32_t, ExpVecHash> acc;
      acc.reserve(a.terms_.size() + b.terms_.size());
      for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
          ExpVec e{};
          for (unsigned i = 0; i < a.k_; ++i)
            e[i] = static_cast<std::uint16_t>(ta.exp[i] + tb.exp[i]);
          std::uint32_t& slot = acc[e];
          slot = (slot + ta.coef * tb.coef) % a.p_;
        }
      }
      out.reserve(acc.size());
      for (const auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
      return grlex_less(y.exp, x.exp);
    });
    r.terms_ = std::move(out);
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  // Terms whose exponent of x_{var+1} equals `power`, with that exponent
  // removed: the coefficient of x^power viewed over the remaining variables.
  MPoly coefficient_of(unsigned var, unsigned power) const {
    MPoly r(p_, k_);
    for (const Term& t : terms_) {
      if (t.exp[var] != power) continue;
      Term u = t;
      u.exp[var] = 0;
      r.terms_.push_back(u);
    }
    return r;
  }

  // Multiplication by x_{var+1}^e.
  MPoly times_power(unsigned var, unsigned e) const {
    MPoly r(p_, k_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
      Term u = t;
      unsigned s = u.exp[var] + e;
      if (s > kMaxExponent)
        throw ResourceLimitError("MPoly: exponent limit exceeded");
      u.exp[var] = static_cast<std::uint16_t>(s);
      r.terms_.push_back(u);
    }
    return r;
  }

  // Quotient f/d when d divides f exactly, std::nullopt otherwise. Repeatedly
  // cancels the leading term of the remainder against the leading term of d;
  // for a single divisor under a multiplicative monomial order this reaches
  // zero exactly when d | f. The remainder lives in a flat grid when the
  // reachable exponent box is small (each cell is visited once, in descending
  // grlex order, because cancellations only disturb cells behind the sweep);
  // oversized boxes use a sorted-merge loop instead. Each successful quotient
  // is re-checked by multiplication (assertions are kept on in all build
  // types).
  static std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& d) {
    f.check_compatible(d);
    if (d.is_zero()) throw std::invalid_argument("MPoly: division by zero");
    if (f.is_zero()) return MPoly(f.p_, f.k_);
    if (d.is_constant())
      return f.scalar_mul(fp_inv(d.terms_.front().coef, f.p_));
    if (f.total_degree() < d.total_degree()) return std::nullopt;

    // Per-variable degrees add under multiplication, so a divisor wider than
    // f in any variable cannot divide it.
    DegVec df = f.vector_degree(), dd = d.vector_degree();
    for (unsigned i = 0; i < f.k_; ++i)
      if (dd[i] > df[i]) return std::nullopt;

    // When d divides f, every emitted quotient term is a term of the true
    // quotient (the remainder is always (q - q_partial) * d), so it fits
    // componentwise under Deg f - Deg d and all remainder terms stay inside
    // f's own exponent box. A quotient term escaping that bound therefore
    // proves non-divisibility, and the grid never needs to grow beyond f.
    std::uint64_t cells = 1;
    for (unsigned i = 0; i < f.k_; ++i)
      cells = std::min<std::uint64_t>(cells * (df[i] + 1),
                                      kDenseProductSlots + 1);
    std::optional<MPoly> quot = cells <= kDenseProductSlots
                                    ? divide_in_grid(f, d, df, dd)
                                    : divide_by_merging(f, d);
    assert(!quot || *quot * d == f);
    return quot;
  }

  // Format: terms in descending order joined with " + ", each term
  // "c*x1^e1*x2^e2..." with unit coefficients and zero exponents omitted,
  // e.g. "x1^2*x2 + 2*x1 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
      if (!out.empty()) out += " + ";
      std::string body;
      for (unsigned i = 0; i < k_; ++i) {
        if (t.exp[i] == 0) continue;
        if (!body.empty()) body += "*";
        body += "x" + std::to_string(i + 1);
        if (t.exp[i] > 1) body += "^" + std::to_string(t.exp[i]);
      }
      if (body.empty()) {
        out += std::to_string(t.coef);
      } else if (t.coef == 1) {
        out += body;
      } else {
        out += std::to_string(t.coef) + "*" + body;
      }
    }
    return out;
  }

  // Parses the to_string format (plus optional '-' between terms and inside
  // coefficients, reduced mod p). Reports failure positions.
  static MPoly parse(std::string_view text, unsigned p, unsigned k);

  // Compact byte encoding of the term list, for hashing enumerated
  // polynomials: two little-endian exponent bytes per variable plus one
  // coefficient byte per term.
  std::string canonical_key() const {
    std::string key;
    key.reserve(terms_.size() * (2 * k_ + 1));
    for (const Term& t : terms_) {
      for (unsigned i = 0; i < k_; ++i) {
        key.push_back(static_cast<char>(t.exp[i] & 0xff));
        key.push_back(static_cast<char>(t.exp[i] >> 8));
      }
      key.push_back(static_cast<char>(t.coef));
    }
    return key;
  }

 private:
  void check_compatible(const MPoly& other) const {
    if (p_ != other.p_ || k_ != other.k_)
      throw std::invalid_argument("MPoly: mixed modulus or variable count");
  }

  // Textbook cancellation on sorted term vectors; builds a fresh remainder
  // per step, so it is only used when the grid would not fit in memory.
  static std::optional<MPoly> divide_by_merging(const MPoly& f,
                                                const MPoly& d) {
    MPoly quot(f.p_, f.k_);
    MPoly rem = f;
    const Term& lead = d.terms_.front();
    std::uint32_t lead_inv = fp_inv(lead.coef, d.p_);
    while (!rem.is_zero()) {
      const Term& top = rem.terms_.front();
      Term t;
      bool divisible = true;
      for (unsigned i = 0; i < f.k_; ++i) {
        if (top.exp[i] < lead.exp[i]) {
          divisible = false;
          break;
        }
        t.exp[i] = static_cast<std::uint16_t>(top.exp[i] - lead.exp[i]);
      }
      if (!divisible) return std::nullopt;
      t.coef = (top.coef * lead_inv) % f.p_;
      MPoly part = monomial(f.p_, f.k_, t.exp, t.coef);
      quot = quot + part;
      rem = rem - part * d;
    }
    return quot;
  }

  // In-place cancellation over a flat remainder grid covering f's exponent
  // box. Cells are visited in descending grlex order (total degree levels,
  // descending lex within each); canceling a cell only touches grlex-smaller
  // cells, so one sweep reaches every term the division can create. Quotient
  // terms are checked against the componentwise bound Deg f - Deg d, which
  // both detects non-divisibility and keeps every write inside the box.
  static std::optional<MPoly> divide_in_grid(const MPoly& f, const MPoly& d,
                                             const DegVec& df,
                                             const DegVec& dd) {
    const unsigned k = f.k_, p = f.p_;
    std::array<std::size_t, kMaxVars> ext{};
    for (unsigned i = 0; i < k; ++i) ext[i] = df[i] + 1;
    std::array<std::size_t, kMaxVars> stride{};
    std::size_t extent = 1;
    for (unsigned i = k; i-- > 0;) {
      stride[i] = extent;
      extent *= ext[i];
    }
    std::vector<std::uint32_t> grid(extent, 0);
    for (const Term& t : f.terms_) {
      std::size_t idx = 0;
      for (unsigned i = 0; i < k; ++i) idx += t.exp[i] * stride[i];
      grid[idx] = t.coef;
    }

    const Term& lead = d.terms_.front();
    std::uint32_t lead_inv = fp_inv(lead.coef, p);
    // Remaining terms of d as index offsets from the lead cell; canceling the
    // remainder cell at `idx` adds the scaled tail at `idx + delta`.
    std::vector<std::pair<std::ptrdiff_t, std::uint32_t>> tail;
    tail.reserve(d.terms_.size() - 1);
    {
      std::ptrdiff_t lead_idx = 0;
      for (unsigned i = 0; i < k; ++i)
        lead_idx += static_cast<std::ptrdiff_t>(lead.exp[i] * stride[i]);
      for (std::size_t j = 1; j < d.terms_.size(); ++j) {
        std::ptrdiff_t idx = 0;
        for (unsigned i = 0; i < k; ++i)
          idx += static_cast<std::ptrdiff_t>(d.terms_[j].exp[i] * stride[i]);
        tail.emplace_back(idx - lead_idx, d.terms_[j].coef);
      }
    }

    // Largest exponent sum the cells after position `var` can still absorb.
    std::array<unsigned, kMaxVars + 1> slack{};
    for (unsigned i = k; i-- > 0;)
      slack[i] = slack[i + 1] + static_cast<unsigned>(ext[i] - 1);

    std::vector<Term> qterms;
    ExpVec cell{};
    bool divisible = true;
    auto visit = [&](std::size_t idx) {
      std::uint32_t c = grid[idx];
      if (c == 0) return;
      Term t;
      for (unsigned i = 0; i < k; ++i) {
        if (cell[i] < lead.exp[i] ||
            cell[i] - lead.exp[i] > df[i] - dd[i]) {
          divisible = false;
          return;
        }
        t.exp[i] = static_cast<std::uint16_t>(cell[i] - lead.exp[i]);
      }
      t.coef = c * lead_inv % p;
      qterms.push_back(t);
      grid[idx] = 0;
      for (const auto& [delta, coef] : tail) {
        std::uint32_t& slot = grid[static_cast<std::size_t>(
            static_cast<std::ptrdiff_t>(idx) + delta)];
        slot = (slot + p - t.coef * coef % p) % p;
      }
    };
    auto sweep = [&](auto&& self, unsigned var, unsigned rest,
                     std::size_t idx) -> void {
      if (!divisible) return;
      if (var + 1 == k) {
        if (rest >= ext[var]) return;
        cell[var] = static_cast<std::uint16_t>(rest);
        visit(idx + rest * stride[var]);
        cell[var] = 0;
        return;
      }
      unsigned hi = std::min<unsigned>(rest, static_cast<unsigned>(ext[var] - 1));
      unsigned lo = rest > slack[var + 1] ? rest - slack[var + 1] : 0;
      for (unsigned e = hi + 1; e-- > lo;) {
        cell[var] = static_cast<std::uint16_t>(e);
        self(self, var + 1, rest - e, idx + e * stride[var]);
      }
      cell[var] = 0;
    };
    for (unsigned level = static_cast<unsigned>(f.total_degree()) + 1;
         divisible && level-- > 0;)
      sweep(sweep, 0, level, 0);
    if (!divisible) return std::nullopt;

    MPoly quot(p, k);
    quot.terms_ = std::move(qterms);
    return quot;
  }

  unsigned p_;
  unsigned k_;
  std::vector<Term> terms_;
};

namespace detail {

struct MPolyParser {
  std::string_view s;
  unsigned p;
  unsigned k;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  unsigned long parse_number(const char* what, unsigned long max) {
    skip_ws();
    std::size_t start = pos;
    unsigned long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + static_cast<unsigned long>(s[pos] - '0');
      if (value > max) throw TextParseError(start, std::string(what) + " out of range");
      ++pos;
    }
    if (pos == start) throw TextParseError(pos, std::string("expected ") + what);
    return value;
  }

  // factor := integer | 'x' index ['^' exponent]
  MPoly parse_factor() {
    skip_ws();
    if (pos >= s.size()) throw TextParseError(pos, "expected a factor");
    if (s[pos] == 'x') {
      std::size_t at = pos;
      ++pos;
      unsigned long var = parse_number("variable index", kMaxVars);
      if (var == 0 || var > k)
        throw TextParseError(at, "variable index out of range");
      unsigned long e = 1;
      skip_ws();
      if (eat('^')) e = parse_number("exponent", kMaxExponent);
      ExpVec ev{};
      ev[var - 1] = static_cast<std::uint16_t>(e);
      return MPoly::monomial(p, k, ev, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      unsigned long c = 0;
      std::size_t start = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        c = c * 10 + static_cast<unsigned long>(s[pos] - '0');
        if (c > 1'000'000'000)
          throw TextParseError(start, "coefficient out of range");
        ++pos;
      }
      return MPoly::constant(p, k, static_cast<std::uint32_t>(c % p));
    }
    throw TextParseError(pos, "expected a coefficient or a variable");
  }

  MPoly parse_term() {
    MPoly acc = parse_factor();
    while (true) {
      skip_ws();
      if (!eat('*')) break;
      acc = acc * parse_factor();
    }
    return acc;
  }

  MPoly parse_poly() {
    skip_ws();
    if (pos >= s.size()) throw TextParseError(pos, "empty input");
    bool negative = eat('-');
    MPoly acc = parse_term();
    if (negative) acc = -acc;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        throw TextParseError(pos, "expected '+' or '-'");
      MPoly t = parse_term();
      acc = negative ? acc - t : acc + t;
    }
    return acc;
  }
};

}  // namespace detail

inline MPoly MPoly::parse(std::string_view text, unsigned p, unsigned k) {
  detail::MPolyParser parser{text, p, k};
  MPoly probe(p, k);  // validates p and k before any parsing
  (void)probe;
  return parser.parse_poly();
}

}  // namespace polycount::gf
