#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polycount/config.hpp"
#include "polycount/scalars.hpp"

namespace polycount {

// Dense univariate polynomial in the formal variable q with exact rational
// coefficients. coef_[e] multiplies q^e; the highest-index coefficient is
// nonzero, and the zero polynomial stores no coefficients at all. Values are
// immutable after construction apart from whole-object assignment, so sharing
// across threads is safe.
class QPoly {
 public:
  QPoly() = default;  // the zero polynomial

  explicit QPoly(BigRational constant) {
    if (constant != 0) coef_.push_back(std::move(constant));
  }

  static QPoly monomial(BigRational c, std::size_t e) {
    QPoly r;
    if (c != 0) {
      r.coef_.assign(e + 1, BigRational(0));
      r.coef_[e] = std::move(c);
    }
    return r;
  }

  static QPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coef_.empty(); }

  // Degree of the zero polynomial is reported as 0 alongside is_zero().
  std::size_t degree() const { return coef_.empty() ? 0 : coef_.size() - 1; }

  BigRational coeff(std::size_t e) const {
    return e < coef_.size() ? coef_[e] : BigRational(0);
  }

  bool is_integral() const {
    for (const auto& c : coef_)
      if (denominator(c) != 1) return false;
    return true;
  }

  bool is_monic() const { return !coef_.empty() && coef_.back() == 1; }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coef_ == b.coef_;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.coef_.resize(std::max(a.coef_.size(), b.coef_.size()), BigRational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) r.coef_[i] = a.coef_[i];
    for (std::size_t i = 0; i < b.coef_.size(); ++i) r.coef_[i] += b.coef_[i];
    r.trim();
    return r;
  }

  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      if (a.coef_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coef_.size(); ++j) {
        if (b.coef_[j] == 0) continue;
        r.coef_[i + j] += a.coef_[i] * b.coef_[j];
      }
    }
    r.trim();
    return r;
  }

  friend QPoly operator*(const BigRational& s, const QPoly& p) {
    if (s == 0) return {};
    QPoly r = p;
    for (auto& c : r.coef_) c *= s;
    return r;
  }

  // Long division with zero remainder required.
  static QPoly divide_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::logic_error("QPoly: division by zero");
    if (a.is_zero()) return {};
    if (a.coef_.size() < b.coef_.size())
      throw std::logic_error("QPoly: inexact division (degree)");
    QPoly rem = a;
    QPoly quot;
    quot.coef_.assign(a.coef_.size() - b.coef_.size() + 1, BigRational(0));
    const BigRational& lead = b.coef_.back();
    for (std::size_t sh = quot.coef_.size(); sh-- > 0;) {
      BigRational c = rem.coeff(sh + b.coef_.size() - 1) / lead;
      quot.coef_[sh] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.coef_.size(); ++j)
        rem.coef_[sh + j] -= c * b.coef_[j];
    }
    rem.trim();
    if (!rem.is_zero()) throw std::logic_error("QPoly: inexact division");
    quot.trim();
    return quot;
  }

  BigRational evaluate(const BigRational& q) const {
    BigRational acc = 0;
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * q + coef_[i];
    return acc;
  }

  // Text format: terms in descending exponent joined by " + " / " - ",
  // each term "c*q^e" with c a reduced fraction, the coefficient omitted when
  // |c| = 1 (except in the constant term) and "q^1" shortened to "q".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coef_.size(); i-- > 0;) {
      const BigRational& c = coef_[i];
      if (c == 0) continue;
      BigRational mag = c < 0 ? BigRational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      out += term_text(mag, i);
    }
    return out;
  }

  static QPoly parse(std::string_view text) {
    Parser p{text, 0};
    QPoly r = p.parse_poly();
    p.skip_ws();
    if (p.pos != text.size())
      throw TextParseError(p.pos, "unexpected trailing input");
    return r;
  }

 private:
  std::vector<BigRational> coef_;

  void trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
  }

  static std::string term_text(const BigRational& mag, std::size_t e) {
    std::string body;
    if (e == 0) return mag.str();
    if (mag != 1) body = mag.str() + "*";
    body += e == 1 ? "q" : "q^" + std::to_string(e);
    return body;
  }

  struct Parser {
    std::string_view s;
    std::size_t pos;

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

    BigInt parse_integer() {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == start) throw TextParseError(pos, "expected an integer");
      return BigInt(std::string(s.substr(start, pos - start)));
    }

    // term := [coefficient ['*']] ['q' ['^' exponent]]
    void parse_term(bool negative, QPoly& acc) {
      skip_ws();
      if (pos >= s.size()) throw TextParseError(pos, "expected a term");
      BigRational coef = 1;
      bool have_coef = false;
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        BigInt num = parse_integer();
        BigInt den = 1;
        skip_ws();
        if (eat('/')) {
          den = parse_integer();
          if (den == 0) throw TextParseError(pos, "zero denominator");
        }
        coef = BigRational(num, den);
        have_coef = true;
        skip_ws();
        if (!eat('*')) {
          acc = acc + QPoly(negative ? -coef : coef);
          return;
        }
        skip_ws();
      }
      if (pos >= s.size() || s[pos] != 'q') {
        if (have_coef) throw TextParseError(pos, "expected 'q' after '*'");
        throw TextParseError(pos, "expected a coefficient or 'q'");
      }
      ++pos;
      std::size_t e = 1;
      skip_ws();
      if (eat('^')) {
        BigInt ebig = parse_integer();
        if (ebig > 1'000'000'000)
          throw TextParseError(pos, "exponent out of range");
        e = static_cast<std::size_t>(ebig);
      }
      acc = acc + monomial(negative ? -coef : coef, e);
    }

    QPoly parse_poly() {
      QPoly acc;
      skip_ws();
      if (pos >= s.size()) throw TextParseError(pos, "empty input");
      bool negative = eat('-');
      parse_term(negative, acc);
      while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        if (eat('+'))
          negative = false;
        else if (eat('-'))
          negative = true;
        else
          break;
        parse_term(negative, acc);
      }
      return acc;
    }
  };
};

}  // namespace polycount
