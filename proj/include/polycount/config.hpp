#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycount {

// Resource ceilings shared by every potentially explosive computation.
// All are overridable per call site (the CLI exposes them as flags); the
// defaults are generous enough for every shipped table and test.
struct Limits {
  // Cap on q-exponents: bounds symbolic polynomial length and the bit size
  // of materialized numeric powers.
  std::uint64_t max_terms = 1'000'000;
  // Node budget for (vector) partition search and memo-downset size.
  std::uint64_t max_nodes = 100'000'000;
  // Cap on the number of polynomials an enumeration stream may produce.
  std::uint64_t max_enum = 100'000'000;
};

// A computation would exceed a configured ceiling. Mapped to CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An approximation was requested outside the parameter region where its
// defining expansion is valid. Carries the violated condition verbatim.
// Mapped to CLI exit code 4.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(const std::string& condition)
      : std::runtime_error("hypothesis violated: " + condition),
        condition_(condition) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

// Malformed textual input (polynomial formats). Position is a 0-based byte
// offset into the input. Mapped to CLI exit code 2.
class TextParseError : public std::runtime_error {
 public:
  TextParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polycount
