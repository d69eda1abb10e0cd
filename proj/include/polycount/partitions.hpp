#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "polycount/config.hpp"

namespace polycount {

// Streams every multiplicity vector (a_1..a_max_part) with sum i*a_i = m,
// exactly once. mult[i] is the multiplicity of part i (index 0 unused).
// Order: the multiplicity of the largest part varies slowest, ascending;
// deterministic. m = 0 yields the single empty assignment.
template <typename F>
void for_each_partition(unsigned m, unsigned max_part, F&& fn) {
  std::vector<unsigned> mult(static_cast<std::size_t>(max_part) + 1, 0);
  auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
    if (remaining == 0) {
      // Parts below `part` stay at multiplicity zero.
      fn(static_cast<const std::vector<unsigned>&>(mult));
      return;
    }
    if (part == 0) return;
    if (part == 1) {
      mult[1] = remaining;
      fn(static_cast<const std::vector<unsigned>&>(mult));
      mult[1] = 0;
      return;
    }
    for (unsigned c = 0; c * part <= remaining; ++c) {
      mult[part] = c;
      self(self, part - 1, remaining - c * part);
    }
    mult[part] = 0;
  };
  rec(rec, max_part, m);
}

using DegVec = std::vector<unsigned>;

struct VecPart {
  DegVec part;
  unsigned mult;
};

struct VecPartitionOptions {
  // Drop the one-part decomposition {target^1}.
  bool exclude_singleton = false;
  // Restrict every part's first component to at most this value.
  std::optional<unsigned> first_component_cap;
};

namespace detail {

inline bool leq_componentwise(const DegVec& a, const DegVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// All nonzero vectors <= bound componentwise, lexicographically descending.
inline std::vector<DegVec> parts_below(const DegVec& bound) {
  std::vector<DegVec> out;
  DegVec cur(bound.size(), 0);
  // Odometer in ascending lex order, then reverse.
  while (true) {
    std::size_t i = bound.size();
    while (i-- > 0) {
      if (cur[i] < bound[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < bound.size(); ++j) cur[j] = 0;
        break;
      }
      if (i == 0) {
        std::reverse(out.begin(), out.end());
        return out;
      }
    }
    out.push_back(cur);
  }
}

}  // namespace detail

// Streams every multiset of nonzero vectors <= target summing componentwise
// to target, exactly once, as a list of (part, multiplicity) entries with
// parts in descending lexicographic order. Deterministic: the multiplicity of
// the lex-largest part varies slowest, ascending. The zero target yields the
// single empty multiset. Throws ResourceLimitError past limits.max_nodes
// visited search nodes.
template <typename F>
void for_each_vector_partition(const DegVec& target,
                               const VecPartitionOptions& options,
                               const Limits& limits, F&& fn) {
  std::vector<DegVec> parts = detail::parts_below(target);
  if (options.first_component_cap) {
    std::erase_if(parts, [&](const DegVec& p) {
      return p[0] > *options.first_component_cap;
    });
  }
  if (options.exclude_singleton)
    std::erase_if(parts, [&](const DegVec& p) { return p == target; });

  std::vector<VecPart> chosen;
  DegVec remaining = target;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (++nodes > limits.max_nodes)
      throw ResourceLimitError(
          "vector-partition search exceeded the node budget of " +
          std::to_string(limits.max_nodes));
    bool done = true;
    for (unsigned r : remaining)
      if (r != 0) done = false;
    if (done) {
      fn(static_cast<const std::vector<VecPart>&>(chosen));
      return;
    }
    if (idx == parts.size()) return;
    const DegVec& p = parts[idx];
    // Highest multiplicity c with c*p <= remaining componentwise.
    unsigned cmax = ~0u;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) cmax = std::min(cmax, remaining[i] / p[i]);
    self(self, idx + 1);  // multiplicity 0
    for (unsigned c = 1; c <= cmax; ++c) {
      for (std::size_t i = 0; i < p.size(); ++i) remaining[i] -= p[i];
      chosen.push_back({p, c});
      self(self, idx + 1);
      chosen.pop_back();
    }
    // p is nonzero, so cmax was set by the loop above.
    for (std::size_t i = 0; i < p.size(); ++i) remaining[i] += cmax * p[i];
  };
  rec(rec, 0);
}

}  // namespace polycount
