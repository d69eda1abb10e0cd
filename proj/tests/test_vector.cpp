#include <set>
#include <string>

#include "catch2/catch_amalgamated.hpp"
#include "polycount/gf/oracle.hpp"
#include "polycount/qpoly.hpp"
#include "polycount/vector_counting.hpp"

using polycount::BigInt;
using polycount::BigRational;
using polycount::DegVec;
using polycount::Limits;
using polycount::NumericDomain;
using polycount::QPoly;
using polycount::SymbolicDomain;
using polycount::VectorCounter;

namespace {

VectorCounter<NumericDomain> at(unsigned k, long q) {
  return VectorCounter<NumericDomain>(k, NumericDomain(BigInt(q)));
}

// Multisets of irreducibles over GF(2) in two variables with componentwise
// degree budget (2,3), counted by dynamic programming. Irreducibles are found
// by marking every product of two nonconstant normalized polynomials.
struct IrreducibleMultisetDP {
  std::vector<DegVec> item_degrees;

  IrreducibleMultisetDP() {
    std::set<std::string> reducible;
    auto polys_at = [&](unsigned a, unsigned b) {
      return polycount::gf::collect_vec(DegVec{a, b}, 2);
    };
    for (unsigned a1 = 0; a1 <= 2; ++a1)
      for (unsigned a2 = 0; a2 <= 3; ++a2)
        for (unsigned b1 = 0; a1 + b1 <= 2; ++b1)
          for (unsigned b2 = 0; a2 + b2 <= 3; ++b2) {
            if (a1 + a2 == 0 || b1 + b2 == 0) continue;
            for (const auto& f : polys_at(a1, a2))
              for (const auto& g : polys_at(b1, b2))
                reducible.insert((f * g).canonical_key());
          }
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 3; ++b) {
        if (a + b == 0) continue;
        for (const auto& f : polys_at(a, b))
          if (!reducible.count(f.canonical_key()))
            item_degrees.push_back({a, b});
      }
  }

  // ways[i][j] = number of multisets of the (filtered) irreducibles whose
  // componentwise degree sum is exactly (i, j).
  std::array<std::array<BigInt, 4>, 3> count(unsigned first_cap) const {
    std::array<std::array<BigInt, 4>, 3> ways{};
    ways[0][0] = 1;
    for (const DegVec& d : item_degrees) {
      if (d[0] > first_cap) continue;
      for (unsigned i = d[0]; i <= 2; ++i)
        for (unsigned j = d[1]; j <= 3; ++j)
          ways[i][j] += ways[i - d[0]][j - d[1]];
    }
    return ways;
  }
};

}  // namespace

TEST_CASE("normalized polynomial counts by vector degree", "[vector]") {
  auto counter = at(2, 2);
  CHECK(counter.normalized({1, 1}) == 10);
  CHECK(at(2, 3).normalized({0, 0}) == 1);
  CHECK(at(2, 3).normalized({0, 4}) == 81);
  CHECK(counter.normalized({0, 1}) == 2);
  CHECK(counter.normalized({1, 2}) == 44);
  CHECK(counter.normalized({2, 2}) == 400);
  CHECK(counter.normalized({2, 3}) == 3392);
  CHECK(counter.normalized({3, 3}) == 57856);

  // Summing over a square box of degree keys counts every nonzero normalized
  // polynomial supported on that exponent box.
  for (long q : {2, 3})
    for (unsigned m = 0; m <= 3; ++m) {
      auto c = at(2, q);
      BigInt box_sum = 0;
      for (unsigned i = 0; i <= m; ++i)
        for (unsigned j = 0; j <= m; ++j) box_sum += c.normalized({i, j});
      CHECK(box_sum ==
            polycount::exact_quotient(
                polycount::ipow(BigInt(q),
                                static_cast<std::uint64_t>((m + 1) * (m + 1))) -
                    1,
                BigInt(q) - 1));
    }
}

TEST_CASE("interval signs on the componentwise degree order", "[vector]") {
  CHECK(polycount::poset_mobius({2, 3}, {1, 2}) == 1);
  CHECK(polycount::poset_mobius({2, 3}, {2, 2}) == -1);
  CHECK(polycount::poset_mobius({2, 3}, {0, 3}) == 0);
  CHECK(polycount::poset_mobius({2, 3}, {2, 3}) == 1);
  CHECK_THROWS_AS(polycount::poset_mobius({1, 2}, {2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(polycount::poset_mobius({1, 2}, {1, 2, 0}),
                  std::invalid_argument);

  // Summing the sign over a whole interval telescopes to zero unless the
  // interval is a single point.
  for (unsigned m1 = 0; m1 <= 2; ++m1)
    for (unsigned m2 = 0; m2 <= 2; ++m2)
      for (unsigned n1 = 0; n1 <= m1; ++n1)
        for (unsigned n2 = 0; n2 <= m2; ++n2) {
          int sum = 0;
          for (unsigned z1 = n1; z1 <= m1; ++z1)
            for (unsigned z2 = n2; z2 <= m2; ++z2)
              sum += polycount::poset_mobius({z1, z2}, {n1, n2});
          bool point = m1 == n1 && m2 == n2;
          CHECK(sum == (point ? 1 : 0));
        }
}

TEST_CASE("irreducible counts by vector degree", "[vector]") {
  auto counter = at(2, 2);
  CHECK(counter.irreducible({2, 3}) == 2256);
  CHECK(counter.irreducible({0, 2}) == 1);
  CHECK(counter.irreducible({5, 5}) == BigInt("62409885906"));
  CHECK(counter.irreducible({1, 1}) == 6);
  CHECK(counter.irreducible({0, 0}) == 0);

  // Swapping the two degree coordinates relabels the variables.
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) {
      CHECK(counter.irreducible({a, b}) == counter.irreducible({b, a}));
      CHECK(counter.normalized({a, b}) == counter.normalized({b, a}));
    }
}

TEST_CASE("closed forms for two-variable irreducible slices", "[vector]") {
  NumericDomain two((BigInt(2)));
  CHECK(polycount::irreducible_1n_closed(two, 1) == 6);
  CHECK(polycount::irreducible_1n_closed(two, 3) == 96);
  CHECK(polycount::irreducible_1n_closed(two, 5) == 1536);
  CHECK(polycount::irreducible_2n_closed(two, 2) == 243);
  CHECK(polycount::irreducible_2n_closed(two, 4) == 19476);
  CHECK(polycount::irreducible_2n_closed(two, 5) == 162816);
  CHECK_THROWS_AS(polycount::irreducible_1n_closed(two, 0),
                  polycount::HypothesisError);
  CHECK_THROWS_AS(polycount::irreducible_2n_closed(two, 0),
                  polycount::HypothesisError);

  for (long q : {2, 3}) {
    NumericDomain dom((BigInt(q)));
    auto counter = at(2, q);
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(counter.irreducible({1, n}) ==
            polycount::irreducible_1n_closed(dom, n));
      CHECK(counter.irreducible({2, n}) ==
            polycount::irreducible_2n_closed(dom, n));
    }
  }
}

TEST_CASE("signed distinct-irreducible sums by vector degree", "[vector]") {
  auto counter = at(2, 2);
  CHECK(counter.mobius_sum({0, 0}) == 1);
  CHECK(counter.mobius_sum({1, 0}) == -2);
  CHECK(counter.mobius_sum({1, 1}) == -2);

  // Reassemble an inclusion-exclusion cell by cell.
  BigInt total = counter.normalized({1, 1}) * counter.normalized({1, 1}) * 1 +
                 counter.normalized({0, 1}) * counter.normalized({0, 1}) *
                     counter.mobius_sum({1, 0}) +
                 counter.normalized({1, 0}) * counter.normalized({1, 0}) *
                     counter.mobius_sum({0, 1}) +
                 counter.mobius_sum({1, 1});
  CHECK(total == 82);
  CHECK(counter.coprime_pairs({1, 1}, {1, 1}) == 82);
}

TEST_CASE("coprime pair counts by vector degree", "[vector]") {
  auto counter = at(2, 2);
  CHECK(counter.coprime_pairs({0, 1}, {1, 1}) == 16);
  CHECK(counter.coprime_pairs({1, 1}, {2, 2}) == 3628);
  CHECK(counter.coprime_pairs({1, 2}, {1, 2}) == 1684);
  CHECK(counter.coprime_pairs({2, 3}, {2, 3}) == 11110312);
  CHECK(counter.coprime_pairs({3, 3}, {3, 3}) == BigInt("3300863752"));

  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b) {
      DegVec m{a, b};
      CHECK(counter.coprime_pairs({0, 0}, m) == counter.normalized(m));
      CHECK(counter.coprime_pairs(m, {2, 1}) ==
            counter.coprime_pairs({2, 1}, m));
      CHECK(counter.coprime_pairs(m, {2, 1}) ==
            counter.coprime_pairs({b, a}, {1, 2}));
    }
}

TEST_CASE("multisets of irreducibles reproduce every box count", "[vector]") {
  IrreducibleMultisetDP dp;
  auto counter = at(2, 2);
  auto ways = dp.count(2);
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; j <= 3; ++j)
      CHECK(ways[i][j] == counter.normalized({i, j}));
}

TEST_CASE("factor-degree-restricted counts by vector degree", "[vector]") {
  auto counter = at(2, 2);
  CHECK(counter.smooth_count({2, 2}, 0) == 400);
  CHECK(counter.smooth_count({1, 1}, 1) == 0);
  CHECK_THROWS_AS(counter.smooth_count({1, 2}, 2), std::invalid_argument);

  // Brute-force multisets of irreducibles, restricted to factors whose
  // first-coordinate degree stays under the cap.
  IrreducibleMultisetDP dp;
  CHECK(counter.smooth_count({2, 3}, 1) == dp.count(1)[2][3]);
  CHECK(counter.smooth_count({2, 3}, 2) == dp.count(0)[2][3]);
  CHECK(counter.smooth_count({2, 3}, 0) == counter.normalized({2, 3}));
}

TEST_CASE("symbolic vector counts evaluate to the numeric pipeline",
          "[vector]") {
  VectorCounter<SymbolicDomain> sym(2, SymbolicDomain{});
  CHECK(sym.normalized({0, 3}) == QPoly::monomial(1, 3));
  CHECK(sym.normalized({1, 1}) == QPoly::parse("q^3 + q^2 - q"));
  for (long q = 2; q <= 5; ++q) {
    auto num = at(2, q);
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b <= 2; ++b) {
        CHECK(sym.normalized({a, b}).evaluate(q) ==
              BigRational(num.normalized({a, b})));
        CHECK(sym.irreducible({a, b}).evaluate(q) ==
              BigRational(num.irreducible({a, b})));
        CHECK(sym.mobius_sum({a, b}).evaluate(q) ==
              BigRational(num.mobius_sum({a, b})));
        CHECK(sym.coprime_pairs({a, b}, {1, 1}).evaluate(q) ==
              BigRational(num.coprime_pairs({a, b}, {1, 1})));
      }
  }
}

TEST_CASE("three-variable vector counts stay coherent", "[vector]") {
  auto counter = at(3, 2);
  CHECK(counter.normalized({0, 0, 0}) == 1);
  CHECK(counter.normalized({0, 0, 4}) == 16);
  // Variable relabeling symmetry in three coordinates.
  CHECK(counter.irreducible({1, 2, 0}) == counter.irreducible({0, 2, 1}));
  CHECK(counter.coprime_pairs({1, 1, 0}, {0, 1, 1}) ==
        counter.coprime_pairs({0, 1, 1}, {1, 1, 0}));
  // The multiset convolution with no restrictions recovers the box count.
  polycount::VecPartitionOptions none;
  CHECK(counter.convolution({1, 1, 1}, none) ==
        counter.normalized({1, 1, 1}));
}

TEST_CASE("dimension and budget violations are clean errors", "[vector]") {
  CHECK_THROWS_AS(at(25, 2), std::invalid_argument);
  CHECK_THROWS_AS(at(0, 2), std::invalid_argument);
  auto counter = at(2, 2);
  CHECK_THROWS_AS(counter.normalized({1, 2, 3}), std::invalid_argument);

  Limits tight;
  tight.max_nodes = 4;
  VectorCounter<NumericDomain> tiny(2, NumericDomain(BigInt(2), tight), tight);
  CHECK_THROWS_AS(tiny.irreducible({3, 3}), polycount::ResourceLimitError);
}
