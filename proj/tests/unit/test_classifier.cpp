#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "afforb/classifier.hpp"
#include "afforb/oracle.hpp"

using afforb::BigInt;
using afforb::Lattice;
using afforb::LineNormal;
using afforb::Point;
using afforb::Rational;
using afforb::RationalVector;
using afforb::SymbolicReal;
using afforb::SymbolTable;

namespace {

const SymbolTable kXi{afforb::make_symbol("xi", Rational(21, 100), Rational(24, 100))};
const SymbolTable kTwo{afforb::make_symbol("xi1", Rational(14142, 10000), Rational(14143, 10000)),
                       afforb::make_symbol("xi2", Rational(17320, 10000), Rational(17321, 10000))};
const SymbolicReal xi = SymbolicReal::symbol("xi");

Point p2(SymbolicReal a, SymbolicReal b, const SymbolTable& t = kXi) {
  return Point({std::move(a), std::move(b)}, t);
}

}  // namespace

TEST(GroupLattice, Examples) {
  const Lattice a = afforb::group_lattice(p2(Rational(1, 5), xi));
  ASSERT_EQ(a.rank(), 2u);
  EXPECT_EQ(a.basis()[0], (RationalVector{Rational(1, 5), 0}));
  EXPECT_EQ(a.basis()[1], (RationalVector{0, 1}));

  const Lattice b = afforb::group_lattice(Point({Rational(1, 5), Rational(2, 5)}));
  ASSERT_EQ(b.rank(), 1u);
  EXPECT_EQ(b.basis()[0], (RationalVector{Rational(1, 5)}));

  const Lattice c =
      afforb::group_lattice(p2(SymbolicReal::symbol("xi1"), SymbolicReal::symbol("xi2"), kTwo));
  EXPECT_EQ(c.rank(), 3u);
  EXPECT_EQ(c.basis()[0], (RationalVector{1, 0, 0}));
}

TEST(Rank, Examples) {
  EXPECT_EQ(afforb::rank(Point({Rational(1, 5), Rational(2, 5)})), 1);
  EXPECT_EQ(afforb::rank(p2(Rational(1, 5), xi)), 2);
  EXPECT_EQ(afforb::rank(p2(SymbolicReal::symbol("xi1"), SymbolicReal::symbol("xi2"), kTwo)), 3);
}

TEST(AffineHull, Examples) {
  const auto a = afforb::affine_hull(p2(Rational(1, 5), xi));
  ASSERT_EQ(a.dim, 1);
  EXPECT_EQ(*a.line, (LineNormal{5, 0, -1}));

  const auto b = afforb::affine_hull(p2(xi, xi * Rational(2)));
  ASSERT_EQ(b.dim, 1);
  EXPECT_EQ(*b.line, (LineNormal{2, -1, 0}));

  const auto c = afforb::affine_hull(Point({Rational(1, 5), Rational(2, 5)}));
  EXPECT_EQ(c.dim, 0);
  EXPECT_EQ(*c.point, (afforb::RationalPoint{Rational(1, 5), Rational(2, 5)}));

  EXPECT_EQ(afforb::affine_hull(p2(SymbolicReal::symbol("xi1"), SymbolicReal::symbol("xi2"), kTwo))
                .dim,
            2);
}

TEST(AffineHull, NormalContainsThePoint) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const long a1 = e(rng), a2 = e(rng), a3 = e(rng);
    if (a2 == 0) continue;
    // x1 = xi + k, x2 = -(a1 x1 + a3) / a2
    const SymbolicReal x1 = xi + Rational(e(rng));
    const SymbolicReal x2 = (x1 * Rational(a1) + Rational(a3)) * Rational(-1, a2);
    const auto hull = afforb::affine_hull(p2(x1, x2));
    ASSERT_EQ(hull.dim, 1);
    const LineNormal& n = *hull.line;
    EXPECT_TRUE((x1 * Rational(n.a1) + x2 * Rational(n.a2) + Rational(n.a3)).is_zero());
    EXPECT_EQ(afforb::gcd(afforb::gcd(n.a1, n.a2), n.a3), 1);
    EXPECT_TRUE(n.a1 > 0 || (n.a1 == 0 && n.a2 > 0));
  }
}

TEST(DOf, Examples) {
  EXPECT_EQ(afforb::d_of(p2(Rational(1, 5), xi)), 5);
  EXPECT_EQ(afforb::d_of(p2(xi, xi * Rational(2))), 1);
  // 2 y1 + 4 y2 + 1 = 0
  const Point x = p2(xi, (xi * Rational(-2) - Rational(1)) * Rational(1, 4));
  EXPECT_EQ(*afforb::affine_hull(x).line, (LineNormal{2, 4, 1}));
  EXPECT_EQ(afforb::d_of(x), 2);
  EXPECT_EQ(afforb::group_lattice(x).axis_generator(0), Rational(1, 2));
}

TEST(COf, Examples) {
  EXPECT_EQ(afforb::c_of(p2(Rational(1, 5), xi)), 1);
  EXPECT_EQ(afforb::c_of(p2(Rational(2, 5), xi)), 2);
  EXPECT_EQ(afforb::c_of(p2(Rational(3, 7), xi)), 2);
  EXPECT_EQ(afforb::line_c(LineNormal::canonical(7, 0, -3)), 2);
  EXPECT_EQ(afforb::min_c_bruteforce(LineNormal::canonical(7, 0, -3)), 2);
}

TEST(COf, ShortcutMatchesBruteForce) {
  for (long a1 = 0; a1 <= 12; ++a1)
    for (long a2 = -12; a2 <= 12; ++a2) {
      if (a1 == 0 && a2 <= 0) continue;
      for (long a3 = -12; a3 <= 12; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        const LineNormal n = LineNormal::canonical(a1, a2, a3);
        EXPECT_EQ(afforb::line_c(n), afforb::min_c_bruteforce(n)) << n.str();
        EXPECT_EQ(afforb::line_d(n), afforb::min_den_on_line_bruteforce(n)) << n.str();
      }
    }
}

TEST(Invariant, Examples) {
  const auto a = afforb::invariant(Point({Rational(1, 5), Rational(2, 5)}));
  EXPECT_EQ(a.rank, 1);
  EXPECT_EQ(a.d, 5);
  EXPECT_EQ(a.c, 1);

  const auto b = afforb::invariant(p2(Rational(2, 5), xi));
  EXPECT_EQ(b.rank, 2);
  EXPECT_EQ(b.d, 5);
  EXPECT_EQ(b.c, 2);
  EXPECT_EQ(b.group, afforb::group_lattice(p2(Rational(1, 5), xi)));

  const auto c =
      afforb::invariant(p2(SymbolicReal::symbol("xi1"), SymbolicReal::symbol("xi2"), kTwo));
  EXPECT_EQ(c.rank, 3);
  EXPECT_EQ(c.d, 1);
  EXPECT_EQ(c.c, 1);
}

TEST(Equivalent, Examples) {
  EXPECT_FALSE(afforb::equivalent(p2(Rational(1, 5), xi), p2(Rational(2, 5), xi)));
  EXPECT_TRUE(afforb::equivalent(Point({Rational(1, 5), Rational(0)}),
                                 Point({Rational(2, 5), Rational(0)})));
  EXPECT_TRUE(afforb::equivalent(p2(Rational(1, 5), xi), p2(xi, Rational(1, 5))));
}

TEST(Equivalent, Errors) {
  const SymbolTable other{afforb::make_symbol("xi", Rational(1, 5), Rational(1, 4))};
  EXPECT_THROW(afforb::equivalent(p2(Rational(1, 5), xi), p2(Rational(1, 5), xi, other)),
               afforb::SymbolTableMismatch);
  EXPECT_THROW(afforb::equivalent(Point({Rational(1, 5)}), Point({Rational(1, 5), Rational(0)})),
               afforb::DimensionMismatch);
}

TEST(Census, Examples) {
  const auto five = afforb::census(5);
  EXPECT_EQ(five.count, 2);
  EXPECT_EQ(five.cs, (std::vector<BigInt>{1, 2}));
  const auto one = afforb::census(1);
  EXPECT_EQ(one.count, 1);
  EXPECT_EQ(one.cs, (std::vector<BigInt>{1}));
  const auto twelve = afforb::census(12);
  EXPECT_EQ(twelve.count, 2);
  EXPECT_EQ(twelve.cs, (std::vector<BigInt>{1, 5}));
}

TEST(Census, CountMatchesTotient) {
  for (long d = 1; d <= 60; ++d) {
    long phi = 0;
    for (long k = 1; k <= d; ++k) phi += std::gcd(k, d) == 1;
    const long expected = std::max(1L, phi / 2);
    EXPECT_EQ(afforb::census(d).count, expected);
    EXPECT_EQ(afforb::orbit_count(d), expected);
  }
}

TEST(Classify1d, Examples) {
  const auto a = afforb::classify_1d(Point({Rational(1, 5)}));
  EXPECT_EQ(a.d, 5);
  EXPECT_EQ(a.c, 1);
  const auto b = afforb::classify_1d(Point({Rational(2, 5)}));
  EXPECT_EQ(b.d, 5);
  EXPECT_EQ(b.c, 2);
  EXPECT_NE(a, b);
  const auto c = afforb::classify_1d(Point({xi}, kXi));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.c, 1);
  EXPECT_EQ(c.d, 1);
}

TEST(Classify1d, MatchesRegularSegmentSearch) {
  for (long d = 1; d <= 30; ++d)
    for (long p = 0; p < d; ++p) {
      if (std::gcd(p, d) != 1) continue;
      EXPECT_EQ(afforb::classify_1d(Point({Rational(p, d)})).c,
                afforb::min_c_1d_bruteforce(Rational(p, d)))
          << p << "/" << d;
    }
}

TEST(Point, RejectsUndeclaredSymbols) {
  EXPECT_THROW(Point({xi, Rational(1)}), afforb::UnknownSymbol);
  EXPECT_THROW(Point(std::vector<SymbolicReal>{}), afforb::DimensionMismatch);
}
