#include <gtest/gtest.h>

#include <random>

#include "afforb/farey.hpp"
#include "afforb/polyhedral.hpp"

using afforb::IntMatrix;
using afforb::IntVector;
using afforb::Rational;
using afforb::RationalPoint;
using afforb::RationalSimplex;

namespace {

RationalPoint pt(Rational a, Rational b) { return RationalPoint{a, b}; }

RationalSimplex random_simplex(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dim(1, 2), den(1, 8);
  while (true) {
    const long n = dim(rng);
    std::uniform_int_distribution<long> kd(1, n);
    const long k = kd(rng);
    std::vector<RationalPoint> v;
    for (long i = 0; i <= k; ++i) {
      RationalPoint p;
      for (long j = 0; j < n; ++j) {
        const long q = den(rng);
        p.coords.emplace_back(std::uniform_int_distribution<long>(0, q)(rng), q);
      }
      v.push_back(p);
    }
    try {
      return RationalSimplex(v);
    } catch (const afforb::NotIndependent&) {
    }
  }
}

}  // namespace

TEST(Homogeneous, Examples) {
  EXPECT_EQ(afforb::den(pt(0, 0)), 1);
  EXPECT_EQ(afforb::den(pt(Rational(1, 3), Rational(1, 2))), 6);
  EXPECT_EQ(afforb::den(pt(Rational(1, 5), Rational(2, 5))), 5);
  EXPECT_EQ(afforb::homogeneous(pt(Rational(1, 5), Rational(2, 5))).entries, (IntVector{1, 2, 5}));
  EXPECT_EQ(afforb::homogeneous(pt(0, 0)).entries, (IntVector{0, 0, 1}));
  EXPECT_EQ(afforb::homogeneous(RationalPoint{Rational(1, 3)}).entries, (IntVector{1, 3}));
}

TEST(Homogeneous, PrimitiveAndInvertible) {
  for (long q = 1; q <= 9; ++q)
    for (long a = -q; a <= q; ++a)
      for (long b = -q; b <= q; ++b) {
        const RationalPoint p = pt(Rational(a, q), Rational(b, q));
        const IntVector h = afforb::homogeneous(p).entries;
        EXPECT_EQ(afforb::gcd(afforb::gcd(h[0], h[1]), h[2]), 1);
        EXPECT_EQ(afforb::dehomogenize(h), p);
      }
}

TEST(RegularCone, Examples) {
  EXPECT_TRUE(afforb::is_regular_cone(IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_TRUE(afforb::is_regular_cone(IntMatrix{{1, 1}, {3, 2}}));
  EXPECT_FALSE(afforb::is_regular_cone(IntMatrix{{1, 2}, {0, 0}, {5, 5}}));
  EXPECT_THROW(afforb::is_regular_cone(IntMatrix{{2, 0}, {0, 1}}), afforb::NotPrimitive);
  EXPECT_THROW(afforb::is_regular_cone(IntMatrix{{1, 1}, {2, 2}}), afforb::NotIndependent);
}

TEST(RegularSimplex, Examples) {
  EXPECT_TRUE(afforb::is_regular_simplex(RationalSimplex({pt(0, 0), pt(1, 0), pt(0, 1)})));
  EXPECT_TRUE(afforb::is_regular_simplex(
      RationalSimplex({RationalPoint{Rational(1, 3)}, RationalPoint{Rational(1, 2)}})));
  EXPECT_FALSE(afforb::is_regular_simplex(
      RationalSimplex({pt(Rational(1, 5), 0), pt(Rational(2, 5), 0)})));
  EXPECT_THROW(RationalSimplex({pt(0, 0), pt(1, 1), pt(2, 2)}), afforb::NotIndependent);
}

TEST(Parallelepiped, Examples) {
  const auto unit = afforb::parallelepiped_integer_points(
      RationalSimplex({pt(0, 0), pt(1, 0), pt(0, 1)}));
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], (IntVector{0, 0, 0}));

  const auto bad = afforb::parallelepiped_integer_points(
      RationalSimplex({pt(Rational(1, 5), 0), pt(Rational(2, 5), 0)}));
  EXPECT_GT(bad.size(), 1u);
  // (1, 0, 3) = 1/5 (1, 0, 5) + 2/5 (2, 0, 5).
  EXPECT_NE(std::find(bad.begin(), bad.end(), IntVector{1, 0, 3}), bad.end());

  EXPECT_EQ(afforb::parallelepiped_integer_points(
                RationalSimplex({RationalPoint{Rational(1, 3)}, RationalPoint{Rational(1, 2)}}))
                .size(),
            1u);
}

TEST(Densum, Examples) {
  EXPECT_TRUE(afforb::densum_regularity_check(RationalSimplex({pt(0, 0), pt(1, 0), pt(0, 1)})));
  EXPECT_FALSE(afforb::densum_regularity_check(
      RationalSimplex({pt(Rational(1, 5), 0), pt(Rational(2, 5), 0)})));
  EXPECT_TRUE(afforb::densum_regularity_check(
      RationalSimplex({RationalPoint{Rational(0)}, RationalPoint{Rational(1, 3)}})));
}

TEST(Regularity, ThreeCriteriaAgree) {
  std::mt19937_64 rng(2024);
  int regular = 0;
  for (int t = 0; t < 300; ++t) {
    const RationalSimplex s = random_simplex(rng);
    const bool a = afforb::is_regular_simplex(s);
    const bool b = afforb::parallelepiped_integer_points(s).size() == 1;
    const bool c = afforb::densum_regularity_check(s);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    regular += a;
  }
  EXPECT_GT(regular, 0);
  EXPECT_LT(regular, 300);
}

TEST(Regularity, FareyNeighboursSpanRegularSegments) {
  for (long d = 1; d <= 20; ++d) {
    const auto f = afforb::farey_sequence(d);
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      EXPECT_TRUE(afforb::is_regular_simplex(
          RationalSimplex({RationalPoint{f[i].value()}, RationalPoint{f[i + 1].value()}})));
  }
}

TEST(UniqueMap, Examples) {
  const RationalSimplex unit({pt(0, 0), pt(1, 0), pt(0, 1)});
  EXPECT_EQ(afforb::unique_map(unit, unit), afforb::AffineUnimodularMap::identity(2));

  const auto shifted = afforb::unique_map(unit, RationalSimplex({pt(1, 1), pt(2, 1), pt(1, 2)}));
  EXPECT_EQ(shifted.linear(), IntMatrix::identity(2));
  EXPECT_EQ(shifted.translation(), (IntVector{1, 1}));

  const auto flip = afforb::unique_map(
      RationalSimplex({pt(Rational(1, 2), 0), pt(0, 0), pt(0, 1)}),
      RationalSimplex({pt(Rational(1, 2), 1), pt(0, 1), pt(0, 0)}));
  EXPECT_EQ(flip.linear(), (IntMatrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(flip.translation(), (IntVector{0, 1}));
}

TEST(UniqueMap, Errors) {
  const RationalSimplex unit({pt(0, 0), pt(1, 0), pt(0, 1)});
  EXPECT_THROW(afforb::unique_map(unit, RationalSimplex({pt(Rational(1, 2), 0), pt(1, 0),
                                                         pt(0, 1)})),
               afforb::DenominatorMismatch);
  const RationalSimplex fat({pt(0, 0), pt(2, 0), pt(0, 1)});
  EXPECT_THROW(afforb::unique_map(unit, fat), afforb::NotRegular);
}

TEST(UniqueMap, SendsVerticesAndInvertsOnRandomPairs) {
  // Regular triangles as images of the unit triangle under random G_2 maps.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(-3, 3);
  const RationalSimplex base({pt(Rational(1, 3), Rational(1, 3)), pt(0, 0), pt(1, 0)});
  ASSERT_TRUE(afforb::is_regular_simplex(base));
  int done = 0;
  while (done < 50) {
    IntMatrix u{{e(rng), e(rng)}, {e(rng), e(rng)}};
    const afforb::BigInt dt = afforb::det(u);
    if (dt != 1 && dt != -1) continue;
    const afforb::AffineUnimodularMap g(u, IntVector{e(rng), e(rng)});
    std::vector<RationalPoint> image;
    for (const auto& v : base.vertices()) image.push_back(g(v));
    const RationalSimplex other(image);
    const auto m = afforb::unique_map(base, other);
    EXPECT_EQ(m, g);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m(base.vertices()[i]), other.vertices()[i]);
    EXPECT_EQ(afforb::unique_map(other, base) * m, afforb::AffineUnimodularMap::identity(2));
    ++done;
  }
}
