#pragma once

#include <optional>
#include <string>
#include <vector>

#include "afforb/affine_map.hpp"
#include "afforb/exact/lattice.hpp"
#include "afforb/point.hpp"

namespace afforb {

// The rational line a1*y1 + a2*y2 + a3 = 0 with gcd(a1, a2, a3) = 1 and the
// first nonzero of (a1, a2) positive.
struct LineNormal {
  BigInt a1;
  BigInt a2;
  BigInt a3;

  // Divides out the content and fixes the sign. Throws BadParameters when
  // a1 = a2 = 0.
  static LineNormal canonical(BigInt a1, BigInt a2, BigInt a3);

  friend bool operator==(const LineNormal&, const LineNormal&) = default;
  std::string str() const;
};

// Least denominator of a rational point on the line: gcd(a1, a2).
BigInt line_d(const LineNormal& n);
// min{c >= 1 : a3 * c = +-1 (mod d)}.
BigInt line_c(const LineNormal& n);

// Smallest rational affine subspace containing a point of the plane.
struct RationalAffineHull {
  int dim = 2;
  std::optional<RationalPoint> point;  // dim 0
  std::optional<LineNormal> line;      // dim 1
};

struct OrbitInvariant {
  int rank = 0;
  Lattice group;
  BigInt d;
  BigInt c;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
  std::string str() const;
};

// Z + Z x_1 (+ Z x_2) inside Q^(k+1): the first component is the rational
// part, then one component per declared symbol in table order.
Lattice group_lattice(const Point& x);
int rank(const Point& x);

// Points of the plane only.
RationalAffineHull affine_hull(const Point& x);

// Denominator of the least positive rational of G_x.
BigInt d_of(const Point& x);
// Least denominator of a vertex of a regular simplex with the remaining
// vertices spanning F_x. Uses only the line, never an enclosure.
BigInt c_of(const Point& x);

// Dispatches to classify_1d for points of the line.
OrbitInvariant invariant(const Point& x);

// Throws SymbolTableMismatch unless both points declare the same symbols
// with the same enclosures, DimensionMismatch on mixed dimensions.
bool equivalent(const Point& x, const Point& y);

// Some delta with delta(x) = y, verified before it is returned.
// Throws NotEquivalent, or InsufficientEnclosure when the enclosures cannot
// place a rank-2 point between consecutive points of its line.
AffineUnimodularMap witness(const Point& x, const Point& y);

struct Census {
  BigInt count;
  std::vector<BigInt> cs;
};
// Possible values of c for rank-2 points whose group has least positive
// rational 1/d.
Census census(const BigInt& d);
// max(1, phi(d) / 2), without listing the values.
BigInt orbit_count(const BigInt& d);

// Invariant of a point of R^1 under x -> +-x + k.
OrbitInvariant classify_1d(const Point& x);

}  // namespace afforb
