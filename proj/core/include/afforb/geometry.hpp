#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "afforb/exact/matrix.hpp"

namespace afforb {

// A point of Q^n.
struct RationalPoint {
  RationalVector coords;

  RationalPoint() = default;
  explicit RationalPoint(RationalVector c) : coords(std::move(c)) {}
  RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend auto operator<=>(const RationalPoint& a, const RationalPoint& b) {
    return a.coords <=> b.coords;
  }

  std::string str() const;
};

// Primitive integer vector den(p) * (p, 1); the last entry is the height.
struct HomogeneousVector {
  IntVector entries;

  const BigInt& height() const { return entries.back(); }
  friend bool operator==(const HomogeneousVector&, const HomogeneousVector&) = default;
};

// Least common denominator of the coordinates.
BigInt den(const RationalPoint& p);
HomogeneousVector homogeneous(const RationalPoint& p);
// Inverse of homogeneous(): divides by the (nonzero) last entry.
RationalPoint dehomogenize(std::span<const BigInt> v);

}  // namespace afforb
