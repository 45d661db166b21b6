#pragma once

#include <optional>
#include <set>
#include <vector>

#include "afforb/affine_map.hpp"
#include "afforb/classifier.hpp"
#include "afforb/point.hpp"

namespace afforb {

// Swap, negation of the first coordinate, the shear (x1, x2) -> (x1 + x2, x2)
// and its inverse, and the four unit translations.
std::vector<AffineUnimodularMap> default_orbit_generators();

// Points reachable from x in at most `depth` generator steps without leaving
// [-box, box]^2.
std::set<RationalPoint> orbit_bfs(const RationalPoint& x, const Rational& box, int depth);
std::set<RationalPoint> orbit_bfs(const RationalPoint& x, const Rational& box, int depth,
                                  const std::vector<AffineUnimodularMap>& generators);

// Least denominator of a rational point on the line, by direct search.
BigInt min_den_on_line_bruteforce(const LineNormal& n);

// Least denominator of a third vertex completing two consecutive
// least-denominator points of the line to a regular triangle. Each
// denominator is searched over a full residue period of candidate vertices.
BigInt min_c_bruteforce(const LineNormal& n);

// Least denominator of s with conv(x, s) a regular segment.
BigInt min_c_1d_bruteforce(const Rational& x);

// First delta = (U, y - U x) with |U_ij| <= entry_bound, det U = +-1 and an
// integral translation; the identity is tried first.
std::optional<AffineUnimodularMap> witness_search(const Point& x, const Point& y,
                                                  int entry_bound);

}  // namespace afforb
