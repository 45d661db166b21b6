#pragma once

#include <vector>

#include "afforb/affine_map.hpp"
#include "afforb/geometry.hpp"

namespace afforb {

// conv(v_0, ..., v_k) in Q^n with affinely independent vertices, k <= n.
class RationalSimplex {
 public:
  // Throws DimensionMismatch on mixed dimensions, NotIndependent otherwise.
  explicit RationalSimplex(std::vector<RationalPoint> vertices);

  std::size_t ambient_dim() const { return vertices_.front().dim(); }
  std::size_t simplex_dim() const { return vertices_.size() - 1; }
  const std::vector<RationalPoint>& vertices() const { return vertices_; }

  // Homogeneous correspondents of the vertices as the columns of an
  // (n+1) x (k+1) matrix.
  IntMatrix cone_generators() const;

 private:
  std::vector<RationalPoint> vertices_;
};

// gens are the columns. True iff the gcd of the maximal minors is 1, i.e.
// the generators extend to a basis of Z^m.
// Throws NotPrimitive or NotIndependent.
bool is_regular_cone(const IntMatrix& gens);
bool is_regular_simplex(const RationalSimplex& t);

// The unique map in G_n sending the i-th vertex of `from` to the i-th
// vertex of `to`. Both must be regular n-simplices in Q^n with matching
// vertex denominators. Throws DenominatorMismatch or NotRegular.
AffineUnimodularMap unique_map(const RationalSimplex& from, const RationalSimplex& to);

// Integer points sum(l_i * g_i), 0 <= l_i < 1, where g_i are the homogeneous
// correspondents of the vertices. Always contains the origin.
// Throws Overflow when entries exceed the enumeration range.
std::vector<IntVector> parallelepiped_integer_points(const RationalSimplex& t);

// True iff every rational point in the relative interior of every face F
// has denominator at least the sum of the vertex denominators of F.
bool densum_regularity_check(const RationalSimplex& t);

}  // namespace afforb
