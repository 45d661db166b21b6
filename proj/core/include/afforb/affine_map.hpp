#pragma once

#include <span>
#include <string>
#include <vector>

#include "afforb/exact/symbolic.hpp"
#include "afforb/geometry.hpp"

namespace afforb {

// x -> U x + t with U an integer matrix of determinant +-1 and t an integer
// vector: an element of GL(n, Z) x| Z^n.
class AffineUnimodularMap {
 public:
  // Throws NotUnimodular when det(linear) != +-1.
  AffineUnimodularMap(IntMatrix linear, IntVector translation);

  static AffineUnimodularMap identity(std::size_t n);
  static AffineUnimodularMap translation(IntVector t);
  // From an (n+1)x(n+1) matrix with bottom row (0, ..., 0, 1).
  static AffineUnimodularMap from_homogeneous(const IntMatrix& m);

  std::size_t dim() const { return linear_.rows(); }
  const IntMatrix& linear() const { return linear_; }
  const IntVector& translation() const { return translation_; }
  BigInt det() const;
  IntMatrix homogeneous() const;

  RationalPoint operator()(const RationalPoint& x) const;
  std::vector<SymbolicReal> operator()(std::span<const SymbolicReal> x) const;

  AffineUnimodularMap inverse() const;

  // (f * g)(x) = f(g(x)).
  friend AffineUnimodularMap operator*(const AffineUnimodularMap& f,
                                       const AffineUnimodularMap& g);
  friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

  std::string str() const;

 private:
  IntMatrix linear_;
  IntVector translation_;
};

}  // namespace afforb
