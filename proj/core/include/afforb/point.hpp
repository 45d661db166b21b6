#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "afforb/affine_map.hpp"
#include "afforb/exact/symbolic.hpp"
#include "afforb/geometry.hpp"

namespace afforb {

// A point of R^1 or R^2 with coordinates over the declared symbols.
class Point {
 public:
  // Throws DimensionMismatch unless there are 1 or 2 coordinates and
  // UnknownSymbol for a coordinate using an undeclared symbol.
  Point(std::vector<SymbolicReal> coords, SymbolTable symbols = {});
  Point(std::initializer_list<SymbolicReal> coords, SymbolTable symbols = {})
      : Point(std::vector<SymbolicReal>(coords), std::move(symbols)) {}
  Point(const RationalPoint& p);  // NOLINT

  std::size_t dim() const { return coords_.size(); }
  const std::vector<SymbolicReal>& coords() const { return coords_; }
  const SymbolicReal& operator[](std::size_t i) const { return coords_[i]; }
  const SymbolTable& symbols() const { return symbols_; }

  bool is_rational() const;
  // Throws BadParameters when a coordinate is irrational.
  RationalPoint to_rational() const;

  friend bool operator==(const Point&, const Point&) = default;

  std::string str() const;

 private:
  std::vector<SymbolicReal> coords_;
  SymbolTable symbols_;
};

// f(x), keeping the symbol table of x.
Point apply(const AffineUnimodularMap& f, const Point& x);

}  // namespace afforb
