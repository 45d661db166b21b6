#include "afforb/point.hpp"

namespace afforb {

Point::Point(std::vector<SymbolicReal> coords, SymbolTable symbols)
    : coords_(std::move(coords)), symbols_(std::move(symbols)) {
  if (coords_.empty() || coords_.size() > 2) {
    throw DimensionMismatch("points have 1 or 2 coordinates, got " +
                            std::to_string(coords_.size()));
  }
  for (const auto& c : coords_)
    for (const auto& [name, coeff] : c.coeffs())
      if (!symbols_.find(name)) throw UnknownSymbol("symbol '" + name + "' is not declared");
}

Point::Point(const RationalPoint& p)
    : Point(std::vector<SymbolicReal>(p.coords.begin(), p.coords.end())) {}

bool Point::is_rational() const {
  for (const auto& c : coords_)
    if (!c.is_rational()) return false;
  return true;
}

RationalPoint Point::to_rational() const {
  RationalPoint p;
  for (const auto& c : coords_) {
    if (!c.is_rational()) throw BadParameters("coordinate " + c.str() + " is irrational");
    p.coords.push_back(c.constant());
  }
  return p;
}

std::string Point::str() const {
  if (coords_.size() == 1) return coords_[0].str();
  return "(" + coords_[0].str() + ", " + coords_[1].str() + ")";
}

Point apply(const AffineUnimodularMap& f, const Point& x) {
  return Point(f(x.coords()), x.symbols());
}

}  // namespace afforb
