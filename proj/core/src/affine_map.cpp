#include "afforb/affine_map.hpp"

#include <sstream>

namespace afforb {

std::string RationalPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? ", " : "") + coords[i].str();
  return out + ")";
}

BigInt den(const RationalPoint& p) {
  BigInt d = 1;
  for (const auto& x : p.coords) d = lcm(d, x.den());
  return d;
}

HomogeneousVector homogeneous(const RationalPoint& p) {
  const BigInt d = den(p);
  HomogeneousVector h;
  h.entries.reserve(p.dim() + 1);
  for (const auto& x : p.coords) h.entries.push_back(x.num() * (d / x.den()));
  h.entries.push_back(d);
  return h;
}

RationalPoint dehomogenize(std::span<const BigInt> v) {
  if (v.empty() || v.back() == 0) throw BadParameters("homogeneous vector with zero height");
  RationalPoint p;
  p.coords.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) p.coords.emplace_back(v[i], v.back());
  return p;
}

AffineUnimodularMap::AffineUnimodularMap(IntMatrix linear, IntVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (!linear_.square() || translation_.size() != linear_.rows()) {
    throw DimensionMismatch("affine map shape mismatch");
  }
  if (!is_unimodular(linear_)) {
    throw NotUnimodular("linear part " + to_string(linear_) + " has det " +
                        afforb::det(linear_).get_str());
  }
}

AffineUnimodularMap AffineUnimodularMap::identity(std::size_t n) {
  return AffineUnimodularMap(IntMatrix::identity(n), IntVector(n));
}

AffineUnimodularMap AffineUnimodularMap::translation(IntVector t) {
  const std::size_t n = t.size();
  return AffineUnimodularMap(IntMatrix::identity(n), std::move(t));
}

AffineUnimodularMap AffineUnimodularMap::from_homogeneous(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) throw DimensionMismatch("homogeneous matrix must be square");
  const std::size_t n = m.rows() - 1;
  for (std::size_t j = 0; j < n; ++j)
    if (m(n, j) != 0) throw BadParameters("bottom row is not (0, ..., 0, 1)");
  if (m(n, n) != 1) throw BadParameters("bottom row is not (0, ..., 0, 1)");
  IntMatrix u(n, n);
  IntVector t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) u(i, j) = m(i, j);
    t[i] = m(i, n);
  }
  return AffineUnimodularMap(std::move(u), std::move(t));
}

BigInt AffineUnimodularMap::det() const { return afforb::det(linear_); }

IntMatrix AffineUnimodularMap::homogeneous() const {
  const std::size_t n = dim();
  IntMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = linear_(i, j);
    m(i, n) = translation_[i];
  }
  m(n, n) = 1;
  return m;
}

RationalPoint AffineUnimodularMap::operator()(const RationalPoint& x) const {
  if (x.dim() != dim()) throw DimensionMismatch("point dimension differs from map dimension");
  RationalPoint y;
  y.coords.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational v = translation_[i];
    for (std::size_t j = 0; j < dim(); ++j) v += Rational(linear_(i, j)) * x[j];
    y.coords[i] = std::move(v);
  }
  return y;
}

std::vector<SymbolicReal> AffineUnimodularMap::operator()(std::span<const SymbolicReal> x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension differs from map dimension");
  std::vector<SymbolicReal> y(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    SymbolicReal v = Rational(translation_[i]);
    for (std::size_t j = 0; j < dim(); ++j) v += Rational(linear_(i, j)) * x[j];
    y[i] = std::move(v);
  }
  return y;
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  return from_homogeneous(to_integer(afforb::inverse(homogeneous())));
}

AffineUnimodularMap operator*(const AffineUnimodularMap& f, const AffineUnimodularMap& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("composing maps of different dimension");
  return AffineUnimodularMap::from_homogeneous(f.homogeneous() * g.homogeneous());
}

std::string AffineUnimodularMap::str() const {
  std::ostringstream os;
  os << "U=" << to_string(linear_) << " t=(";
  for (std::size_t i = 0; i < translation_.size(); ++i)
    os << (i ? ", " : "") << translation_[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace afforb
