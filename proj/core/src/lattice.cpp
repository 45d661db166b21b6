#include "afforb/exact/lattice.hpp"

#include <utility>

namespace afforb {

namespace {

struct Scaled {
  IntMatrix rows;
  BigInt scale;
};

Scaled scale_to_integers(std::span<const RationalVector> rows, std::size_t ambient_dim) {
  BigInt scale = 1;
  for (const auto& r : rows) {
    if (r.size() != ambient_dim) throw DimensionMismatch("generator of wrong dimension");
    for (const auto& x : r) scale = lcm(scale, x.den());
  }
  IntMatrix m(rows.size(), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      const Rational& x = rows[i][j];
      m(i, j) = x.num() * (scale / x.den());
    }
  return {std::move(m), std::move(scale)};
}

}  // namespace

LatticeReduction hnf_with_transform(std::span<const RationalVector> rows,
                                    std::size_t ambient_dim) {
  Scaled s = scale_to_integers(rows, ambient_dim);
  HermiteForm h = hermite_normal_form(s.rows);
  Lattice lat(ambient_dim);
  lat.basis_.reserve(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) {
    RationalVector b(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) b[j] = Rational(h.H(i, j), s.scale);
    lat.basis_.push_back(std::move(b));
  }
  return {std::move(lat), std::move(h.K)};
}

Lattice hnf(std::span<const RationalVector> rows, std::size_t ambient_dim) {
  return hnf_with_transform(rows, ambient_dim).lattice;
}

Lattice hnf(std::span<const RationalVector> rows) {
  if (rows.empty()) throw DimensionMismatch("hnf of an empty generator list needs a dimension");
  return hnf(rows, rows.front().size());
}

bool Lattice::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector of wrong dimension");
  RationalVector rest(v.begin(), v.end());
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    const Rational k = rest[pivot] / b[pivot];
    if (!k.is_integer()) return false;
    for (std::size_t j = pivot; j < ambient_dim_; ++j) rest[j] -= k * b[j];
  }
  for (const auto& x : rest)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Rational> Lattice::axis_generator(std::size_t axis) const {
  if (axis >= ambient_dim_) throw DimensionMismatch("axis out of range");
  // Move the axis to the last column: the echelon form then exposes the
  // intersection as a row whose only nonzero entry is the last one.
  std::vector<RationalVector> permuted;
  permuted.reserve(basis_.size());
  for (const auto& b : basis_) {
    RationalVector p = b;
    std::swap(p[axis], p.back());
    permuted.push_back(std::move(p));
  }
  const Lattice l = hnf(permuted, ambient_dim_);
  if (l.basis_.empty()) return std::nullopt;
  const RationalVector& last = l.basis_.back();
  for (std::size_t j = 0; j + 1 < ambient_dim_; ++j)
    if (!last[j].is_zero()) return std::nullopt;
  return last.back();
}

}  // namespace afforb
