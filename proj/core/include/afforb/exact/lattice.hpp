#pragma once

#include <optional>
#include <span>
#include <vector>

#include "afforb/exact/matrix.hpp"

namespace afforb {

struct LatticeReduction;

// A finitely generated Z-submodule of Q^k, stored by its canonical basis:
// the rows are obtained by scaling the generators by the lcm L of their
// denominators, taking the integer Hermite normal form and dividing by L.
// Two lattices are equal exactly when their stored bases are.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  bool contains(std::span<const Rational> v) const;

  // Positive generator of the intersection with the coordinate axis e_axis,
  // or nullopt when that intersection is {0}.
  std::optional<Rational> axis_generator(std::size_t axis) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend LatticeReduction hnf_with_transform(std::span<const RationalVector> rows,
                                             std::size_t ambient_dim);
  std::size_t ambient_dim_;
  std::vector<RationalVector> basis_;
};

// Canonical basis of the Z-module generated by the rows.
Lattice hnf(std::span<const RationalVector> rows, std::size_t ambient_dim);
// Requires at least one row.
Lattice hnf(std::span<const RationalVector> rows);

// The canonical lattice together with the unimodular row transform K: the
// first rank() rows of K * rows are the basis, the remaining rows vanish.
struct LatticeReduction {
  Lattice lattice;
  IntMatrix transform;
};
LatticeReduction hnf_with_transform(std::span<const RationalVector> rows, std::size_t ambient_dim);

}  // namespace afforb
