#include "afforb/classifier.hpp"
#include "afforb/farey.hpp"
#include "afforb/polyhedral.hpp"

namespace afforb {

namespace {

using Map = AffineUnimodularMap;

Map affine(BigInt u00, BigInt u01, BigInt u10, BigInt u11, BigInt t0, BigInt t1) {
  IntMatrix u{{std::move(u00), std::move(u01)}, {std::move(u10), std::move(u11)}};
  return Map(std::move(u), IntVector{std::move(t0), std::move(t1)});
}

Map verified(const Map& delta, const Point& x, const Point& y) {
  if (apply(delta, x) != y) {
    throw InternalInconsistency("constructed map " + delta.str() + " sends " + x.str() + " to " +
                                apply(delta, x).str() + ", expected " + y.str());
  }
  return delta;
}

// ---- rank 1 ----------------------------------------------------------------

// alpha in G_2 with alpha(x) = (p/d, 0), 0 < p < d, for a rational x with
// den(x) = d > 1.
Map to_axis(const RationalPoint& x) {
  const Map shift = Map::translation({-x[0].floor(), -x[1].floor()});
  const RationalPoint x0 = shift(x);
  const HomogeneousVector h = homogeneous(x0);
  const BigInt g = gcd(h.entries[0], h.entries[1]);
  const BigInt v0 = h.entries[0] / g;
  const BigInt v1 = h.entries[1] / g;
  // [v | w] with det 1; its inverse sends v to e_1.
  const Bezout b = bezout(v0, v1);
  const Map basis = affine(v0, -b.t, v1, b.s, 0, 0);
  return basis.inverse() * shift;
}

// conv(r, w, e_2) with r = (p/d, 0) and w = (q, 1 - c), q/c = comp(p/d).
RationalSimplex axis_triangle(const RationalPoint& r) {
  const FareyFraction comp = companion(FareyFraction(r[0]));
  const RationalPoint w{Rational(comp.num()), Rational(1 - comp.den())};
  return RationalSimplex({r, w, RationalPoint{Rational(0), Rational(1)}});
}

Map witness_rank1(const RationalPoint& x, const RationalPoint& y) {
  if (den(x) == 1) {
    return Map::translation({y[0].num() - x[0].num(), y[1].num() - x[1].num()});
  }
  const Map alpha = to_axis(x);
  const Map beta = to_axis(y);
  const Map gamma = unique_map(axis_triangle(alpha(x)), axis_triangle(beta(y)));
  return beta.inverse() * gamma * alpha;
}

// ---- rank 2 ----------------------------------------------------------------

struct Normalized {
  Map alpha;        // sends the point into conv((1/d, 0), (0, p/d))
  Point image;      // alpha(x)
};

// Consecutive denominator-d points a, b of the line with x strictly between.
std::pair<RationalPoint, RationalPoint> bracket(const Point& x, const LineNormal& n,
                                                const BigInt& d) {
  const BigInt a1 = n.a1 / d;
  const BigInt a2 = n.a2 / d;
  const Bezout bz = bezout(a1, a2);
  // Denominator-d points: r0 + k * dir / d, k in Z.
  const RationalPoint r0{Rational(-bz.s * n.a3, d), Rational(-bz.t * n.a3, d)};
  const BigInt dir[2] = {-a2, a1};

  std::optional<InsufficientEnclosure> failure;
  for (std::size_t i = 0; i < 2; ++i) {
    if (dir[i] == 0) continue;
    const SymbolicReal lambda = (x[i] - SymbolicReal(r0[i])) * Rational(d, dir[i]);
    BigInt k;
    try {
      k = symbolic_floor(lambda, x.symbols());
    } catch (const InsufficientEnclosure& e) {
      failure = e;
      continue;
    }
    auto at = [&](const BigInt& m) {
      return RationalPoint{r0[0] + Rational(m * dir[0], d), r0[1] + Rational(m * dir[1], d)};
    };
    return {at(k), at(k + 1)};
  }
  throw *failure;
}

// s with den(s) = c and conv(a, b, s) regular.
RationalPoint complete_triangle(const RationalPoint& a, const RationalPoint& b, const BigInt& c) {
  const IntVector u = homogeneous(a).entries;
  const IntVector v = homogeneous(b).entries;
  const BigInt n0 = u[1] * v[2] - u[2] * v[1];
  const BigInt n1 = u[2] * v[0] - u[0] * v[2];
  const BigInt n2 = u[0] * v[1] - u[1] * v[0];
  // det(a~, b~, (s0, s1, c)) = n0 s0 + n1 s1 + n2 c must be +-1.
  const Bezout bz = bezout(n0, n1);
  for (const long eps : {1L, -1L}) {
    const BigInt rhs = BigInt(eps) - n2 * c;
    if (rhs % bz.g != 0) continue;
    const BigInt k = rhs / bz.g;
    return RationalPoint{Rational(bz.s * k, c), Rational(bz.t * k, c)};
  }
  throw InternalInconsistency("no vertex of denominator " + c.get_str() +
                              " completes a regular triangle");
}

Normalized normalize_rank2(const Point& x, const LineNormal& n, const BigInt& d, const BigInt& c,
                           const CompanionPair& pq) {
  const auto [a, b] = bracket(x, n, d);
  const RationalPoint s = complete_triangle(a, b, c);
  const RationalSimplex target({RationalPoint{Rational(1, d), Rational(0)},
                                RationalPoint{Rational(0), Rational(pq.p, d)},
                                RationalPoint{Rational(0), Rational(pq.q, c)}});
  const Map alpha = unique_map(RationalSimplex({a, b, s}), target);
  return {alpha, apply(alpha, x)};
}

Map witness_rank2(const Point& x, const Point& y, const OrbitInvariant& inv) {
  const LineNormal nx = *affine_hull(x).line;
  const LineNormal ny = *affine_hull(y).line;
  const BigInt& d = inv.d;
  const BigInt& c = inv.c;
  const CompanionPair pq = companion_inverse(d, c);

  const Normalized fx = normalize_rank2(x, nx, d, c, pq);
  const Normalized fy = normalize_rank2(y, ny, d, c, pq);

  Map gamma = Map::identity(2);
  if (fx.image != fy.image) {
    // xi' = (1/d - xi_1, p xi_1).
    const BigInt u = c * pq.p - d * pq.q;
    const BigInt& p = pq.p;
    const BigInt& q = pq.q;
    gamma = affine(d * q / u, c / u, p - d * p * q / u, -d * q / u, -q / u, p * q / u);
    if (apply(gamma, fx.image) != fy.image) {
      throw InternalInconsistency("normalized points " + fx.image.str() + " and " +
                                  fy.image.str() + " are not related by the reflection");
    }
  }
  return fy.alpha.inverse() * gamma * fx.alpha;
}

// ---- rank 3 ----------------------------------------------------------------

Map witness_rank3(const Point& x, const Point& y) {
  const std::size_t k = x.symbols().size();
  auto rows_of = [&](const Point& z) {
    std::vector<RationalVector> rows;
    for (const auto& coord : z.coords()) {
      RationalVector r(k + 1);
      r[0] = coord.constant();
      for (const auto& [name, coeff] : coord.coeffs()) r[1 + z.symbols().index_of(name)] = coeff;
      rows.push_back(std::move(r));
    }
    RationalVector one(k + 1);
    one[0] = 1;
    rows.push_back(std::move(one));
    return rows;
  };
  const LatticeReduction rx = hnf_with_transform(rows_of(x), k + 1);
  const LatticeReduction ry = hnf_with_transform(rows_of(y), k + 1);
  // K_x R_x = K_y R_y, so R_y = K_y^-1 K_x R_x.
  const IntMatrix m = to_integer(inverse(ry.transform) * to_rational(rx.transform));
  if (m(2, 0) != 0 || m(2, 1) != 0 || m(2, 2) != 1) {
    throw InternalInconsistency("change of basis does not fix the constant 1");
  }
  return affine(m(0, 0), m(0, 1), m(1, 0), m(1, 1), m(0, 2), m(1, 2));
}

// ---- dimension 1 -----------------------------------------------------------

Map witness_1d(const Point& x, const Point& y) {
  for (const long sign : {1L, -1L}) {
    const SymbolicReal t = y[0] - x[0] * Rational(sign);
    if (t.is_rational() && t.constant().is_integer()) {
      return Map(IntMatrix{{BigInt(sign)}}, IntVector{t.constant().num()});
    }
  }
  throw InternalInconsistency(x.str() + " and " + y.str() +
                              " share an invariant but differ by no +-x + k");
}

}  // namespace

AffineUnimodularMap witness(const Point& x, const Point& y) {
  if (!equivalent(x, y)) {
    throw NotEquivalent(x.str() + " and " + y.str() + " lie in different orbits");
  }
  if (x == y) return Map::identity(x.dim());
  if (x.dim() == 1) return verified(witness_1d(x, y), x, y);

  const OrbitInvariant inv = invariant(x);
  switch (inv.rank) {
    case 1:
      return verified(witness_rank1(x.to_rational(), y.to_rational()), x, y);
    case 2:
      return verified(witness_rank2(x, y, inv), x, y);
    default:
      return verified(witness_rank3(x, y), x, y);
  }
}

}  // namespace afforb
