#include "afforb/classifier.hpp"

#include <sstream>

namespace afforb {

namespace {

RationalVector components(const SymbolicReal& v, const SymbolTable& symbols) {
  RationalVector out(symbols.size() + 1);
  out[0] = v.constant();
  for (const auto& [name, coeff] : v.coeffs()) out[1 + symbols.index_of(name)] = coeff;
  return out;
}

BigInt min_signed_inverse(const BigInt& a, const BigInt& d) {
  if (d == 1) return 1;
  BigInt inv;
  const BigInt r = mod(a, d);
  if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t()) == 0) {
    throw InternalInconsistency(a.get_str() + " is not a unit modulo " + d.get_str());
  }
  const BigInt other = d - inv;
  return inv < other ? inv : other;
}

BigInt totient(BigInt n) {
  BigInt result = n;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

LineNormal LineNormal::canonical(BigInt a1, BigInt a2, BigInt a3) {
  if (a1 == 0 && a2 == 0) throw BadParameters("line normal with a1 = a2 = 0");
  const BigInt g = gcd(gcd(a1, a2), a3);
  a1 /= g;
  a2 /= g;
  a3 /= g;
  if (a1 < 0 || (a1 == 0 && a2 < 0)) {
    a1 = -a1;
    a2 = -a2;
    a3 = -a3;
  }
  return {std::move(a1), std::move(a2), std::move(a3)};
}

std::string LineNormal::str() const {
  return "(" + a1.get_str() + ", " + a2.get_str() + ", " + a3.get_str() + ")";
}

BigInt line_d(const LineNormal& n) { return gcd(n.a1, n.a2); }

BigInt line_c(const LineNormal& n) { return min_signed_inverse(n.a3, line_d(n)); }

std::string OrbitInvariant::str() const {
  std::ostringstream os;
  os << "rank " << rank << ", d " << d.get_str() << ", c " << c.get_str() << ", basis {";
  for (std::size_t i = 0; i < group.basis().size(); ++i) {
    os << (i ? ", " : "") << "(";
    const auto& b = group.basis()[i];
    for (std::size_t j = 0; j < b.size(); ++j) os << (j ? ", " : "") << b[j].str();
    os << ")";
  }
  os << "}";
  return os.str();
}

Lattice group_lattice(const Point& x) {
  const std::size_t k = x.symbols().size();
  std::vector<RationalVector> rows;
  RationalVector one(k + 1);
  one[0] = 1;
  rows.push_back(std::move(one));
  for (const auto& c : x.coords()) rows.push_back(components(c, x.symbols()));
  return hnf(rows, k + 1);
}

int rank(const Point& x) { return static_cast<int>(group_lattice(x).rank()); }

RationalAffineHull affine_hull(const Point& x) {
  if (x.dim() != 2) throw DimensionMismatch("affine_hull is defined for points of the plane");
  RationalAffineHull hull;
  if (x.is_rational()) {
    hull.dim = 0;
    hull.point = x.to_rational();
    return hull;
  }
  const int r = rank(x);
  if (r == 3) {
    hull.dim = 2;
    return hull;
  }
  // rank 2: the symbolic parts v1, v2 of the coordinates are parallel.
  const RationalVector u = components(x[0], x.symbols());
  const RationalVector v = components(x[1], x.symbols());
  std::size_t j = 1;
  while (u[j].is_zero() && v[j].is_zero()) ++j;
  const Rational a1 = v[j];
  const Rational a2 = -u[j];
  const Rational a3 = -(a1 * u[0] + a2 * v[0]);
  for (std::size_t i = 1; i < u.size(); ++i)
    if (!(a1 * u[i] + a2 * v[i]).is_zero())
      throw InternalInconsistency("rank-2 point without a rational line: " + x.str());
  const BigInt l = lcm(lcm(a1.den(), a2.den()), a3.den());
  hull.dim = 1;
  hull.line = LineNormal::canonical((a1 * Rational(l)).num(), (a2 * Rational(l)).num(),
                                    (a3 * Rational(l)).num());
  return hull;
}

BigInt d_of(const Point& x) { return invariant(x).d; }

BigInt c_of(const Point& x) { return invariant(x).c; }

OrbitInvariant invariant(const Point& x) {
  if (x.dim() == 1) return classify_1d(x);
  OrbitInvariant inv;
  inv.group = group_lattice(x);
  inv.rank = static_cast<int>(inv.group.rank());
  switch (inv.rank) {
    case 1:
      inv.d = den(x.to_rational());
      inv.c = 1;
      break;
    case 2: {
      const LineNormal n = *affine_hull(x).line;
      inv.d = line_d(n);
      inv.c = line_c(n);
      break;
    }
    default:
      inv.d = 1;
      inv.c = 1;
  }
  return inv;
}

bool equivalent(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("points of different dimension");
  if (!(x.symbols() == y.symbols())) {
    throw SymbolTableMismatch("points must be declared over the same symbols");
  }
  return invariant(x) == invariant(y);
}

Census census(const BigInt& d) {
  if (d < 1) throw BadParameters("census needs d >= 1");
  Census out;
  if (d <= 4) {
    out.cs = {BigInt(1)};
  } else {
    for (BigInt c = 1; 2 * c < d; ++c)
      if (gcd(c, d) == 1) out.cs.push_back(c);
  }
  out.count = static_cast<unsigned long>(out.cs.size());
  return out;
}

BigInt orbit_count(const BigInt& d) {
  if (d < 1) throw BadParameters("orbit_count needs d >= 1");
  const BigInt half = totient(d) / 2;
  return half > 1 ? half : BigInt(1);
}

OrbitInvariant classify_1d(const Point& x) {
  if (x.dim() != 1) throw DimensionMismatch("classify_1d needs a point of the line");
  OrbitInvariant inv;
  inv.group = group_lattice(x);
  inv.rank = static_cast<int>(inv.group.rank());
  if (inv.rank == 1) {
    const Rational v = x[0].constant();
    inv.d = v.den();
    inv.c = min_signed_inverse(v.num(), inv.d);
  } else {
    inv.d = inv.group.axis_generator(0)->den();
    inv.c = 1;
  }
  return inv;
}

}  // namespace afforb
