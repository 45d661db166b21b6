#include "afforb/oracle.hpp"

#include <deque>

#include "afforb/polyhedral.hpp"

namespace afforb {

namespace {

using Map = AffineUnimodularMap;

bool in_box(const RationalPoint& p, const Rational& box) {
  for (const auto& x : p.coords)
    if (x < -box || x > box) return false;
  return true;
}

// Integer solutions (z1, z2) of a1 z1 + a2 z2 + a3 h = 0 with z1 (or z2 when
// a2 = 0) in [from, from + period).
std::vector<std::pair<BigInt, BigInt>> solutions_at_height(const LineNormal& n, const BigInt& h,
                                                           const BigInt& from) {
  std::vector<std::pair<BigInt, BigInt>> out;
  if (n.a2 != 0) {
    const BigInt period = abs(n.a2);
    for (BigInt z1 = from; z1 < from + period; ++z1) {
      const BigInt r = -(n.a1 * z1 + n.a3 * h);
      if (r % n.a2 == 0) out.emplace_back(z1, r / n.a2);
    }
  } else {
    const BigInt r = -(n.a3 * h);
    if (r % n.a1 != 0) return out;
    for (BigInt z2 = from; z2 < from + 1; ++z2) out.emplace_back(r / n.a1, z2);
  }
  return out;
}

RationalPoint at_height(const std::pair<BigInt, BigInt>& z, const BigInt& h) {
  return RationalPoint{Rational(z.first, h), Rational(z.second, h)};
}

}  // namespace

std::vector<AffineUnimodularMap> default_orbit_generators() {
  return {
      Map(IntMatrix{{0, 1}, {1, 0}}, IntVector{0, 0}),
      Map(IntMatrix{{-1, 0}, {0, 1}}, IntVector{0, 0}),
      Map(IntMatrix{{1, 1}, {0, 1}}, IntVector{0, 0}),
      Map(IntMatrix{{1, -1}, {0, 1}}, IntVector{0, 0}),
      Map::translation({1, 0}),
      Map::translation({-1, 0}),
      Map::translation({0, 1}),
      Map::translation({0, -1}),
  };
}

std::set<RationalPoint> orbit_bfs(const RationalPoint& x, const Rational& box, int depth) {
  return orbit_bfs(x, box, depth, default_orbit_generators());
}

std::set<RationalPoint> orbit_bfs(const RationalPoint& x, const Rational& box, int depth,
                                  const std::vector<AffineUnimodularMap>& generators) {
  std::set<RationalPoint> seen;
  if (!in_box(x, box)) return seen;
  seen.insert(x);
  std::vector<RationalPoint> frontier{x};
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<RationalPoint> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        RationalPoint q = g(p);
        if (in_box(q, box) && seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen;
}

BigInt min_den_on_line_bruteforce(const LineNormal& n) {
  for (BigInt h = 1;; ++h)
    if (!solutions_at_height(n, h, 0).empty()) return h;
}

BigInt min_c_bruteforce(const LineNormal& n) {
  const BigInt d = min_den_on_line_bruteforce(n);

  // Two consecutive denominator-d points: the first solution from 0 and the
  // next one after it.
  const auto first = solutions_at_height(n, d, 0).front();
  const BigInt start = (n.a2 != 0 ? first.first : first.second) + 1;
  std::optional<std::pair<BigInt, BigInt>> second;
  for (BigInt from = start; !second; from += (n.a2 != 0 ? abs(n.a2) : BigInt(1))) {
    const auto more = solutions_at_height(n, d, from);
    if (!more.empty()) second = more.front();
  }
  const RationalPoint a = at_height(first, d);
  const RationalPoint b = at_height(*second, d);
  if (den(a) != d || den(b) != d) throw InternalInconsistency("consecutive points lost den d");

  const IntVector u = homogeneous(a).entries;
  const IntVector v = homogeneous(b).entries;
  const BigInt n0 = u[1] * v[2] - u[2] * v[1];
  const BigInt n1 = u[2] * v[0] - u[0] * v[2];
  const BigInt n2 = u[0] * v[1] - u[1] * v[0];
  // det(a~, b~, (s0, s1, c)) = n0 s0 + n1 s1 + n2 c, periodic in the free
  // coordinate with period |coefficient of the solved one|.
  const bool solve_second = n1 != 0;
  const BigInt& solved = solve_second ? n1 : n0;
  const BigInt& free = solve_second ? n0 : n1;
  const BigInt limit = 4 * d + 4;
  for (BigInt c = 1; c <= limit; ++c) {
    for (BigInt f = 0; f < abs(solved); ++f)
      for (const long eps : {1L, -1L}) {
        const BigInt r = BigInt(eps) - n2 * c - free * f;
        if (r % solved != 0) continue;
        const BigInt g = r / solved;
        const RationalPoint s = solve_second ? RationalPoint{Rational(f, c), Rational(g, c)}
                                             : RationalPoint{Rational(g, c), Rational(f, c)};
        if (den(s) == c && is_regular_simplex(RationalSimplex({a, b, s}))) return c;
      }
  }
  throw InternalInconsistency("no regular triangle found on line " + n.str());
}

BigInt min_c_1d_bruteforce(const Rational& x) {
  const Rational x0 = x - Rational(x.floor());
  const BigInt d = x0.den();
  const RationalPoint p{x0};
  for (BigInt c = 1; c <= d; ++c) {
    // A regular segment has length 1/(d c), so s lies in [x0 - 1, x0 + 1].
    for (BigInt k = -c; k <= 2 * c; ++k) {
      const Rational s(k, c);
      if (s.den() != c || s == x0) continue;
      const BigInt det = x0.num() * c - d * k;
      if (det != 1 && det != -1) continue;
      if (is_regular_simplex(RationalSimplex({p, RationalPoint{s}}))) return c;
    }
  }
  throw InternalInconsistency("no regular segment at " + x.str());
}

std::optional<AffineUnimodularMap> witness_search(const Point& x, const Point& y,
                                                  int entry_bound) {
  if (x.dim() != y.dim()) throw DimensionMismatch("points of different dimension");
  const std::size_t n = x.dim();
  auto try_linear = [&](const IntMatrix& u) -> std::optional<Map> {
    std::vector<SymbolicReal> ux(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ux[i] += Rational(u(i, j)) * x[j];
    IntVector t(n);
    for (std::size_t i = 0; i < n; ++i) {
      const SymbolicReal diff = y[i] - ux[i];
      if (!diff.is_rational() || !diff.constant().is_integer()) return std::nullopt;
      t[i] = diff.constant().num();
    }
    return Map(u, std::move(t));
  };

  if (auto hit = try_linear(IntMatrix::identity(n))) return hit;
  const long b = entry_bound;
  if (n == 1) {
    if (auto hit = try_linear(IntMatrix{{BigInt(-1)}})) return hit;
    return std::nullopt;
  }
  for (long p = -b; p <= b; ++p)
    for (long q = -b; q <= b; ++q)
      for (long r = -b; r <= b; ++r)
        for (long s = -b; s <= b; ++s) {
          const long det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          if (auto hit = try_linear(IntMatrix{{BigInt(p), BigInt(q)}, {BigInt(r), BigInt(s)}}))
            return hit;
        }
  return std::nullopt;
}

}  // namespace afforb
