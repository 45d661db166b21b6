// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "afforb/classifier.hpp"
#include "afforb/farey.hpp"
#include "afforb/oracle.hpp"
#include "afforb/polyhedral.hpp"

using namespace afforb;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
  long checked = 0;
  long violations = 0;
  std::string first_failure;

  void check(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (cond) return;
    ++violations;
    ok = false;
    if (first_failure.empty()) first_failure = what();
  }
};

long totient(long n) {
  long phi = 0;
  for (long k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
  return phi;
}

// sqrt(2) - 1 and sqrt(3) - 1 to 40 digits.
const Rational kXiLo = Rational::parse("4142135623730950488016887242096980785696/10000000000000000000000000000000000000000");
const Rational kXiHi = kXiLo + Rational::parse("1/10000000000000000000000000000000000000000");
const Rational kEtaLo = Rational::parse("7320508075688772935274463415058723669428/10000000000000000000000000000000000000000");
const Rational kEtaHi = kEtaLo + Rational::parse("1/10000000000000000000000000000000000000000");

const SymbolTable kXi{make_symbol("xi", kXiLo, kXiHi)};
const SymbolTable kXiEta{make_symbol("eta", kEtaLo, kEtaHi), make_symbol("xi", kXiLo, kXiHi)};
const SymbolicReal xi = SymbolicReal::symbol("xi");
const SymbolicReal eta = SymbolicReal::symbol("eta");

AffineUnimodularMap random_delta(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  while (true) {
    const long p = e(rng), q = e(rng), r = e(rng), s = e(rng);
    const long det = p * s - q * r;
    if (det == 1 || det == -1)
      return AffineUnimodularMap(IntMatrix{{p, q}, {r, s}}, IntVector{e(rng), e(rng)});
  }
}

// A rank-2 point on the line a1 y1 + a2 y2 + a3 = 0.
Point point_on_line(long a1, long a2, long a3, const Rational& shift) {
  if (a2 != 0) {
    const SymbolicReal y1 = xi + shift;
    return Point({y1, (y1 * Rational(a1) + Rational(a3)) * Rational(-1, a2)}, kXi);
  }
  return Point({Rational(-a3, a1), xi + shift}, kXi);
}

std::vector<RationalPoint> rational_points(long max_den) {
  std::vector<RationalPoint> out;
  for (long q = 1; q <= max_den; ++q)
    for (long a = 0; a <= q; ++a)
      for (long b = 0; b <= q; ++b) {
        RationalPoint p{Rational(a, q), Rational(b, q)};
        if (den(p) == q) out.push_back(std::move(p));
      }
  return out;
}

Verdict criterion1() {
  Verdict v;
  const Point a({Rational(1, 5), xi}, kXi);
  const Point b({Rational(2, 5), xi}, kXi);
  v.check(c_of(a) == 1, [] { return std::string("c_of(a) != 1"); });
  v.check(c_of(b) == 2, [] { return std::string("c_of(b) != 2"); });
  v.check(!equivalent(a, b), [] { return std::string("a and b reported equivalent"); });
  v.check(!witness_search(a, b, 5).has_value(),
          [] { return std::string("witness_search found a map"); });
  return v;
}

Verdict criterion2() {
  Verdict v;
  v.check(companion(FareyFraction(0, 1)).value() == 1, [] { return std::string("comp(0)"); });
  v.check(companion(FareyFraction(1, 1)).value() == 0, [] { return std::string("comp(1)"); });
  v.check(companion(FareyFraction(1, 2)).value() == 1, [] { return std::string("comp(1/2)"); });
  return v;
}

Verdict criterion3() {
  Verdict v;
  for (long d = 1; d <= 50; ++d)
    for (long p = 0; p <= d; ++p) {
      if (std::gcd(p, d) != 1) continue;
      const FareyFraction x(p, d);
      const BigInt e = companion(x).den();
      bool ok = true;
      if (d >= 3) ok = 2 * e < d && gcd(BigInt(d), e) == 1;
      if (d <= 4) ok = ok && e == 1;
      v.check(ok, [&] { return "comp(" + x.str() + ") = " + companion(x).str(); });
    }
  return v;
}

Verdict criterion4() {
  Verdict v;
  for (long d = 1; d <= 50; ++d)
    for (const BigInt& c : census(d).cs) {
      const CompanionPair pq = companion_inverse(d, c);
      const BigInt u = pq.q * d - pq.p * c;
      const bool ok = (u == 1 || u == -1) &&
                      companion(FareyFraction(Rational(pq.p, d))).value() == Rational(pq.q, c);
      v.check(ok, [&] { return "d=" + std::to_string(d) + " c=" + c.get_str(); });
    }
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::mt19937_64 rng(5);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  long done = 0, regular = 0;
  while (done < 500) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 2));
    const std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<long>(n)));
    std::vector<RationalPoint> verts(k + 1);
    for (auto& p : verts)
      for (std::size_t j = 0; j < n; ++j) {
        const long q = uniform(1, 8);
        p.coords.emplace_back(uniform(0, q), q);
      }
    std::optional<RationalSimplex> t;
    try {
      t.emplace(verts);
    } catch (const NotIndependent&) {
      continue;
    }
    ++done;
    const bool minors = is_regular_simplex(*t);
    const bool box = parallelepiped_integer_points(*t).size() == 1;
    const bool densum = densum_regularity_check(*t);
    regular += minors;
    v.check(minors == box && box == densum, [&] {
      std::string s;
      for (const auto& p : verts) s += p.str() + " ";
      return s;
    });
  }
  v.note = "regular=" + std::to_string(regular);
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto points = rational_points(12);
  std::vector<Point> as_points(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i; j < points.size(); ++j) {
      const bool eq = equivalent(as_points[i], as_points[j]);
      v.check(eq == (den(points[i]) == den(points[j])),
              [&] { return points[i].str() + " vs " + points[j].str(); });
    }

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  int sampled = 0;
  while (sampled < 200) {
    const RationalPoint& x = points[pick(rng)];
    const RationalPoint& y = points[pick(rng)];
    if (den(x) != den(y)) continue;
    ++sampled;
    bool ok = false;
    try {
      ok = witness(Point(x), Point(y))(x) == y;
    } catch (const Error&) {
    }
    v.check(ok, [&] { return "witness " + x.str() + " -> " + y.str(); });
  }

  for (long d = 1; d <= 12; ++d) {
    const RationalPoint x{Rational(1, d), Rational(0)};
    const OrbitInvariant inv = invariant(Point(x));
    for (const auto& p : orbit_bfs(x, Rational(1), 6))
      v.check(den(p) == d && invariant(Point(p)) == inv,
              [&] { return "orbit of " + x.str() + " reached " + p.str(); });
  }
  return v;
}

Verdict criterion7() {
  Verdict v;
  const long a = 20;
  for (long a1 = 0; a1 <= a; ++a1)
    for (long a2 = -a; a2 <= a; ++a2) {
      if (a1 == 0 && a2 <= 0) continue;
      for (long a3 = -a; a3 <= a; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        const LineNormal n = LineNormal::canonical(a1, a2, a3);
        const BigInt g = std::gcd(a1, a2);
        const Point x = point_on_line(a1, a2, a3, Rational(0));
        const bool c_ok = line_c(n) == min_c_bruteforce(n) && c_of(x) == line_c(n);
        const bool d_ok = line_d(n) == g && min_den_on_line_bruteforce(n) == g &&
                          group_lattice(x).axis_generator(0) == Rational(1, g) && d_of(x) == g;
        v.check(c_ok && d_ok, [&] { return "line " + n.str(); });
      }
    }
  return v;
}

Verdict criterion8() {
  Verdict v;
  for (long d = 1; d <= 30; ++d) {
    std::vector<BigInt> expected;
    if (d <= 4) {
      expected = {1};
    } else {
      for (long c = 1; 2 * c < d; ++c)
        if (std::gcd(c, d) == 1) expected.emplace_back(c);
    }
    std::set<BigInt> realized;
    for (long p = 0; p < d; ++p)
      if (std::gcd(p, d) == 1) realized.insert(c_of(Point({Rational(p, d), xi}, kXi)));
    const Census cen = census(d);
    const bool ok = cen.count == std::max(1L, totient(d) / 2) && cen.cs == expected &&
                    realized == std::set<BigInt>(expected.begin(), expected.end());
    v.check(ok, [&] { return "census(" + std::to_string(d) + ")"; });
  }
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> e(-10, 10);
  int done = 0;
  while (done < 100) {
    const long a1 = e(rng), a2 = e(rng), a3 = e(rng);
    if ((a1 == 0 && a2 == 0) || std::gcd(std::gcd(a1, a2), a3) != 1) continue;
    ++done;
    const Point x = point_on_line(a1, a2, a3, Rational(e(rng), 7));
    const AffineUnimodularMap delta = random_delta(rng, 5);
    const Point y = apply(delta, x);
    bool ok = false;
    try {
      ok = apply(witness(x, y), x) == y;
    } catch (const Error&) {
    }
    v.check(ok, [&] { return x.str() + " under " + delta.str(); });
  }
  return v;
}

Verdict criterion10() {
  Verdict v;
  v.check(classify_1d(Point({Rational(1, 5)})) != classify_1d(Point({Rational(2, 5)})),
          [] { return std::string("1/5 and 2/5 share an invariant"); });
  for (long d = 1; d <= 30; ++d) {
    std::set<BigInt> cs;
    for (long p = 0; p < d; ++p)
      if (std::gcd(p, d) == 1) {
        const OrbitInvariant inv = classify_1d(Point({Rational(p, d)}));
        if (inv.d == d) cs.insert(inv.c);
      }
    v.check(static_cast<long>(cs.size()) == std::max(1L, totient(d) / 2),
            [&] { return "d = " + std::to_string(d); });
  }
  for (const SymbolicReal& s : {xi, xi * Rational(3) + Rational(1, 2), -xi * Rational(2, 7)})
    v.check(classify_1d(Point({s}, kXi)).c == 1, [&] { return s.str(); });
  return v;
}

Verdict criterion11() {
  Verdict v;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(-10, 10);
  std::uniform_int_distribution<long> q(1, 12);
  for (int i = 0; i < 300; ++i) {
    Point x = Point({Rational(0), Rational(0)});
    switch (i % 3) {
      case 0:
        x = Point({Rational(e(rng), q(rng)), Rational(e(rng), q(rng))});
        break;
      case 1: {
        long a1 = 0, a2 = 0, a3 = 0;
        while ((a1 == 0 && a2 == 0) || std::gcd(std::gcd(a1, a2), a3) != 1) {
          a1 = e(rng);
          a2 = e(rng);
          a3 = e(rng);
        }
        x = point_on_line(a1, a2, a3, Rational(e(rng), q(rng)));
        break;
      }
      default:
        x = Point({xi * Rational(e(rng) | 1) + eta * Rational(e(rng), q(rng)) + Rational(e(rng), q(rng)),
                   eta * Rational(e(rng) | 1, q(rng)) + Rational(e(rng), q(rng))},
                  kXiEta);
    }
    const AffineUnimodularMap delta = random_delta(rng, 5);
    const Point y = apply(delta, x);
    v.check(invariant(y) == invariant(x), [&] { return x.str() + " under " + delta.str(); });
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"nonequivalent pair with equal groups", criterion1},
      {"companion base cases", criterion2},
      {"companion denominators, d <= 50", criterion3},
      {"companion inverse, d <= 50", criterion4},
      {"regularity tests agree on 500 simplexes", criterion5},
      {"rank-1 completeness, den <= 12", criterion6},
      {"c_x congruence vs search, |a_i| <= 20", criterion7},
      {"census, d <= 30", criterion8},
      {"rank-2 witness round trip, 100 points", criterion9},
      {"classification on the line", criterion10},
      {"invariance under 300 random maps", criterion11},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.first_failure = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.ok;
    std::printf("%s %2zu  %-42s checked=%ld violations=%ld %.2fs%s%s%s%s\n",
                v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.checked, v.violations,
                secs, v.note.empty() ? "" : " ", v.note.c_str(),
                v.first_failure.empty() ? "" : "  first: ", v.first_failure.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
