#include "afforb/selfcheck.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "afforb/classifier.hpp"
#include "afforb/farey.hpp"
#include "afforb/oracle.hpp"
#include "afforb/polyhedral.hpp"

namespace afforb {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    ++result_.violations;
    if (result_.failures.size() < 5) result_.failures.push_back(describe());
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<FareyFraction> fractions_with_den(long d) {
  std::vector<FareyFraction> out;
  for (long p = 0; p <= d; ++p)
    if (std::gcd(p, d) == 1) out.emplace_back(p, d);
  return out;
}

SuiteResult companion_suite(const SelfcheckOptions& o) {
  Suite s("companion");
  for (long d = 1; d <= o.max_den; ++d)
    for (const auto& x : fractions_with_den(d)) {
      const FareyFraction c = companion(x);
      const BigInt cd = c.den();
      const bool unimodular = abs(c.num() * x.den() - x.num() * cd) == 1;
      bool ok = unimodular && gcd(cd, x.den()) == 1;
      if (d <= 4) ok = ok && cd == 1;
      if (d >= 3) ok = ok && 2 * cd < x.den();
      s.check(ok, [&] { return "comp(" + x.str() + ") = " + c.str(); });
    }
  return s.done();
}

SuiteResult companion_inverse_suite(const SelfcheckOptions& o) {
  Suite s("companion_inverse");
  for (long d = 1; d <= o.max_den; ++d)
    for (const BigInt& c : census(d).cs) {
      const CompanionPair pq = companion_inverse(d, c);
      const bool ok = abs(pq.q * d - pq.p * c) == 1 &&
                      companion(FareyFraction(Rational(pq.p, d))).value() == Rational(pq.q, c);
      s.check(ok, [&] {
        return "companion_inverse(" + std::to_string(d) + ", " + c.get_str() + ") = (" +
               pq.p.get_str() + ", " + pq.q.get_str() + ")";
      });
    }
  return s.done();
}

SuiteResult c_shortcut_suite(const SelfcheckOptions& o) {
  Suite s("c_shortcut");
  const long a = o.max_normal;
  for (long a1 = 0; a1 <= a; ++a1)
    for (long a2 = -a; a2 <= a; ++a2) {
      if (a1 == 0 && a2 <= 0) continue;
      for (long a3 = -a; a3 <= a; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        const LineNormal n = LineNormal::canonical(a1, a2, a3);
        const BigInt fast = line_c(n);
        const BigInt slow = min_c_bruteforce(n);
        s.check(fast == slow && line_d(n) == min_den_on_line_bruteforce(n), [&] {
          return "line " + n.str() + ": shortcut " + fast.get_str() + ", search " +
                 slow.get_str();
        });
      }
    }
  return s.done();
}

SuiteResult regularity_suite(const SelfcheckOptions& o) {
  Suite s("regularity");
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int i = 0; i < o.simplexes; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 2));
    const std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<long>(n)));
    std::vector<RationalPoint> verts;
    while (verts.size() <= k) {
      RationalPoint p;
      for (std::size_t j = 0; j < n; ++j) {
        const long q = uniform(1, 8);
        p.coords.emplace_back(uniform(0, q), q);
      }
      verts.push_back(std::move(p));
    }
    std::optional<RationalSimplex> t;
    try {
      t.emplace(verts);
    } catch (const NotIndependent&) {
      --i;
      continue;
    }
    const bool by_minors = is_regular_simplex(*t);
    const bool by_box = parallelepiped_integer_points(*t).size() == 1;
    const bool by_densum = densum_regularity_check(*t);
    s.check(by_minors == by_box && by_box == by_densum, [&] {
      std::string v;
      for (const auto& p : t->vertices()) v += p.str() + " ";
      return "simplex " + v;
    });
  }
  return s.done();
}

SuiteResult rank1_suite(const SelfcheckOptions& o) {
  Suite s("rank1");
  std::mt19937_64 rng(o.seed + 1);
  std::vector<RationalPoint> points;
  for (long q = 1; q <= o.max_den; ++q)
    for (long a = 0; a <= q; ++a)
      for (long b = 0; b <= q; ++b) {
        RationalPoint p{Rational(a, q), Rational(b, q)};
        if (den(p) == q) points.push_back(std::move(p));
      }
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  for (int i = 0; i < 400; ++i) {
    const RationalPoint& x = points[pick(rng)];
    const RationalPoint& y = points[pick(rng)];
    const bool eq = equivalent(Point(x), Point(y));
    bool ok = eq == (den(x) == den(y));
    if (ok && eq) ok = witness(Point(x), Point(y))(x) == y;
    s.check(ok, [&] { return x.str() + " vs " + y.str(); });
  }
  return s.done();
}

SuiteResult census_suite(const SelfcheckOptions& o) {
  Suite s("census");
  for (long d = 1; d <= std::max(o.max_den, 5); ++d) {
    const Census c = census(d);
    std::set<BigInt> realized;
    for (long p = 0; p < d; ++p)
      if (std::gcd(p, d) == 1) realized.insert(line_c(LineNormal::canonical(d, 0, -p)));
    const bool ok = c.count == orbit_count(d) &&
                    std::set<BigInt>(c.cs.begin(), c.cs.end()) == realized;
    s.check(ok, [&] { return "census(" + std::to_string(d) + ")"; });
  }
  return s.done();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options) {
  return {companion_suite(options), companion_inverse_suite(options), c_shortcut_suite(options),
          regularity_suite(options), rank1_suite(options),           census_suite(options)};
}

}  // namespace afforb
