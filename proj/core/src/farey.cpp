#include "afforb/farey.hpp"

#include "afforb/error.hpp"

namespace afforb {

namespace {

struct Vec2 {
  BigInt x;
  BigInt y;
};

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw BadParameters(a.get_str() + " is not invertible modulo " + m.get_str());
  }
  return inv;
}

// Largest b <= d with b congruent to r modulo q (r in [0, q)).
BigInt largest_in_class(const BigInt& r, const BigInt& q, const BigInt& d) {
  return r + floor_div(d - r, q) * q;
}

}  // namespace

FareyFraction::FareyFraction(Rational value) : value_(std::move(value)) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    throw BadParameters(value_.str() + " is not in [0, 1]");
  }
}

std::vector<FareyFraction> farey_sequence(const BigInt& d) {
  if (d < 1) throw BadParameters("Farey order must be positive");
  std::vector<FareyFraction> out;
  BigInt a = 0, b = 1, c = 1, e = d;
  out.emplace_back(Rational(a, b));
  while (c <= e) {
    out.emplace_back(Rational(c, e));
    const BigInt k = floor_div(d + b, e);
    BigInt next_num = k * c - a;
    BigInt next_den = k * e - b;
    a = c;
    b = e;
    c = std::move(next_num);
    e = std::move(next_den);
    if (a == b) break;
  }
  return out;
}

std::pair<FareyFraction, FareyFraction> neighbors(const FareyFraction& x, const BigInt& d) {
  const BigInt& p = x.num();
  const BigInt& q = x.den();
  if (q == 1) throw Endpoint(x.str() + " has a single neighbor");
  if (q > d) throw BadParameters(x.str() + " does not belong to the Farey sequence of order " +
                                 d.get_str());
  // Left a/b: p*b - a*q = 1. Right c/e: c*q - p*e = 1.
  const BigInt inv = mod_inverse(p, q);
  const BigInt b = largest_in_class(inv, q, d);
  const BigInt e = largest_in_class(mod(-inv, q), q, d);
  const BigInt a = (p * b - 1) / q;
  const BigInt c = (p * e + 1) / q;
  return {FareyFraction(Rational(a, b)), FareyFraction(Rational(c, e))};
}

FareyFraction companion(const FareyFraction& x) {
  if (x.value() == Rational(0)) return FareyFraction(1, 1);
  if (x.value() == Rational(1)) return FareyFraction(0, 1);
  if (x.value() == Rational(1, 2)) return FareyFraction(1, 1);
  auto [left, right] = neighbors(x, x.den());
  return left.den() < right.den() ? left : right;
}

CompanionPair companion_inverse(const BigInt& d, const BigInt& c) {
  const bool small = d >= 1 && d <= 4 && c == 1;
  const bool large = d >= 5 && c >= 1 && 2 * c < d && gcd(c, d) == 1;
  if (!small && !large) {
    throw BadParameters("no rational of denominator " + d.get_str() +
                        " has a companion of denominator " + c.get_str());
  }
  if (d == 1) return {0, 1};
  if (d == 2) return {1, 1};

  // s(w) > 0 when w lies left of the ray through (c, d), < 0 when right.
  auto s = [&](const Vec2& w) -> BigInt { return c * w.y - d * w.x; };
  Vec2 left{0, 1};
  Vec2 right{1, 1};
  while (true) {
    const BigInt sl = s(left);
    const BigInt sr = s(right);
    const BigInt sm = sl + sr;
    if (sm == 0) break;
    if (sm < 0) {
      const BigInt k = floor_div(-sr - 1, sl);
      right.x += k * left.x;
      right.y += k * left.y;
    } else {
      const BigInt k = floor_div(sl - 1, -sr);
      left.x += k * right.x;
      left.y += k * right.y;
    }
  }
  // The endpoint that was not created last is the one of smaller height.
  const Vec2& u = left.y <= right.y ? left : right;
  return {u.y, u.x};
}

FareyFraction mediant(const FareyFraction& a, const FareyFraction& b) {
  return FareyFraction(Rational(a.num() + b.num(), a.den() + b.den()));
}

}  // namespace afforb
