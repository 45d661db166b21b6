#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace afforb {

using BigInt = mpz_class;

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);

// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
struct Bezout {
  BigInt g, s, t;
};
Bezout bezout(const BigInt& a, const BigInt& b);

// Floor division and the matching non-negative remainder (b != 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod(const BigInt& a, const BigInt& m);

std::string to_string(const BigInt& value);

// Normalized fraction p/q: q >= 1, gcd(|p|, q) = 1, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  const BigInt& num() const { return value_.get_num(); }
  const BigInt& den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Construction with explicit normalization; throws ZeroDenominator.
inline Rational rational_normalize(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

}  // namespace afforb
