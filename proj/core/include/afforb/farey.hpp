#pragma once

#include <utility>
#include <vector>

#include "afforb/exact/rational.hpp"

namespace afforb {

// A reduced fraction in [0, 1].
class FareyFraction {
 public:
  // Throws BadParameters outside [0, 1].
  explicit FareyFraction(Rational value);
  FareyFraction(long p, long q) : FareyFraction(Rational(p, q)) {}

  const Rational& value() const { return value_; }
  const BigInt& num() const { return value_.num(); }
  const BigInt& den() const { return value_.den(); }
  std::string str() const { return value_.str(); }

  friend bool operator==(const FareyFraction&, const FareyFraction&) = default;
  friend auto operator<=>(const FareyFraction& a, const FareyFraction& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

// Reduced fractions in [0, 1] with denominator <= d, increasing.
std::vector<FareyFraction> farey_sequence(const BigInt& d);

// The elements adjacent to x in the d-th Farey sequence.
// Throws Endpoint for 0 and 1, BadParameters when den(x) > d.
std::pair<FareyFraction, FareyFraction> neighbors(const FareyFraction& x, const BigInt& d);

// comp(0) = 1, comp(1) = 0, comp(1/2) = 1; otherwise the neighbor of x in
// the den(x)-th Farey sequence with the smaller denominator.
FareyFraction companion(const FareyFraction& x);

struct CompanionPair {
  BigInt p;
  BigInt q;
};

// Some p/d with comp(p/d) = q/c. Requires c = 1 and d <= 4, or d >= 5,
// c < d/2 and gcd(c, d) = 1; throws BadParameters otherwise.
//
// Several p can qualify (d = 5, c = 2 admits 2 and 3). The result is the one
// reached by the Stern-Brocot descent from pos[(0,1), (1,1)] towards (c, d).
CompanionPair companion_inverse(const BigInt& d, const BigInt& c);

FareyFraction mediant(const FareyFraction& a, const FareyFraction& b);

}  // namespace afforb
