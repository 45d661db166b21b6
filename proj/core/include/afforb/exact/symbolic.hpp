#pragma once

#include <map>
#include <string>
#include <vector>

#include "afforb/exact/rational.hpp"

namespace afforb {

// A formal irrational together with an open rational interval (lo, hi) that
// contains its value.
//
// Declared symbols are assumed to be rationally independent together with 1.
// This is a contract with the caller and is never verified: declaring, say,
// xi and 2*xi as separate symbols makes every equality decision below wrong.
struct SymbolSpec {
  std::string name;
  Rational lo;
  Rational hi;

  friend bool operator==(const SymbolSpec&, const SymbolSpec&) = default;
};

// Throws BadEnclosure unless lo < hi, ParseError on an invalid identifier.
SymbolSpec make_symbol(std::string name, Rational lo, Rational hi);

// Declared symbols, kept sorted by name.
class SymbolTable {
 public:
  SymbolTable() = default;
  SymbolTable(std::initializer_list<SymbolSpec> specs);

  // Throws BadParameters on a duplicate name.
  void add(SymbolSpec spec);

  const SymbolSpec* find(const std::string& name) const;
  // Position of the symbol in the sorted order; throws UnknownSymbol.
  std::size_t index_of(const std::string& name) const;

  std::size_t size() const { return specs_.size(); }
  bool empty() const { return specs_.empty(); }
  const SymbolSpec& operator[](std::size_t i) const { return specs_[i]; }
  auto begin() const { return specs_.begin(); }
  auto end() const { return specs_.end(); }

  friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

 private:
  std::vector<SymbolSpec> specs_;
};

// constant + sum(coeff[s] * s). Zero coefficients are never stored, so two
// values are equal exactly when their representations are.
class SymbolicReal {
 public:
  SymbolicReal() = default;
  SymbolicReal(Rational constant) : constant_(std::move(constant)) {}  // NOLINT
  SymbolicReal(long constant) : constant_(constant) {}                   // NOLINT

  static SymbolicReal symbol(const std::string& name, const Rational& coeff = 1);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const std::string& name) const;

  bool is_rational() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

  SymbolicReal operator-() const;
  SymbolicReal& operator+=(const SymbolicReal& rhs);
  SymbolicReal& operator-=(const SymbolicReal& rhs);
  SymbolicReal& operator*=(const Rational& k);

  friend SymbolicReal operator+(SymbolicReal a, const SymbolicReal& b) { return a += b; }
  friend SymbolicReal operator-(SymbolicReal a, const SymbolicReal& b) { return a -= b; }
  friend SymbolicReal operator*(SymbolicReal a, const Rational& k) { return a *= k; }
  friend SymbolicReal operator*(const Rational& k, SymbolicReal a) { return a *= k; }

  friend bool operator==(const SymbolicReal&, const SymbolicReal&) = default;

  std::string str() const;

 private:
  Rational constant_;
  std::map<std::string, Rational> coeffs_;
};

// Enclosure of a symbolic value: the exact value when `exact`, otherwise the
// open interval (lo, hi).
struct Interval {
  Rational lo;
  Rational hi;
  bool exact = false;

  std::string str() const;
};

// Throws UnknownSymbol for a symbol missing from the table.
Interval enclosure(const SymbolicReal& v, const SymbolTable& symbols);

enum class Sign { negative = -1, zero = 0, positive = 1 };

// zero iff v is identically zero. Otherwise decided from the enclosures;
// throws InsufficientEnclosure when the enclosure straddles 0.
Sign symbolic_sign(const SymbolicReal& v, const SymbolTable& symbols);

// Largest integer k <= v. Irrational values need an enclosure that does not
// contain an integer.
BigInt symbolic_floor(const SymbolicReal& v, const SymbolTable& symbols);

}  // namespace afforb
