#include "afforb/exact/symbolic.hpp"

#include <algorithm>
#include <cctype>

#include "afforb/error.hpp"

namespace afforb {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

SymbolSpec make_symbol(std::string name, Rational lo, Rational hi) {
  if (!valid_identifier(name)) throw ParseError("invalid symbol name '" + name + "'");
  if (!(lo < hi)) {
    throw BadEnclosure("enclosure of " + name + " must satisfy lo < hi, got (" + lo.str() +
                       ", " + hi.str() + ")");
  }
  return SymbolSpec{std::move(name), std::move(lo), std::move(hi)};
}

SymbolTable::SymbolTable(std::initializer_list<SymbolSpec> specs) {
  for (const auto& s : specs) add(s);
}

void SymbolTable::add(SymbolSpec spec) {
  if (!(spec.lo < spec.hi)) {
    throw BadEnclosure("enclosure of " + spec.name + " is empty");
  }
  auto it = std::lower_bound(specs_.begin(), specs_.end(), spec.name,
                             [](const SymbolSpec& s, const std::string& n) { return s.name < n; });
  if (it != specs_.end() && it->name == spec.name) {
    throw BadParameters("symbol '" + spec.name + "' declared twice");
  }
  specs_.insert(it, std::move(spec));
}

const SymbolSpec* SymbolTable::find(const std::string& name) const {
  auto it = std::lower_bound(specs_.begin(), specs_.end(), name,
                             [](const SymbolSpec& s, const std::string& n) { return s.name < n; });
  if (it == specs_.end() || it->name != name) return nullptr;
  return &*it;
}

std::size_t SymbolTable::index_of(const std::string& name) const {
  const SymbolSpec* s = find(name);
  if (s == nullptr) throw UnknownSymbol("symbol '" + name + "' is not declared");
  return static_cast<std::size_t>(s - specs_.data());
}

SymbolicReal SymbolicReal::symbol(const std::string& name, const Rational& coeff) {
  SymbolicReal v;
  if (!coeff.is_zero()) v.coeffs_.emplace(name, coeff);
  return v;
}

Rational SymbolicReal::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational() : it->second;
}

SymbolicReal SymbolicReal::operator-() const {
  SymbolicReal v = *this;
  v *= Rational(-1);
  return v;
}

SymbolicReal& SymbolicReal::operator+=(const SymbolicReal& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [name, c] : rhs.coeffs_) {
    auto [it, inserted] = coeffs_.emplace(name, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

SymbolicReal& SymbolicReal::operator-=(const SymbolicReal& rhs) { return *this += -rhs; }

SymbolicReal& SymbolicReal::operator*=(const Rational& k) {
  if (k.is_zero()) {
    constant_ = Rational();
    coeffs_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& [name, c] : coeffs_) c *= k;
  return *this;
}

std::string SymbolicReal::str() const {
  std::string out;
  if (!constant_.is_zero() || coeffs_.empty()) out = constant_.str();
  for (const auto& [name, c] : coeffs_) {
    std::string term;
    const Rational mag = c.abs();
    term = mag == 1 ? name : mag.str() + "*" + name;
    if (out.empty()) {
      out = c.sign() < 0 ? "-" + term : term;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::string Interval::str() const {
  if (exact) return "[" + lo.str() + "]";
  return "(" + lo.str() + ", " + hi.str() + ")";
}

Interval enclosure(const SymbolicReal& v, const SymbolTable& symbols) {
  Interval iv{v.constant(), v.constant(), v.is_rational()};
  for (const auto& [name, c] : v.coeffs()) {
    const SymbolSpec* s = symbols.find(name);
    if (s == nullptr) throw UnknownSymbol("symbol '" + name + "' is not declared");
    const Rational a = c * s->lo;
    const Rational b = c * s->hi;
    iv.lo += std::min(a, b);
    iv.hi += std::max(a, b);
  }
  return iv;
}

Sign symbolic_sign(const SymbolicReal& v, const SymbolTable& symbols) {
  const Interval iv = enclosure(v, symbols);
  if (iv.exact) {
    const int s = iv.lo.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  // Open enclosure: a nonzero symbolic part keeps v strictly inside (lo, hi).
  if (iv.lo.sign() >= 0) return Sign::positive;
  if (iv.hi.sign() <= 0) return Sign::negative;
  throw InsufficientEnclosure("sign(" + v.str() + ")", iv.str());
}

BigInt symbolic_floor(const SymbolicReal& v, const SymbolTable& symbols) {
  if (v.is_rational()) return v.constant().floor();
  const Interval iv = enclosure(v, symbols);
  const BigInt k = iv.lo.floor();
  if (iv.hi <= Rational(BigInt(k + 1))) return k;
  throw InsufficientEnclosure("floor(" + v.str() + ")", iv.str());
}

}  // namespace afforb
