#include "afforb/cli/parse.hpp"

#include <cctype>
#include <string>

namespace afforb::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable* symbols) : text_(text), symbols_(symbols) {}

  Point point() {
    std::vector<SymbolicReal> coords;
    if (peek() == '(') {
      ++pos_;
      coords.push_back(sum());
      expect(',');
      coords.push_back(sum());
      expect(')');
    } else {
      coords.push_back(sum());
    }
    finish();
    return Point(std::move(coords), *symbols_);
  }

  std::pair<std::string, std::pair<Rational, Rational>> symbol() {
    std::string name = identifier();
    if (name.empty()) fail("expected a symbol name");
    expect('=');
    expect('(');
    Rational lo = signed_rational();
    expect(',');
    Rational hi = signed_rational();
    expect(')');
    finish();
    return {std::move(name), {std::move(lo), std::move(hi)}};
  }

 private:
  SymbolicReal sum() {
    SymbolicReal acc = signed_term();
    while (peek() == '+' || peek() == '-') {
      const char op = text_[pos_++];
      SymbolicReal t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  SymbolicReal signed_term() {
    if (peek() == '-') {
      ++pos_;
      return -term();
    }
    if (peek() == '+') ++pos_;
    return term();
  }

  SymbolicReal term() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Rational q = rational();
      if (peek() != '*') return SymbolicReal(q);
      ++pos_;
      return sym() * q;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return sym();
    fail("expected a number or a symbol");
  }

  SymbolicReal sym() {
    const std::string name = identifier();
    if (name.empty()) fail("expected a symbol");
    if (symbols_->find(name) == nullptr) throw UnknownSymbol("undeclared symbol '" + name + "'");
    return SymbolicReal::symbol(name);
  }

  Rational signed_rational() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
    const Rational q = rational();
    return negative ? -q : q;
  }

  Rational rational() {
    std::string num = digits();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      std::string den = digits();
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start < pos_ && std::isdigit(static_cast<unsigned char>(text_[start])))
      fail("symbol names start with a letter");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  const SymbolTable* symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolSpec parse_symbol(std::string_view text) {
  auto [name, enclosure] = Parser(text, nullptr).symbol();
  return make_symbol(std::move(name), std::move(enclosure.first), std::move(enclosure.second));
}

Point parse_point(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, &symbols).point();
}

}  // namespace afforb::cli
