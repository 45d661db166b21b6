#pragma once

#include <string_view>

#include "afforb/point.hpp"

namespace afforb::cli {

// name=(lo,hi), an open enclosure. Throws ParseError or BadEnclosure.
SymbolSpec parse_symbol(std::string_view text);

// "(c1, c2)" or a single coordinate; coordinates are sums of q, q*sym and
// sym terms. Throws ParseError, ZeroDenominator or UnknownSymbol.
Point parse_point(std::string_view text, const SymbolTable& symbols);

}  // namespace afforb::cli
