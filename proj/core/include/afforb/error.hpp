#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace afforb {

// Base of every recoverable error raised by the library. kind() is a stable
// identifier that the command-line front end copies into its error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define AFFORB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

AFFORB_DEFINE_ERROR(ZeroDenominator);
AFFORB_DEFINE_ERROR(DimensionMismatch);
AFFORB_DEFINE_ERROR(Singular);
AFFORB_DEFINE_ERROR(NotUnimodular);
AFFORB_DEFINE_ERROR(NotIndependent);
AFFORB_DEFINE_ERROR(NotPrimitive);
AFFORB_DEFINE_ERROR(NotRegular);
AFFORB_DEFINE_ERROR(DenominatorMismatch);
AFFORB_DEFINE_ERROR(Endpoint);
AFFORB_DEFINE_ERROR(BadParameters);
AFFORB_DEFINE_ERROR(SymbolTableMismatch);
AFFORB_DEFINE_ERROR(NotEquivalent);
AFFORB_DEFINE_ERROR(ParseError);
AFFORB_DEFINE_ERROR(UnknownSymbol);
AFFORB_DEFINE_ERROR(BadEnclosure);
AFFORB_DEFINE_ERROR(Overflow);
// A postcondition that the underlying theorems guarantee did not hold.
AFFORB_DEFINE_ERROR(InternalInconsistency);

#undef AFFORB_DEFINE_ERROR

// Raised when symbol enclosures are too wide to decide a strict comparison.
// comparison() names the undecided quantity, sign(v) or floor(v), and
// interval() the enclosure obtained for v.
class InsufficientEnclosure : public Error {
 public:
  InsufficientEnclosure(std::string comparison, std::string interval)
      : Error("InsufficientEnclosure",
              "cannot decide " + comparison + " from the enclosure " + interval +
                  "; tighten the symbol enclosures"),
        comparison_(std::move(comparison)),
        interval_(std::move(interval)) {}

  const std::string& comparison() const noexcept { return comparison_; }
  const std::string& interval() const noexcept { return interval_; }

 private:
  std::string comparison_;
  std::string interval_;
};

}  // namespace afforb
