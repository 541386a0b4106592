#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fris {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string context)
      : Error(context.empty() ? what : context + ": " + what),
        context_(std::move(context)) {}
  explicit ParseError(const std::string& what) : ParseError(what, "") {}

  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

// Membership grade in [0, 1], stored exactly as integer billionths.
// Comparisons, min and max are therefore exact; no floating point is
// involved anywhere in the core algorithms.
class FuzzyValue {
 public:
  static constexpr int kMaxScale = 9;
  static constexpr int kDefaultScale = 4;
  static constexpr std::int64_t kOne = 1'000'000'000;

  constexpr FuzzyValue() : units_(0) {}

  static FuzzyValue from_units(std::int64_t units);

  // Accepts "0", "1", or "0.d...d" / "1.0...0" with 1..max_scale fraction
  // digits. Anything else (signs, exponents, values above 1) is rejected.
  static FuzzyValue parse(std::string_view text, int max_scale = kDefaultScale);

  std::int64_t units() const { return units_; }

  // Canonical text: shortest decimal form, no trailing fraction zeros.
  std::string str() const;

  static FuzzyValue min(FuzzyValue a, FuzzyValue b) { return a < b ? a : b; }
  static FuzzyValue max(FuzzyValue a, FuzzyValue b) { return a < b ? b : a; }

  static constexpr FuzzyValue zero() { return FuzzyValue(); }
  static FuzzyValue one() { return from_units(kOne); }

  auto operator<=>(const FuzzyValue&) const = default;

 private:
  std::int64_t units_;
};

// Equality policy for grades. Exact by default; with an epsilon the
// induced relation |a-b| <= eps is not transitive, so code that needs an
// equivalence (partition grouping) must close it transitively first.
struct ValueEq {
  std::optional<FuzzyValue> epsilon;

  bool exact() const { return !epsilon.has_value(); }

  bool operator()(FuzzyValue a, FuzzyValue b) const {
    if (!epsilon) return a == b;
    std::int64_t d = a.units() - b.units();
    if (d < 0) d = -d;
    return d <= epsilon->units();
  }
};

}  // namespace fris
