#include "fris/value.hpp"

#include <array>

namespace fris {
namespace {

constexpr std::array<std::int64_t, 10> kPow10 = {
    1,         10,         100,         1'000,         10'000,
    100'000,   1'000'000,  10'000'000,  100'000'000,   1'000'000'000};

}  // namespace

FuzzyValue FuzzyValue::from_units(std::int64_t units) {
  if (units < 0 || units > kOne) {
    throw Error("fuzzy value out of range [0, 1]: " + std::to_string(units) +
                " units");
  }
  FuzzyValue v;
  v.units_ = units;
  return v;
}

FuzzyValue FuzzyValue::parse(std::string_view text, int max_scale) {
  if (max_scale < 1 || max_scale > kMaxScale) {
    throw Error("max_scale must be in [1, " + std::to_string(kMaxScale) +
                "], got " + std::to_string(max_scale));
  }
  auto fail = [&](const std::string& why) -> FuzzyValue {
    throw ParseError(why + ": \"" + std::string(text) + "\"");
  };
  if (text.empty()) return fail("empty fuzzy value");

  char head = text[0];
  if (head != '0' && head != '1') {
    return fail("fuzzy value must start with 0 or 1");
  }
  std::int64_t integral = head == '1' ? kOne : 0;
  if (text.size() == 1) return from_units(integral);

  if (text[1] != '.') return fail("expected '.' after integral digit");
  std::string_view frac = text.substr(2);
  if (frac.empty()) return fail("missing fraction digits");
  if (static_cast<int>(frac.size()) > max_scale) {
    return fail("more than " + std::to_string(max_scale) + " fraction digits");
  }
  std::int64_t frac_units = 0;
  for (char c : frac) {
    if (c < '0' || c > '9') return fail("invalid fraction digit");
    frac_units = frac_units * 10 + (c - '0');
  }
  frac_units *= kPow10[static_cast<std::size_t>(kMaxScale - static_cast<int>(frac.size()))];
  std::int64_t total = integral + frac_units;
  if (total > kOne) return fail("fuzzy value exceeds 1");
  return from_units(total);
}

std::string FuzzyValue::str() const {
  std::int64_t whole = units_ / kOne;
  std::int64_t frac = units_ % kOne;
  std::string out = std::to_string(whole);
  if (frac == 0) return out;
  std::string digits(static_cast<std::size_t>(kMaxScale), '0');
  for (int i = kMaxScale - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] =
        static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  out += '.';
  out += digits;
  return out;
}

}  // namespace fris
