#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "irs/errors.hpp"

namespace irs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "a/b", integers, and (unless exact_only) finite decimals such as "0.05".
// Decimals are converted exactly, so "0.1" becomes 1/10.
inline Rational parse_rational(std::string_view text, bool exact_only = false) {
  std::string s(text);
  auto bad = [&]() -> Rational { throw DomainError("cannot parse rational '" + s + "'"); };
  if (s.empty()) return bad();
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return bad();
    BigInt den(b);
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    return Rational(BigInt(a), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (exact_only)
      throw DomainError("decimal '" + s + "' rejected here; give the value as a/b");
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!is_int(whole) || (!frac.empty() && !is_int(frac)) || frac.find_first_of("+-") != std::string::npos)
      return bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational q(BigInt(whole + frac), scale);
    return negative ? Rational(-q) : q;
  }
  if (!is_int(s)) return bad();
  return Rational(BigInt(s));
}

// Probability with a machine-word numerator and denominator, used for keyed sampling.
struct SmallFraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

inline SmallFraction to_small_fraction(const Rational& q) {
  if (numerator(q) < 0 || denominator(q) > BigInt(UINT64_MAX))
    throw DomainError("rational " + to_string(q) + " does not fit a 64-bit fraction");
  return {numerator(q).convert_to<std::uint64_t>(), denominator(q).convert_to<std::uint64_t>()};
}

}  // namespace irs
