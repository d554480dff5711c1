#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "txray/error.hpp"

namespace txray {

// et_off: plain value semantics, no expression templates. Deduced return
// types would otherwise capture dangling expression objects.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Exact rational scalar. Always canonical: lowest terms, positive
/// denominator. There is no floating point anywhere in the library.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Integer rational_num(const Rational& q) { return numerator(q); }
inline Integer rational_den(const Rational& q) { return denominator(q); }

/// Lattice coordinates live in int64; anything larger is outside the
/// supported range and must fail loudly rather than saturate.
inline std::int64_t to_int64_checked(const Integer& n) {
  if (n < Integer(std::numeric_limits<std::int64_t>::min()) ||
      n > Integer(std::numeric_limits<std::int64_t>::max()))
    throw Error(ErrorCode::InvalidInput,
                "integer coordinate exceeds the supported range");
  return n.convert_to<std::int64_t>();
}

inline int sign(const Rational& q) { return q.sign(); }

/// "p" for integers, "p/q" otherwise; lowest terms by construction.
inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

/// Strict parser for the wire format: optional '-', decimal numerator,
/// optional "/denominator". Rejects anything that does not re-serialize to
/// the same bytes (non-lowest terms, leading zeros, signs on denominators).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const std::string& why) -> Rational {
    throw Error(ErrorCode::ParseError,
                "bad rational \"" + std::string(text) + "\": " + why);
  };

  std::string_view num_part = text;
  std::string_view den_part;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num_part = text.substr(0, slash);
    den_part = text.substr(slash + 1);
    if (den_part.empty()) return fail("missing denominator");
  }
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num_digits = num_part;
  if (!num_digits.empty() && num_digits.front() == '-')
    num_digits.remove_prefix(1);
  if (!digits_ok(num_digits)) return fail("numerator is not an integer");
  if (!den_part.empty() && !digits_ok(den_part))
    return fail("denominator is not a positive integer");

  Integer n{std::string(num_part)};
  Integer d = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
  if (d == 0) return fail("zero denominator");
  Rational q(n, d);
  if (to_string(q) != text) return fail("not in lowest terms");
  return q;
}

}  // namespace txray
