#ifndef INEQPRICE_RATIONAL_H_
#define INEQPRICE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ineqprice {

// Arbitrary precision integers and rationals. cpp_rational is always kept in
// lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Decimal expansion truncated toward zero, e.g. 2/3 -> "0.666" at 3 places.
std::string to_decimal_truncated(const Rational& r, int places);

double to_double(const Rational& r);

// Accepts "7", "-3/4", "1.5", "0.25". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace ineqprice

#endif  // INEQPRICE_RATIONAL_H_
