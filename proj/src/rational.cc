#include "ineqprice/rational.h"

#include <cctype>

#include "ineqprice/errors.h"

namespace ineqprice {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_truncated(const Rational& r, int places) {
  BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string out;
  if (num < 0) {
    num = -num;
    out = "-";
  }
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt scaled = num * scale / den;
  const BigInt whole = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  out += whole.str();
  if (places > 0) {
    out += ".";
    out += std::string(places - frac.size(), '0') + frac;
  }
  // "-0.000" reads oddly; drop the sign when everything truncated away.
  if (out[0] == '-' && scaled == 0) out.erase(0, 1);
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    value = Rational(w * scale + BigInt{std::string(frac)}, scale);
  } else {
    if (!all_digits(s)) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace ineqprice
