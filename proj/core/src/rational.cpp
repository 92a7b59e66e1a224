#include "latsec/rational.hpp"

#include <cmath>
#include <limits>

#include "latsec/error.hpp"

namespace latsec {

namespace {

BigInt parse_int(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::parse, "empty integer in '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(ErrorKind::parse, "bad rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw Error(ErrorKind::parse, "bad rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  const BigInt num = parse_int(trim(t.substr(0, slash)), text);
  const BigInt den = parse_int(trim(t.substr(slash + 1)), text);
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

double log_abs(const Rational& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  auto log_big = [](BigInt v) {
    if (v < 0) v = -v;
    // Shift into double range, keep the exponent separately.
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    const unsigned shift = bits > 60 ? bits - 60 : 0;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
  };
  return log_big(boost::multiprecision::numerator(value)) -
         log_big(boost::multiprecision::denominator(value));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational pow2(int exponent) {
  const BigInt p = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw Error(ErrorKind::domain, "non-integer " + format_rational(value));
  const BigInt n = boost::multiprecision::numerator(value);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::domain, "integer overflow " + n.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace latsec
