#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latsec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Parses "p/q", "p" or "-p/q". Throws Error{parse}.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

double to_double(const Rational& value);
/// Natural log of |value|, usable when the value overflows a double.
double log_abs(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);
/// 2^e for any integer e.
Rational pow2(int exponent);

bool is_integer(const Rational& value);
std::int64_t to_int64(const Rational& value);

}  // namespace latsec
