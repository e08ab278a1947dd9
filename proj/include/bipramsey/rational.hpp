#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace bipramsey {

/// Exact rational used for every density, threshold and constant.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "7", "-3", "1/3", "0.25", "1e-6", "2.5E3".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);

double to_double(const Rational& q);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// ceil(q) as a machine integer; throws Parameter if it does not fit.
std::int64_t ceil_to_int(const Rational& q);
std::int64_t floor_to_int(const Rational& q);

inline Rational rat(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

/// Numerator and denominator of a non-negative rational as int64 (Parameter error if too large).
struct SmallFraction {
    std::int64_t num;
    std::int64_t den;
};
SmallFraction small_fraction(const Rational& q);

}  // namespace bipramsey
