#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace piquant {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

/// Accepts "p", "p/q" and plain decimal literals like "0.25" or "-2.5e3",
/// all converted exactly.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Shortest round-trip decimal form of a double ("0.1", "3.6e+06").
std::string format_double(double x);

/// Fixed 12-significant-digit form used by human-readable reports.
std::string format_double_12(double x);

} // namespace piquant
