#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace cohiggs {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "p/q" or "-p/q". Throws SchemaError on zero denominators or junk.
Rational parse_rational(const std::string& s);

// Lowest terms; denominator 1 prints as a plain integer.
std::string format_rational(const Rational& r);

// Exact square root of a nonnegative rational, or nullopt when irrational.
std::optional<Rational> rational_sqrt(const Rational& r);

BigInt rational_floor(const Rational& r);

bool is_integral(const Rational& r);

// Requires an integral value that fits a long long.
long long to_int64(const Rational& r);

}  // namespace cohiggs
