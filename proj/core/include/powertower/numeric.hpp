#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace powertower {

/// Arbitrary-precision signed integer. All table entries use this type;
/// intermediate values grow factorially, so fixed-width integers are
/// never used for them.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms by the
/// backend. The exact coefficient type throughout the library.
using BigRat = boost::multiprecision::cpp_rational;

double to_double(const BigRat& r);

/// Exact rational value of a finite double (doubles are dyadic).
BigRat rational_from_double(double x);

/// True iff the rational is an integer (denominator one).
bool is_integral(const BigRat& r);

/// Decimal rendering: "42", "-7".
std::string to_string(const BigInt& v);

/// Decimal rendering with "/" for non-integers: "10", "-2/3".
std::string to_string(const BigRat& r);

}  // namespace powertower
