#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace capric {

/// Arbitrary-precision rational scalar for the exact LP mode.
using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal literal ("0.3", "-1.25e-2") into the exact rational it
/// denotes. Throws input_error on malformed text.
Rational decimal_to_rational(const std::string& text);

/// Exact rational value of a finite double (every double is dyadic).
Rational dyadic_of(double x);

double to_double(const Rational& r);

}  // namespace capric
