#include "capric/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "capric/errors.hpp"

namespace capric {

namespace {

using Int = boost::multiprecision::cpp_int;

Int pow10(long long e) {
  Int out = 1;
  for (long long i = 0; i < e; ++i) out *= 10;
  return out;
}

}  // namespace

Rational decimal_to_rational(const std::string& text) {
  const char* p = text.c_str();
  const char* end = p + text.size();
  bool negative = false;
  if (p < end && (*p == '+' || *p == '-')) {
    negative = (*p == '-');
    ++p;
  }

  Int mantissa = 0;
  long long frac_digits = 0;
  bool any_digit = false;
  for (; p < end && std::isdigit(static_cast<unsigned char>(*p)); ++p) {
    mantissa = mantissa * 10 + (*p - '0');
    any_digit = true;
  }
  if (p < end && *p == '.') {
    ++p;
    for (; p < end && std::isdigit(static_cast<unsigned char>(*p)); ++p) {
      mantissa = mantissa * 10 + (*p - '0');
      ++frac_digits;
      any_digit = true;
    }
  }
  if (!any_digit) {
    throw input_error("not a decimal literal: '" + text + "'");
  }

  long long exponent = 0;
  if (p < end && (*p == 'e' || *p == 'E')) {
    ++p;
    bool exp_negative = false;
    if (p < end && (*p == '+' || *p == '-')) {
      exp_negative = (*p == '-');
      ++p;
    }
    if (p >= end || !std::isdigit(static_cast<unsigned char>(*p))) {
      throw input_error("not a decimal literal: '" + text + "'");
    }
    for (; p < end && std::isdigit(static_cast<unsigned char>(*p)); ++p) {
      exponent = exponent * 10 + (*p - '0');
      if (exponent > 4096) {
        throw input_error("decimal exponent out of range: '" + text + "'");
      }
    }
    if (exp_negative) exponent = -exponent;
  }
  if (p != end) {
    throw input_error("not a decimal literal: '" + text + "'");
  }

  Int num = mantissa;
  Int den = 1;
  const long long net = exponent - frac_digits;
  if (net >= 0) {
    num *= pow10(net);
  } else {
    den = pow10(-net);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational dyadic_of(double x) {
  if (!std::isfinite(x)) {
    throw input_error("non-finite value has no rational representation");
  }
  if (x == 0.0) return Rational(0);

  int exp = 0;
  double m = std::frexp(x, &exp);
  // 53 doublings make the mantissa integral for any finite double.
  for (int i = 0; i < 53 && m != std::floor(m); ++i) {
    m *= 2.0;
    --exp;
  }
  Int num = static_cast<long long>(m);
  Rational out(num);
  if (exp >= 0) {
    out *= Rational(Int(1) << exp);
  } else {
    out /= Rational(Int(1) << -exp);
  }
  return out;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace capric
