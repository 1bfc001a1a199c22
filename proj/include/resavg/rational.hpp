#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace resavg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always kept in lowest terms

/// Exact conversion; every finite double is a dyadic rational.
Rational rationalFromDouble(double x);

double toDouble(const Rational& r);

/// "num/den" (just "num" when the denominator is 1).
std::string toFractionString(const Rational& r);

}  // namespace resavg
