#include "resavg/rational.hpp"

#include "resavg/common.hpp"

#include <cmath>

namespace resavg {

Rational rationalFromDouble(double x) {
  if (!std::isfinite(x)) throw SpecError("rationalFromDouble: value must be finite");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mantissa = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mantissa);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

std::string toFractionString(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace resavg
