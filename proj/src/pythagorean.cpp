#include "resavg/pythagorean.hpp"

#include "resavg/common.hpp"

namespace resavg {

bool RationalMatrix2::orthogonal() const {
  // columns orthonormal
  return a11 * a11 + a21 * a21 == 1 && a12 * a12 + a22 * a22 == 1 &&
         a11 * a12 + a21 * a22 == 0;
}

bool RationalMatrix2::determinantOne() const { return a11 * a22 - a12 * a21 == 1; }

PythagoreanTriple euclidTriple(const BigInt& k, const BigInt& l) {
  if (!(0 < k && k < l)) throw SpecError("euclidTriple: need 0 < k < l");
  return {l * l - k * k, 2 * k * l, k * k + l * l};
}

RotationAverage rotationAverageRational(const BigInt& p, const BigInt& q) {
  if (!(0 < p && p < q)) throw SpecError("rotationAverageRational: need 0 < p < q");
  BigInt a = p * (2 * q - p);
  BigInt b = 2 * q * (q - p);
  BigInt c = p * p - 2 * p * q + 2 * q * q;
  RationalMatrix2 m{Rational(a, c), Rational(-b, c), Rational(b, c), Rational(a, c)};
  return {m, PythagoreanTriple{a, b, c}};
}

PythagoreanTriple reduceTriple(const PythagoreanTriple& t) {
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(t.a, t.b), t.c);
  if (g == 0) throw SpecError("reduceTriple: zero triple");
  return {t.a / g, t.b / g, t.c / g};
}

}  // namespace resavg
