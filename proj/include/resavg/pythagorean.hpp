#pragma once

#include "resavg/rational.hpp"

namespace resavg {

// Exact-arithmetic construction: averaging the identity with the quarter-turn
// rotation at a rational weight yields a rational rotation matrix whose entries
// encode a Pythagorean triple. Floating point is not used here.

struct PythagoreanTriple {
  BigInt a, b, c;  // a^2 + b^2 = c^2
  bool valid() const { return a > 0 && b > 0 && c > 0 && a * a + b * b == c * c; }
};

struct RationalMatrix2 {
  Rational a11, a12, a21, a22;

  bool orthogonal() const;   // M^T M = I, exactly
  bool determinantOne() const;
};

/// (l^2 - k^2, 2kl, k^2 + l^2) for 0 < k < l.
PythagoreanTriple euclidTriple(const BigInt& k, const BigInt& l);

struct RotationAverage {
  RationalMatrix2 matrix;  // (1/c) [[a, -b], [b, a]]
  PythagoreanTriple triple;
};

/// The average of Id and the quarter-turn rotation at weight lambda = p/q,
/// 0 < p < q, together with the integer triple
/// (p(2q - p), 2q(q - p), p^2 - 2pq + 2q^2).
RotationAverage rotationAverageRational(const BigInt& p, const BigInt& q);

/// gcd reduction to a primitive triple; not applied implicitly, the raw
/// formula output is what the construction emits.
PythagoreanTriple reduceTriple(const PythagoreanTriple& t);

}  // namespace resavg
