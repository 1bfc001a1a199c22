#pragma once

#include "resavg/rational.hpp"

namespace resavg {

/// A value in [0, inf] under the conventions
///   0^{-1} = inf,  inf^{-1} = 0,  0 * inf = 0.
/// Finite values are exact rationals, so inversion is an involution and the
/// scalar resolvent-average identities hold without rounding. Expressions the
/// conventions do not cover (inf - inf, negative results) are errors.
class ExtNonneg {
 public:
  ExtNonneg() = default;  // zero
  ExtNonneg(double v);    // exact; rejects negatives and NaN, accepts +inf

  static ExtNonneg infinity();
  static ExtNonneg fromRational(Rational v);

  bool isInf() const { return inf_; }
  bool isZero() const { return !inf_ && value_ == 0; }
  const Rational& rational() const;  // throws on inf
  double toDouble() const;           // +inf when infinite

  ExtNonneg inverse() const;

  friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b);
  friend ExtNonneg operator-(const ExtNonneg& a, const ExtNonneg& b);
  friend ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b);
  friend bool operator==(const ExtNonneg& a, const ExtNonneg& b);
  friend bool operator!=(const ExtNonneg& a, const ExtNonneg& b) { return !(a == b); }
  friend bool operator<(const ExtNonneg& a, const ExtNonneg& b);

 private:
  bool inf_ = false;
  Rational value_ = 0;
};

}  // namespace resavg
