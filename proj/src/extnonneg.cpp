#include "resavg/extnonneg.hpp"

#include "resavg/common.hpp"

#include <cmath>
#include <limits>

namespace resavg {

ExtNonneg::ExtNonneg(double v) {
  if (std::isnan(v)) throw SpecError("ExtNonneg: NaN");
  if (v < 0) throw SpecError("ExtNonneg: value must be nonnegative");
  if (std::isinf(v)) {
    inf_ = true;
  } else {
    value_ = rationalFromDouble(v);
  }
}

ExtNonneg ExtNonneg::infinity() {
  ExtNonneg e;
  e.inf_ = true;
  return e;
}

ExtNonneg ExtNonneg::fromRational(Rational v) {
  if (v < 0) throw SpecError("ExtNonneg: value must be nonnegative");
  ExtNonneg e;
  e.value_ = std::move(v);
  return e;
}

const Rational& ExtNonneg::rational() const {
  if (inf_) throw ComputeError("ExtNonneg: infinite value has no rational form");
  return value_;
}

double ExtNonneg::toDouble() const {
  return inf_ ? std::numeric_limits<double>::infinity() : resavg::toDouble(value_);
}

ExtNonneg ExtNonneg::inverse() const {
  if (inf_) return ExtNonneg(0.0);
  if (value_ == 0) return infinity();
  return fromRational(Rational(1) / value_);
}

ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
  if (a.inf_ || b.inf_) return ExtNonneg::infinity();
  return ExtNonneg::fromRational(a.value_ + b.value_);
}

ExtNonneg operator-(const ExtNonneg& a, const ExtNonneg& b) {
  if (b.inf_) throw SpecError("ExtNonneg: subtraction of infinity is not licensed");
  if (a.inf_) return ExtNonneg::infinity();
  Rational r = a.value_ - b.value_;
  if (r < 0) throw SpecError("ExtNonneg: negative result");
  return ExtNonneg::fromRational(std::move(r));
}

ExtNonneg operator*(const ExtNonneg& a, const ExtNonneg& b) {
  if (a.isZero() || b.isZero()) return ExtNonneg();  // 0 * inf = 0
  if (a.inf_ || b.inf_) return ExtNonneg::infinity();
  return ExtNonneg::fromRational(a.value_ * b.value_);
}

bool operator==(const ExtNonneg& a, const ExtNonneg& b) {
  if (a.inf_ != b.inf_) return false;
  return a.inf_ || a.value_ == b.value_;
}

bool operator<(const ExtNonneg& a, const ExtNonneg& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.value_ < b.value_;
}

}  // namespace resavg
