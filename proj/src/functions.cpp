#include "resavg/functions.hpp"

#include <cmath>
#include <limits>

namespace resavg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NormScaled::NormScaled(double scale) : c(scale) {
  if (!(c >= 0) || !std::isfinite(c)) throw SpecError("NormScaled: c must be finite and >= 0");
}

LinearTilt::LinearTilt(ConvexFunctionSpec b, Vec s, Vec x0)
    : base(std::make_shared<const ConvexFunctionSpec>(std::move(b))),
      slope(std::move(s)),
      shift(std::move(x0)) {
  checkFinite(slope, "LinearTilt slope");
  checkFinite(shift, "LinearTilt shift");
  if (slope.size() != shift.size()) throw SpecError("LinearTilt: slope/shift dimensions differ");
  if (auto d = resavg::dimension(*base); d && *d != slope.size())
    throw SpecError("LinearTilt: base dimension mismatch");
}

std::optional<int> dimension(const ConvexFunctionSpec& fn) {
  return std::visit(
      [](const auto& f) -> std::optional<int> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Indicator>) return dimension(f.set);
        else if constexpr (std::is_same_v<T, LinearTilt>) return static_cast<int>(f.slope.size());
        else return std::nullopt;
      },
      fn);
}

double value(const ConvexFunctionSpec& fn, const Vec& x) {
  if (auto d = dimension(fn)) checkDim(x, *d, "value");
  return std::visit(
      [&x](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          double q = 0.5 * x.squaredNorm();
          if (f.alpha.isInf()) return q == 0.0 ? 0.0 : kInf;  // inf*q = iota_{0}
          return f.alpha.toDouble() * q;
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          return f.c * x.norm();
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return contains(f.set, x, 1e-9 * (x.norm() + 1.0)) ? 0.0 : kInf;
        } else {
          return value(*f.base, Vec(x - f.shift)) + f.slope.dot(x);
        }
      },
      fn);
}

Vec prox(const ConvexFunctionSpec& fn, double gamma, const Vec& x) {
  if (!(gamma > 0)) throw SpecError("prox: gamma must be > 0");
  if (auto d = dimension(fn)) checkDim(x, *d, "prox");
  checkFinite(x, "prox");
  return std::visit(
      [&](const auto& f) -> Vec {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          if (f.alpha.isInf()) return Vec::Zero(x.size());
          return x / (1.0 + gamma * f.alpha.toDouble());
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          double n = x.norm();
          double threshold = gamma * f.c;
          if (n <= threshold) return Vec::Zero(x.size());
          return (1.0 - threshold / n) * x;
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return project(f.set, x);
        } else {
          // complete the square: prox shifts by gamma*slope and recenters
          return f.shift + prox(*f.base, gamma, Vec(x - gamma * f.slope - f.shift));
        }
      },
      fn);
}

ConvexFunctionSpec scaled(const ConvexFunctionSpec& fn, double s) {
  if (!(s > 0) || !std::isfinite(s)) throw SpecError("scaled: factor must be positive and finite");
  return std::visit(
      [s](const auto& f) -> ConvexFunctionSpec {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          return ScaledHalfNormSq(ExtNonneg(s) * f.alpha);
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          return NormScaled(s * f.c);
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return f;
        } else {
          return LinearTilt(scaled(*f.base, s), Vec(s * f.slope), f.shift);
        }
      },
      fn);
}

std::optional<std::pair<double, double>> lineInterval(const ConvexFunctionSpec& fn, const Vec& y0,
                                                      const Vec& dir) {
  constexpr auto kAll = std::pair<double, double>{-kInf, kInf};
  return std::visit(
      [&](const auto& f) -> std::optional<std::pair<double, double>> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          if (!f.alpha.isInf()) return kAll;
          return lineInterval(ConvexSetSpec(SinglePoint(Vec::Zero(y0.size()))), y0, dir);
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          return kAll;
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return lineInterval(f.set, y0, dir);
        } else {
          return lineInterval(*f.base, Vec(y0 - f.shift), dir);
        }
      },
      fn);
}

Vec projectDomain(const ConvexFunctionSpec& fn, const Vec& x) {
  return std::visit(
      [&x](const auto& f) -> Vec {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          return f.alpha.isInf() ? Vec(Vec::Zero(x.size())) : x;
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return project(f.set, x);
        } else if constexpr (std::is_same_v<T, LinearTilt>) {
          return f.shift + projectDomain(*f.base, Vec(x - f.shift));
        } else {
          return x;
        }
      },
      fn);
}

}  // namespace resavg
