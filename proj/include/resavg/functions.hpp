#pragma once

#include "resavg/extnonneg.hpp"
#include "resavg/sets.hpp"

#include <memory>
#include <optional>
#include <variant>

namespace resavg {

// Prox-friendly catalog of proper, lower semicontinuous, convex functions.

struct ScaledHalfNormSq {  // alpha * (1/2)||.||^2; alpha = inf is the indicator of {0}
  ExtNonneg alpha;
  explicit ScaledHalfNormSq(ExtNonneg a) : alpha(std::move(a)) {}
};

struct NormScaled {  // c * ||.||
  double c;
  explicit NormScaled(double scale);
};

struct Indicator {
  ConvexSetSpec set;
  explicit Indicator(ConvexSetSpec s) : set(std::move(s)) {}
};

struct LinearTilt;

using ConvexFunctionSpec = std::variant<ScaledHalfNormSq, NormScaled, Indicator, LinearTilt>;
using FnPtr = std::shared_ptr<const ConvexFunctionSpec>;

struct LinearTilt {  // base(x - shift) + <slope, x>
  FnPtr base;
  Vec slope;
  Vec shift;
  LinearTilt(ConvexFunctionSpec b, Vec s, Vec x0);
};

/// nullopt when the function applies in any dimension.
std::optional<int> dimension(const ConvexFunctionSpec& fn);

/// Function value; +inf outside the effective domain.
double value(const ConvexFunctionSpec& fn, const Vec& x);

/// Unique minimizer of fn(y) + ||y - x||^2 / (2*gamma).
Vec prox(const ConvexFunctionSpec& fn, double gamma, const Vec& x);

/// s * fn for s > 0 (indicators are fixed points of scaling).
ConvexFunctionSpec scaled(const ConvexFunctionSpec& fn, double s);

/// Feasible parameter interval {t : fn(y0 + t*dir) < inf}; nullopt when empty.
std::optional<std::pair<double, double>> lineInterval(const ConvexFunctionSpec& fn, const Vec& y0,
                                                      const Vec& dir);

/// Nearest point of the effective domain (identity for full-domain functions).
Vec projectDomain(const ConvexFunctionSpec& fn, const Vec& x);

}  // namespace resavg
