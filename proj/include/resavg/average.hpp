#pragma once

#include "resavg/operators.hpp"

#include <vector>

namespace resavg {

struct AverageItem {
  OperatorSpec op;
  double weight;  // > 0
};

/// A weighted operator list with parameter mu > 0, denoting the operator
/// whose mu-resolvent is the weighted average of the items' mu-resolvents.
class AverageSpec {
 public:
  AverageSpec(std::vector<AverageItem> items, double mu);

  const std::vector<AverageItem>& items() const { return items_; }
  double mu() const { return mu_; }

  /// nullopt when every item is dimension-agnostic.
  std::optional<int> dimension() const { return dim_; }

 private:
  std::vector<AverageItem> items_;
  double mu_;
  std::optional<int> dim_;
};

/// sum_i lambda_i J_{mu A_i}(x); equals the mu-resolvent of the average.
Vec averagedResolvent(const AverageSpec& avg, const Vec& x);

/// (sum_i lambda_i (M_i + mu^{-1} I)^{-1})^{-1} - mu^{-1} I by direct linear
/// algebra. Inputs must be monotone; the averaged resolvent of monotone
/// matrices is then invertible.
Mat resolventAverageMatrix(const std::vector<Mat>& matrices, const std::vector<double>& lambdas,
                           double mu);

/// The average as an affine map, available when every item's mu-resolvent is
/// affine.
std::optional<AffineMap> resolventAverageAffine(const AverageSpec& avg, int dim);

/// Evaluates the average at x through the fixed-point inversion of the
/// averaged resolvent; all-matrix specs reduce to resolventAverageMatrix.
OperatorValue evaluateAverage(const AverageSpec& avg, const Vec& x, const SampleConfig& cfg);

/// Same weights, every item inverted, mu replaced by 1/mu; this spec denotes
/// the inverse of the original average.
AverageSpec inverseAverage(const AverageSpec& avg);

/// Inverse of a single operator spec (a double wrap collapses).
OperatorSpec inverted(const OperatorSpec& op);

/// Scalar resolvent average [sum_i lambda_i (alpha_i + mu^{-1})^{-1}]^{-1} - mu^{-1}
/// under the [0, inf] conventions. Weights are normalized exactly, so the
/// identity rMu(alpha, lambda, mu)^{-1} = rMu(alpha^{-1}, lambda, 1/mu) is exact.
ExtNonneg rMu(const std::vector<ExtNonneg>& alphas, const std::vector<double>& lambdas, double mu);

void validateWeights(const std::vector<double>& lambdas);

}  // namespace resavg
