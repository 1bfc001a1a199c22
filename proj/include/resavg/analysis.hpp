#pragma once

#include "resavg/average.hpp"
#include "resavg/check_result.hpp"

#include <functional>

namespace resavg {

using VectorMap = std::function<Vec(const Vec&)>;

VectorMap resolventMap(const OperatorSpec& op, double gamma);
VectorMap averagedResolventMap(const AverageSpec& avg);
VectorMap reflectedResolventMap(const OperatorSpec& op, double gamma);  // 2J - Id

/// Map treated as a single-valued operator (its graph is {(x, T x)}).
struct MapSource {
  VectorMap map;
};

using AnalysisSource = std::variant<OperatorSpec, AverageSpec, MapSource>;

/// Emits graph points of the source, (J z, z - J z) for random z by Minty's
/// parametrization (scaled accordingly for averages), plus deterministic
/// probes z in {0, +-e_i, +-radius e_i}.
class GraphSampler {
 public:
  GraphSampler(AnalysisSource source, int dim, SampleConfig cfg);

  GraphPoint fromZ(const Vec& z) const;
  GraphPoint sample();
  std::vector<GraphPoint> probePoints() const;
  int dim() const { return dim_; }
  const SampleConfig& config() const { return cfg_; }

 private:
  AnalysisSource source_;
  int dim_;
  SampleConfig cfg_;
  Rng rng_;
};

/// min over sampled graph pairs of <u - v, x - y> / ||x - y||^2.
/// Pass when the estimate is >= -tol (monotone within tolerance).
CheckResult estimateMonotonicityModulus(const AnalysisSource& src, int dim,
                                        const SampleConfig& cfg);

/// max over sampled graph pairs of ||u - v|| / ||x - y||.
CheckResult estimateLipschitz(const AnalysisSource& src, int dim, const SampleConfig& cfg);

/// min over sampled graph pairs of <u - v, x - y> / ||u - v||^2.
CheckResult estimateCocoercivity(const AnalysisSource& src, int dim, const SampleConfig& cfg);

/// max violation of ||Tx - Ty||^2 <= <x - y, Tx - Ty> over sampled pairs.
CheckResult checkFirmlyNonexpansive(const VectorMap& map, int dim, const SampleConfig& cfg);

/// max violation of ||Tx - Ty|| <= ||x - y|| over sampled pairs.
CheckResult checkNonexpansive(const VectorMap& map, int dim, const SampleConfig& cfg);

/// Exact rank test: a monotone matrix is paramonotone (equivalently
/// rectangular) iff rank M = rank (M + M^T)/2. Singular values below
/// rankTolScale * sigma_max count as zero.
CheckResult checkParamonotoneMatrix(const Mat& m, double rankTolScale = 1e-9);

/// min cyclic sum over sampled k-tuples of graph points plus targeted corner
/// tuples (0 and unit basis vectors).
CheckResult checkKCyclic(const AnalysisSource& src, int k, int dim, const SampleConfig& cfg);

/// Fitzpatrick function of a monotone matrix:
/// F(x, v) = (1/4) c^T pinv(M_+) c with c = M^T x + v when c lies in
/// ran(M_+), +inf otherwise.
double fitzpatrickMatrix(const Mat& m, const Vec& x, const Vec& v);

/// Sampled check of F_{mu R} <= sum_i lambda_i F_{mu A_i} at points where the
/// right side is finite.
CheckResult checkFitzpatrickInequality(const std::vector<Mat>& matrices,
                                       const std::vector<double>& lambdas, double mu,
                                       const SampleConfig& cfg);

/// Strict nonexpansiveness of the resolvent on sampled distinct pairs;
/// fails when some pair keeps ||Jx - Jy|| >= (1 - tol) ||x - y||.
CheckResult checkDisjointInjectivity(const AnalysisSource& src, int dim, const SampleConfig& cfg);

/// Lipschitz estimate of the average with pass iff the statistic stays below
/// 1 by a fixed margin.
CheckResult checkBanachContraction(const AverageSpec& avg, int dim, const SampleConfig& cfg);

}  // namespace resavg
