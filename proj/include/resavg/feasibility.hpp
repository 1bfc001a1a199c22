#pragma once

#include "resavg/average.hpp"

namespace resavg {

struct SolveTrace {
  std::vector<Vec> iterates;      // thinned to at most ~1000 entries
  std::vector<double> residuals;  // step sizes, thinned in step with iterates
  bool converged = false;
  bool stalled = false;  // step size refused to shrink for a long stretch
  int iterations = 0;
};

struct SolveResult {
  Vec x;
  SolveTrace trace;
};

/// Picard iteration x <- sum_i lambda_i J_{mu A_i}(x) until the step size
/// drops below cfg.tol. On convergence with a nonempty common zero set, the
/// limit is a fixed point of every item's mu-resolvent.
SolveResult solveCommonZero(const AverageSpec& avg, const Vec& x0, const SampleConfig& cfg);

/// Common solution of u in A_i(x): shifts every item by -u and reuses the
/// common-zero iteration.
SolveResult solveCommonValue(const AverageSpec& avg, const Vec& u, const Vec& x0,
                             const SampleConfig& cfg);

/// ||J_{mu A_i}(x) - x|| for every item; all small iff x is a common zero.
std::vector<double> fixedPointResiduals(const AverageSpec& avg, const Vec& x);

}  // namespace resavg
