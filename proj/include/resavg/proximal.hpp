#pragma once

#include "resavg/average.hpp"
#include "resavg/check_result.hpp"
#include "resavg/functions.hpp"

#include <functional>

namespace resavg {

struct Grid1D {
  double lower, upper;
  int points;
  Grid1D(double lo, double up, int n);
};

struct ProxAverageResult {
  double value;          // +inf when no feasible decomposition exists
  bool feasible;
  bool bracketHit;       // best value found with the search bracket binding
};

/// Value of the weighted proximal average at x:
///   inf over sum_i lambda_i y_i = x of
///   sum_i lambda_i f_i(y_i) + mu^{-1} (sum_i lambda_i q(y_i) - q(x)),
/// with q = (1/2)||.||^2. The last block is eliminated through the constraint
/// and the remaining jointly convex problem is minimized coordinatewise by
/// bracketed ternary search. Desk scale only: d <= 3, n <= 4.
ProxAverageResult proximalAverageValue(const std::vector<ConvexFunctionSpec>& fns,
                                       const std::vector<double>& lambdas, double mu, const Vec& x,
                                       const SampleConfig& cfg);

/// Compares the prox of the numerically evaluated proximal average against
/// the weighted sum of the individual proxes; passes when they agree within
/// 10 * cfg.tol.
CheckResult proxOfAverageConsistency(const std::vector<ConvexFunctionSpec>& fns,
                                     const std::vector<double>& lambdas, double mu, const Vec& x,
                                     const SampleConfig& cfg);

struct ConjugateResult {
  double value;   // +inf for an unbounded supremum
  bool boundary;  // maximizer hit the bracket edge; value is a lower bound
};

/// Fenchel conjugate of a catalog function, in closed form.
ConjugateResult conjugateValue(const ConvexFunctionSpec& fn, const Vec& u);

/// Fenchel conjugate of a tabulated 1-D function by grid scan plus refinement
/// of the concave objective u*x - f(x).
ConjugateResult conjugateValueTabulated(const std::function<double(double)>& f, double u,
                                        const Grid1D& grid);

/// p_{mu/2}(phi, lambda)(t) for 1-D convex moduli with phi_i(0) = 0; quadratic
/// moduli alpha_i q reduce to the scalar average in closed form.
double modulusAverage(const std::vector<ConvexFunctionSpec>& moduli,
                      const std::vector<double>& lambdas, double mu, double t,
                      const SampleConfig& cfg);

}  // namespace resavg
