#include "resavg/proximal.hpp"

#include <cmath>
#include <limits>

namespace resavg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracket = 1e3;    // search bracket per coordinate
constexpr int kCoarsePoints = 64;   // coarse scan before ternary refinement
constexpr double kRefine = 1e-8;    // ternary interval width target

// Ternary minimization of a convex g on [lo, hi] (finite endpoints).
double ternaryMin(const std::function<double(double)>& g, double lo, double hi) {
  while (hi - lo > kRefine) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (g(m1) <= g(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

// Coarse grid then ternary; g may be +inf near the edges of a clipped domain.
double lineMin(const std::function<double(double)>& g, double lo, double hi) {
  if (hi - lo <= kRefine) return 0.5 * (lo + hi);
  int bestIdx = -1;
  double bestVal = kInf;
  for (int i = 0; i <= kCoarsePoints; ++i) {
    double t = lo + (hi - lo) * i / kCoarsePoints;
    double v = g(t);
    if (v < bestVal) {
      bestVal = v;
      bestIdx = i;
    }
  }
  if (bestIdx < 0) return lo;  // nothing finite on the grid
  double a = lo + (hi - lo) * std::max(0, bestIdx - 1) / kCoarsePoints;
  double b = lo + (hi - lo) * std::min(kCoarsePoints, bestIdx + 1) / kCoarsePoints;
  // keep ternary inside the finite region
  auto gf = [&](double t) {
    double v = g(t);
    return std::isfinite(v) ? v : 1e300 * (1.0 + std::abs(t));
  };
  return ternaryMin(gf, a, b);
}

struct Problem {
  const std::vector<ConvexFunctionSpec>& fns;
  std::vector<double> lambdas;
  double mu;
  Vec x;
  int d;
  int n;

  double objective(const std::vector<Vec>& y) const {
    double fsum = 0.0;
    double qsum = 0.0;
    for (int i = 0; i < n; ++i) {
      double fi = value(fns[i], y[i]);
      if (fi == kInf) return kInf;
      fsum += lambdas[i] * fi;
      qsum += lambdas[i] * 0.5 * y[i].squaredNorm();
    }
    return fsum + (qsum - 0.5 * x.squaredNorm()) / mu;
  }

  // y_{n-1} from the constraint sum_i lambda_i y_i = x
  Vec lastBlock(const std::vector<Vec>& y) const {
    Vec acc = x;
    for (int i = 0; i + 1 < n; ++i) acc -= lambdas[i] * y[i];
    return acc / lambdas[n - 1];
  }
};

// Alternating projections between the product of effective domains and the
// constraint subspace; returns false when no feasible decomposition is found.
bool repairFeasibility(const Problem& p, std::vector<Vec>& y) {
  double wsq = 0.0;
  for (double l : p.lambdas) wsq += l * l;
  double scale = p.x.norm() + 1.0;
  for (int it = 0; it < 2000; ++it) {
    for (int i = 0; i < p.n; ++i) y[i] = projectDomain(p.fns[i], y[i]);
    Vec defect = p.x;
    for (int i = 0; i < p.n; ++i) defect -= p.lambdas[i] * y[i];
    if (defect.norm() <= 1e-12 * scale) {
      double dist = 0.0;
      for (int i = 0; i < p.n; ++i) dist += (projectDomain(p.fns[i], y[i]) - y[i]).norm();
      if (dist <= 1e-10 * scale) return true;
    }
    for (int i = 0; i < p.n; ++i) y[i] += (p.lambdas[i] / wsq) * defect;
  }
  return false;
}

}  // namespace

Grid1D::Grid1D(double lo, double up, int n) : lower(lo), upper(up), points(n) {
  if (!(lower < upper)) throw SpecError("Grid1D: lower must be < upper");
  if (points < 3) throw SpecError("Grid1D: points must be >= 3");
}

ProxAverageResult proximalAverageValue(const std::vector<ConvexFunctionSpec>& fns,
                                       const std::vector<double>& lambdas, double mu, const Vec& x,
                                       const SampleConfig& cfg) {
  cfg.validate();
  if (!(mu > 0) || !std::isfinite(mu)) throw SpecError("proximalAverageValue: mu must be > 0");
  if (fns.empty() || fns.size() != lambdas.size())
    throw SpecError("proximalAverageValue: function/weight count mismatch");
  validateWeights(lambdas);
  checkFinite(x, "proximalAverageValue");
  const int n = static_cast<int>(fns.size());
  const int d = static_cast<int>(x.size());
  if (n > 4) throw SpecError("proximalAverageValue: desk scale only (n <= 4)");
  if (d > 3 || d < 1) throw SpecError("proximalAverageValue: desk scale only (1 <= d <= 3)");
  for (const auto& f : fns)
    if (auto fd = dimension(f); fd && *fd != d)
      throw SpecError("proximalAverageValue: function dimension mismatch");

  Problem p{fns, lambdas, mu, x, d, n};

  if (n == 1) {
    double v = value(fns[0], x);
    return {v, std::isfinite(v), false};
  }

  std::vector<Vec> y(n, x);
  if (p.objective(y) == kInf) {
    if (!repairFeasibility(p, y)) return {kInf, false, false};
    // snap the free blocks into their domains; the constraint re-determines
    // the last one
    for (int i = 0; i + 1 < n; ++i) y[i] = projectDomain(fns[i], y[i]);
    y[n - 1] = p.lastBlock(y);
    if (p.objective(y) == kInf) {
      y[n - 1] = projectDomain(fns[n - 1], y[n - 1]);
      Vec defect = p.x;
      for (int i = 0; i < n; ++i) defect -= lambdas[i] * y[i];
      if (defect.norm() > 1e-8 * (x.norm() + 1.0)) return {kInf, false, false};
    }
  }

  double best = p.objective(y);
  bool bracketHit = false;
  const int maxPasses = 400;
  for (int pass = 0; pass < maxPasses; ++pass) {
    double before = best;
    for (int b = 0; b + 1 < n; ++b) {
      for (int j = 0; j < d; ++j) {
        Vec dirB = Vec::Zero(d);
        dirB[j] = 1.0;
        Vec dirL = Vec::Zero(d);
        dirL[j] = -lambdas[b] / lambdas[n - 1];
        Vec yl = p.lastBlock(y);

        auto ib = lineInterval(fns[b], y[b], dirB);
        auto il = lineInterval(fns[n - 1], yl, dirL);
        if (!ib || !il) continue;
        double lo = std::max({ib->first, il->first, -kBracket - y[b][j]});
        double hi = std::min({ib->second, il->second, kBracket - y[b][j]});
        if (lo > hi) continue;

        auto g = [&](double t) {
          std::vector<Vec> yt = y;
          yt[b][j] += t;
          yt[n - 1] = p.lastBlock(yt);
          return p.objective(yt);
        };
        double tstar = lineMin(g, lo, hi);
        double v = g(tstar);
        if (v < best) {
          best = v;
          y[b][j] += tstar;
          y[n - 1] = p.lastBlock(y);
          if (std::abs(y[b][j]) >= kBracket - 1e-6) bracketHit = true;
        }
      }
    }
    if (before - best <= 1e-13 * (1.0 + std::abs(best))) break;
  }
  return {best, std::isfinite(best), bracketHit};
}

CheckResult proxOfAverageConsistency(const std::vector<ConvexFunctionSpec>& fns,
                                     const std::vector<double>& lambdas, double mu, const Vec& x,
                                     const SampleConfig& cfg) {
  cfg.validate();
  Vec rhs = Vec::Zero(x.size());
  for (std::size_t i = 0; i < fns.size(); ++i) rhs += lambdas[i] * prox(fns[i], mu, x);

  // prox of the numerically evaluated average: minimize p(z) + ||z - x||^2/(2 mu)
  auto pval = [&](const Vec& z) {
    auto r = proximalAverageValue(fns, lambdas, mu, z, cfg);
    return r.value;
  };
  const int d = static_cast<int>(x.size());
  Vec z = x;
  double radius = 10.0 * (1.0 + x.norm());
  auto objective = [&](const Vec& zz) {
    double pv = pval(zz);
    if (!std::isfinite(pv)) return kInf;
    return pv + (zz - x).squaredNorm() / (2.0 * mu);
  };
  double best = objective(z);
  for (int pass = 0; pass < 60; ++pass) {
    double before = best;
    for (int j = 0; j < d; ++j) {
      auto g = [&](double t) {
        Vec zz = z;
        zz[j] += t;
        return objective(zz);
      };
      double tstar = lineMin(g, -radius, radius);
      double v = g(tstar);
      if (v < best) {
        best = v;
        z[j] += tstar;
      }
    }
    if (before - best <= 1e-13 * (1.0 + std::abs(best))) break;
  }
  if (!std::isfinite(best))
    return CheckResult{Verdict::inconclusive, kInf, {}, 0, cfg.seed};

  double err = (z - rhs).norm();
  CheckResult res;
  res.statistic = err;
  res.samplesUsed = 1;
  res.seed = cfg.seed;
  res.verdict = err <= 10.0 * cfg.tol ? Verdict::pass : Verdict::fail;
  if (res.verdict == Verdict::fail) res.witness = {{x, z}, {x, rhs}};
  return res;
}

ConjugateResult conjugateValue(const ConvexFunctionSpec& fn, const Vec& u) {
  checkFinite(u, "conjugateValue");
  if (auto d = dimension(fn)) checkDim(u, *d, "conjugateValue");
  double tol = 1e-9 * (1.0 + u.norm());
  return std::visit(
      [&](const auto& f) -> ConjugateResult {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          // (alpha q)^* = alpha^{-1} q
          return {value(ConvexFunctionSpec(ScaledHalfNormSq(f.alpha.inverse())), u), false};
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          return {u.norm() <= f.c + tol ? 0.0 : kInf, false};
        } else if constexpr (std::is_same_v<T, Indicator>) {
          const auto& set = f.set;
          if (const auto* h = std::get_if<Halfspace>(&set)) {
            double t = u.dot(h->normal) / h->normal.squaredNorm();
            if (t < -tol || (u - t * h->normal).norm() > tol) return {kInf, false};
            return {std::max(t, 0.0) * h->offset, false};
          }
          if (const auto* b = std::get_if<Box>(&set)) {
            double s = 0.0;
            for (Eigen::Index j = 0; j < u.size(); ++j) {
              if (u[j] > 0)
                s += u[j] * b->upper[j];
              else if (u[j] < 0)
                s += u[j] * b->lower[j];
              if (s == kInf) return {kInf, false};
            }
            return {s, false};
          }
          if (const auto* ball = std::get_if<Ball>(&set)) {
            return {u.dot(ball->center) + ball->radius * u.norm(), false};
          }
          if (const auto* a = std::get_if<AffineSubspace>(&set)) {
            if (a->directions.cols() > 0 && (a->directions.transpose() * u).norm() > tol)
              return {kInf, false};
            return {u.dot(a->basepoint), false};
          }
          const auto& sp = std::get<SinglePoint>(set);
          return {u.dot(sp.p), false};
        } else {
          auto inner = conjugateValue(*f.base, Vec(u - f.slope));
          if (!std::isfinite(inner.value)) return inner;
          return {inner.value + (u - f.slope).dot(f.shift), inner.boundary};
        }
      },
      fn);
}

ConjugateResult conjugateValueTabulated(const std::function<double(double)>& f, double u,
                                        const Grid1D& grid) {
  // maximize the concave h(x) = u x - f(x)
  auto h = [&](double x) {
    double fx = f(x);
    return std::isfinite(fx) ? u * x - fx : -kInf;
  };
  int bestIdx = -1;
  double bestVal = -kInf;
  for (int i = 0; i < grid.points; ++i) {
    double x = grid.lower + (grid.upper - grid.lower) * i / (grid.points - 1);
    double v = h(x);
    if (v > bestVal) {
      bestVal = v;
      bestIdx = i;
    }
  }
  if (bestIdx < 0) return {kInf, false};  // empty domain in bracket: sup over nothing seen
  double step = (grid.upper - grid.lower) / (grid.points - 1);
  double a = std::max(grid.lower, grid.lower + step * (bestIdx - 1));
  double b = std::min(grid.upper, grid.lower + step * (bestIdx + 1));
  auto hneg = [&](double x) {
    double v = h(x);
    return std::isfinite(v) ? -v : 1e300;
  };
  double xstar = ternaryMin(hneg, a, b);
  double val = std::max(bestVal, h(xstar));
  bool boundary = std::min(xstar - grid.lower, grid.upper - xstar) <= 1e-6 * (grid.upper - grid.lower);
  return {val, boundary};
}

double modulusAverage(const std::vector<ConvexFunctionSpec>& moduli,
                      const std::vector<double>& lambdas, double mu, double t,
                      const SampleConfig& cfg) {
  if (!(t >= 0)) throw SpecError("modulusAverage: t must be >= 0");
  Vec zero = Vec::Zero(1);
  bool allQuadratic = true;
  std::vector<ExtNonneg> alphas;
  for (const auto& phi : moduli) {
    if (auto d = dimension(phi); d && *d != 1)
      throw SpecError("modulusAverage: moduli must be 1-D");
    double at0 = value(phi, zero);
    if (at0 != 0.0) throw SpecError("modulusAverage: moduli must vanish at 0");
    if (const auto* q = std::get_if<ScaledHalfNormSq>(&phi))
      alphas.push_back(q->alpha);
    else
      allQuadratic = false;
  }
  if (allQuadratic) {
    ExtNonneg r = rMu(alphas, lambdas, mu / 2.0);
    return r.toDouble() * 0.5 * t * t;
  }
  Vec xt(1);
  xt[0] = t;
  auto r = proximalAverageValue(moduli, lambdas, mu / 2.0, xt, cfg);
  if (!r.feasible) throw ComputeError("modulusAverage: no feasible decomposition");
  return r.value;
}

}  // namespace resavg
