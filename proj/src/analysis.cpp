#include "resavg/analysis.hpp"

#include <cmath>
#include <limits>

namespace resavg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerate = 1e-9;     // pairs closer than this are skipped
constexpr int kMinUsable = 10;           // fewer usable pairs -> inconclusive
constexpr double kContractionMargin = 1e-6;
}  // namespace

const char* toString(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

VectorMap resolventMap(const OperatorSpec& op, double gamma) {
  return [op, gamma](const Vec& x) { return resolve(op, gamma, x); };
}

VectorMap averagedResolventMap(const AverageSpec& avg) {
  return [avg](const Vec& x) { return averagedResolvent(avg, x); };
}

VectorMap reflectedResolventMap(const OperatorSpec& op, double gamma) {
  return [op, gamma](const Vec& x) { return Vec(2.0 * resolve(op, gamma, x) - x); };
}

GraphSampler::GraphSampler(AnalysisSource source, int dim, SampleConfig cfg)
    : source_(std::move(source)), dim_(dim), cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
  if (dim_ < 1) throw SpecError("GraphSampler: dimension must be >= 1");
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OperatorSpec>) {
          if (auto d = dimension(s); d && *d != dim_)
            throw SpecError("GraphSampler: operator dimension mismatch");
        } else if constexpr (std::is_same_v<T, AverageSpec>) {
          if (auto d = s.dimension(); d && *d != dim_)
            throw SpecError("GraphSampler: average dimension mismatch");
        }
      },
      source_);
}

GraphPoint GraphSampler::fromZ(const Vec& z) const {
  return std::visit(
      [&](const auto& s) -> GraphPoint {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OperatorSpec>) {
          Vec jz = resolve(s, 1.0, z);
          return {jz, Vec(z - jz)};
        } else if constexpr (std::is_same_v<T, AverageSpec>) {
          Vec tz = averagedResolvent(s, z);
          return {tz, Vec((z - tz) / s.mu())};
        } else {
          return {z, s.map(z)};
        }
      },
      source_);
}

GraphPoint GraphSampler::sample() { return fromZ(rng_.inBall(dim_, cfg_.radius)); }

std::vector<GraphPoint> GraphSampler::probePoints() const {
  std::vector<GraphPoint> pts;
  pts.push_back(fromZ(Vec::Zero(dim_)));
  for (int i = 0; i < dim_; ++i) {
    Vec e = Vec::Zero(dim_);
    for (double s : {1.0, -1.0, cfg_.radius, -cfg_.radius}) {
      e[i] = s;
      pts.push_back(fromZ(e));
    }
    e[i] = 0.0;
  }
  return pts;
}

namespace {

// Collects the probe pairs plus cfg.pairCount random pairs and folds a pair
// statistic; ratio() returns nullopt for degenerate pairs.
template <class Ratio>
CheckResult foldPairs(const AnalysisSource& src, int dim, const SampleConfig& cfg, bool minimize,
                      double passTol, Ratio ratio) {
  GraphSampler sampler(src, dim, cfg);
  CheckResult res;
  res.seed = cfg.seed;
  res.statistic = minimize ? kInf : -kInf;
  std::vector<GraphPoint> pool = sampler.probePoints();
  int usable = 0;
  GraphPoint wa, wb;

  auto consider = [&](const GraphPoint& a, const GraphPoint& b) {
    auto r = ratio(a, b);
    if (!r) return;
    ++usable;
    bool better = minimize ? *r < res.statistic : *r > res.statistic;
    if (better) {
      res.statistic = *r;
      wa = a;
      wb = b;
    }
  };

  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) consider(pool[i], pool[j]);
  for (int k = 0; k < cfg.pairCount; ++k) {
    GraphPoint a = sampler.sample();
    GraphPoint b = sampler.sample();
    consider(a, b);
  }

  res.samplesUsed = usable;
  if (usable < kMinUsable) {
    res.verdict = Verdict::inconclusive;
    return res;
  }
  double margin = minimize ? res.statistic : -res.statistic;
  res.verdict = margin >= -passTol ? Verdict::pass : Verdict::fail;
  if (res.verdict == Verdict::fail) res.witness = {wa, wb};
  return res;
}

}  // namespace

CheckResult estimateMonotonicityModulus(const AnalysisSource& src, int dim,
                                        const SampleConfig& cfg) {
  return foldPairs(src, dim, cfg, /*minimize=*/true, cfg.tol,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     Vec dx = a.x - b.x;
                     if (dx.norm() < kDegenerate) return std::nullopt;
                     return (a.u - b.u).dot(dx) / dx.squaredNorm();
                   });
}

CheckResult estimateLipschitz(const AnalysisSource& src, int dim, const SampleConfig& cfg) {
  // estimator: the max ratio is the statistic, there is nothing to violate
  return foldPairs(src, dim, cfg, /*minimize=*/false, kInf,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     double n = (a.x - b.x).norm();
                     if (n < kDegenerate) return std::nullopt;
                     return (a.u - b.u).norm() / n;
                   });
}

CheckResult estimateCocoercivity(const AnalysisSource& src, int dim, const SampleConfig& cfg) {
  return foldPairs(src, dim, cfg, /*minimize=*/true, cfg.tol,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     Vec du = a.u - b.u;
                     if (du.norm() < kDegenerate) return std::nullopt;
                     return du.dot(a.x - b.x) / du.squaredNorm();
                   });
}

CheckResult checkFirmlyNonexpansive(const VectorMap& map, int dim, const SampleConfig& cfg) {
  AnalysisSource src = MapSource{map};
  return foldPairs(src, dim, cfg, /*minimize=*/false, cfg.tol,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     Vec dt = a.u - b.u;
                     return dt.squaredNorm() - dt.dot(a.x - b.x);
                   });
}

CheckResult checkNonexpansive(const VectorMap& map, int dim, const SampleConfig& cfg) {
  AnalysisSource src = MapSource{map};
  return foldPairs(src, dim, cfg, /*minimize=*/false, cfg.tol,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     return (a.u - b.u).norm() - (a.x - b.x).norm();
                   });
}

namespace {

int numericalRank(const Mat& m, double tolScale) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cutoff = tolScale * sv(0);
  if (sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

CheckResult checkParamonotoneMatrix(const Mat& m, double rankTolScale) {
  MatrixOp checked(m);  // rejects non-monotone input
  Mat sym = 0.5 * (m + m.transpose());
  int rankFull = numericalRank(m, rankTolScale);
  int rankSym = numericalRank(sym, rankTolScale);
  CheckResult res;
  res.samplesUsed = 0;
  res.statistic = static_cast<double>(rankFull - rankSym);
  res.verdict = rankFull == rankSym ? Verdict::pass : Verdict::fail;
  if (res.verdict == Verdict::fail) {
    // a direction that the symmetric part annihilates but the matrix does not
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    Eigen::Index j;
    es.eigenvalues().cwiseAbs().minCoeff(&j);
    Vec dir = es.eigenvectors().col(j);
    res.witness = {{dir, Vec(m * dir)}, {Vec::Zero(m.rows()), Vec::Zero(m.rows())}};
  }
  return res;
}

CheckResult checkKCyclic(const AnalysisSource& src, int k, int dim, const SampleConfig& cfg) {
  if (k < 2) throw SpecError("checkKCyclic: k must be >= 2");
  GraphSampler sampler(src, dim, cfg);
  CheckResult res;
  res.seed = cfg.seed;
  res.statistic = kInf;
  std::vector<GraphPoint> best;

  auto cyclicSum = [&](const std::vector<GraphPoint>& tuple) {
    double s = 0.0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const auto& next = tuple[(i + 1) % tuple.size()];
      s += tuple[i].u.dot(tuple[i].x - next.x);
    }
    return s;
  };
  auto consider = [&](const std::vector<GraphPoint>& tuple) {
    double s = cyclicSum(tuple);
    ++res.samplesUsed;
    if (s < res.statistic) {
      res.statistic = s;
      best = tuple;
    }
  };

  // targeted corners: graph points above 0 and the unit basis vectors
  std::vector<GraphPoint> corners;
  auto addCorner = [&](const Vec& x) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, OperatorSpec>) {
            auto v = evaluateOperator(s, x, cfg);
            if (v) corners.push_back({x, *v.value});
          } else if constexpr (std::is_same_v<T, AverageSpec>) {
            auto v = evaluateAverage(s, x, cfg);
            if (v) corners.push_back({x, *v.value});
          } else {
            corners.push_back({x, s.map(x)});
          }
        },
        src);
  };
  addCorner(Vec::Zero(dim));
  for (int i = 0; i < dim; ++i) {
    Vec e = Vec::Zero(dim);
    e[i] = 1.0;
    addCorner(e);
  }

  double tuples = std::pow(static_cast<double>(corners.size()), k);
  if (!corners.empty() && tuples <= 20000) {
    std::vector<int> idx(k, 0);
    while (true) {
      std::vector<GraphPoint> tuple;
      tuple.reserve(k);
      for (int i : idx) tuple.push_back(corners[i]);
      consider(tuple);
      int pos = k - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(corners.size())) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }

  for (int t = 0; t < cfg.pairCount; ++t) {
    std::vector<GraphPoint> tuple;
    tuple.reserve(k);
    for (int i = 0; i < k; ++i) tuple.push_back(sampler.sample());
    consider(tuple);
  }

  if (res.samplesUsed < 1) {
    res.verdict = Verdict::inconclusive;
    return res;
  }
  res.verdict = res.statistic >= -cfg.tol ? Verdict::pass : Verdict::fail;
  if (res.verdict == Verdict::fail) res.witness = best;
  return res;
}

double fitzpatrickMatrix(const Mat& m, const Vec& x, const Vec& v) {
  MatrixOp checked(m);
  checkDim(x, m.rows(), "fitzpatrickMatrix");
  checkDim(v, m.rows(), "fitzpatrickMatrix");
  Mat sym = 0.5 * (m + m.transpose());
  Vec c = m.transpose() * x + v;
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  const Vec& ev = es.eigenvalues();
  double cutoff = 1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  Vec cw = es.eigenvectors().transpose() * c;
  Vec y = Vec::Zero(c.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) > cutoff)
      y[i] = cw[i] / ev[i];
    else if (std::abs(cw[i]) > 1e-9 * (1.0 + c.norm()))
      return kInf;  // component outside ran(M_+)
  }
  return 0.25 * cw.dot(y);
}

CheckResult checkFitzpatrickInequality(const std::vector<Mat>& matrices,
                                       const std::vector<double>& lambdas, double mu,
                                       const SampleConfig& cfg) {
  cfg.validate();
  Mat avg = mu * resolventAverageMatrix(matrices, lambdas, mu);
  const int d = static_cast<int>(matrices.front().rows());
  const int n = static_cast<int>(matrices.size());
  std::vector<Mat> scaled;
  scaled.reserve(n);
  for (const auto& m : matrices) scaled.push_back(mu * m);

  Rng rng(cfg.seed);
  CheckResult res;
  res.seed = cfg.seed;
  res.statistic = -kInf;
  int evaluated = 0;
  for (int s = 0; s < cfg.pairCount; ++s) {
    Vec x = rng.inBall(d, cfg.radius);
    Vec v;
    if (s % (n + 1) == n) {
      v = rng.inBall(d, cfg.radius);
    } else {
      // aimed into dom F_{mu A_i}: v = -(mu A_i)^T x + (mu A_i)_+ w
      const Mat& mi = scaled[s % (n + 1)];
      Mat sym = 0.5 * (mi + mi.transpose());
      v = -mi.transpose() * x + sym * rng.inBall(d, cfg.radius);
    }
    double rhs = 0.0;
    for (int i = 0; i < n; ++i) {
      double fi = fitzpatrickMatrix(scaled[i], x, v);
      rhs += lambdas[i] * fi;
      if (rhs == kInf) break;
    }
    if (!std::isfinite(rhs)) continue;
    ++evaluated;
    double lhs = fitzpatrickMatrix(avg, x, v);
    double margin = lhs - rhs;
    if (margin > res.statistic) {
      res.statistic = margin;
      if (margin > cfg.tol) res.witness = {{x, v}};
    }
  }
  res.samplesUsed = evaluated;
  if (evaluated < kMinUsable) {
    res.verdict = Verdict::inconclusive;
    return res;
  }
  res.verdict = res.statistic <= cfg.tol ? Verdict::pass : Verdict::fail;
  if (res.verdict == Verdict::pass) res.witness.clear();
  return res;
}

CheckResult checkDisjointInjectivity(const AnalysisSource& src, int dim, const SampleConfig& cfg) {
  VectorMap j = std::visit(
      [](const auto& s) -> VectorMap {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, OperatorSpec>) return resolventMap(s, 1.0);
        else if constexpr (std::is_same_v<T, AverageSpec>) return averagedResolventMap(s);
        else throw SpecError("checkDisjointInjectivity: needs an operator or average source");
      },
      src);
  AnalysisSource mapped = MapSource{j};
  // statistic: max ||Jx - Jy|| / ||x - y||; a ratio reaching 1 - tol disproves
  // strict nonexpansiveness of the resolvent
  return foldPairs(mapped, dim, cfg, /*minimize=*/false, 1.0 - cfg.tol,
                   [&](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     double n = (a.x - b.x).norm();
                     if (n < kDegenerate) return std::nullopt;
                     return (a.u - b.u).norm() / n;
                   });
}

CheckResult checkBanachContraction(const AverageSpec& avg, int dim, const SampleConfig& cfg) {
  // Lipschitz estimate of the average itself; contraction needs the statistic
  // to clear 1 by a fixed margin.
  return foldPairs(AnalysisSource(avg), dim, cfg, /*minimize=*/false, 1.0 - kContractionMargin,
                   [](const GraphPoint& a, const GraphPoint& b) -> std::optional<double> {
                     double n = (a.x - b.x).norm();
                     if (n < kDegenerate) return std::nullopt;
                     return (a.u - b.u).norm() / n;
                   });
}

}  // namespace resavg
