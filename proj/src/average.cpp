#include "resavg/average.hpp"

#include <cmath>
#include <limits>

namespace resavg {

void validateWeights(const std::vector<double>& lambdas) {
  if (lambdas.empty()) throw SpecError("weights: at least one item required");
  double sum = 0;
  for (double l : lambdas) {
    if (!(l > 0) || !std::isfinite(l)) throw SpecError("weights: each weight must be > 0");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw SpecError("weights: sum must equal 1 within 1e-9");
}

AverageSpec::AverageSpec(std::vector<AverageItem> items, double mu)
    : items_(std::move(items)), mu_(mu) {
  if (!(mu_ > 0) || !std::isfinite(mu_)) throw SpecError("AverageSpec: mu must be > 0");
  std::vector<double> ls;
  ls.reserve(items_.size());
  for (const auto& it : items_) ls.push_back(it.weight);
  validateWeights(ls);
  for (const auto& it : items_) {
    auto d = resavg::dimension(it.op);
    if (!d) continue;
    if (dim_ && *dim_ != *d) throw SpecError("AverageSpec: operators must share one dimension");
    dim_ = d;
  }
}

Vec averagedResolvent(const AverageSpec& avg, const Vec& x) {
  if (auto d = avg.dimension()) checkDim(x, *d, "averagedResolvent");
  Vec acc = Vec::Zero(x.size());
  for (const auto& it : avg.items()) acc += it.weight * resolve(it.op, avg.mu(), x);
  return acc;
}

Mat resolventAverageMatrix(const std::vector<Mat>& matrices, const std::vector<double>& lambdas,
                           double mu) {
  if (!(mu > 0) || !std::isfinite(mu)) throw SpecError("resolventAverageMatrix: mu must be > 0");
  if (matrices.size() != lambdas.size())
    throw SpecError("resolventAverageMatrix: matrix/weight count mismatch");
  validateWeights(lambdas);
  const auto d = matrices.front().rows();
  Mat acc = Mat::Zero(d, d);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    MatrixOp checked(matrices[i]);  // rejects non-monotone input
    if (checked.m.rows() != d) throw SpecError("resolventAverageMatrix: dimension mismatch");
    acc += lambdas[i] * (checked.m + Mat::Identity(d, d) / mu).partialPivLu().inverse();
  }
  Eigen::PartialPivLU<Mat> lu(acc);
  Mat inv = lu.inverse();
  if (!inv.allFinite() || (acc * inv - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-6)
    throw ComputeError("resolventAverageMatrix: averaged resolvent numerically singular");
  return inv - Mat::Identity(d, d) / mu;
}

std::optional<AffineMap> resolventAverageAffine(const AverageSpec& avg, int dim) {
  Mat lbar = Mat::Zero(dim, dim);
  Vec tbar = Vec::Zero(dim);
  for (const auto& it : avg.items()) {
    auto j = affineResolvent(it.op, avg.mu(), dim);
    if (!j) return std::nullopt;
    lbar += it.weight * j->linear;
    tbar += it.weight * j->offset;
  }
  // Jbar = Lbar x + tbar is the mu-resolvent of the average, so
  // R(y) = mu^{-1} (Lbar^{-1} - I) y - mu^{-1} Lbar^{-1} tbar.
  Eigen::PartialPivLU<Mat> lu(lbar);
  Mat linv = lu.inverse();
  if (!linv.allFinite() || (lbar * linv - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-6)
    throw ComputeError("resolventAverageAffine: averaged resolvent numerically singular");
  double invMu = 1.0 / avg.mu();
  return AffineMap{invMu * (linv - Mat::Identity(dim, dim)), Vec(-invMu * (linv * tbar))};
}

OperatorValue evaluateAverage(const AverageSpec& avg, const Vec& x, const SampleConfig& cfg) {
  cfg.validate();
  if (auto d = avg.dimension()) checkDim(x, *d, "evaluateAverage");
  checkFinite(x, "evaluateAverage");

  bool allMatrices = true;
  for (const auto& it : avg.items())
    if (!std::holds_alternative<MatrixOp>(it.op)) allMatrices = false;
  if (allMatrices) {
    std::vector<Mat> ms;
    std::vector<double> ls;
    for (const auto& it : avg.items()) {
      ms.push_back(std::get<MatrixOp>(it.op).m);
      ls.push_back(it.weight);
    }
    Mat r = resolventAverageMatrix(ms, ls, avg.mu());
    return OperatorValue{Vec(r * x), 0.0, 0, false};
  }

  // Invert T = sum_i lambda_i J_{mu A_i} once; dividing by mu at the end keeps
  // the two mu^{-1} shifts of the definition out of the tolerance budget.
  Vec z = x;
  double residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.maxIter; ++k) {
    Vec tz = averagedResolvent(avg, z);
    residual = (tz - x).norm();
    if (residual <= cfg.tol) {
      return OperatorValue{Vec((z - x) / avg.mu()), residual, k, true};
    }
    z = z - tz + x;
  }
  return OperatorValue{std::nullopt, residual, cfg.maxIter, true};
}

OperatorSpec inverted(const OperatorSpec& op) {
  if (const auto* inv = std::get_if<InverseOp>(&op)) return *inv->inner;
  return InverseOp(op);
}

AverageSpec inverseAverage(const AverageSpec& avg) {
  std::vector<AverageItem> items;
  items.reserve(avg.items().size());
  for (const auto& it : avg.items()) items.push_back({inverted(it.op), it.weight});
  return AverageSpec(std::move(items), 1.0 / avg.mu());
}

ExtNonneg rMu(const std::vector<ExtNonneg>& alphas, const std::vector<double>& lambdas,
              double mu) {
  if (alphas.size() != lambdas.size()) throw SpecError("rMu: alpha/weight count mismatch");
  if (!(mu > 0) || !std::isfinite(mu)) throw SpecError("rMu: mu must be > 0");
  validateWeights(lambdas);

  std::vector<Rational> ws;
  Rational wsum = 0;
  for (double l : lambdas) {
    ws.push_back(rationalFromDouble(l));
    wsum += ws.back();
  }

  Rational invMu = Rational(1) / rationalFromDouble(mu);
  Rational s = 0;  // sum_i lambda_i (alpha_i + 1/mu)^{-1}, with inf entries contributing 0
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (alphas[i].isInf()) continue;
    s += (ws[i] / wsum) / (alphas[i].rational() + invMu);
  }
  if (s == 0) return ExtNonneg::infinity();
  return ExtNonneg::fromRational(Rational(1) / s - invMu);
}

}  // namespace resavg
