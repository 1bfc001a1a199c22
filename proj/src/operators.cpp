#include "resavg/operators.hpp"

#include <cmath>
#include <limits>

namespace resavg {

MatrixOp::MatrixOp(Mat matrix) : m(std::move(matrix)) {
  if (m.rows() != m.cols() || m.rows() == 0) throw SpecError("MatrixOp: matrix must be square");
  if (!m.allFinite()) throw SpecError("MatrixOp: entries must be finite");
  Mat sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  // tolerate rounding in user input without admitting non-monotone matrices
  if (es.eigenvalues().minCoeff() < -1e-12)
    throw SpecError("MatrixOp: symmetric part must be positive semidefinite");
}

Rotation2DOp::Rotation2DOp(double theta) : angle(theta) {
  if (!(theta >= 0) || !(theta <= M_PI / 2 + 1e-15))
    throw SpecError("Rotation2DOp: angle must lie in [0, pi/2]");
}

Mat Rotation2DOp::matrix() const {
  Mat r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

ConstantOp::ConstantOp(Vec value) : z(std::move(value)) { checkFinite(z, "ConstantOp"); }

InverseOp::InverseOp(OperatorSpec op) : inner(std::make_shared<const OperatorSpec>(std::move(op))) {}

ShiftedOp::ShiftedOp(OperatorSpec op, Vec range, Vec argument)
    : inner(std::make_shared<const OperatorSpec>(std::move(op))),
      rangeShift(std::move(range)),
      argumentShift(std::move(argument)) {
  checkFinite(rangeShift, "ShiftedOp rangeShift");
  checkFinite(argumentShift, "ShiftedOp argumentShift");
  if (rangeShift.size() != argumentShift.size())
    throw SpecError("ShiftedOp: shift dimensions differ");
  if (auto d = resavg::dimension(*inner); d && *d != rangeShift.size())
    throw SpecError("ShiftedOp: inner dimension mismatch");
}

ScaledOp::ScaledOp(OperatorSpec op, double alpha)
    : inner(std::make_shared<const OperatorSpec>(std::move(op))), factor(alpha) {
  if (!(factor > 0) || !std::isfinite(factor))
    throw SpecError("ScaledOp: factor must be positive and finite");
}

DisplacementOp::DisplacementOp(OperatorSpec op)
    : inner(std::make_shared<const OperatorSpec>(std::move(op))) {}

std::optional<int> dimension(const OperatorSpec& op) {
  return std::visit(
      [](const auto& o) -> std::optional<int> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MatrixOp>) return static_cast<int>(o.m.rows());
        else if constexpr (std::is_same_v<T, ScaledIdentityOp>) return std::nullopt;
        else if constexpr (std::is_same_v<T, Rotation2DOp>) return 2;
        else if constexpr (std::is_same_v<T, NormalConeOp>) return dimension(o.set);
        else if constexpr (std::is_same_v<T, SubdifferentialOp>) return dimension(o.fn);
        else if constexpr (std::is_same_v<T, ConstantOp>) return static_cast<int>(o.z.size());
        else if constexpr (std::is_same_v<T, ShiftedOp>) return static_cast<int>(o.rangeShift.size());
        else return dimension(*o.inner);
      },
      op);
}

Vec resolve(const OperatorSpec& op, double gamma, const Vec& x) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw SpecError("resolve: gamma must be > 0");
  if (auto d = dimension(op)) checkDim(x, *d, "resolve");
  checkFinite(x, "resolve");
  return std::visit(
      [&](const auto& o) -> Vec {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MatrixOp>) {
          Mat sys = Mat::Identity(o.m.rows(), o.m.cols()) + gamma * o.m;
          return sys.partialPivLu().solve(x);
        } else if constexpr (std::is_same_v<T, ScaledIdentityOp>) {
          if (o.alpha.isInf()) return Vec::Zero(x.size());
          return x / (1.0 + gamma * o.alpha.toDouble());
        } else if constexpr (std::is_same_v<T, Rotation2DOp>) {
          Mat sys = Mat::Identity(2, 2) + gamma * o.matrix();
          return sys.partialPivLu().solve(x);
        } else if constexpr (std::is_same_v<T, NormalConeOp>) {
          return project(o.set, x);  // projection for every gamma
        } else if constexpr (std::is_same_v<T, SubdifferentialOp>) {
          return prox(o.fn, gamma, x);
        } else if constexpr (std::is_same_v<T, ConstantOp>) {
          return x - gamma * o.z;
        } else if constexpr (std::is_same_v<T, InverseOp>) {
          // J_{gamma A^{-1}}(x) = x - gamma J_{A/gamma}(x/gamma)
          return x - gamma * resolve(*o.inner, 1.0 / gamma, Vec(x / gamma));
        } else if constexpr (std::is_same_v<T, ShiftedOp>) {
          return o.argumentShift +
                 resolve(*o.inner, gamma, Vec(x - gamma * o.rangeShift - o.argumentShift));
        } else if constexpr (std::is_same_v<T, ScaledOp>) {
          return resolve(*o.inner, gamma * o.factor, x);
        } else {
          // D = 2 J_{B^{-1}}, and for a resolvent T = J_C,
          // J_{rho T}(x) = x - rho J_{C/(1+rho)}(x/(1+rho)) with rho = 2 gamma.
          double rho = 2.0 * gamma;
          InverseOp binv(*o.inner);
          return x - rho * resolve(OperatorSpec(std::move(binv)), 1.0 / (1.0 + rho),
                                   Vec(x / (1.0 + rho)));
        }
      },
      op);
}

std::optional<AffineMap> affineProjection(const ConvexSetSpec& set, int dim) {
  const Mat id = Mat::Identity(dim, dim);
  if (const auto* a = std::get_if<AffineSubspace>(&set)) {
    Mat proj = a->directions.cols() == 0
                   ? Mat(Mat::Zero(dim, dim))
                   : Mat(a->directions * a->directions.transpose());
    return AffineMap{proj, Vec((id - proj) * a->basepoint)};
  }
  if (const auto* p = std::get_if<SinglePoint>(&set)) {
    return AffineMap{Mat::Zero(dim, dim), p->p};
  }
  return std::nullopt;
}

std::optional<AffineMap> affineProx(const ConvexFunctionSpec& fn, double gamma, int dim) {
  const Mat id = Mat::Identity(dim, dim);
  if (const auto* s = std::get_if<ScaledHalfNormSq>(&fn)) {
    if (s->alpha.isInf()) return AffineMap{Mat::Zero(dim, dim), Vec::Zero(dim)};
    return AffineMap{id / (1.0 + gamma * s->alpha.toDouble()), Vec::Zero(dim)};
  }
  if (const auto* i = std::get_if<Indicator>(&fn)) {
    return affineProjection(i->set, dim);
  }
  if (const auto* t = std::get_if<LinearTilt>(&fn)) {
    auto in = affineProx(*t->base, gamma, dim);
    if (!in) return std::nullopt;
    Vec off = in->offset + t->shift - in->linear * (gamma * t->slope + t->shift);
    return AffineMap{in->linear, std::move(off)};
  }
  return std::nullopt;
}

std::optional<AffineMap> affineResolvent(const OperatorSpec& op, double gamma, int dim) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw SpecError("affineResolvent: gamma must be > 0");
  if (auto d = dimension(op); d && *d != dim)
    throw SpecError("affineResolvent: dimension mismatch");
  const Mat id = Mat::Identity(dim, dim);
  return std::visit(
      [&](const auto& o) -> std::optional<AffineMap> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MatrixOp>) {
          return AffineMap{(id + gamma * o.m).partialPivLu().inverse(), Vec::Zero(dim)};
        } else if constexpr (std::is_same_v<T, ScaledIdentityOp>) {
          if (o.alpha.isInf()) return AffineMap{Mat::Zero(dim, dim), Vec::Zero(dim)};
          return AffineMap{id / (1.0 + gamma * o.alpha.toDouble()), Vec::Zero(dim)};
        } else if constexpr (std::is_same_v<T, Rotation2DOp>) {
          return AffineMap{(id + gamma * o.matrix()).partialPivLu().inverse(), Vec::Zero(dim)};
        } else if constexpr (std::is_same_v<T, NormalConeOp>) {
          return affineProjection(o.set, dim);
        } else if constexpr (std::is_same_v<T, SubdifferentialOp>) {
          return affineProx(o.fn, gamma, dim);
        } else if constexpr (std::is_same_v<T, ConstantOp>) {
          return AffineMap{id, Vec(-gamma * o.z)};
        } else if constexpr (std::is_same_v<T, InverseOp>) {
          auto in = affineResolvent(*o.inner, 1.0 / gamma, dim);
          if (!in) return std::nullopt;
          return AffineMap{id - in->linear, Vec(-gamma * in->offset)};
        } else if constexpr (std::is_same_v<T, ShiftedOp>) {
          auto in = affineResolvent(*o.inner, gamma, dim);
          if (!in) return std::nullopt;
          Vec t = in->offset + o.argumentShift -
                  in->linear * (gamma * o.rangeShift + o.argumentShift);
          return AffineMap{in->linear, std::move(t)};
        } else if constexpr (std::is_same_v<T, ScaledOp>) {
          return affineResolvent(*o.inner, gamma * o.factor, dim);
        } else {
          double rho = 2.0 * gamma;
          auto in = affineResolvent(OperatorSpec(InverseOp(*o.inner)), 1.0 / (1.0 + rho), dim);
          if (!in) return std::nullopt;
          return AffineMap{id - (rho / (1.0 + rho)) * in->linear, Vec(-rho * in->offset)};
        }
      },
      op);
}

OperatorValue evaluateOperator(const OperatorSpec& op, const Vec& x, const SampleConfig& cfg) {
  cfg.validate();
  if (auto d = dimension(op)) checkDim(x, *d, "evaluateOperator");
  checkFinite(x, "evaluateOperator");

  if (const auto* m = std::get_if<MatrixOp>(&op)) {
    return OperatorValue{Vec(m->m * x), 0.0, 0, false};
  }

  // z - J(z) + x is firmly nonexpansive in z; its fixed points solve J(z) = x,
  // and then (x, z - x) is a graph point by Minty's parametrization.
  Vec z = x;
  double residual = std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.maxIter; ++k) {
    Vec jz = resolve(op, 1.0, z);
    residual = (jz - x).norm();
    if (residual <= cfg.tol) {
      return OperatorValue{Vec(z - x), residual, k, true};
    }
    z = z - jz + x;
  }
  return OperatorValue{std::nullopt, residual, cfg.maxIter, true};
}

}  // namespace resavg
