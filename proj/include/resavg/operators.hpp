#pragma once

#include "resavg/functions.hpp"

#include <memory>
#include <optional>
#include <variant>

namespace resavg {

// Catalog of maximally monotone operators on R^d whose resolvents
// J_{gamma A} = (Id + gamma A)^{-1} are exactly computable.

struct MatrixOp {
  Mat m;
  explicit MatrixOp(Mat matrix);  // rejects matrices whose symmetric part is not PSD
};

struct ScaledIdentityOp {  // alpha * Id; alpha = inf is the normal cone of {0}
  ExtNonneg alpha;
  explicit ScaledIdentityOp(ExtNonneg a) : alpha(std::move(a)) {}
};

struct Rotation2DOp {  // counterclockwise rotation, angle in [0, pi/2]
  double angle;
  explicit Rotation2DOp(double theta);
  Mat matrix() const;
};

struct NormalConeOp {
  ConvexSetSpec set;
  explicit NormalConeOp(ConvexSetSpec s) : set(std::move(s)) {}
};

struct SubdifferentialOp {
  ConvexFunctionSpec fn;
  explicit SubdifferentialOp(ConvexFunctionSpec f) : fn(std::move(f)) {}
};

struct ConstantOp {
  Vec z;
  explicit ConstantOp(Vec value);
};

struct InverseOp;
struct ShiftedOp;
struct ScaledOp;
struct DisplacementOp;

using OperatorSpec = std::variant<MatrixOp, ScaledIdentityOp, Rotation2DOp, NormalConeOp,
                                  SubdifferentialOp, ConstantOp, InverseOp, ShiftedOp, ScaledOp,
                                  DisplacementOp>;
using OpPtr = std::shared_ptr<const OperatorSpec>;

struct InverseOp {
  OpPtr inner;
  explicit InverseOp(OperatorSpec op);
};

struct ShiftedOp {  // x -> inner(x - argumentShift) + rangeShift
  OpPtr inner;
  Vec rangeShift;
  Vec argumentShift;
  ShiftedOp(OperatorSpec op, Vec range, Vec argument);
};

struct ScaledOp {  // factor * inner, factor > 0
  OpPtr inner;
  double factor;
  ScaledOp(OperatorSpec op, double alpha);
};

struct DisplacementOp {  // Id - N with N = 2 J_inner - Id, i.e. 2 J_{inner^{-1}}
  OpPtr inner;
  explicit DisplacementOp(OperatorSpec op);
};

/// nullopt when the operator applies in any dimension.
std::optional<int> dimension(const OperatorSpec& op);

/// J_{gamma A}(x): single-valued, full domain, firmly nonexpansive.
Vec resolve(const OperatorSpec& op, double gamma, const Vec& x);

struct AffineMap {
  Mat linear;
  Vec offset;
  Vec operator()(const Vec& x) const { return linear * x + offset; }
};

/// The resolvent J_{gamma A} as an affine map, when it is one.
std::optional<AffineMap> affineResolvent(const OperatorSpec& op, double gamma, int dim);

/// Projection onto the set as an affine map, when it is one.
std::optional<AffineMap> affineProjection(const ConvexSetSpec& set, int dim);

/// prox(fn, gamma, .) as an affine map, when it is one.
std::optional<AffineMap> affineProx(const ConvexFunctionSpec& fn, double gamma, int dim);

/// Result of an iterative operator evaluation. An empty value means the
/// residual never met the tolerance (x outside the domain, as far as the
/// budget can tell). `selection` marks values produced by the fixed-point
/// iteration, which picks one element of a possibly larger image set.
struct OperatorValue {
  std::optional<Vec> value;
  double residual = 0.0;
  int iterations = 0;
  bool selection = false;
  explicit operator bool() const { return value.has_value(); }
};

/// Finds u in A(x) through resolvent inversion: iterates z <- z - J_A(z) + x
/// from z = x and returns u = z - x. Matrix operators are evaluated directly.
OperatorValue evaluateOperator(const OperatorSpec& op, const Vec& x, const SampleConfig& cfg);

}  // namespace resavg
