#include "gallery.hpp"

#include "resavg/analysis.hpp"
#include "resavg/feasibility.hpp"
#include "resavg/proximal.hpp"

#include <cmath>
#include <limits>

namespace resavg {

namespace {

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

OperatorSpec quarterTurn() { return Rotation2DOp(M_PI / 2); }

Mat axisProjection(int axis) {
  Mat m = Mat::Zero(2, 2);
  m(axis, axis) = 1.0;
  return m;
}

AverageSpec axisNormalCones(double lambda) {
  AffineSubspace xAxis(vec2(0, 0), (Mat(2, 1) << 1, 0).finished());
  AffineSubspace yAxis(vec2(0, 0), (Mat(2, 1) << 0, 1).finished());
  return AverageSpec({{NormalConeOp(xAxis), lambda}, {NormalConeOp(yAxis), 1.0 - lambda}}, 1.0);
}

}  // namespace

json buildGallery() {
  SampleConfig cfg;  // seed 0 defaults
  cfg.tol = 1e-12;
  json g;

  // resolvent of the quarter-turn rotation
  g["rotation_resolvent"] = {
      {"gamma", 1.0},
      {"x", encodeVec(vec2(1, 0))},
      {"value", encodeVec(resolve(quarterTurn(), 1.0, vec2(1, 0)))}};

  // prox of the norm: soft threshold
  {
    ConvexFunctionSpec norm1 = NormScaled(1.0);
    json entries = json::array();
    for (const Vec& x : {vec2(0.5, 0), vec2(0, 2), vec2(3, 4)})
      entries.push_back({{"x", encodeVec(x)}, {"value", encodeVec(prox(norm1, 1.0, x))}});
    g["norm_prox"] = entries;
  }

  // catalog projections
  {
    AffineSubspace xAxis(vec2(0, 0), (Mat(2, 1) << 1, 0).finished());
    Ball unit(vec2(0, 0), 1.0);
    g["projections"] = {
        {"axis", encodeVec(project(ConvexSetSpec(xAxis), vec2(3, 2)))},
        {"ball", encodeVec(project(ConvexSetSpec(unit), vec2(3, 4)))}};
  }

  // average of the two axis normal cones: diagonal with entries
  // (1-lambda)/lambda and lambda/(1-lambda)
  {
    json entries = json::array();
    for (double lambda : {0.25, 0.5, 0.75}) {
      auto aff = resolventAverageAffine(axisNormalCones(lambda), 2);
      entries.push_back({{"lambda", lambda},
                         {"matrix", encodeMat(aff->linear)},
                         {"offset", encodeVec(aff->offset)}});
    }
    g["normal_cone_average"] = entries;
  }

  // identity and quarter-turn at weights (1/3, 2/3)
  {
    AverageSpec avg({{ScaledIdentityOp(ExtNonneg(1.0)), 1.0 / 3.0}, {quarterTurn(), 2.0 / 3.0}},
                    1.0);
    auto aff = resolventAverageAffine(avg, 2);
    g["cyclic_matrix"] = {{"matrix", encodeMat(aff->linear)}};
    g["kcyclic_check"] =
        encodeCheckResult(checkKCyclic(AnalysisSource(MatrixOp(aff->linear)), 3, 2, cfg));
  }

  // projection resolvent combined with the quarter turn
  {
    AffineSubspace xAxis(vec2(0, 0), (Mat(2, 1) << 1, 0).finished());
    AverageSpec avg({{NormalConeOp(xAxis), 0.5}, {quarterTurn(), 0.5}}, 1.0);
    auto aff = resolventAverageAffine(avg, 2);
    g["projection_rotation_average"] = {
        {"matrix", encodeMat(aff->linear)},
        {"paramonotone", encodeCheckResult(checkParamonotoneMatrix(aff->linear))}};
  }

  // scaled rotations: alpha = 2 averages to 4 Id
  {
    Mat a1(2, 2), a2(2, 2);
    a1 << 0, -2, 2, 0;
    a2 = a1.transpose();
    Mat r = resolventAverageMatrix({a1, a2}, {0.5, 0.5}, 1.0);
    AverageSpec avg({{MatrixOp(a1), 0.5}, {MatrixOp(a2), 0.5}}, 1.0);
    auto val = evaluateAverage(avg, vec2(1, 1), cfg);
    g["scaled_rotations"] = {{"matrix", encodeMat(r)}, {"value_at_ones", encodeVec(*val.value)}};
  }

  // scalar averages
  {
    ExtNonneg r1 = rMu({ExtNonneg(2.0), ExtNonneg(5.0)}, {0.5, 0.5}, 1.0);
    ExtNonneg r2 = rMu({ExtNonneg(0.0), ExtNonneg::infinity()}, {0.5, 0.5}, 1.0);
    g["r_mu"] = {{"two_five", r1.toDouble()}, {"zero_inf", r2.toDouble()}};
  }

  // rational rotation averages and triples
  {
    auto ra = rotationAverageRational(1, 2);
    g["triples"] = {{"rational_1_2",
                     {{"matrix", encodeRationalMatrix(ra.matrix)}, {"triple", encodeTriple(ra.triple)}}},
                    {"euclid_2_3", encodeTriple(euclidTriple(2, 3))}};
  }

  // averaging a rotation with its inverse gives the identity
  {
    AverageSpec avg({{quarterTurn(), 0.5}, {inverted(quarterTurn()), 0.5}}, 1.0);
    auto val = evaluateAverage(avg, vec2(1, 2), cfg);
    g["self_inverse_average"] = {{"x", encodeVec(vec2(1, 2))}, {"value", encodeVec(*val.value)}};
  }

  // proximal averages
  {
    Vec lo1(1), hi1(1);
    lo1 << -std::numeric_limits<double>::infinity();
    hi1 << 0.0;
    ConvexFunctionSpec left = Indicator(Box(lo1, hi1));
    Vec lo2(1), hi2(1);
    lo2 << 0.0;
    hi2 << std::numeric_limits<double>::infinity();
    ConvexFunctionSpec right = Indicator(Box(lo2, hi2));
    json vals = json::array();
    SampleConfig pcfg;
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      Vec x(1);
      x << t;
      vals.push_back(proximalAverageValue({left, right}, {0.5, 0.5}, 1.0, x, pcfg).value);
    }
    Vec xq(1);
    xq << 1.5;
    double quad =
        proximalAverageValue({ScaledHalfNormSq(ExtNonneg(2.0)), ScaledHalfNormSq(ExtNonneg(5.0))},
                             {0.5, 0.5}, 1.0, xq, pcfg)
            .value;
    g["proximal_average"] = {{"indicator_pair", vals}, {"quadratic_at_1_5", quad}};
  }

  // Fitzpatrick values and the averaged inequality
  {
    Mat id = Mat::Identity(2, 2);
    Mat rot = std::get<Rotation2DOp>(quarterTurn()).matrix();
    g["fitzpatrick"] = {
        {"identity_e1_e2", fitzpatrickMatrix(id, vec2(1, 0), vec2(0, 1))},
        {"rotation_aligned", fitzpatrickMatrix(rot, vec2(1, 0), vec2(0, 1))},
        {"inequality", encodeCheckResult(checkFitzpatrickInequality({id, rot}, {0.5, 0.5}, 1.0, cfg))}};
  }

  // overlapping boxes feasibility
  {
    Box b1(vec2(0, 0), vec2(2, 2));
    Box b2(vec2(1, 1), vec2(3, 3));
    AverageSpec avg({{NormalConeOp(b1), 0.5}, {NormalConeOp(b2), 0.5}}, 1.0);
    SampleConfig fcfg;
    fcfg.tol = 1e-9;
    fcfg.maxIter = 10000;
    auto sol = solveCommonZero(avg, vec2(5, -5), fcfg);
    json residuals = json::array();
    for (double r : fixedPointResiduals(avg, sol.x)) residuals.push_back(r);
    g["feasibility_boxes"] = {{"solution", encodeVec(sol.x)},
                              {"iterations", sol.trace.iterations},
                              {"converged", sol.trace.converged},
                              {"fixed_point_residuals", residuals}};
  }

  return g;
}

}  // namespace resavg
