#include "resavg/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

namespace resavg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void requireFields(const json& j, const std::set<std::string>& required,
                   const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw SpecError("spec: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!required.count(key) && !optional.count(key))
      throw SpecError("spec: unknown field \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) throw SpecError("spec: missing field \"" + key + "\"");
  }
}

double decodeNumber(const json& j, const char* what) {
  if (!j.is_number()) throw SpecError(std::string("spec: ") + what + " must be a number");
  return j.get<double>();
}

double decodeNumberOrInf(const json& j, const char* what) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw SpecError(std::string("spec: ") + what + ": unrecognized string \"" + s + "\"");
  }
  return decodeNumber(j, what);
}

json encodeNumberOrInf(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  return v;
}

ExtNonneg decodeExtNonneg(const json& j, const char* what) {
  double v = decodeNumberOrInf(j, what);
  if (v < 0) throw SpecError(std::string("spec: ") + what + " must be >= 0");
  return ExtNonneg(v);
}

std::string kindOf(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw SpecError("spec: tagged object with a \"kind\" string expected");
  return j["kind"].get<std::string>();
}

}  // namespace

json encodeVec(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json encodeVecAllowInf(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(encodeNumberOrInf(v[i]));
  return a;
}

json encodeMat(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Vec decodeVec(const json& j) {
  if (!j.is_array() || j.empty()) throw SpecError("spec: vector must be a nonempty array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = decodeNumber(j[i], "vector entry");
  checkFinite(v, "spec vector");
  return v;
}

Vec decodeVecAllowInf(const json& j) {
  if (!j.is_array() || j.empty()) throw SpecError("spec: vector must be a nonempty array");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = decodeNumberOrInf(j[i], "vector entry");
  return v;
}

Mat decodeMat(const json& j) {
  if (!j.is_array() || j.empty()) throw SpecError("spec: matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Mat m;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].empty()) throw SpecError("spec: matrix row must be an array");
    if (i == 0) {
      cols = j[i].size();
      m.resize(rows, cols);
    } else if (j[i].size() != cols) {
      throw SpecError("spec: ragged matrix");
    }
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          decodeNumber(j[i][k], "matrix entry");
  }
  if (!m.allFinite()) throw SpecError("spec: matrix entries must be finite");
  return m;
}

json encodeSet(const ConvexSetSpec& set) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return {{"kind", "halfspace"}, {"normal", encodeVec(s.normal)}, {"offset", s.offset}};
        } else if constexpr (std::is_same_v<T, Box>) {
          return {{"kind", "box"},
                  {"lower", encodeVecAllowInf(s.lower)},
                  {"upper", encodeVecAllowInf(s.upper)}};
        } else if constexpr (std::is_same_v<T, Ball>) {
          return {{"kind", "ball"}, {"center", encodeVec(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, AffineSubspace>) {
          json dirs = json::array();
          for (Eigen::Index c = 0; c < s.directions.cols(); ++c)
            dirs.push_back(encodeVec(s.directions.col(c)));
          return {{"kind", "affine-subspace"}, {"basepoint", encodeVec(s.basepoint)},
                  {"directions", dirs}};
        } else {
          return {{"kind", "single-point"}, {"p", encodeVec(s.p)}};
        }
      },
      set);
}

ConvexSetSpec decodeSet(const json& j) {
  const std::string kind = kindOf(j);
  if (kind == "halfspace") {
    requireFields(j, {"kind", "normal", "offset"});
    return Halfspace(decodeVec(j["normal"]), decodeNumber(j["offset"], "offset"));
  }
  if (kind == "box") {
    requireFields(j, {"kind", "lower", "upper"});
    return Box(decodeVecAllowInf(j["lower"]), decodeVecAllowInf(j["upper"]));
  }
  if (kind == "ball") {
    requireFields(j, {"kind", "center", "radius"});
    return Ball(decodeVec(j["center"]), decodeNumber(j["radius"], "radius"));
  }
  if (kind == "affine-subspace") {
    requireFields(j, {"kind", "basepoint", "directions"});
    Vec base = decodeVec(j["basepoint"]);
    const json& dirs = j["directions"];
    if (!dirs.is_array()) throw SpecError("spec: directions must be an array");
    Mat d(base.size(), dirs.size());
    for (std::size_t c = 0; c < dirs.size(); ++c) {
      Vec col = decodeVec(dirs[c]);
      checkDim(col, base.size(), "affine-subspace direction");
      d.col(static_cast<Eigen::Index>(c)) = col;
    }
    return AffineSubspace(std::move(base), std::move(d));
  }
  if (kind == "single-point") {
    requireFields(j, {"kind", "p"});
    return SinglePoint(decodeVec(j["p"]));
  }
  throw SpecError("spec: unknown set kind \"" + kind + "\"");
}

json encodeFunction(const ConvexFunctionSpec& fn) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ScaledHalfNormSq>) {
          return {{"kind", "scaled-half-norm-sq"},
                  {"alpha", encodeNumberOrInf(f.alpha.toDouble())}};
        } else if constexpr (std::is_same_v<T, NormScaled>) {
          return {{"kind", "norm-scaled"}, {"c", f.c}};
        } else if constexpr (std::is_same_v<T, Indicator>) {
          return {{"kind", "indicator"}, {"set", encodeSet(f.set)}};
        } else {
          return {{"kind", "linear-tilt"}, {"base", encodeFunction(*f.base)},
                  {"slope", encodeVec(f.slope)}, {"shift", encodeVec(f.shift)}};
        }
      },
      fn);
}

ConvexFunctionSpec decodeFunction(const json& j) {
  const std::string kind = kindOf(j);
  if (kind == "scaled-half-norm-sq") {
    requireFields(j, {"kind", "alpha"});
    return ScaledHalfNormSq(decodeExtNonneg(j["alpha"], "alpha"));
  }
  if (kind == "norm-scaled") {
    requireFields(j, {"kind", "c"});
    return NormScaled(decodeNumber(j["c"], "c"));
  }
  if (kind == "indicator") {
    requireFields(j, {"kind", "set"});
    return Indicator(decodeSet(j["set"]));
  }
  if (kind == "linear-tilt") {
    requireFields(j, {"kind", "base", "slope", "shift"});
    return LinearTilt(decodeFunction(j["base"]), decodeVec(j["slope"]), decodeVec(j["shift"]));
  }
  throw SpecError("spec: unknown function kind \"" + kind + "\"");
}

json encodeOperator(const OperatorSpec& op) {
  return std::visit(
      [](const auto& o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, MatrixOp>) {
          return {{"kind", "matrix"}, {"m", encodeMat(o.m)}};
        } else if constexpr (std::is_same_v<T, ScaledIdentityOp>) {
          return {{"kind", "scaled-identity"}, {"alpha", encodeNumberOrInf(o.alpha.toDouble())}};
        } else if constexpr (std::is_same_v<T, Rotation2DOp>) {
          return {{"kind", "rotation2d"}, {"angle", o.angle}};
        } else if constexpr (std::is_same_v<T, NormalConeOp>) {
          return {{"kind", "normal-cone"}, {"set", encodeSet(o.set)}};
        } else if constexpr (std::is_same_v<T, SubdifferentialOp>) {
          return {{"kind", "subdifferential"}, {"fn", encodeFunction(o.fn)}};
        } else if constexpr (std::is_same_v<T, ConstantOp>) {
          return {{"kind", "constant"}, {"z", encodeVec(o.z)}};
        } else if constexpr (std::is_same_v<T, InverseOp>) {
          return {{"kind", "inverse"}, {"op", encodeOperator(*o.inner)}};
        } else if constexpr (std::is_same_v<T, ShiftedOp>) {
          return {{"kind", "shifted"}, {"op", encodeOperator(*o.inner)},
                  {"range_shift", encodeVec(o.rangeShift)},
                  {"argument_shift", encodeVec(o.argumentShift)}};
        } else if constexpr (std::is_same_v<T, ScaledOp>) {
          return {{"kind", "scaled"}, {"op", encodeOperator(*o.inner)}, {"factor", o.factor}};
        } else {
          return {{"kind", "displacement"}, {"op", encodeOperator(*o.inner)}};
        }
      },
      op);
}

OperatorSpec decodeOperator(const json& j) {
  const std::string kind = kindOf(j);
  if (kind == "matrix") {
    requireFields(j, {"kind", "m"});
    return MatrixOp(decodeMat(j["m"]));
  }
  if (kind == "scaled-identity") {
    requireFields(j, {"kind", "alpha"});
    return ScaledIdentityOp(decodeExtNonneg(j["alpha"], "alpha"));
  }
  if (kind == "rotation2d") {
    requireFields(j, {"kind", "angle"});
    return Rotation2DOp(decodeNumber(j["angle"], "angle"));
  }
  if (kind == "normal-cone") {
    requireFields(j, {"kind", "set"});
    return NormalConeOp(decodeSet(j["set"]));
  }
  if (kind == "subdifferential") {
    requireFields(j, {"kind", "fn"});
    return SubdifferentialOp(decodeFunction(j["fn"]));
  }
  if (kind == "constant") {
    requireFields(j, {"kind", "z"});
    return ConstantOp(decodeVec(j["z"]));
  }
  if (kind == "inverse") {
    requireFields(j, {"kind", "op"});
    return InverseOp(decodeOperator(j["op"]));
  }
  if (kind == "shifted") {
    requireFields(j, {"kind", "op", "range_shift", "argument_shift"});
    return ShiftedOp(decodeOperator(j["op"]), decodeVec(j["range_shift"]),
                     decodeVec(j["argument_shift"]));
  }
  if (kind == "scaled") {
    requireFields(j, {"kind", "op", "factor"});
    return ScaledOp(decodeOperator(j["op"]), decodeNumber(j["factor"], "factor"));
  }
  if (kind == "displacement") {
    requireFields(j, {"kind", "op"});
    return DisplacementOp(decodeOperator(j["op"]));
  }
  throw SpecError("spec: unknown operator kind \"" + kind + "\"");
}

json encodeAverage(const AverageSpec& avg) {
  json items = json::array();
  for (const auto& it : avg.items())
    items.push_back({{"weight", it.weight}, {"op", encodeOperator(it.op)}});
  return {{"mu", avg.mu()}, {"items", items}};
}

AverageSpec decodeAverage(const json& j) {
  requireFields(j, {"mu", "items"});
  if (!j["items"].is_array() || j["items"].empty())
    throw SpecError("spec: items must be a nonempty array");
  std::vector<AverageItem> items;
  for (const auto& it : j["items"]) {
    requireFields(it, {"weight", "op"});
    items.push_back({decodeOperator(it["op"]), decodeNumber(it["weight"], "weight")});
  }
  return AverageSpec(std::move(items), decodeNumber(j["mu"], "mu"));
}

json encodeCheckResult(const CheckResult& r) {
  json witness = json::array();
  for (const auto& gp : r.witness)
    witness.push_back({{"x", encodeVec(gp.x)}, {"u", encodeVec(gp.u)}});
  return {{"verdict", toString(r.verdict)},
          {"statistic", encodeNumberOrInf(r.statistic)},
          {"witness", witness},
          {"seed", r.seed},
          {"samples", r.samplesUsed}};
}

json encodeTriple(const PythagoreanTriple& t) {
  return json::array({t.a.convert_to<long long>(), t.b.convert_to<long long>(),
                      t.c.convert_to<long long>()});
}

json encodeRationalMatrix(const RationalMatrix2& m) {
  return json::array({json::array({toFractionString(m.a11), toFractionString(m.a12)}),
                      json::array({toFractionString(m.a21), toFractionString(m.a22)})});
}

std::variant<OperatorSpec, AverageSpec> decodeOperatorOrAverage(const json& j) {
  if (j.is_object() && j.contains("kind")) return decodeOperator(j);
  if (j.is_object() && j.contains("items")) return decodeAverage(j);
  throw SpecError("spec: expected an operator (\"kind\") or an average (\"items\") object");
}

json parseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("spec: JSON parse error: ") + e.what());
  }
}

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("spec: cannot open file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parseJson(text);
}

}  // namespace resavg
