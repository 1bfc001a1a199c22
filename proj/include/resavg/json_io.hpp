#pragma once

#include "resavg/analysis.hpp"
#include "resavg/average.hpp"
#include "resavg/pythagorean.hpp"

#include <json.hpp>

#include <variant>

namespace resavg {

using nlohmann::json;

// Canonical JSON encoding: tagged objects {"kind": "...", ...fields},
// matrices as row-major arrays of arrays, infinities as the strings
// "inf" / "-inf". Unknown fields are errors.

json encodeVec(const Vec& v);         // finite entries only
json encodeVecAllowInf(const Vec& v); // +-inf entries become strings
json encodeMat(const Mat& m);
Vec decodeVec(const json& j);
Vec decodeVecAllowInf(const json& j);
Mat decodeMat(const json& j);

json encodeSet(const ConvexSetSpec& set);
ConvexSetSpec decodeSet(const json& j);

json encodeFunction(const ConvexFunctionSpec& fn);
ConvexFunctionSpec decodeFunction(const json& j);

json encodeOperator(const OperatorSpec& op);
OperatorSpec decodeOperator(const json& j);

json encodeAverage(const AverageSpec& avg);
AverageSpec decodeAverage(const json& j);

json encodeCheckResult(const CheckResult& r);

json encodeTriple(const PythagoreanTriple& t);        // [a, b, c]
json encodeRationalMatrix(const RationalMatrix2& m);  // entries as "num/den"

/// Either an operator spec ({"kind": ...}) or an average spec
/// ({"mu": ..., "items": ...}), detected by shape.
std::variant<OperatorSpec, AverageSpec> decodeOperatorOrAverage(const json& j);

json parseJson(const std::string& text);       // wraps parse errors in SpecError
json loadJsonFile(const std::string& path);

}  // namespace resavg
