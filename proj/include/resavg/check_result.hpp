#pragma once

#include "resavg/common.hpp"

#include <vector>

namespace resavg {

struct GraphPoint {
  Vec x;
  Vec u;
};

enum class Verdict { pass, fail, inconclusive };

const char* toString(Verdict v);

/// Outcome of a sampled or exact property check. A fail verdict always
/// carries a witness that re-evaluates to a violating margin.
struct CheckResult {
  Verdict verdict = Verdict::inconclusive;
  double statistic = 0.0;  // estimated constant or worst margin
  std::vector<GraphPoint> witness;
  int samplesUsed = 0;
  std::uint64_t seed = 0;
};

}  // namespace resavg
