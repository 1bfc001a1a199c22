#include "resavg/feasibility.hpp"

#include <cmath>

namespace resavg {

namespace {
constexpr int kStallWindow = 1000;
constexpr int kTraceCap = 1000;
}

SolveResult solveCommonZero(const AverageSpec& avg, const Vec& x0, const SampleConfig& cfg) {
  cfg.validate();
  if (auto d = avg.dimension()) checkDim(x0, *d, "solveCommonZero");
  checkFinite(x0, "solveCommonZero");

  SolveResult out;
  out.x = x0;
  int thin = std::max(1, cfg.maxIter / kTraceCap);
  std::vector<double> window;  // recent step sizes for stall detection
  window.reserve(cfg.maxIter < kStallWindow ? cfg.maxIter : kStallWindow + 1);

  for (int k = 0; k < cfg.maxIter; ++k) {
    Vec next = averagedResolvent(avg, out.x);
    double step = (next - out.x).norm();
    out.x = next;
    out.trace.iterations = k + 1;
    if (k % thin == 0) {
      out.trace.iterates.push_back(out.x);
      out.trace.residuals.push_back(step);
    }
    if (step <= cfg.tol) {
      out.trace.converged = true;
      break;
    }
    window.push_back(step);
    if (static_cast<int>(window.size()) > kStallWindow) {
      double old = window[window.size() - 1 - kStallWindow];
      if (step >= 0.999 * old) {
        out.trace.stalled = true;  // budget heuristic: likely empty intersection
        break;
      }
    }
  }
  return out;
}

SolveResult solveCommonValue(const AverageSpec& avg, const Vec& u, const Vec& x0,
                             const SampleConfig& cfg) {
  if (auto d = avg.dimension()) checkDim(u, *d, "solveCommonValue");
  std::vector<AverageItem> shifted;
  shifted.reserve(avg.items().size());
  for (const auto& it : avg.items())
    shifted.push_back({ShiftedOp(it.op, Vec(-u), Vec(Vec::Zero(u.size()))), it.weight});
  return solveCommonZero(AverageSpec(std::move(shifted), avg.mu()), x0, cfg);
}

std::vector<double> fixedPointResiduals(const AverageSpec& avg, const Vec& x) {
  std::vector<double> res;
  res.reserve(avg.items().size());
  for (const auto& it : avg.items())
    res.push_back((resolve(it.op, avg.mu(), x) - x).norm());
  return res;
}

}  // namespace resavg
